#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "isf/error.hpp"
#include "isf/subset_injection.hpp"
#include "oracles.hpp"

namespace isf {
namespace {

TEST(PhiTest, HandTracedExamples) {
  const GroundSet y{{1, 2, 3}};
  EXPECT_EQ(phi(y, {1}), (Subset{1, 3}));  // "())"
  EXPECT_EQ(phi(y, {2}), (Subset{1, 2}));  // ")()"
  EXPECT_EQ(phi(y, {3}), (Subset{2, 3}));  // "))("
  EXPECT_EQ(phi(GroundSet{{2, 3}}, {}), (Subset{3}));
  EXPECT_EQ(phi(GroundSet{{1}}, {}), (Subset{1}));
}

TEST(PhiTest, Errors) {
  const GroundSet y{{1, 2, 3}};
  try {
    phi(y, {1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::size_violation);
  }
  try {
    phi(y, {4});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_a_subset);
  }
  EXPECT_THROW(phi(GroundSet{{1, 2}}, {1}), Error);
  EXPECT_THROW(GroundSet({2, 1}), Error);
}

TEST(PhiInverseTest, Examples) {
  const GroundSet y{{1, 2, 3}};
  EXPECT_EQ(phi_inverse(y, {1, 3}), (Subset{1}));
  EXPECT_EQ(phi_inverse(GroundSet{{1}}, {1}), Subset{});

  // Searching all 1-subsets of [4]: the images are {1,4},{2,4},{2,3},{3,4},
  // so {1,2} has no preimage and the inverse must refuse it.
  const GroundSet y4{{1, 2, 3, 4}};
  std::set<Subset> images;
  for (int v = 1; v <= 4; ++v) images.insert(phi(y4, {v}));
  EXPECT_EQ(images, (std::set<Subset>{{1, 4}, {2, 4}, {2, 3}, {3, 4}}));
  for (const Subset& img : images) EXPECT_EQ(phi(y4, phi_inverse(y4, img)), img);
  try {
    phi_inverse(y4, {1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_in_image);
  }

  try {
    phi_inverse(y, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_in_image);
  }
  // {1,2} over [3] has image preimage {2}; {2,3} over [3] is phi({3}); the
  // full set is never an image when |Y| = 3.
  EXPECT_THROW(phi_inverse(y, {1, 2, 3}), Error);
}

TEST(BracketStateTest, ChainStructure) {
  const std::vector<int> order{1, 2, 3, 4, 5, 6};
  const BracketState st = bracket_state(order, {2, 5, 6});
  // ")())((" : 2 matches 3; 1 and 4 unmatched closes; 5 and 6 unmatched opens.
  EXPECT_EQ(st.matched, (std::vector<std::pair<int, int>>{{1, 2}}));
  EXPECT_EQ(st.unmatched_close, (std::vector<int>{0, 3}));
  EXPECT_EQ(st.unmatched_open, (std::vector<int>{4, 5}));
}

TEST(SubsetPairMapTest, Examples) {
  SubsetPairImage r = subset_pair_map(3, {1}, {2, 3});
  EXPECT_EQ(r.moved, 3);
  EXPECT_EQ(r.x, (Subset{1, 3}));
  EXPECT_EQ(r.y, (Subset{2}));

  r = subset_pair_map(1, {}, {1});
  EXPECT_EQ(r.moved, 1);
  EXPECT_EQ(r.x, (Subset{1}));
  EXPECT_EQ(r.y, Subset{});

  r = subset_pair_map(2, {}, {1, 2});
  EXPECT_EQ(r.moved, 2);
  EXPECT_EQ(r.x, (Subset{2}));
  EXPECT_EQ(r.y, (Subset{1}));

  EXPECT_THROW(subset_pair_map(3, {1, 2}, {3}), Error);
  EXPECT_THROW(subset_pair_map(3, {1}, {2, 4}), Error);
}

class PhiAxioms : public ::testing::TestWithParam<PhiRule> {};

TEST_P(PhiAxioms, InjectiveAndIncreasingExhaustively) {
  const PhiRule rule = GetParam();
  for (int m = 1; m <= 12; ++m) {
    std::vector<int> elems;
    for (int i = 1; i <= m; ++i) elems.push_back(2 * i + 1);  // a ground set other than [m]
    const GroundSet y(elems);
    for (int k = 0; 2 * k < m; ++k) {
      std::set<Subset> images;
      for (const auto& x : oracle::k_subsets(elems, k)) {
        const Subset img = phi(y, x, rule);
        ASSERT_EQ(img.size(), x.size() + 1);
        ASSERT_TRUE(is_subset_of(x, img));
        ASSERT_TRUE(is_subset_of(img, elems));
        ASSERT_TRUE(images.insert(img).second) << "collision at m=" << m << " k=" << k;
        ASSERT_EQ(phi_inverse(y, img, rule), x);
      }
      // Counting corollary: binomial(m, k) <= binomial(m, k+1).
      EXPECT_LE(oracle::binomial(m, k), oracle::binomial(m, k + 1));
    }
  }
}

TEST_P(PhiAxioms, SubsetPairMapInjectiveAndWeightPreserving) {
  const PhiRule rule = GetParam();
  for (int n = 1; n <= 8; ++n) {
    std::vector<int> ground;
    for (int i = 1; i <= n; ++i) ground.push_back(i);
    for (int k = 0; k <= n; ++k)
      for (int l = k + 1; l <= n; ++l) {
        std::set<std::pair<Subset, Subset>> images;
        for (const auto& x : oracle::k_subsets(ground, k))
          for (const auto& y : oracle::k_subsets(ground, l)) {
            const SubsetPairImage r = subset_pair_map(n, x, y, rule);
            ASSERT_TRUE(std::binary_search(y.begin(), y.end(), r.moved));
            ASSERT_FALSE(std::binary_search(x.begin(), x.end(), r.moved));
            ASSERT_EQ(r.x.size(), x.size() + 1);
            ASSERT_EQ(r.y.size(), y.size() - 1);
            std::multiset<int> before(x.begin(), x.end()), after(r.x.begin(), r.x.end());
            before.insert(y.begin(), y.end());
            after.insert(r.y.begin(), r.y.end());
            ASSERT_EQ(before, after);
            ASSERT_TRUE(images.insert({r.x, r.y}).second);
          }
      }
  }
}

TEST_P(PhiAxioms, SubsetPairMapInjectiveSampledAtTen) {
  const PhiRule rule = GetParam();
  std::mt19937 rng(2024);
  const int n = 10;
  std::vector<int> ground(n);
  std::iota(ground.begin(), ground.end(), 1);
  for (auto [k, l] : std::vector<std::pair<int, int>>{{2, 5}, {3, 4}, {4, 7}}) {
    const auto xs = oracle::k_subsets(ground, k);
    const auto ys = oracle::k_subsets(ground, l);
    std::map<std::pair<Subset, Subset>, std::pair<Subset, Subset>> seen;
    std::uniform_int_distribution<std::size_t> px(0, xs.size() - 1), py(0, ys.size() - 1);
    for (int s = 0; s < 20000; ++s) {
      const auto& x = xs[px(rng)];
      const auto& y = ys[py(rng)];
      const SubsetPairImage r = subset_pair_map(n, x, y, rule);
      auto [it, inserted] = seen.try_emplace({r.x, r.y}, x, y);
      if (!inserted) ASSERT_EQ(it->second, std::make_pair(x, y));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Rules, PhiAxioms, ::testing::Values(PhiRule::bracket, PhiRule::reversed_bracket),
                         [](const auto& info) { return info.param == PhiRule::bracket ? "Bracket" : "Reversed"; });

TEST(PhiRulesTest, RulesDiffer) {
  // The two rules are genuinely different injections.
  const GroundSet y{{1, 2, 3}};
  EXPECT_EQ(phi(y, {}, PhiRule::bracket), (Subset{3}));
  EXPECT_EQ(phi(y, {}, PhiRule::reversed_bracket), (Subset{1}));
}

}  // namespace
}  // namespace isf
