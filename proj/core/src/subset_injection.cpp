#include "isf/subset_injection.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "isf/error.hpp"

namespace isf {

Subset union_of(const Subset& a, const Subset& b) {
  Subset out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Subset intersection_of(const Subset& a, const Subset& b) {
  Subset out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Subset difference_of(const Subset& a, const Subset& b) {
  Subset out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Subset symmetric_difference_of(const Subset& a, const Subset& b) {
  Subset out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset_of(const Subset& a, const Subset& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

namespace {

std::string describe(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

void require_strictly_increasing(const std::vector<int>& s, const char* what) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || (i > 0 && s[i] <= s[i - 1])) {
      throw Error(Errc::invalid_input, std::string(what) + " " + describe(s) + " is not a strictly increasing set of positive integers");
    }
  }
}

std::vector<int> reading_order(const GroundSet& ground, PhiRule rule) {
  std::vector<int> order = ground.elements();
  if (rule == PhiRule::reversed_bracket) std::reverse(order.begin(), order.end());
  return order;
}

void require_subset(const GroundSet& ground, const Subset& x) {
  require_strictly_increasing(x, "subset");
  if (!is_subset_of(x, ground.elements())) {
    throw Error(Errc::not_a_subset, describe(x) + " is not contained in " + describe(ground.elements()));
  }
}

Subset with_element(Subset s, int v) {
  s.insert(std::upper_bound(s.begin(), s.end(), v), v);
  return s;
}

}  // namespace

GroundSet::GroundSet(std::vector<int> elements) : elements_(std::move(elements)) {
  require_strictly_increasing(elements_, "ground set");
}

bool GroundSet::contains(int v) const { return std::binary_search(elements_.begin(), elements_.end(), v); }

BracketState bracket_state(std::span<const int> order, const Subset& x) {
  BracketState st;
  st.open.reserve(order.size());
  std::vector<int> stack;
  for (std::size_t p = 0; p < order.size(); ++p) {
    const bool is_open = std::binary_search(x.begin(), x.end(), order[p]);
    st.open.push_back(is_open);
    const int pos = static_cast<int>(p);
    if (is_open) {
      stack.push_back(pos);
    } else if (!stack.empty()) {
      st.matched.emplace_back(stack.back(), pos);
      stack.pop_back();
    } else {
      st.unmatched_close.push_back(pos);
    }
  }
  st.unmatched_open = std::move(stack);
  // A close is left unmatched only while the stack is empty, so every
  // unmatched close precedes every unmatched open.
  if (!st.unmatched_close.empty() && !st.unmatched_open.empty() &&
      st.unmatched_close.back() > st.unmatched_open.front()) {
    throw std::logic_error("bracket word lost its chain structure");
  }
  return st;
}

Subset phi(const GroundSet& ground, const Subset& x, PhiRule rule) {
  require_subset(ground, x);
  if (2 * static_cast<int>(x.size()) >= ground.size()) {
    throw Error(Errc::size_violation, "phi needs |X| < |Y|/2, got |X|=" + std::to_string(x.size()) +
                                          " and |Y|=" + std::to_string(ground.size()));
  }
  const std::vector<int> order = reading_order(ground, rule);
  const BracketState st = bracket_state(order, x);
  // #unmatched close - #unmatched open = |Y| - 2|X| > 0.
  return with_element(x, order[st.unmatched_close.back()]);
}

Subset phi_inverse(const GroundSet& ground, const Subset& xp, PhiRule rule) {
  require_subset(ground, xp);
  const std::vector<int> order = reading_order(ground, rule);
  const BracketState st = bracket_state(order, xp);
  if (st.unmatched_open.empty()) {
    throw Error(Errc::not_in_image, describe(xp) + " has no unmatched element to remove");
  }
  const int removed = order[st.unmatched_open.front()];
  Subset x;
  std::copy_if(xp.begin(), xp.end(), std::back_inserter(x), [&](int v) { return v != removed; });
  if (2 * static_cast<int>(x.size()) >= ground.size() || phi(ground, x, rule) != xp) {
    throw Error(Errc::not_in_image, describe(xp) + " is not an image of phi over " + describe(ground.elements()));
  }
  return x;
}

SubsetPairImage subset_pair_map(int n, const Subset& x, const Subset& y, PhiRule rule) {
  require_strictly_increasing(x, "X");
  require_strictly_increasing(y, "Y");
  if ((!x.empty() && x.back() > n) || (!y.empty() && y.back() > n)) {
    throw Error(Errc::not_a_subset, "X and Y must be subsets of [" + std::to_string(n) + "]");
  }
  if (x.size() >= y.size()) {
    throw Error(Errc::size_violation, "subset pair map needs |X| < |Y|");
  }
  const Subset only_x = difference_of(x, y);
  const GroundSet delta(symmetric_difference_of(x, y));
  const Subset grown = phi(delta, only_x, rule);
  const Subset added = difference_of(grown, only_x);
  const int i = added.front();

  SubsetPairImage out;
  out.moved = i;
  out.x = with_element(x, i);
  std::copy_if(y.begin(), y.end(), std::back_inserter(out.y), [&](int v) { return v != i; });
  return out;
}

}  // namespace isf
