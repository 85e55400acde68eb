#include "isf/forest_enumeration.hpp"

#include <algorithm>
#include <string>

#include "isf/error.hpp"

namespace isf {

namespace {

void require_component_count(const OrderedGraph& g, int k) {
  if (k < 0 || k > g.n()) {
    throw Error(Errc::index_violation,
                "component count " + std::to_string(k) + " outside 0.." + std::to_string(g.n()));
  }
}

// Depth-first walk over vertices 1..n choosing a parent (or none) for each.
class ChoiceWalker {
 public:
  ChoiceWalker(const OrderedGraph& g, int k) : g_(g), k_(k) {
    lower_.reserve(static_cast<std::size_t>(g.n()) + 1);
    lower_.emplace_back();
    for (int j = 1; j <= g.n(); ++j) lower_.push_back(g.lower_neighbors(j));
  }

  template <typename Visit>
  void run(Visit&& visit) {
    edges_.clear();
    step(1, 0, visit);
  }

 private:
  template <typename Visit>
  void step(int j, int roots, Visit& visit) {
    const int n = g_.n();
    if (j > n) {
      if (roots == k_) visit(edges_);
      return;
    }
    const int remaining = n - j + 1;
    // Making j a root.
    if (roots + 1 <= k_) step(j + 1, roots + 1, visit);
    // Hanging j below a smaller neighbour; the remaining vertices must still
    // be able to supply the missing roots.
    if (roots + remaining - 1 >= k_) {
      for (int i : lower_[j]) {
        edges_.push_back({i, j});
        step(j + 1, roots, visit);
        edges_.pop_back();
      }
    }
  }

  const OrderedGraph& g_;
  int k_;
  std::vector<VertexSet> lower_;
  EdgeList edges_;
};

}  // namespace

std::vector<Forest> enumerate_if(const OrderedGraph& g, int k) {
  require_component_count(g, k);
  std::vector<Forest> out;
  ChoiceWalker walker(g, k);
  walker.run([&](const EdgeList& edges) { out.emplace_back(g.n(), edges); });
  std::sort(out.begin(), out.end(), [](const Forest& a, const Forest& b) { return a.edges() < b.edges(); });
  return out;
}

std::uint64_t count_if(const OrderedGraph& g, int k) {
  require_component_count(g, k);
  std::uint64_t count = 0;
  ChoiceWalker walker(g, k);
  walker.run([&](const EdgeList&) { ++count; });
  return count;
}

MultiPoly forest_weight(const Forest& f) {
  Monomial m;
  m.reserve(f.size());
  for (const Edge& e : f.edges()) m.push_back(Var::edge(e));
  return MultiPoly::term(std::move(m), 1);
}

MultiPoly a_poly(const OrderedGraph& g, int k) {
  require_component_count(g, k);
  MultiPoly out;
  ChoiceWalker walker(g, k);
  walker.run([&](const EdgeList& edges) {
    Monomial m;
    m.reserve(edges.size());
    for (const Edge& e : edges) m.push_back(Var::edge(e));
    std::sort(m.begin(), m.end());
    out.add_term(std::move(m), 1);
  });
  return out;
}

TPoly isf_polynomial(const OrderedGraph& g) {
  std::vector<MultiPoly> coeffs;
  coeffs.reserve(static_cast<std::size_t>(g.n()) + 1);
  for (int k = 0; k <= g.n(); ++k) coeffs.push_back(a_poly(g, k));
  return TPoly(std::move(coeffs));
}

TPoly isf_product_form(const OrderedGraph& g) {
  TPoly out = TPoly::one();
  for (int j = 1; j <= g.n(); ++j) {
    MultiPoly s;
    for (int i : g.lower_neighbors(j)) s += MultiPoly::variable(Var::edge({i, j}));
    out = out * TPoly::linear(s);
  }
  return out;
}

FactorizationCheck isf_factorization_check(const OrderedGraph& g) {
  FactorizationCheck out;
  out.lhs = isf_polynomial(g);
  out.rhs = isf_product_form(g);
  out.equal = out.lhs == out.rhs;
  return out;
}

NonnegReport strong_logconcavity_check(const TPoly& isf, int p, int q) {
  const int n = static_cast<int>(isf.size()) - 1;
  if (!(0 < p && p <= q && q < n)) {
    throw Error(Errc::index_violation, "need 0 < p <= q < n, got p=" + std::to_string(p) +
                                           " q=" + std::to_string(q) + " n=" + std::to_string(n));
  }
  return nonneg_report(isf[p] * isf[q] - isf[p - 1] * isf[q + 1]);
}

NonnegReport strong_logconcavity_check(const OrderedGraph& g, int p, int q) {
  if (!(0 < p && p <= q && q < g.n())) {
    throw Error(Errc::index_violation, "need 0 < p <= q < n, got p=" + std::to_string(p) +
                                           " q=" + std::to_string(q) + " n=" + std::to_string(g.n()));
  }
  return strong_logconcavity_check(isf_polynomial(g), p, q);
}

}  // namespace isf
