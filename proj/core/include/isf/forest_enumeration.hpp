#pragma once

#include <cstdint>
#include <vector>

#include "isf/graph.hpp"
#include "isf/polynomial.hpp"

namespace isf {

// Increasing spanning forests of `g` with exactly k components, sorted by
// their edge lists. Every vertex j independently either starts a component or
// hangs below one smaller neighbour, which yields each forest exactly once.
// Throws Error(index_violation) unless 0 <= k <= n.
std::vector<Forest> enumerate_if(const OrderedGraph& g, int k);

// |enumerate_if(g, k)| without materialising the forests.
std::uint64_t count_if(const OrderedGraph& g, int k);

// Product of x_e over the edges of f.
MultiPoly forest_weight(const Forest& f);

// a_k(x): the weighted count of increasing forests with k components.
MultiPoly a_poly(const OrderedGraph& g, int k);

// ISF(x, t) = sum_k a_k(x) t^k, with n + 1 coefficients.
TPoly isf_polynomial(const OrderedGraph& g);

// prod_{j=1..n} (t + sum_{i<j, (i,j) in E} x_(i,j))
TPoly isf_product_form(const OrderedGraph& g);

struct FactorizationCheck {
  bool equal = false;
  TPoly lhs;
  TPoly rhs;
};

FactorizationCheck isf_factorization_check(const OrderedGraph& g);

// nonneg_report(a_p a_q - a_{p-1} a_{q+1}).
// Throws Error(index_violation) unless 0 < p <= q < n.
NonnegReport strong_logconcavity_check(const OrderedGraph& g, int p, int q);
// Same, reusing an already computed ISF polynomial of a graph on n vertices.
NonnegReport strong_logconcavity_check(const TPoly& isf, int p, int q);

}  // namespace isf
