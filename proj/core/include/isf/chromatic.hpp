#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isf/graph.hpp"
#include "isf/polynomial.hpp"

namespace isf {

// Univariate integer polynomial in t; coeffs()[d] multiplies t^d. Trailing
// zeros are trimmed, so the zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly monomial(int degree, const BigInt& c = 1);

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  BigInt coefficient(int d) const;

  // p(-t)
  IntPoly negate_variable() const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

std::string to_string(const IntPoly& p);

enum class BrokenCircuitConvention { remove_min, remove_max };

// Edges sorted by (i, j) lexicographically.
EdgeList lex_edge_order(const OrderedGraph& g);

// Every circuit of g as a sorted edge list, deduplicated and sorted.
std::vector<EdgeList> circuits(const OrderedGraph& g);

// Circuits minus their smallest (remove_min) or largest (remove_max) edge in
// lexicographic edge order.
std::vector<EdgeList> broken_circuits(const OrderedGraph& g, BrokenCircuitConvention c);

// Every vertex v is good: each child w of v is the smallest vertex of its
// branch B(w) adjacent to v in g. Throws Error(not_in_graph).
bool is_admissible_goodvertex(const OrderedGraph& g, const Forest& f);

// No broken circuit is contained in f. Throws Error(not_in_graph).
bool is_nbc(const OrderedGraph& g, const Forest& f, BrokenCircuitConvention c);

// Which edge deletion-contraction expands first.
enum class PivotRule { first_edge, last_edge };

// P_G(t) by deletion-contraction, memoised on the reduced graph.
IntPoly chromatic_polynomial(const OrderedGraph& g, PivotRule pivot = PivotRule::first_edge);

// All spanning forests (acyclic edge subsets) of g, sorted by edge list.
std::vector<Forest> spanning_forests(const OrderedGraph& g);

struct WhitneyCheck {
  std::vector<BigInt> counts;             // NBC forests with k components
  std::vector<BigInt> coeffs;             // (-1)^{n-k} [t^k] P_G
  std::vector<BigInt> goodvertex_counts;  // good-vertex admissible forests
  bool equal = false;                     // counts == coeffs
};

WhitneyCheck whitney_check(const OrderedGraph& g, BrokenCircuitConvention c);

// Per-forest verdict of the three admissibility notions.
struct AdmissibilityRow {
  Forest forest;
  bool nbc_min = false;
  bool nbc_max = false;
  bool good_vertex = false;
};

std::vector<AdmissibilityRow> admissibility_table(const OrderedGraph& g);

// Renames vertex v to perm[v - 1]. Throws Error(invalid_input) unless perm is
// a permutation of [n].
OrderedGraph relabel(const OrderedGraph& g, const std::vector<int>& perm);

struct MovableSearch {
  OrderedGraph graph;  // after relabeling
  std::uint64_t admissible_forests = 0;
  std::uint64_t pairs_checked = 0;
  bool all_pairs_ok = true;
  std::vector<std::pair<Forest, Forest>> failures;
};

// For every pair (A, B) of good-vertex admissible forests with fewer
// components in A, looks for e in A \ B such that A \ {e} and B ∪ {e} are
// again admissible forests.
MovableSearch movable_edge_search(const OrderedGraph& g, const std::optional<std::vector<int>>& relabeling = std::nullopt,
                                  unsigned jobs = 1);

// True when, for every j, the smaller neighbours of j are pairwise adjacent.
bool natural_order_is_peo(const OrderedGraph& g);

struct PeoCheck {
  bool holds = false;          // lhs == rhs
  bool peo_condition = false;  // natural_order_is_peo(g)
  IntPoly lhs;                 // ISF(1, t)
  IntPoly rhs;                 // (-1)^n P_G(-t)
};

PeoCheck peo_isf_check(const OrderedGraph& g);

}  // namespace isf
