#pragma once

#include <cstdint>
#include <vector>

#include "isf/graph.hpp"
#include "isf/subset_injection.hpp"

namespace isf {

// Every intermediate quantity of one application of psi to (A, B).
struct PsiTrace {
  VertexSet minima_a;       // m(A)
  VertexSet minima_b;       // m(B)
  VertexSet sym_diff;       // m(A) Δ m(B)
  int j = 0;                // the component minimum of B that A gives up
  VertexSet a_component;    // component of j in A
  VertexSet b_component;    // component of j in B
  int i0 = 0;               // min of a_component
  Edge moved;               // (parent of j in A, j)
  Forest a_out;             // A \ {moved}
  Forest b_out;             // B ∪ {moved}
};

// {j} = phi(mA Δ mB, mA \ mB) \ (mA \ mB). Lies in mB \ mA.
// Throws Error(size_violation) unless |mA| < |mB|.
int select_j(const VertexSet& minima_a, const VertexSet& minima_b, PhiRule rule = PhiRule::bracket);

// The local injection IF_k x IF_l -> IF_{k+1} x IF_{l-1} for k < l: moves the
// edge that attaches j to its parent in A over to B.
// Errors: SizeViolation (k >= l), NotIncreasing, NotInGraph.
PsiTrace psi(const OrderedGraph& g, const Forest& a, const Forest& b, PhiRule rule = PhiRule::bracket);

// Per-application invariants checked against the inputs.
struct PsiChecks {
  bool local = false;              // moved ∈ A\B, A' = A\{e}, B' = B∪{e}
  bool weight_preserving = false;  // edge multisets of (A', B') and (A, B) agree
  bool increasing = false;         // outputs increasing with (k+1, l-1) components
  bool minima_preserved = false;   // m(A') = m(A)∪{j}, m(B') = m(B)\{j}; ∪, ∩, Δ unchanged
};

PsiChecks check_trace(const Forest& a, const Forest& b, const PsiTrace& trace);

struct PsiCollision {
  Forest a1, b1;
  Forest a2, b2;
  Forest a_out, b_out;
};

struct PsiVerification {
  int k = 0;
  int l = 0;
  std::uint64_t total_pairs = 0;
  bool injective = true;
  bool local = true;
  bool weight_preserving = true;
  bool increasing = true;
  bool minima_preserved = true;
  std::vector<PsiCollision> collisions;

  bool ok() const { return injective && local && weight_preserving && increasing && minima_preserved; }
};

// Applies psi to all of enumerate_if(g, k) x enumerate_if(g, l). Work is split
// over `jobs` threads; the result does not depend on the job count.
// Errors: IndexViolation unless 0 <= k, l <= n; SizeViolation unless k < l.
PsiVerification verify_psi(const OrderedGraph& g, int k, int l, PhiRule rule = PhiRule::bracket, unsigned jobs = 1);

}  // namespace isf
