#pragma once

#include <string>
#include <utility>
#include <vector>

#include "isf/graph.hpp"
#include "isf/local_injection.hpp"
#include "isf/polynomial.hpp"
#include "isf/subset_injection.hpp"

namespace isf {

using Cycle = std::vector<int>;

// Permutation of [n] in canonical cycle form: each cycle starts at its
// minimum and cycles are sorted by their minima. Fixed points are 1-cycles.
class Permutation {
 public:
  Permutation() = default;
  // Throws Error(invalid_input) unless the cycles partition [n], and
  // Error(non_canonical_cycle) unless they are in canonical form.
  Permutation(int n, std::vector<Cycle> cycles);

  static Permutation identity(int n);
  // image[v - 1] = sigma(v).
  static Permutation from_images(const std::vector<int>& image);

  int n() const noexcept { return n_; }
  const std::vector<Cycle>& cycles() const noexcept { return cycles_; }
  int cycle_count() const noexcept { return static_cast<int>(cycles_.size()); }
  std::vector<int> images() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  int n_ = 0;
  std::vector<Cycle> cycles_;
};

// "(1 4 9 7 2)(3 6 8 5)"
std::string to_string(const Permutation& p);
std::string to_string(const Cycle& c);

// One cycle per tree: preorder from the root, children visited in decreasing
// label order. Throws Error(not_increasing) for non-increasing forests.
Permutation forest_to_permutation(const Forest& f);

// Inverse of forest_to_permutation: within each cycle word, the parent of an
// entry is the nearest smaller entry to its left.
Forest permutation_to_forest(const Permutation& p);

struct StirlingRow {
  int n = 0;
  std::vector<BigInt> unsigned_counts;  // c(n, 0..n)
  std::vector<BigInt> signed_counts;    // s(n, k) = (-1)^{n-k} c(n, k)
};

// Row of Stirling numbers of the first kind, counted as increasing forests of
// K_n. Throws Error(invalid_input) for n < 0.
StirlingRow stirling_row(int n);

struct PermutationPsi {
  Permutation sigma_p;
  Permutation tau_p;
  Cycle broken_cycle;                  // the cycle of sigma that was split
  std::pair<Cycle, Cycle> split_into;  // its two pieces in sigma_p
  std::pair<Cycle, Cycle> glued_pair;  // the cycles of tau that were merged
  Cycle glued_into;                    // their merger in tau_p
  bool spectators_unchanged = false;
  PsiTrace trace;                      // psi on the corresponding forests of K_n
};

// psi transported to permutations through the forest bijection on K_n.
// Errors: InvalidInput on mismatched n; SizeViolation unless sigma has fewer
// cycles than tau.
PermutationPsi permutation_psi(const Permutation& sigma, const Permutation& tau, PhiRule rule = PhiRule::bracket);

}  // namespace isf
