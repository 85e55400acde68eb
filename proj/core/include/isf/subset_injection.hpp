#pragma once

#include <span>
#include <vector>

namespace isf {

// Strictly increasing list of positive integers.
using Subset = std::vector<int>;

Subset union_of(const Subset& a, const Subset& b);
Subset intersection_of(const Subset& a, const Subset& b);
Subset difference_of(const Subset& a, const Subset& b);
Subset symmetric_difference_of(const Subset& a, const Subset& b);
bool is_subset_of(const Subset& a, const Subset& b);

// Finite set of positive integers with the inherited order.
class GroundSet {
 public:
  GroundSet() = default;
  // Throws Error(invalid_input) unless strictly increasing and positive.
  explicit GroundSet(std::vector<int> elements);

  const std::vector<int>& elements() const noexcept { return elements_; }
  int size() const noexcept { return static_cast<int>(elements_.size()); }
  bool contains(int v) const;

 private:
  std::vector<int> elements_;
};

// Parenthesis word of a subset X of an ordered ground set: position p reads
// "(" when the p-th element is in X and ")" otherwise. Positions are 0-based
// in reading order.
struct BracketState {
  std::vector<bool> open;
  std::vector<std::pair<int, int>> matched;  // (open position, close position)
  std::vector<int> unmatched_close;          // increasing
  std::vector<int> unmatched_open;           // increasing
};

BracketState bracket_state(std::span<const int> reading_order, const Subset& x);

// Which canonical subset injection to use. `bracket` reads the ground set
// increasingly; `reversed_bracket` reads it decreasingly. Both are injective
// and satisfy X ⊂ phi(X).
enum class PhiRule { bracket, reversed_bracket };

// Injection from k-subsets to (k+1)-subsets of `ground` with X ⊂ phi(X):
// flips the rightmost unmatched ")" of the bracket word.
// Errors: NotASubset if X ⊄ ground, SizeViolation if 2|X| >= |ground|.
Subset phi(const GroundSet& ground, const Subset& x, PhiRule rule = PhiRule::bracket);

// Flips the leftmost unmatched "(" and checks the round trip.
// Throws Error(not_in_image) when `xp` is not an image of phi.
Subset phi_inverse(const GroundSet& ground, const Subset& xp, PhiRule rule = PhiRule::bracket);

struct SubsetPairImage {
  Subset x;
  Subset y;
  int moved = 0;
};

// (X, Y) -> (X ∪ {i}, Y \ {i}) with {i} = phi(XΔY, X\Y) \ (X\Y).
// Errors: NotASubset unless X, Y ⊆ [n]; SizeViolation unless |X| < |Y|.
SubsetPairImage subset_pair_map(int n, const Subset& x, const Subset& y, PhiRule rule = PhiRule::bracket);

}  // namespace isf
