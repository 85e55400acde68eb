#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isf/graph.hpp"

namespace isf {

using BigInt = mpz_class;

// A polynomial indeterminate: either x_(i,j) attached to an edge, or a plain
// indexed x_i. Index variables are encoded with j == 0.
struct Var {
  int i = 0;
  int j = 0;

  static Var index(int i) { return {i, 0}; }
  static Var edge(const Edge& e) { return {e.u, e.v}; }
  bool is_edge() const noexcept { return j != 0; }

  friend auto operator<=>(const Var&, const Var&) = default;
};

std::string to_string(const Var& v);

// Sorted multiset of variables.
using Monomial = std::vector<Var>;

// Degree first, then lexicographic on the sorted variable list.
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

Monomial monomial_product(const Monomial& a, const Monomial& b);

// Sparse multivariate polynomial with exact integer coefficients. No zero
// coefficient is ever stored, so structural equality is polynomial equality.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, BigInt, GradedLex>;

  MultiPoly() = default;

  static MultiPoly constant(const BigInt& c);
  static MultiPoly variable(const Var& v);
  // `m` need not be sorted.
  static MultiPoly term(Monomial m, const BigInt& c = 1);

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }
  BigInt coefficient(const Monomial& m) const;
  // Value at x = 1 for every variable.
  BigInt coefficient_sum() const;

  void add_term(Monomial m, const BigInt& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly operator-() const;

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
};

MultiPoly multiply(const MultiPoly& p, const MultiPoly& q);
MultiPoly subtract(const MultiPoly& p, const MultiPoly& q);

std::string to_string(const Monomial& m);
std::string to_string(const MultiPoly& p);

struct NonnegReport {
  bool is_nonneg = true;
  // First negative term in canonical order, when there is one.
  std::optional<std::pair<Monomial, BigInt>> witness;
};

NonnegReport nonneg_report(const MultiPoly& p);

// e_k(x_1, ..., x_n). Throws Error(bad_degree) unless 0 <= k <= n.
MultiPoly elementary_symmetric(int n, int k);

// Polynomial in t with MultiPoly coefficients; coeffs[k] multiplies t^k.
class TPoly {
 public:
  TPoly() = default;
  explicit TPoly(std::vector<MultiPoly> coeffs) : coeffs_(std::move(coeffs)) {}

  // t + c
  static TPoly linear(const MultiPoly& c);
  static TPoly one();

  const std::vector<MultiPoly>& coeffs() const noexcept { return coeffs_; }
  const MultiPoly& operator[](std::size_t k) const { return coeffs_[k]; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  friend TPoly operator*(const TPoly& a, const TPoly& b);
  // Equal as polynomials in t: trailing zero coefficients are ignored.
  friend bool operator==(const TPoly& a, const TPoly& b);

 private:
  std::vector<MultiPoly> coeffs_;
};

std::string to_string(const TPoly& p);

}  // namespace isf
