#include "isf/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "isf/error.hpp"

namespace isf {

std::string to_string(const Var& v) {
  if (v.is_edge()) return "x_(" + std::to_string(v.i) + "," + std::to_string(v.j) + ")";
  return "x_" + std::to_string(v.i);
}

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

MultiPoly MultiPoly::constant(const BigInt& c) { return term({}, c); }

MultiPoly MultiPoly::variable(const Var& v) { return term({v}, 1); }

MultiPoly MultiPoly::term(Monomial m, const BigInt& c) {
  std::sort(m.begin(), m.end());
  MultiPoly p;
  p.add_term(std::move(m), c);
  return p;
}

BigInt MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt MultiPoly::coefficient_sum() const {
  BigInt s = 0;
  for (const auto& [m, c] : terms_) s += c;
  return s;
}

void MultiPoly::add_term(Monomial m, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(monomial_product(ma, mb), ca * cb);
  return out;
}

MultiPoly multiply(const MultiPoly& p, const MultiPoly& q) { return p * q; }

MultiPoly subtract(const MultiPoly& p, const MultiPoly& q) { return p - q; }

std::string to_string(const Monomial& m) {
  if (m.empty()) return "1";
  std::ostringstream os;
  for (std::size_t k = 0; k < m.size();) {
    std::size_t run = 1;
    while (k + run < m.size() && m[k + run] == m[k]) ++run;
    if (k > 0) os << '*';
    os << to_string(m[k]);
    if (run > 1) os << '^' << run;
    k += run;
  }
  return os.str();
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (m.empty()) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << '*';
      os << to_string(m);
    }
  }
  return os.str();
}

NonnegReport nonneg_report(const MultiPoly& p) {
  for (const auto& [m, c] : p.terms())
    if (c < 0) return {false, std::make_pair(m, c)};
  return {};
}

MultiPoly elementary_symmetric(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw Error(Errc::bad_degree, "e_" + std::to_string(k) + " requested in " + std::to_string(n) + " variables");
  }
  MultiPoly out;
  // Walk k-subsets of [n] in lexicographic order.
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int a = 0; a < k; ++a) idx[a] = a + 1;
  while (true) {
    Monomial m;
    m.reserve(idx.size());
    for (int v : idx) m.push_back(Var::index(v));
    out.add_term(std::move(m), 1);
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - (k - 1 - pos)) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int a = pos + 1; a < k; ++a) idx[a] = idx[a - 1] + 1;
  }
  return out;
}

TPoly TPoly::linear(const MultiPoly& c) { return TPoly({c, MultiPoly::constant(1)}); }

TPoly TPoly::one() { return TPoly({MultiPoly::constant(1)}); }

TPoly operator*(const TPoly& a, const TPoly& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return TPoly();
  std::vector<MultiPoly> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return TPoly(std::move(out));
}

bool operator==(const TPoly& a, const TPoly& b) {
  const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  const MultiPoly zero;
  for (std::size_t k = 0; k < n; ++k) {
    const MultiPoly& x = k < a.coeffs_.size() ? a.coeffs_[k] : zero;
    const MultiPoly& y = k < b.coeffs_.size() ? b.coeffs_[k] : zero;
    if (!(x == y)) return false;
  }
  return true;
}

std::string to_string(const TPoly& p) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = p.size(); k-- > 0;) {
    if (p[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << '(' << to_string(p[k]) << ")*t^" << k;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace isf
