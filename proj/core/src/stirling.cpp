#include "isf/stirling.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

#include "isf/error.hpp"
#include "isf/forest_enumeration.hpp"

namespace isf {

Permutation::Permutation(int n, std::vector<Cycle> cycles) : n_(n), cycles_(std::move(cycles)) {
  if (n_ < 0) throw Error(Errc::invalid_input, "negative permutation size");
  std::vector<char> seen(static_cast<std::size_t>(n_) + 1, 0);
  for (std::size_t c = 0; c < cycles_.size(); ++c) {
    const Cycle& cyc = cycles_[c];
    if (cyc.empty()) throw Error(Errc::invalid_input, "empty cycle");
    for (int v : cyc) {
      if (v < 1 || v > n_) throw Error(Errc::invalid_input, "cycle " + to_string(cyc) + " leaves [" + std::to_string(n_) + "]");
      if (seen[v]) throw Error(Errc::invalid_input, "element " + std::to_string(v) + " appears twice");
      seen[v] = 1;
    }
    if (*std::min_element(cyc.begin(), cyc.end()) != cyc.front()) {
      throw Error(Errc::non_canonical_cycle, "cycle " + to_string(cyc) + " does not start at its minimum");
    }
    if (c > 0 && cycles_[c - 1].front() > cyc.front()) {
      throw Error(Errc::non_canonical_cycle, "cycles are not sorted by their minima");
    }
  }
  for (int v = 1; v <= n_; ++v) {
    if (!seen[v]) throw Error(Errc::invalid_input, "element " + std::to_string(v) + " is missing from the cycles");
  }
}

Permutation Permutation::identity(int n) {
  std::vector<Cycle> cycles;
  for (int v = 1; v <= n; ++v) cycles.push_back({v});
  return Permutation(n, std::move(cycles));
}

Permutation Permutation::from_images(const std::vector<int>& image) {
  const int n = static_cast<int>(image.size());
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Cycle> cycles;
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    Cycle c;
    for (int v = start; !seen[v]; v = image[v - 1]) {
      if (v < 1 || v > n) throw Error(Errc::invalid_input, "image out of range");
      seen[v] = 1;
      c.push_back(v);
    }
    cycles.push_back(std::move(c));
  }
  return Permutation(n, std::move(cycles));
}

std::vector<int> Permutation::images() const {
  std::vector<int> image(static_cast<std::size_t>(n_));
  for (const Cycle& c : cycles_)
    for (std::size_t i = 0; i < c.size(); ++i) image[c[i] - 1] = c[(i + 1) % c.size()];
  return image;
}

std::string to_string(const Cycle& c) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
  os << ')';
  return os.str();
}

std::string to_string(const Permutation& p) {
  std::string out;
  for (const Cycle& c : p.cycles()) out += to_string(c);
  return out.empty() ? "()" : out;
}

Permutation forest_to_permutation(const Forest& f) {
  if (!is_increasing(f)) throw Error(Errc::not_increasing, "forest " + to_string(f) + " is not increasing");
  const Orientation o = orient(f);
  std::vector<Cycle> cycles;
  for (int root : o.roots) {
    Cycle c;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      c.push_back(v);
      // Pushing children increasingly pops them decreasingly.
      for (int w : o.children[v]) stack.push_back(w);
    }
    cycles.push_back(std::move(c));
  }
  return Permutation(f.n(), std::move(cycles));
}

Forest permutation_to_forest(const Permutation& p) {
  EdgeList edges;
  for (const Cycle& c : p.cycles()) {
    std::vector<int> smaller;  // strictly increasing stack
    for (int v : c) {
      while (!smaller.empty() && smaller.back() > v) smaller.pop_back();
      if (!smaller.empty()) edges.push_back({smaller.back(), v});
      smaller.push_back(v);
    }
  }
  return Forest(p.n(), std::move(edges));
}

StirlingRow stirling_row(int n) {
  if (n < 0) throw Error(Errc::invalid_input, "negative n for stirling_row");
  StirlingRow row;
  row.n = n;
  const OrderedGraph kn = OrderedGraph::complete(n);
  for (int k = 0; k <= n; ++k) {
    const BigInt c = static_cast<unsigned long>(count_if(kn, k));
    row.unsigned_counts.push_back(c);
    row.signed_counts.push_back((n - k) % 2 == 0 ? c : BigInt(-c));
  }
  return row;
}

namespace {

std::vector<Cycle> cycle_difference(const std::vector<Cycle>& a, const std::vector<Cycle>& b) {
  std::vector<Cycle> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> sorted_elements(std::initializer_list<const Cycle*> cycles) {
  std::vector<int> out;
  for (const Cycle* c : cycles) out.insert(out.end(), c->begin(), c->end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

PermutationPsi permutation_psi(const Permutation& sigma, const Permutation& tau, PhiRule rule) {
  if (sigma.n() != tau.n()) throw Error(Errc::invalid_input, "sigma and tau act on different sets");
  if (sigma.cycle_count() >= tau.cycle_count()) {
    throw Error(Errc::size_violation, "sigma must have fewer cycles than tau");
  }
  const OrderedGraph kn = OrderedGraph::complete(sigma.n());

  PermutationPsi out;
  out.trace = psi(kn, permutation_to_forest(sigma), permutation_to_forest(tau), rule);
  out.sigma_p = forest_to_permutation(out.trace.a_out);
  out.tau_p = forest_to_permutation(out.trace.b_out);

  // Canonical cycles sorted by distinct minima are also lexicographically
  // sorted, so set algorithms apply directly.
  const auto sigma_lost = cycle_difference(sigma.cycles(), out.sigma_p.cycles());
  const auto sigma_new = cycle_difference(out.sigma_p.cycles(), sigma.cycles());
  const auto tau_lost = cycle_difference(tau.cycles(), out.tau_p.cycles());
  const auto tau_new = cycle_difference(out.tau_p.cycles(), tau.cycles());

  bool ok = sigma_lost.size() == 1 && sigma_new.size() == 2 && tau_lost.size() == 2 && tau_new.size() == 1;
  if (ok) {
    out.broken_cycle = sigma_lost[0];
    out.split_into = {sigma_new[0], sigma_new[1]};
    out.glued_pair = {tau_lost[0], tau_lost[1]};
    out.glued_into = tau_new[0];
    ok = sorted_elements({&sigma_lost[0]}) == sorted_elements({&sigma_new[0], &sigma_new[1]}) &&
         sorted_elements({&tau_new[0]}) == sorted_elements({&tau_lost[0], &tau_lost[1]});
  }
  out.spectators_unchanged = ok;
  return out;
}

}  // namespace isf
