#include "isf/chromatic.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <sstream>
#include <thread>

#include "isf/error.hpp"
#include "isf/forest_enumeration.hpp"

namespace isf {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(int degree, const BigInt& c) {
  std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return IntPoly(std::move(v));
}

BigInt IntPoly::coefficient(int d) const {
  return d >= 0 && d < static_cast<int>(coeffs_.size()) ? coeffs_[d] : BigInt(0);
}

IntPoly IntPoly::negate_variable() const {
  IntPoly out = *this;
  for (std::size_t d = 1; d < out.coeffs_.size(); d += 2) out.coeffs_[d] = -out.coeffs_[d];
  return out;
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t d = 0; d < o.coeffs_.size(); ++d) coeffs_[d] += o.coeffs_[d];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t d = 0; d < o.coeffs_.size(); ++d) coeffs_[d] -= o.coeffs_[d];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(std::move(out));
}

std::string to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = p.degree(); d >= 0; --d) {
    const BigInt& c = p.coeffs()[d];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (d == 0 || mag != 1) os << mag.get_str();
    if (d >= 1) os << 't';
    if (d >= 2) os << '^' << d;
  }
  return os.str();
}

EdgeList lex_edge_order(const OrderedGraph& g) {
  EdgeList out = g.edges();
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeList> circuits(const OrderedGraph& g) {
  const int n = g.n();
  std::vector<EdgeList> out;
  std::vector<int> path;
  std::vector<char> on_path(static_cast<std::size_t>(n) + 1, 0);

  // Each circuit is found from its smallest vertex s, walking only through
  // larger vertices; requiring path[1] < path.back() keeps one direction.
  auto extend = [&](auto&& self, int s, int v) -> void {
    for (int w : g.neighbors(v)) {
      if (w == s && path.size() >= 3 && path[1] < path.back()) {
        EdgeList c;
        for (std::size_t i = 0; i < path.size(); ++i) {
          const int a = path[i], b = path[(i + 1) % path.size()];
          c.push_back({std::min(a, b), std::max(a, b)});
        }
        std::sort(c.begin(), c.end());
        out.push_back(std::move(c));
      }
      if (w <= s || on_path[w]) continue;
      on_path[w] = 1;
      path.push_back(w);
      self(self, s, w);
      path.pop_back();
      on_path[w] = 0;
    }
  };

  for (int s = 1; s <= n; ++s) {
    path = {s};
    on_path[s] = 1;
    extend(extend, s, s);
    on_path[s] = 0;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<EdgeList> broken_circuits(const OrderedGraph& g, BrokenCircuitConvention c) {
  std::vector<EdgeList> out;
  for (EdgeList circ : circuits(g)) {
    if (c == BrokenCircuitConvention::remove_min) {
      circ.erase(circ.begin());
    } else {
      circ.pop_back();
    }
    out.push_back(std::move(circ));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

void require_subgraph(const OrderedGraph& g, const Forest& f) {
  if (!is_subgraph_of(f, g)) throw Error(Errc::not_in_graph, "forest " + to_string(f) + " is not a subgraph of G");
}

bool contains_all(const EdgeList& haystack, const EdgeList& needle) {
  return std::includes(haystack.begin(), haystack.end(), needle.begin(), needle.end());
}

bool good_vertex_admissible(const OrderedGraph& g, const Forest& f) {
  const Orientation o = orient(f);
  for (int v = 1; v <= f.n(); ++v) {
    for (int w : o.children[v]) {
      for (int u : o.branch(w)) {
        if (!g.has_edge(u, v)) continue;
        // branch() is sorted, so u is the smallest neighbour of v in B(w).
        if (u != w) return false;
        break;
      }
    }
  }
  return true;
}

bool nbc_against(const Forest& f, const std::vector<EdgeList>& broken) {
  return std::none_of(broken.begin(), broken.end(), [&](const EdgeList& bc) { return contains_all(f.edges(), bc); });
}

// Deletion-contraction on graphs encoded as adjacency bitmasks over 0..m-1.
class ChromaticSolver {
 public:
  explicit ChromaticSolver(PivotRule pivot) : pivot_(pivot) {}

  IntPoly solve(const std::vector<std::uint32_t>& adj) {
    if (auto it = memo_.find(adj); it != memo_.end()) return it->second;
    const int m = static_cast<int>(adj.size());

    int pu = -1, pv = -1;
    for (int u = 0; u < m; ++u) {
      const std::uint32_t higher = adj[u] & ~((2u << u) - 1u);
      if (!higher) continue;
      if (pivot_ == PivotRule::first_edge) {
        pu = u;
        pv = std::countr_zero(higher);
        break;
      }
      pu = u;
      pv = 31 - std::countl_zero(higher);
    }

    IntPoly result;
    if (pu < 0) {
      result = IntPoly::monomial(m);
    } else {
      std::vector<std::uint32_t> deleted = adj;
      deleted[pu] &= ~(1u << pv);
      deleted[pv] &= ~(1u << pu);
      result = solve(deleted) - solve(contract(deleted, pu, pv));
    }
    memo_.emplace(adj, result);
    return result;
  }

 private:
  // Merges v into u (u < v, not adjacent) and drops v; parallel edges
  // collapse in the bitmask union.
  static std::vector<std::uint32_t> contract(const std::vector<std::uint32_t>& adj, int u, int v) {
    const int m = static_cast<int>(adj.size());
    std::vector<std::uint32_t> merged = adj;
    merged[u] |= merged[v];
    for (int x = 0; x < m; ++x)
      if (merged[x] >> v & 1u) merged[x] = (merged[x] & ~(1u << v)) | (x == u ? 0u : (1u << u));
    merged[u] &= ~(1u << u);
    std::vector<std::uint32_t> out;
    out.reserve(static_cast<std::size_t>(m) - 1);
    const std::uint32_t low = (1u << v) - 1u;
    for (int x = 0; x < m; ++x) {
      if (x == v) continue;
      out.push_back((merged[x] & low) | ((merged[x] >> 1) & ~low));
    }
    return out;
  }

  PivotRule pivot_;
  std::map<std::vector<std::uint32_t>, IntPoly> memo_;
};

void collect_forests(const OrderedGraph& g, std::size_t next, const DisjointSets& ds, EdgeList& chosen,
                     std::vector<Forest>& out) {
  if (next == g.edges().size()) {
    out.emplace_back(g.n(), chosen);
    return;
  }
  const Edge e = g.edges()[next];
  DisjointSets with = ds;
  if (with.unite(e.u, e.v)) {
    chosen.push_back(e);
    collect_forests(g, next + 1, with, chosen, out);
    chosen.pop_back();
  }
  collect_forests(g, next + 1, ds, chosen, out);
}

}  // namespace

bool is_admissible_goodvertex(const OrderedGraph& g, const Forest& f) {
  require_subgraph(g, f);
  return good_vertex_admissible(g, f);
}

bool is_nbc(const OrderedGraph& g, const Forest& f, BrokenCircuitConvention c) {
  require_subgraph(g, f);
  return nbc_against(f, broken_circuits(g, c));
}

IntPoly chromatic_polynomial(const OrderedGraph& g, PivotRule pivot) {
  if (g.n() > 32) throw Error(Errc::invalid_input, "chromatic_polynomial supports at most 32 vertices");
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.n()), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u - 1] |= 1u << (e.v - 1);
    adj[e.v - 1] |= 1u << (e.u - 1);
  }
  ChromaticSolver solver(pivot);
  return solver.solve(adj);
}

std::vector<Forest> spanning_forests(const OrderedGraph& g) {
  std::vector<Forest> out;
  EdgeList chosen;
  collect_forests(g, 0, DisjointSets(g.n()), chosen, out);
  std::sort(out.begin(), out.end(), [](const Forest& a, const Forest& b) { return a.edges() < b.edges(); });
  return out;
}

WhitneyCheck whitney_check(const OrderedGraph& g, BrokenCircuitConvention c) {
  const int n = g.n();
  WhitneyCheck out;
  out.counts.assign(static_cast<std::size_t>(n) + 1, 0);
  out.goodvertex_counts.assign(static_cast<std::size_t>(n) + 1, 0);
  const auto broken = broken_circuits(g, c);
  for (const Forest& f : spanning_forests(g)) {
    if (nbc_against(f, broken)) out.counts[f.component_count()] += 1;
    if (good_vertex_admissible(g, f)) out.goodvertex_counts[f.component_count()] += 1;
  }
  const IntPoly p = chromatic_polynomial(g);
  for (int k = 0; k <= n; ++k) {
    const BigInt a = p.coefficient(k);
    out.coeffs.push_back((n - k) % 2 == 0 ? a : BigInt(-a));
  }
  out.equal = out.counts == out.coeffs;
  return out;
}

std::vector<AdmissibilityRow> admissibility_table(const OrderedGraph& g) {
  const auto bmin = broken_circuits(g, BrokenCircuitConvention::remove_min);
  const auto bmax = broken_circuits(g, BrokenCircuitConvention::remove_max);
  std::vector<AdmissibilityRow> rows;
  for (Forest& f : spanning_forests(g)) {
    AdmissibilityRow r;
    r.nbc_min = nbc_against(f, bmin);
    r.nbc_max = nbc_against(f, bmax);
    r.good_vertex = good_vertex_admissible(g, f);
    r.forest = std::move(f);
    rows.push_back(std::move(r));
  }
  return rows;
}

OrderedGraph relabel(const OrderedGraph& g, const std::vector<int>& perm) {
  const int n = g.n();
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  bool valid = static_cast<int>(perm.size()) == n;
  for (int i = 0; valid && i < n; ++i) valid = sorted[i] == i + 1;
  if (!valid) throw Error(Errc::invalid_input, "relabeling must be a permutation of 1.." + std::to_string(n));
  EdgeList edges;
  for (const Edge& e : g.edges()) {
    const int a = perm[e.u - 1], b = perm[e.v - 1];
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  return OrderedGraph(n, std::move(edges));
}

MovableSearch movable_edge_search(const OrderedGraph& input, const std::optional<std::vector<int>>& relabeling,
                                  unsigned jobs) {
  MovableSearch out;
  out.graph = relabeling ? relabel(input, *relabeling) : input;
  const OrderedGraph& g = out.graph;

  std::vector<Forest> admissible;
  for (Forest& f : spanning_forests(g))
    if (good_vertex_admissible(g, f)) admissible.push_back(std::move(f));
  out.admissible_forests = admissible.size();
  // spanning_forests() output is sorted by edge list, so these keys are too.
  std::vector<EdgeList> keys;
  keys.reserve(admissible.size());
  for (const Forest& f : admissible) keys.push_back(f.edges());
  auto is_admissible = [&](const EdgeList& edges) { return std::binary_search(keys.begin(), keys.end(), edges); };

  auto has_movable_edge = [&](const Forest& a, const Forest& b) {
    for (const Edge& e : a.edges()) {
      if (b.contains(e)) continue;
      EdgeList a_less;
      std::copy_if(a.edges().begin(), a.edges().end(), std::back_inserter(a_less), [&](const Edge& x) { return x != e; });
      if (!is_admissible(a_less)) continue;
      DisjointSets ds(g.n());
      for (const Edge& x : b.edges()) ds.unite(x.u, x.v);
      if (!ds.unite(e.u, e.v)) continue;
      EdgeList b_more = b.edges();
      b_more.insert(std::upper_bound(b_more.begin(), b_more.end(), e), e);
      if (is_admissible(b_more)) return true;
    }
    return false;
  };

  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(admissible.size(), 1))));
  struct Partial {
    std::uint64_t pairs = 0;
    std::vector<std::pair<std::size_t, std::size_t>> failures;
  };
  std::vector<Partial> partials(jobs);
  auto work = [&](unsigned w) {
    for (std::size_t ia = w; ia < admissible.size(); ia += jobs) {
      for (std::size_t ib = 0; ib < admissible.size(); ++ib) {
        if (admissible[ia].component_count() >= admissible[ib].component_count()) continue;
        ++partials[w].pairs;
        if (!has_movable_edge(admissible[ia], admissible[ib])) partials[w].failures.emplace_back(ia, ib);
      }
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
  }

  std::vector<std::pair<std::size_t, std::size_t>> failures;
  for (const Partial& p : partials) {
    out.pairs_checked += p.pairs;
    failures.insert(failures.end(), p.failures.begin(), p.failures.end());
  }
  std::sort(failures.begin(), failures.end());
  for (auto [ia, ib] : failures) out.failures.emplace_back(admissible[ia], admissible[ib]);
  out.all_pairs_ok = out.failures.empty();
  return out;
}

bool natural_order_is_peo(const OrderedGraph& g) {
  for (int j = 1; j <= g.n(); ++j) {
    const VertexSet lower = g.lower_neighbors(j);
    for (std::size_t a = 0; a < lower.size(); ++a)
      for (std::size_t b = a + 1; b < lower.size(); ++b)
        if (!g.has_edge(lower[a], lower[b])) return false;
  }
  return true;
}

PeoCheck peo_isf_check(const OrderedGraph& g) {
  const int n = g.n();
  PeoCheck out;
  std::vector<BigInt> isf_at_one;
  for (int k = 0; k <= n; ++k) isf_at_one.push_back(BigInt(static_cast<unsigned long>(count_if(g, k))));
  out.lhs = IntPoly(std::move(isf_at_one));
  const IntPoly flipped = chromatic_polynomial(g).negate_variable();
  out.rhs = n % 2 == 0 ? flipped : IntPoly() - flipped;
  out.holds = out.lhs == out.rhs;
  out.peo_condition = natural_order_is_peo(g);
  return out;
}

}  // namespace isf
