#include "isf/local_injection.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <thread>
#include <utility>

#include "isf/error.hpp"
#include "isf/forest_enumeration.hpp"

namespace isf {

int select_j(const VertexSet& minima_a, const VertexSet& minima_b, PhiRule rule) {
  if (minima_a.size() >= minima_b.size()) {
    throw Error(Errc::size_violation, "select_j needs |m(A)| < |m(B)|, got " + std::to_string(minima_a.size()) +
                                          " and " + std::to_string(minima_b.size()));
  }
  const Subset only_a = difference_of(minima_a, minima_b);
  const GroundSet delta(symmetric_difference_of(minima_a, minima_b));
  return difference_of(phi(delta, only_a, rule), only_a).front();
}

PsiTrace psi(const OrderedGraph& g, const Forest& a, const Forest& b, PhiRule rule) {
  if (a.n() != g.n() || b.n() != g.n()) {
    throw Error(Errc::invalid_input, "forests and graph must share the vertex count " + std::to_string(g.n()));
  }
  if (!is_subgraph_of(a, g)) throw Error(Errc::not_in_graph, "forest A " + to_string(a) + " is not a subgraph of G");
  if (!is_subgraph_of(b, g)) throw Error(Errc::not_in_graph, "forest B " + to_string(b) + " is not a subgraph of G");
  if (!is_increasing(a)) throw Error(Errc::not_increasing, "forest A " + to_string(a) + " is not increasing");
  if (!is_increasing(b)) throw Error(Errc::not_increasing, "forest B " + to_string(b) + " is not increasing");
  if (a.component_count() >= b.component_count()) {
    throw Error(Errc::size_violation, "psi needs k < l, got k=" + std::to_string(a.component_count()) +
                                          " l=" + std::to_string(b.component_count()));
  }

  PsiTrace t;
  t.minima_a = component_minima(a);
  t.minima_b = component_minima(b);
  t.sym_diff = symmetric_difference_of(t.minima_a, t.minima_b);
  t.j = select_j(t.minima_a, t.minima_b, rule);
  t.a_component = component_of(a, t.j);
  t.b_component = component_of(b, t.j);
  t.i0 = t.a_component.front();

  // In an increasing forest the path from the root i0 to j ends with the edge
  // from j's parent.
  const Orientation oa = orient(a);
  t.moved = Edge{oa.parent[t.j], t.j};
  t.a_out = a.without(t.moved);
  t.b_out = b.with(t.moved);
  return t;
}

PsiChecks check_trace(const Forest& a, const Forest& b, const PsiTrace& t) {
  PsiChecks c;
  const Edge e = t.moved;

  EdgeList expected_b = b.edges();
  expected_b.push_back(e);
  std::sort(expected_b.begin(), expected_b.end());
  EdgeList expected_a;
  std::copy_if(a.edges().begin(), a.edges().end(), std::back_inserter(expected_a),
               [&](const Edge& x) { return x != e; });
  c.local = a.contains(e) && !b.contains(e) && t.a_out.edges() == expected_a && t.b_out.edges() == expected_b;

  EdgeList before = a.edges();
  before.insert(before.end(), b.edges().begin(), b.edges().end());
  EdgeList after = t.a_out.edges();
  after.insert(after.end(), t.b_out.edges().begin(), t.b_out.edges().end());
  std::sort(before.begin(), before.end());
  std::sort(after.begin(), after.end());
  c.weight_preserving = before == after;

  c.increasing = is_increasing(t.a_out) && is_increasing(t.b_out) &&
                 t.a_out.component_count() == a.component_count() + 1 &&
                 t.b_out.component_count() == b.component_count() - 1;

  const VertexSet ma = component_minima(a);
  const VertexSet mb = component_minima(b);
  const VertexSet ma_out = component_minima(t.a_out);
  const VertexSet mb_out = component_minima(t.b_out);
  const VertexSet jset{t.j};
  const bool j_ok = is_subset_of(jset, difference_of(mb, ma)) && t.j == t.b_component.front() &&
                    t.i0 == t.a_component.front() && t.i0 != t.j && e.v == t.j;
  c.minima_preserved = j_ok && ma_out == union_of(ma, jset) && mb_out == difference_of(mb, jset) &&
                       union_of(ma_out, mb_out) == union_of(ma, mb) &&
                       intersection_of(ma_out, mb_out) == intersection_of(ma, mb) &&
                       symmetric_difference_of(ma_out, mb_out) == symmetric_difference_of(ma, mb);
  return c;
}

PsiVerification verify_psi(const OrderedGraph& g, int k, int l, PhiRule rule, unsigned jobs) {
  const int n = g.n();
  if (k < 0 || l < 0 || k > n || l > n) {
    throw Error(Errc::index_violation, "component counts must lie in 0.." + std::to_string(n));
  }
  if (k >= l) throw Error(Errc::size_violation, "verify_psi needs k < l, got k=" + std::to_string(k) + " l=" + std::to_string(l));

  const std::vector<Forest> as = enumerate_if(g, k);
  const std::vector<Forest> bs = enumerate_if(g, l);
  const std::size_t total = as.size() * bs.size();

  PsiVerification out;
  out.k = k;
  out.l = l;
  out.total_pairs = total;
  if (total == 0) return out;

  struct Partial {
    bool local = true, weight = true, increasing = true, minima = true;
  };
  std::vector<std::pair<Forest, Forest>> images(total);
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(as.size())));
  std::vector<Partial> partials(jobs);

  auto work = [&](unsigned w) {
    Partial& p = partials[w];
    for (std::size_t ia = w; ia < as.size(); ia += jobs) {
      for (std::size_t ib = 0; ib < bs.size(); ++ib) {
        const PsiTrace t = psi(g, as[ia], bs[ib], rule);
        const PsiChecks c = check_trace(as[ia], bs[ib], t);
        p.local = p.local && c.local;
        p.weight = p.weight && c.weight_preserving;
        p.increasing = p.increasing && c.increasing;
        p.minima = p.minima && c.minima_preserved;
        images[ia * bs.size() + ib] = {t.a_out, t.b_out};
      }
    }
  };

  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
  }

  for (const Partial& p : partials) {
    out.local = out.local && p.local;
    out.weight_preserving = out.weight_preserving && p.weight;
    out.increasing = out.increasing && p.increasing;
    out.minima_preserved = out.minima_preserved && p.minima;
  }

  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return images[x] < images[y]; });
  for (std::size_t r = 1; r < total; ++r) {
    const std::size_t x = order[r - 1], y = order[r];
    if (images[x] != images[y]) continue;
    out.injective = false;
    out.collisions.push_back({as[x / bs.size()], bs[x % bs.size()], as[y / bs.size()], bs[y % bs.size()],
                              images[x].first, images[x].second});
  }
  return out;
}

}  // namespace isf
