#include "isf/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include "isf/error.hpp"

namespace isf {

std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

std::string to_string(const Forest& f) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < f.edges().size(); ++i) {
    if (i > 0) os << ',';
    os << to_string(f.edges()[i]);
  }
  os << '}';
  return os.str();
}

DisjointSets::DisjointSets(int n) : parent_(static_cast<std::size_t>(n) + 1), size_(parent_.size(), 1) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int DisjointSets::find(int v) {
  while (parent_[v] != v) {
    parent_[v] = parent_[parent_[v]];
    v = parent_[v];
  }
  return v;
}

bool DisjointSets::unite(int u, int v) {
  u = find(u);
  v = find(v);
  if (u == v) return false;
  if (size_[u] < size_[v]) std::swap(u, v);
  parent_[v] = u;
  size_[u] += size_[v];
  return true;
}

namespace {

void validate_edges(int n, EdgeList& edges) {
  if (n < 0) throw Error(Errc::invalid_input, "negative vertex count " + std::to_string(n));
  for (const Edge& e : edges) {
    if (std::min(e.u, e.v) < 1 || std::max(e.u, e.v) > n) {
      throw Error(Errc::invalid_input, "edge " + to_string(e) + " has an endpoint outside 1.." + std::to_string(n));
    }
    if (e.u == e.v) throw Error(Errc::invalid_input, "edge " + to_string(e) + " is a self-loop");
    if (e.u > e.v) throw Error(Errc::invalid_input, "edge " + to_string(e) + " must be written (i,j) with i<j");
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) throw Error(Errc::invalid_input, "duplicate edge " + to_string(*dup));
}

}  // namespace

OrderedGraph::OrderedGraph(int n, EdgeList edges) : n_(n), edges_(std::move(edges)) {
  validate_edges(n_, edges_);
  adjacency_.assign(static_cast<std::size_t>(n_) * n_, 0);
  for (const Edge& e : edges_) {
    adjacency_[(e.u - 1) * n_ + (e.v - 1)] = 1;
    adjacency_[(e.v - 1) * n_ + (e.u - 1)] = 1;
  }
}

OrderedGraph OrderedGraph::complete(int n) {
  EdgeList edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) edges.push_back({i, j});
  return OrderedGraph(n, std::move(edges));
}

OrderedGraph OrderedGraph::edgeless(int n) { return OrderedGraph(n, {}); }

OrderedGraph OrderedGraph::from_edge_mask(int n, unsigned long long mask) {
  EdgeList edges;
  int bit = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j, ++bit)
      if (mask >> bit & 1ULL) edges.push_back({i, j});
  return OrderedGraph(n, std::move(edges));
}

bool OrderedGraph::has_edge(int a, int b) const noexcept {
  if (a < 1 || b < 1 || a > n_ || b > n_) return false;
  return adjacency_[(a - 1) * n_ + (b - 1)] != 0;
}

int OrderedGraph::lower_degree(int j) const noexcept {
  int d = 0;
  for (int i = 1; i < j; ++i) d += has_edge(i, j) ? 1 : 0;
  return d;
}

VertexSet OrderedGraph::lower_neighbors(int j) const {
  VertexSet out;
  for (int i = 1; i < j; ++i)
    if (has_edge(i, j)) out.push_back(i);
  return out;
}

VertexSet OrderedGraph::neighbors(int v) const {
  VertexSet out;
  for (int u = 1; u <= n_; ++u)
    if (has_edge(u, v)) out.push_back(u);
  return out;
}

bool OrderedGraph::is_connected() const {
  if (n_ <= 1) return true;
  DisjointSets ds(n_);
  int merges = 0;
  for (const Edge& e : edges_) merges += ds.unite(e.u, e.v) ? 1 : 0;
  return merges == n_ - 1;
}

Forest::Forest(int n, EdgeList edges) : n_(n), edges_(std::move(edges)) {
  validate_edges(n_, edges_);
  DisjointSets ds(n_);
  for (const Edge& e : edges_) {
    if (!ds.unite(e.u, e.v)) throw Error(Errc::cyclic_input, "edge " + to_string(e) + " closes a circuit");
  }
}

bool Forest::contains(const Edge& e) const noexcept {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

Forest Forest::without(const Edge& e) const {
  EdgeList out;
  out.reserve(edges_.size());
  std::copy_if(edges_.begin(), edges_.end(), std::back_inserter(out), [&](const Edge& x) { return x != e; });
  return Forest(n_, std::move(out));
}

Forest Forest::with(const Edge& e) const {
  EdgeList out = edges_;
  out.push_back(e);
  return Forest(n_, std::move(out));
}

VertexSet Orientation::branch(int v) const {
  VertexSet out;
  std::vector<int> stack{v};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    out.push_back(x);
    for (int c : children[x]) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Orientation orient(const Forest& f) {
  const int n = f.n();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
  for (const Edge& e : f.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }

  Orientation o;
  o.parent.assign(static_cast<std::size_t>(n) + 1, 0);
  o.children.assign(static_cast<std::size_t>(n) + 1, {});
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);

  // Scanning vertices in increasing order makes the first vertex reached in
  // each component its minimum.
  for (int r = 1; r <= n; ++r) {
    if (seen[r]) continue;
    o.roots.push_back(r);
    seen[r] = 1;
    std::queue<int> q;
    q.push(r);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int y : adj[x]) {
        if (seen[y]) continue;
        seen[y] = 1;
        o.parent[y] = x;
        o.children[x].push_back(y);
        q.push(y);
      }
    }
  }
  for (auto& c : o.children) std::sort(c.begin(), c.end());
  return o;
}

bool is_increasing(const Forest& f) {
  const Orientation o = orient(f);
  for (int v = 1; v <= f.n(); ++v)
    if (!o.is_root(v) && o.parent[v] > v) return false;
  return true;
}

VertexSet component_minima(const Forest& f) {
  DisjointSets ds(f.n());
  for (const Edge& e : f.edges()) ds.unite(e.u, e.v);
  VertexSet minima;
  std::vector<char> taken(static_cast<std::size_t>(f.n()) + 1, 0);
  for (int v = 1; v <= f.n(); ++v) {
    int r = ds.find(v);
    if (!taken[r]) {
      taken[r] = 1;
      minima.push_back(v);
    }
  }
  return minima;
}

VertexSet component_of(const Forest& f, int v) {
  DisjointSets ds(f.n());
  for (const Edge& e : f.edges()) ds.unite(e.u, e.v);
  VertexSet out;
  const int r = ds.find(v);
  for (int u = 1; u <= f.n(); ++u)
    if (ds.find(u) == r) out.push_back(u);
  return out;
}

bool is_subgraph_of(const Forest& f, const OrderedGraph& g) {
  if (f.n() != g.n()) return false;
  return std::all_of(f.edges().begin(), f.edges().end(), [&](const Edge& e) { return g.has_edge(e.u, e.v); });
}

}  // namespace isf
