#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace isf {

// An edge (u, v) of a simple graph on [n], always stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

using EdgeList = std::vector<Edge>;
// Vertex sets are kept as strictly increasing vectors.
using VertexSet = std::vector<int>;

// Union-find over vertices 1..n with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(int n);

  int find(int v);
  // Returns false when u and v were already in the same set.
  bool unite(int u, int v);

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

// Simple graph on vertices 1..n with the natural vertex order.
class OrderedGraph {
 public:
  OrderedGraph() = default;
  // Throws Error(invalid_input) naming the offending edge when an endpoint is
  // out of range, an edge is not written (i, j) with i < j, or repeats.
  OrderedGraph(int n, EdgeList edges);

  static OrderedGraph complete(int n);
  static OrderedGraph edgeless(int n);
  // Graph on [n] keeping the edges of K_n selected by the bits of `mask`,
  // where bit b refers to the b-th edge of K_n in lexicographic order.
  static OrderedGraph from_edge_mask(int n, unsigned long long mask);

  int n() const noexcept { return n_; }
  const EdgeList& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool has_edge(int a, int b) const noexcept;
  // |{i < j : (i, j) in E}|
  int lower_degree(int j) const noexcept;
  VertexSet lower_neighbors(int j) const;
  VertexSet neighbors(int v) const;
  bool is_connected() const;

  friend bool operator==(const OrderedGraph&, const OrderedGraph&) = default;

 private:
  int n_ = 0;
  EdgeList edges_;
  std::vector<char> adjacency_;  // n x n, row-major over 0-based vertices
};

// Acyclic edge set spanning the ambient vertex set 1..n. Isolated vertices are
// singleton components.
class Forest {
 public:
  Forest() = default;
  // Validates endpoints like OrderedGraph, then rejects circuits with
  // Error(cyclic_input).
  Forest(int n, EdgeList edges);

  int n() const noexcept { return n_; }
  const EdgeList& edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }
  int component_count() const noexcept { return n_ - static_cast<int>(edges_.size()); }
  bool contains(const Edge& e) const noexcept;

  Forest without(const Edge& e) const;
  Forest with(const Edge& e) const;

  friend auto operator<=>(const Forest&, const Forest&) = default;

 private:
  int n_ = 0;
  EdgeList edges_;
};

std::string to_string(const Forest& f);

// Forest rooted at the minimum of each component.
struct Orientation {
  VertexSet roots;
  // parent[v] for v in 1..n, 0 for roots. Index 0 unused.
  std::vector<int> parent;
  // children[v] sorted increasingly. Index 0 unused.
  std::vector<std::vector<int>> children;

  bool is_root(int v) const { return parent[v] == 0; }
  // B(v): v together with all of its descendants, sorted.
  VertexSet branch(int v) const;
};

Orientation orient(const Forest& f);
bool is_increasing(const Forest& f);
// m(F): the minima of the connected components.
VertexSet component_minima(const Forest& f);
VertexSet component_of(const Forest& f, int v);
bool is_subgraph_of(const Forest& f, const OrderedGraph& g);

}  // namespace isf
