#pragma once

#include <utility>
#include <vector>

#include "chilab/vertex_set.hpp"

namespace chilab {

// Simple undirected graph on dense vertex indices 0..n-1, immutable after
// construction. Adjacency rows are bitsets so neighbourhood algebra is
// word-parallel.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(check_order(n)), rows_(n) {}

  Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(check_order(n)), rows_(n) {
    for (auto [u, v] : edges) add_edge_checked(u, v);
  }

  int order() const { return n_; }

  int edge_count() const {
    int twice = 0;
    for (const auto& row : rows_) twice += row.count();
    return twice / 2;
  }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return rows_[u].contains(v);
  }

  const VertexSet& neighbours(int v) const {
    check_vertex(v);
    return rows_[v];
  }

  int degree(int v) const { return neighbours(v).count(); }

  VertexSet vertices() const { return VertexSet::full(n_); }

  Graph complement() const {
    Graph h(n_);
    VertexSet all = vertices();
    for (int v = 0; v < n_; ++v) {
      h.rows_[v] = all - rows_[v];
      h.rows_[v].remove(v);
    }
    return h;
  }

  bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }

 private:
  friend Graph disjoint_union(const Graph&, const Graph&);
  friend struct GraphBuilderAccess;

  static int check_order(int n) {
    if (n < 0) fail(ErrorKind::argument, "negative vertex count");
    if (n > kMaxVertices) fail(ErrorKind::capacity, "vertex count " + std::to_string(n) + " exceeds capacity " + std::to_string(kMaxVertices));
    return n;
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_) fail(ErrorKind::range, "vertex " + std::to_string(v) + " outside graph of order " + std::to_string(n_));
  }

  void add_edge_checked(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) fail(ErrorKind::argument, "loop edge at vertex " + std::to_string(u));
    rows_[u].add(v);
    rows_[v].add(u);
  }

  int n_ = 0;
  std::vector<VertexSet> rows_;
};

// Internal hook for construction helpers that build adjacency in place.
struct GraphBuilderAccess {
  static void add_edge(Graph& g, int u, int v) { g.add_edge_checked(u, v); }
};

struct InducedSubgraph {
  Graph graph;
  std::vector<int> vertices;  // vertices[new index] = original index, increasing
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// True when no edge joins a and b. Requires disjoint inputs.
bool are_anticomplete(const Graph& g, const VertexSet& a, const VertexSet& b);

// True when every a-b pair is an edge. Requires disjoint inputs.
bool are_complete(const Graph& g, const VertexSet& a, const VertexSet& b);

// N(S): vertices adjacent to every member of S. N(empty) = V.
VertexSet common_neighbours(const Graph& g, const VertexSet& s);

// M(S): vertices outside S nonadjacent to every member of S. M(empty) = V.
VertexSet common_nonneighbours(const Graph& g, const VertexSet& s);

Graph disjoint_union(const Graph& a, const Graph& b);

// Union of the neighbourhoods of the members of s (may meet s itself).
VertexSet set_neighbourhood(const Graph& g, const VertexSet& s);

// Vertices of `scope` outside s with no neighbour in s.
VertexSet anticomplete_set(const Graph& g, const VertexSet& s, const VertexSet& scope);

// Subset of s that lies inside the graph order.
VertexSet clip_to_graph(const Graph& g, const VertexSet& s);

}  // namespace chilab
