#include "chilab/graph.hpp"

namespace chilab {

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  std::vector<int> verts;
  std::vector<int> back(kMaxVertices, -1);
  for (int v : s) {
    if (v >= g.order()) fail(ErrorKind::range, "induced subgraph vertex " + std::to_string(v) + " outside graph");
    back[v] = static_cast<int>(verts.size());
    verts.push_back(v);
  }
  Graph h(static_cast<int>(verts.size()));
  for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
    VertexSet nbrs = g.neighbours(verts[i]) & s;
    for (int u : nbrs) {
      if (back[u] > i) GraphBuilderAccess::add_edge(h, i, back[u]);
    }
  }
  return InducedSubgraph{std::move(h), std::move(verts)};
}

bool are_anticomplete(const Graph& g, const VertexSet& a, const VertexSet& b) {
  if (a.intersects(b)) fail(ErrorKind::argument, "anticomplete test requires disjoint sets");
  for (int v : a) {
    if (g.neighbours(v).intersects(b)) return false;
  }
  return true;
}

bool are_complete(const Graph& g, const VertexSet& a, const VertexSet& b) {
  if (a.intersects(b)) fail(ErrorKind::argument, "complete test requires disjoint sets");
  for (int v : a) {
    if (!g.neighbours(v).contains_all(b)) return false;
  }
  return true;
}

VertexSet common_neighbours(const Graph& g, const VertexSet& s) {
  VertexSet acc = g.vertices();
  for (int v : s) acc &= g.neighbours(v);
  return acc;
}

VertexSet common_nonneighbours(const Graph& g, const VertexSet& s) {
  VertexSet acc = g.vertices();
  for (int v : s) acc -= g.neighbours(v);
  return acc - s;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (int v = 0; v < a.order(); ++v) {
    for (int u : a.neighbours(v)) {
      if (u > v) GraphBuilderAccess::add_edge(g, v, u);
    }
  }
  int off = a.order();
  for (int v = 0; v < b.order(); ++v) {
    for (int u : b.neighbours(v)) {
      if (u > v) GraphBuilderAccess::add_edge(g, off + v, off + u);
    }
  }
  return g;
}

VertexSet set_neighbourhood(const Graph& g, const VertexSet& s) {
  VertexSet acc;
  for (int v : s) acc |= g.neighbours(v);
  return acc;
}

VertexSet anticomplete_set(const Graph& g, const VertexSet& s, const VertexSet& scope) {
  return scope - s - set_neighbourhood(g, s);
}

VertexSet clip_to_graph(const Graph& g, const VertexSet& s) { return s & g.vertices(); }

}  // namespace chilab
