#include "chilab/kernels.hpp"

#include <algorithm>
#include <numeric>

#include "chilab/holes.hpp"

namespace chilab {

namespace {

// Max-clique size by pivoted branch and bound; stops early once `stop_at`
// is reached (pass an unreachable value for the exact maximum).
int clique_bound_search(const Graph& g, VertexSet p, int stop_at) {
  int best = 0;
  std::function<void(int, VertexSet)> expand = [&](int rsize, VertexSet cands) {
    if (best >= stop_at) return;
    if (rsize > best) best = rsize;
    if (cands.empty() || rsize + cands.count() <= best) return;
    int pivot = -1, pivot_links = -1;
    for (int u : cands) {
      int links = (cands & g.neighbours(u)).count();
      if (links > pivot_links) {
        pivot_links = links;
        pivot = u;
      }
    }
    VertexSet ext = cands - g.neighbours(pivot);
    for (int v : ext) {
      expand(rsize + 1, cands & g.neighbours(v));
      if (best >= stop_at) return;
      cands.remove(v);
      if (rsize + cands.count() <= best) return;
    }
  };
  expand(0, p);
  return best;
}

int exact_clique_size(const Graph& g, const VertexSet& p) { return clique_bound_search(g, p, kMaxVertices + 1); }

bool exists_clique_of_size(const Graph& g, const VertexSet& p, int k) {
  if (k <= 0) return true;
  return clique_bound_search(g, p, k) >= k;
}

struct ColouringSearch {
  const Graph& g;
  std::vector<int> order;
  std::vector<VertexSet> classes;
  std::vector<int> assign;
  std::vector<int> best_assign;
  int best;
  int lower;
  bool done = false;

  ColouringSearch(const Graph& graph, int lb, int ub, std::vector<int> ord, std::vector<int> greedy)
      : g(graph), order(std::move(ord)), classes(ub + 1), assign(graph.order(), -1), best_assign(std::move(greedy)), best(ub), lower(lb) {}

  void dfs(std::size_t idx, int used) {
    if (done || used >= best) return;
    if (idx == order.size()) {
      best = used;
      best_assign = assign;
      if (best <= lower) done = true;
      return;
    }
    int v = order[idx];
    const VertexSet& nb = g.neighbours(v);
    int cap = std::min(used + 1, best - 1);
    for (int c = 0; c < cap; ++c) {
      if (classes[c].intersects(nb)) continue;
      classes[c].add(v);
      assign[v] = c;
      dfs(idx + 1, std::max(used, c + 1));
      classes[c].remove(v);
      assign[v] = -1;
      if (done) return;
    }
  }
};

Colouring colour_graph(const Graph& g) {
  int n = g.order();
  if (n == 0) return Colouring{0, {}};
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });

  // Greedy first-fit upper bound in the same order.
  std::vector<int> greedy(n, -1);
  std::vector<VertexSet> cls;
  int ub = 0;
  for (int v : order) {
    const VertexSet& nb = g.neighbours(v);
    int c = 0;
    while (c < ub && cls[c].intersects(nb)) ++c;
    if (c == ub) {
      cls.emplace_back();
      ++ub;
    }
    cls[c].add(v);
    greedy[v] = c;
  }

  int lb = exact_clique_size(g, g.vertices());
  if (lb >= ub) return Colouring{ub, greedy};

  ColouringSearch search(g, lb, ub, order, greedy);
  search.dfs(0, 0);
  return Colouring{search.best, search.best_assign};
}

}  // namespace

int chromatic_number(const Graph& g) { return colour_graph(g).colours; }

Colouring optimal_colouring(const Graph& g) { return colour_graph(g); }

int chi_of(const Graph& g, const VertexSet& s) {
  if (s.empty()) return 0;
  return chromatic_number(induced_subgraph(g, clip_to_graph(g, s)).graph);
}

int clique_number(const Graph& g) { return exact_clique_size(g, g.vertices()); }

int clique_number_within(const Graph& g, const VertexSet& s) { return exact_clique_size(g, clip_to_graph(g, s)); }

VertexSet max_clique_within(const Graph& g, const VertexSet& s) {
  VertexSet p = clip_to_graph(g, s);
  int need = exact_clique_size(g, p);
  VertexSet clique;
  while (need > 0) {
    for (int v : p) {
      VertexSet rest = p & g.neighbours(v);
      if (exists_clique_of_size(g, rest, need - 1)) {
        clique.add(v);
        p = rest;
        --need;
        break;
      }
    }
  }
  return clique;
}

VertexSet max_clique(const Graph& g) { return max_clique_within(g, g.vertices()); }

int stability_number(const Graph& g) {
  if (g.order() == 0) return 0;
  return exact_clique_size(g.complement(), g.vertices());
}

bool has_stable_set_of_size(const Graph& g, const VertexSet& within, int s) {
  if (s <= 0) return true;
  VertexSet scope = clip_to_graph(g, within);
  if (scope.count() < s) return false;
  InducedSubgraph sub = induced_subgraph(g, scope);
  return exists_clique_of_size(sub.graph.complement(), sub.graph.vertices(), s);
}

bool for_each_stable_set(const Graph& g, const VertexSet& within, int s,
                         const std::function<bool(const VertexSet&)>& visit) {
  VertexSet scope = clip_to_graph(g, within);
  if (s < 0) fail(ErrorKind::argument, "stable set size must be nonnegative");
  VertexSet current;
  std::function<bool(VertexSet, int)> rec = [&](VertexSet cands, int need) {
    if (need == 0) return visit(current);
    while (true) {
      if (cands.count() < need) return true;
      int v = cands.first();
      if (v < 0) return true;
      cands.remove(v);
      current.add(v);
      if (!rec(cands - g.neighbours(v), need - 1)) return false;
      current.remove(v);
    }
  };
  return rec(scope, s);
}

std::vector<VertexSet> enumerate_stable_sets(const Graph& g, const VertexSet& within, int s) {
  std::vector<VertexSet> out;
  for_each_stable_set(g, within, s, [&](const VertexSet& set) {
    out.push_back(set);
    return true;
  });
  return out;
}

namespace {

bool exists_biclique_tt(const Graph& g, int t) {
  // Branch over the side A; B is any t common neighbours outside A.
  std::function<bool(VertexSet, VertexSet, VertexSet, int)> rec = [&](VertexSet cands, VertexSet chosen, VertexSet common, int need) {
    if ((common - chosen).count() < t) return false;
    if (need == 0) return true;
    while (true) {
      if (cands.count() < need) return false;
      int v = cands.first();
      if (v < 0) return false;
      cands.remove(v);
      VertexSet chosen2 = chosen;
      chosen2.add(v);
      if (rec(cands, chosen2, common & g.neighbours(v), need - 1)) return true;
    }
  };
  return rec(g.vertices(), VertexSet(), g.vertices(), t);
}

}  // namespace

int biclique_tau(const Graph& g) {
  int maxdeg = 0;
  for (int v = 0; v < g.order(); ++v) maxdeg = std::max(maxdeg, g.degree(v));
  for (int t = std::min(g.order() / 2, maxdeg); t >= 1; --t) {
    if (exists_biclique_tt(g, t)) return t;
  }
  return 0;
}

bool is_perfect(const Graph& g) {
  if (find_hole(g, HoleSpec{HoleKind::odd})) return false;
  if (find_hole(g.complement(), HoleSpec{HoleKind::odd})) return false;
  return true;
}

BigInt big_pow(const BigInt& base, int exp) {
  if (exp < 0) fail(ErrorKind::argument, "negative exponent");
  BigInt acc = 1;
  for (int i = 0; i < exp; ++i) acc *= base;
  return acc;
}

bool ramsey_bound_holds(const Graph& g, int s, int r) {
  if (s < 1) fail(ErrorKind::argument, "ramsey check needs s >= 1");
  if (r < 2) fail(ErrorKind::argument, "ramsey check needs r >= 2");
  if (has_stable_set_of_size(g, g.vertices(), s)) return true;
  if (clique_number(g) > r) return true;
  return BigInt(g.order()) < big_pow(BigInt(r), s);
}

}  // namespace chilab
