#include "chilab/generate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <utility>

#include "chilab/error.hpp"

namespace chilab {

namespace {

using Edge = std::pair<int, int>;

void check_order(int n) {
  if (n < 0) fail(ErrorKind::argument, "vertex count must be nonnegative");
  if (n > kMaxVertices)
    fail(ErrorKind::capacity, "vertex count exceeds the compiled cap");
}

std::vector<int> shuffled_range(int n, Rng& rng) {
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(out[static_cast<std::size_t>(i)],
              out[static_cast<std::size_t>(rng.next_below(
                  static_cast<std::uint64_t>(i + 1)))]);
  return out;
}

// Distance between u and v in the adjacency lists, ignoring any
// direct u-v edge; large value when disconnected.
int detour_distance(const std::vector<VertexSet>& adj, int n, int u, int v) {
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  std::deque<int> queue{u};
  dist[static_cast<std::size_t>(u)] = 0;
  while (!queue.empty()) {
    const int cur = queue.front();
    queue.pop_front();
    const VertexSet& nbrs = adj[static_cast<std::size_t>(cur)];
    for (int w = nbrs.first(); w >= 0; w = nbrs.next_after(w)) {
      if (cur == u && w == v) continue;
      if (dist[static_cast<std::size_t>(w)] >= 0) continue;
      dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(cur)] + 1;
      if (w == v) return dist[static_cast<std::size_t>(w)];
      queue.push_back(w);
    }
  }
  return std::numeric_limits<int>::max();
}

Graph planted_cycle_graph(int n, int m, Rng& rng) {
  const std::vector<int> order = shuffled_range(n, rng);
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i)
    edges.emplace_back(order[static_cast<std::size_t>(i)],
                       order[static_cast<std::size_t>((i + 1) % m)]);
  // Extra edges keep at least one endpoint off the cycle, so the
  // planted hole is never chorded.
  VertexSet on_cycle;
  for (int i = 0; i < m; ++i) on_cycle.add(order[static_cast<std::size_t>(i)]);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (on_cycle.contains(u) && on_cycle.contains(v)) continue;
      if (rng.chance(3, 10)) edges.emplace_back(u, v);
    }
  return Graph(n, edges);
}

} // namespace

std::uint64_t Rng::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::next_below(std::uint64_t bound) {
  if (bound == 0) fail(ErrorKind::argument, "empty range");
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  while (true) {
    const std::uint64_t r = next();
    if (r < limit) return r % bound;
  }
}

bool Rng::chance(std::uint64_t num, std::uint64_t den) {
  if (den == 0) fail(ErrorKind::argument, "zero denominator");
  if (num >= den) return true;
  return next_below(den) < num;
}

int Rng::pick_int(int lo, int hi) {
  if (lo > hi) fail(ErrorKind::argument, "empty range");
  return lo + static_cast<int>(next_below(
                  static_cast<std::uint64_t>(hi - lo) + 1));
}

Graph make_cycle(int m) {
  if (m < 3) fail(ErrorKind::argument, "cycle needs at least 3 vertices");
  check_order(m);
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) edges.emplace_back(i, (i + 1) % m);
  return Graph(m, edges);
}

Graph make_path(int m) {
  check_order(m);
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
  return Graph(m, edges);
}

Graph make_complete(int m) {
  check_order(m);
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) edges.emplace_back(i, j);
  return Graph(m, edges);
}

Graph make_complete_bipartite(int a, int b) {
  if (a < 0 || b < 0) fail(ErrorKind::argument, "negative side");
  check_order(a + b);
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  return Graph(a + b, edges);
}

Graph make_complete_multipartite(const std::vector<int>& sizes) {
  int n = 0;
  std::vector<int> part_of;
  for (std::size_t p = 0; p < sizes.size(); ++p) {
    if (sizes[p] < 0) fail(ErrorKind::argument, "negative part");
    for (int i = 0; i < sizes[p]; ++i) part_of.push_back(static_cast<int>(p));
    n += sizes[p];
  }
  check_order(n);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[static_cast<std::size_t>(u)] !=
          part_of[static_cast<std::size_t>(v)])
        edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph make_petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);       // outer cycle
    edges.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
    edges.emplace_back(i, 5 + i);             // spokes
  }
  return Graph(10, edges);
}

Graph mycielski(const Graph& g) {
  const int n = g.order();
  check_order(2 * n + 1);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    const VertexSet& nbrs = g.neighbours(u);
    for (int v = nbrs.next_after(u); v >= 0; v = nbrs.next_after(v))
      edges.emplace_back(u, v);
    for (int v = nbrs.first(); v >= 0; v = nbrs.next_after(v))
      edges.emplace_back(n + u, v); // shadow keeps the original's ends
    edges.emplace_back(2 * n, n + u);
  }
  return Graph(2 * n + 1, edges);
}

Graph make_grotzsch() { return mycielski(make_cycle(5)); }

Graph random_gnp(int n, double p, std::uint64_t seed) {
  check_order(n);
  if (!(p >= 0.0 && p <= 1.0)) fail(ErrorKind::argument, "p outside [0,1]");
  Rng rng(seed);
  const auto num = static_cast<std::uint64_t>(std::llround(p * 1e9));
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(num, 1000000000ULL)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph random_girth_constrained(int n, int min_girth, std::uint64_t seed) {
  check_order(n);
  if (min_girth < 3) fail(ErrorKind::argument, "girth floor below 3");
  Rng rng(seed);
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  for (std::size_t i = pairs.size(); i > 1; --i)
    std::swap(pairs[i - 1], pairs[rng.next_below(i)]);

  std::vector<VertexSet> adj(static_cast<std::size_t>(n));
  std::vector<Edge> kept;
  for (const auto& [u, v] : pairs) {
    // An added edge closes a cycle of length detour+1.
    if (detour_distance(adj, n, u, v) < min_girth - 1) continue;
    adj[static_cast<std::size_t>(u)].add(v);
    adj[static_cast<std::size_t>(v)].add(u);
    kept.emplace_back(u, v);
  }
  return Graph(n, kept);
}

Graph random_with_odd_hole(int n, std::uint64_t seed) {
  if (n < 5) fail(ErrorKind::argument, "odd hole needs at least 5 vertices");
  check_order(n);
  Rng rng(seed);
  const int choices = (n - 5) / 2 + 1; // odd lengths 5, 7, ...
  const int m = 5 + 2 * static_cast<int>(rng.next_below(
                        static_cast<std::uint64_t>(choices)));
  return planted_cycle_graph(n, m, rng);
}

Graph random_with_long_hole(int n, int min_len, std::uint64_t seed) {
  if (min_len < 4) fail(ErrorKind::argument, "hole length floor below 4");
  if (n < min_len) fail(ErrorKind::argument, "graph too small for the hole");
  check_order(n);
  Rng rng(seed);
  const int m = rng.pick_int(min_len, n);
  return planted_cycle_graph(n, m, rng);
}

} // namespace chilab
