#pragma once

#include <cstdint>
#include <vector>

#include "chilab/graph.hpp"

namespace chilab {

// splitmix64 stream; small state so each corpus index can carry its
// own generator and sweeps stay reproducible under any worker count.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  std::uint64_t next_below(std::uint64_t bound); // uniform in [0, bound)
  bool chance(std::uint64_t num, std::uint64_t den);
  int pick_int(int lo, int hi); // uniform in [lo, hi]

private:
  std::uint64_t state_;
};

Graph make_cycle(int m);
Graph make_path(int m);
Graph make_complete(int m);
Graph make_complete_bipartite(int a, int b);
Graph make_complete_multipartite(const std::vector<int>& sizes);
Graph make_petersen();

// Mycielski construction: doubles chi's gap over omega while keeping
// the graph triangle-free when the input is.
Graph mycielski(const Graph& g);
Graph make_grotzsch(); // mycielski(C5)

Graph random_gnp(int n, double p, std::uint64_t seed);

// Random graph with girth at least min_girth: edges are proposed in a
// shuffled order and kept only when they close no short cycle.
Graph random_girth_constrained(int n, int min_girth, std::uint64_t seed);

// Random supergraphs of an induced odd cycle (length 5..n) resp. a
// cycle of length >= min_len; extra edges avoid chording the seeded
// cycle, so the hole survives.
Graph random_with_odd_hole(int n, std::uint64_t seed);
Graph random_with_long_hole(int n, int min_len, std::uint64_t seed);

} // namespace chilab
