#pragma once

#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "chilab/graph.hpp"

namespace chilab {

using BigInt = boost::multiprecision::cpp_int;

struct Colouring {
  int colours = 0;
  std::vector<int> classes;  // classes[v] in [0, colours); -1 outside the coloured set
};

// Exact chromatic number via branch and bound over colour classes:
// maximum-clique lower bound, greedy upper bound, deterministic vertex order
// (descending degree, ties by index).
int chromatic_number(const Graph& g);

// Same search, with a witness colouring. Deterministic.
Colouring optimal_colouring(const Graph& g);

// Chromatic number of the subgraph induced on `s`.
int chi_of(const Graph& g, const VertexSet& s);

int clique_number(const Graph& g);
int clique_number_within(const Graph& g, const VertexSet& s);

// Lexicographically least maximum clique (vertex sets compared as increasing
// sequences). Deterministic tie-break shared by the extraction procedures.
VertexSet max_clique(const Graph& g);
VertexSet max_clique_within(const Graph& g, const VertexSet& s);

int stability_number(const Graph& g);
bool has_stable_set_of_size(const Graph& g, const VertexSet& within, int s);

// Visits stable sets of size exactly `s` contained in `within`, in
// lexicographic order of their increasing vertex sequences. The visitor
// returns false to stop; the function returns false when stopped early.
bool for_each_stable_set(const Graph& g, const VertexSet& within, int s,
                         const std::function<bool(const VertexSet&)>& visit);

std::vector<VertexSet> enumerate_stable_sets(const Graph& g, const VertexSet& within, int s);

// Largest t such that G contains K_{t,t} as a subgraph (sides disjoint, all
// cross pairs adjacent; inner edges allowed). 0 iff G is edgeless.
int biclique_tau(const Graph& g);

// Strong-perfection test via the odd-hole characterization: true iff neither
// G nor its complement contains an odd hole (length >= 5).
bool is_perfect(const Graph& g);

// True iff G has a stable set of size s, or omega(G) > r, or n(G) < r^s.
// Requires s >= 1 and r >= 2.
bool ramsey_bound_holds(const Graph& g, int s, int r);

BigInt big_pow(const BigInt& base, int exp);

}  // namespace chilab
