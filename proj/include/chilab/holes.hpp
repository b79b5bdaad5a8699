#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "chilab/graph.hpp"

namespace chilab {

// Hole = induced cycle of length >= 4.
enum class HoleKind {
  any,      // length >= 4
  four,     // length exactly 4
  odd,      // odd length >= 5
  special_, // length 4, or odd length >= 5
  long_,    // length >= min_length
};

const char* hole_kind_name(HoleKind kind);
HoleKind hole_kind_from_name(const std::string& name);

struct HoleSpec {
  HoleKind kind = HoleKind::any;
  int min_length = 0; // long_ only; 0 elsewhere
  int max_length = 0; // 0 = unbounded; search-side restriction
};

// Canonical form: vertices[0] is the least member and
// vertices[1] < vertices.back(), so each hole appears once.
struct Hole {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  VertexSet vertex_set() const;
};

bool hole_matches(const HoleSpec& spec, int length);

// Lengths a hole of this spec may have, ascending, capped by limit.
std::vector<int> hole_lengths(const HoleSpec& spec, int limit);

// Enumerates holes within scope, shortest first, lexicographically
// least canonical sequence within each length. Visitor returns false
// to stop; returns true iff the visitor stopped the walk.
bool for_each_hole(const Graph& g, const VertexSet& scope, const HoleSpec& spec,
                   const std::function<bool(const Hole&)>& visit);

std::optional<Hole> find_hole(const Graph& g, const VertexSet& scope,
                              const HoleSpec& spec, bool shortest = true);
std::optional<Hole> find_hole(const Graph& g, const HoleSpec& spec,
                              bool shortest = true);

struct Biclique {
  std::vector<int> side_a;
  std::vector<int> side_b;

  VertexSet vertex_set() const;
};

// Induced copies of K_{s,s'}: both sides stable, all cross edges
// present, no others. Sides listed ascending; when s == s' each
// unordered copy is visited once, with min(side_a) < min(side_b).
bool for_each_induced_biclique(const Graph& g, const VertexSet& scope, int s,
                               int s_prime,
                               const std::function<bool(const Biclique&)>& visit);

std::optional<Biclique> find_induced_biclique(const Graph& g,
                                              const VertexSet& scope, int s,
                                              int s_prime);
std::optional<Biclique> find_induced_biclique(const Graph& g, int s,
                                              int s_prime);

// One slot of a multihole request: a hole of the given shape, an
// induced biclique, or either (biclique preferred).
struct BicliqueComponent {
  int s = 0;
  int s_prime = 0;
};

struct EitherComponent {
  int s = 0;
  int min_length = 4;
};

using ComponentSpec = std::variant<HoleSpec, BicliqueComponent, EitherComponent>;

struct PlacedComponent {
  // One part: hole in cyclic order. Two parts: biclique sides.
  std::vector<std::vector<int>> parts;

  bool is_hole() const { return parts.size() == 1; }
  VertexSet vertex_set() const;
};

// Pairwise disjoint, pairwise anticomplete placements matching specs,
// in input order. Search is exhaustive over scope.
std::optional<std::vector<PlacedComponent>>
find_multihole(const Graph& g, const VertexSet& scope,
               const std::vector<ComponentSpec>& specs);
std::optional<std::vector<PlacedComponent>>
find_multihole(const Graph& g, const std::vector<ComponentSpec>& specs);

// h together with every neighbour of a member of h.
VertexSet dominator_set(const Graph& g, const VertexSet& h);

} // namespace chilab
