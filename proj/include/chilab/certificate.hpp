#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "chilab/holes.hpp"
#include "chilab/poly.hpp"

namespace chilab {

using Json = nlohmann::ordered_json;

// Shape of a copied or excluded subgraph.
struct CompletePattern {
  int k = 0;
};

struct BicliquePattern {
  int s = 0;
  int s_prime = 0;
};

struct HolePattern {
  HoleSpec spec;
};

using Pattern = std::variant<CompletePattern, BicliquePattern, HolePattern>;

// A copy of a pattern together with an anticomplete witness set A
// satisfying chi(A) > psi(omega(A)). `isolated` distinguishes the
// certificates issued by complete-graph isolation.
struct CopyCert {
  bool isolated = false;
  Pattern pattern;
  std::vector<std::vector<int>> parts; // complete/hole: 1 part; biclique: 2
  std::vector<int> witness;
  NonDecPoly psi;
};

// chi(P) > psi(omega(P)) and chi(Q) > psi(omega(Q)) + q*r where
// r = max over v in P of chi(N(v) cap Q).
struct SprinklingCert {
  std::vector<int> p;
  std::vector<int> q_set;
  int q = 0;
  BigInt r = 0;
  NonDecPoly psi;
};

// Pairwise disjoint blocks of size t; for i < j, every stable set of
// size s inside block j dominates every vertex of block i.
struct TemplateCert {
  std::vector<std::vector<int>> blocks;
  int t = 0;
  int s = 0;
};

// G[set] has no copy of the pattern, yet chi(set) > psi(omega(set)).
struct HFreeSetCert {
  Pattern pattern;
  std::vector<int> set;
  NonDecPoly psi;
};

struct MultiholeComponentCert {
  ComponentSpec spec;
  std::vector<std::vector<int>> parts;
};

// Pairwise disjoint, pairwise anticomplete placed components.
struct MultiholeCert {
  std::vector<MultiholeComponentCert> components;
};

struct InconclusiveCert {
  std::string reason;
};

using Certificate = std::variant<CopyCert, SprinklingCert, TemplateCert,
                                 HFreeSetCert, MultiholeCert, InconclusiveCert>;

bool is_inconclusive(const Certificate& cert);
std::string certificate_type_name(const Certificate& cert);

Json pattern_to_json(const Pattern& pattern);
Pattern pattern_from_json(const Json& j);

Json component_spec_to_json(const ComponentSpec& spec);
ComponentSpec component_spec_from_json(const Json& j);

Json certificate_to_json(const Certificate& cert);
// Structural problems (missing fields, bad tags, bad vertex lists)
// raise Error{structure}; they are distinct from verification failure.
Certificate certificate_from_json(const Json& j);

std::string certificate_to_string(const Certificate& cert);
Certificate certificate_from_string(const std::string& text);

} // namespace chilab
