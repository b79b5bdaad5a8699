#pragma once

#include <optional>
#include <utility>

#include "chilab/isolation.hpp"

namespace chilab {

// Parameters of the long-hole pipeline: holes of length >= ell count
// as long, s is the biclique side, c the binding exponent.
struct LongHoleParams {
  int ell = 4;
  int s = 1;
  int c = 4;
};

// psi'(x) = 85x + 43*psi(x), the threshold fed to isolation by the
// four-or-odd-hole extractor.
NonDecPoly psi_prime_special(const NonDecPoly& psi);

// theta(x) = x^{c*s}, the chi bound granted by the binding assumption
// on biclique-free graphs without long holes.
NonDecPoly theta_binding(const LongHoleParams& params);

// phi(x) = 2*theta + psi + (ell+1)*((2*s*ell)^s * x^s + theta + psi).
NonDecPoly phi_long_kssfree(const NonDecPoly& psi, const LongHoleParams& params);

// The strong-isolation phi built on phi_long_kssfree with q = 2*s*ell.
NonDecPoly phi_long_or_kss(const NonDecPoly& psi, const LongHoleParams& params);

// Binding chain for k pairwise anticomplete special holes:
// phi_1 = x, phi_j = strong-isolation phi over psi'(phi_{j-1}).
NonDecPoly special_multihole_binding(int k);

// Binding chain for k-objects: psi_1 = theta, psi_j built by
// phi_long_or_kss on psi_{j-1}.
NonDecPoly k_object_binding(int k, const LongHoleParams& params);

// True iff the dominator of a shortest odd hole has chi <= 21*x.
// Requires chi(N(v)) <= x for every v and an odd hole to exist.
bool odd_dominator_check(const Graph& g, const BigInt& x);

// True iff chi <= tau^c + 1, tau < omega^s, and chi <= omega^{c*s}
// all hold. Requires no induced K_{s,s} and no hole of length >= ell.
bool kss_free_longfree_binding_check(const Graph& g,
                                     const LongHoleParams& params);

// True iff the dominator of a shortest long hole has chi <= (ell+1)*n
// and each of the reconstructed residue colour classes has chi <= n.
// Requires chi(N(v)) <= n for every v and a long hole to exist.
bool long_dominator_check(const Graph& g, const BigInt& n,
                          const LongHoleParams& params);

// Nondominating special hole when every neighbourhood has chi <= n.
Certificate special_hole_smallnbrs(const Graph& g, const BigInt& n,
                                   const NonDecPoly& psi, bool forced = false);

// On a four-hole-free graph, an anticomplete pair (A, B) with
// 2*chi(A) > n - 2*omega and 2*chi(B) > n - 2*omega, both nonempty.
std::optional<std::pair<VertexSet, VertexSet>> anticomplete_pair_c4free(
    const Graph& g, const BigInt& n);

// Test-only reach controls for the extractors below; never exposed
// through the CLI. Every emission is verified before return, so these
// affect which proof branch fires, not what a certificate claims.
struct OddC4Tuning {
  std::optional<BigInt> n_override; // replaces n = 4*omega + 2*psi(omega)
};

struct SpecialNdTuning {
  std::optional<NonDecPoly> inner_psi; // replaces psi_prime_special(psi)
  StrongIsolationTuning si;
  OddC4Tuning tail;
};

struct LongNdTuning {
  std::optional<BigInt> n_override; // replaces (2sl)^s*omega^s + theta + psi
};

struct LongOrKssTuning {
  std::optional<NonDecPoly> inner_psi; // replaces phi_long_kssfree(psi)
  StrongIsolationTuning si;
  LongNdTuning tail;
};

struct KObjectTuning {
  std::optional<NonDecPoly> base_psi; // replaces theta at the k = 1 base
  LongOrKssTuning step;
};

// Nondominating odd hole on a four-hole-free graph.
Certificate odd_nondominating_c4free(const Graph& g, const NonDecPoly& psi,
                                     bool forced = false,
                                     const OddC4Tuning& tuning = {});

// Nondominating special hole on an arbitrary graph.
Certificate special_nondominating(const Graph& g, const NonDecPoly& psi,
                                  bool forced = false,
                                  const SpecialNdTuning& tuning = {});

// k pairwise anticomplete special holes. The forced direct search is
// capped at direct_cap vertices.
Certificate special_multihole(const Graph& g, int k, bool forced = false,
                              int direct_cap = 24);

// On a K_{s,s}-free graph with no hole of length in [ell, 2sl], an
// anticomplete pair (X, Y) with chi > n - (2sl)^s * omega^s on both
// sides. Claims are checked, not assumed: a pair the construction
// cannot separate comes back empty.
std::optional<std::pair<VertexSet, VertexSet>> anticomplete_pair_long(
    const Graph& g, const BigInt& n, const LongHoleParams& params,
    bool forced = false);

// Nondominating long hole on a K_{s,s}-free graph with no hole of
// length in [ell, 2sl].
Certificate long_nondominating_kssfree(const Graph& g, const NonDecPoly& psi,
                                       const LongHoleParams& params,
                                       bool forced = false,
                                       const LongNdTuning& tuning = {});

// Nondominating induced K_{s,s} or long hole on an arbitrary graph.
Certificate long_or_kss_nondominating(const Graph& g, const NonDecPoly& psi,
                                      const LongHoleParams& params,
                                      bool forced = false,
                                      const LongOrKssTuning& tuning = {});

// k pairwise anticomplete objects, each an induced K_{s,s} or a hole
// of length >= ell, assuming the binding bound theta holds on
// K_{s,s}-free graphs without long holes.
Certificate k_object_extract(const Graph& g, int k,
                             const LongHoleParams& params, bool forced = false,
                             int direct_cap = 24,
                             const KObjectTuning& tuning = {});

} // namespace chilab
