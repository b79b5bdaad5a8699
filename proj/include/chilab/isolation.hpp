#pragma once

#include <optional>
#include <utility>

#include "chilab/certificate.hpp"

namespace chilab {

// phi(x) = (x+1)^k * psi(x) + x.
NonDecPoly phi_complete_poly(int k, const NonDecPoly& psi);
BigInt eval_phi_complete(int k, const NonDecPoly& psi, const BigInt& x);

struct PhiStrong {
  NonDecPoly phi_prime;
  NonDecPoly phi;
};

// The two strong-isolation polynomials. s = 0 is rejected: the
// geometric-sum convention below it is not defined.
PhiStrong phi_strong_polys(int s, int q, const NonDecPoly& psi);
std::pair<BigInt, BigInt> eval_phi_strong(int s, int q, const NonDecPoly& psi,
                                          const BigInt& x);

// m_i / n_i chi thresholds steering the bigbip step.
struct ThresholdTable {
  BigInt p;
  std::vector<BigInt> m; // m_0..m_s
  std::vector<BigInt> n; // n_0..n_s
};

ThresholdTable threshold_table(int s, int q, const BigInt& t, const BigInt& omega,
                               const BigInt& p);

// Relabels a certificate produced on an induced subgraph back to the
// host graph; to_global maps local indices to host vertices.
Certificate lift_certificate(const Certificate& cert,
                             const std::vector<int>& to_global);

Certificate isolate_complete(const Graph& g, int k, const NonDecPoly& psi,
                             bool forced = false);

// Vertex v with omega(G) * chi(M(v) + v) >= chi(G).
int big_nonneighbour(const Graph& g);
int big_nonneighbour_within(const Graph& g, const VertexSet& scope);

Certificate bigbip_step(const Graph& g, int s, int q, int t,
                        const NonDecPoly& psi);
Certificate bigbip_step_within(const Graph& g, const VertexSet& scope, int s,
                               int q, const BigInt& t, const NonDecPoly& psi);

// Test-only reach controls; never exposed through the CLI. Soundness
// does not rest on them: every emission is verified before return.
struct StrongIsolationTuning {
  std::optional<BigInt> t_override;    // initial block size t_2
  std::optional<BigInt> step_override; // per-level decrement, default s*omega^s
};

Certificate strong_isolation(const Graph& g, int s, int q, const NonDecPoly& psi,
                             bool forced);
Certificate strong_isolation(const Graph& g, int s, int q, const NonDecPoly& psi,
                             bool forced, const StrongIsolationTuning& tuning);

Certificate bip_self_isolation(const Graph& g, int s, int s_prime,
                               const NonDecPoly& psi, bool forced = false);
Certificate bip_self_isolation(const Graph& g, int s, int s_prime,
                               const NonDecPoly& psi, bool forced,
                               const StrongIsolationTuning& tuning);

// Builds a nondominating-copy certificate around the given parts, trying the
// maximal anticomplete witness first and the caller's witness second; a
// bigger witness can raise omega and break the chi test, so both are tried.
std::optional<Certificate> copy_with_best_witness(
    const Graph& g, const Pattern& pattern,
    const std::vector<std::vector<int>>& parts, const VertexSet& proof_witness,
    const NonDecPoly& psi);

} // namespace chilab
