#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chilab/certificate.hpp"

namespace chilab {

// Invariant panel for one graph: order, size, chi, omega, alpha, tau,
// perfection, and the shortest hole of each kind.
Json analyze_graph(const Graph& g);

// Extraction entry points shared by the sweep runner, the library
// API, and the CLI. params carries the op's knobs (s, q, k, ell, c,
// t, n, s_prime, psi as a coefficient array, forced, direct_cap).
// Unknown op names raise an argument error.
bool extractor_exists(const std::string& op);
std::vector<std::string> extractor_names();
Certificate run_extractor(const std::string& op, const Graph& g,
                          const Json& params);

struct SweepOptions {
  int workers = 0; // 0 = CHILAB_WORKERS, else hardware count
  std::uint64_t seed = 0;
  Json params = Json::object();
};

bool sweep_op_exists(const std::string& op);
std::vector<std::string> sweep_op_names();

// Runs one op over the corpus on a worker pool. One record per graph,
// ordered by corpus index regardless of scheduling; summary counts by
// status. Any "invalid" record marks the whole report failed: for
// checkers that means a counterexample, for extractors a certificate
// that failed independent re-verification or a mutation that passed.
Json run_sweep(const std::string& op, const std::vector<Graph>& corpus,
               const SweepOptions& options);

// All labeled graphs on exactly n vertices (2^C(n,2) of them, n <= 6).
std::vector<Graph> exhaustive_corpus(int n);

// Seeded random corpus shaped for the op: planted odd/long holes for
// the dominator checkers, girth-constrained graphs for the
// four-hole-free ops, G(n,p) otherwise.
std::vector<Graph> random_corpus(const std::string& op, int count, int n_max,
                                 std::uint64_t seed, const Json& params);

int worker_count_from_env();

} // namespace chilab
