#pragma once

#include <optional>
#include <string>

#include "chilab/certificate.hpp"

namespace chilab {

enum class Verdict { verified, invalid, vacuous };

const char* verdict_name(Verdict v);

struct VerifyResult {
  Verdict verdict = Verdict::invalid;
  std::string detail; // first failed check when invalid

  bool ok() const { return verdict != Verdict::invalid; }
};

// Re-derives every claim of the certificate against g, independently
// of the extraction pipelines. Malformed certificates (negative
// fields, wrong part counts for the pattern) raise Error{structure};
// a well-formed certificate making a false claim is merely invalid.
VerifyResult verify_certificate(const Graph& g, const Certificate& cert);

// Exhaustive chromatic-number oracle over colour assignments in
// restricted-growth order. Shares no code with the branch-and-bound
// solver. Hard cap: 10 vertices, above which it raises capacity.
int brute_chromatic(const Graph& g);

enum class MutationKind {
  drop_witness_vertex, // remove a witness vertex so the chi bound fails
  add_adjacent_vertex, // break anticompleteness of a copy's witness
  decrement_q,         // push a sprinkling's q below zero
  bump_psi,            // raise psi's constant term past the chi margin
};

const char* mutation_kind_name(MutationKind kind);

// Single-field corruption of a valid certificate, chosen so the
// result no longer verifies. nullopt when no corruption of this kind
// can invalidate the given certificate.
std::optional<Certificate> mutate_certificate(const Graph& g,
                                              const Certificate& cert,
                                              MutationKind kind);

} // namespace chilab
