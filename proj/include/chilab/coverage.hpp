#pragma once

#include <set>
#include <string>
#include <vector>

namespace chilab {

// Proof-path instrumentation. Every constructive branch of an extraction
// routine announces itself through coverage_hit; the test suite asserts that
// the curated fixture set reaches the whole registry. Thread-safe.
void coverage_hit(const std::string& branch);

// All branch names the extractors can announce, in a fixed order.
const std::vector<std::string>& coverage_registry();

// Branches hit since the last reset.
std::set<std::string> coverage_hits();

void coverage_reset();

}  // namespace chilab
