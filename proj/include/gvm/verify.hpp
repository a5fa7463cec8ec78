#pragma once

// Randomized and fixture-based suites that exercise every spectrum law
// end-to-end and report replayable counterexamples on failure.

#include <cstdint>
#include <string>
#include <vector>

#include "gvm/graph.hpp"

namespace gvm::verify {

struct SuiteFailure {
    std::string graph;     // edge-list serialization, replayable
    std::string group;     // group spec text
    std::string expected;
    std::string observed;
};

struct SuiteReport {
    std::string suite;
    long long cases = 0;
    long long skipped = 0;  // hypothesis of the law not met
    std::vector<SuiteFailure> failures;

    bool passed() const { return failures.empty(); }
};

// All runnable suite names; "all" runs every other suite and merges.
const std::vector<std::string>& suite_names();

// Erdos-Renyi style graph from a seeded deterministic stream; the same
// arguments always produce the same graph. Draws are retried up to 100
// times when an isolated vertex appears. 1 <= n <= 12.
Graph random_graph(int n, double edge_prob, std::uint64_t seed);

// Runs the named suite over `trials` random cases plus the fixed fixture
// set; deterministic given the seed. Failures are sorted by serialized
// input.
SuiteReport run_suite(const std::string& name, long long trials,
                      std::uint64_t seed, int jobs = 1);

// Test hook: when enabled, the next reduced-equivalence run corrupts one
// computed constant set, so the harness demonstrably can fail.
void set_fault_injection(bool enabled);

}  // namespace gvm::verify
