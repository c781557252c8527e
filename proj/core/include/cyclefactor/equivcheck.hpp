#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "cyclefactor/format.hpp"

namespace cyclefactor {
namespace equivcheck {

struct EquivOptions {
    std::string reduction_id;
    int count = 100;
    bool exhaustive = false; // supported for lift-undirected only
    int max_size = 4;
    std::uint64_t seed = 1;
    /// Per-instance node cap; instances over budget are skipped with a
    /// warning instead of hanging the harness.
    std::uint64_t node_budget = 10'000'000;
    int threads = 1;
    /// Test hook: mutates the reduced instance before the target solve, used
    /// to confirm that the harness detects broken reductions.
    std::function<void(ProblemInstance&)> corrupt_target;
};

struct EquivReport {
    int instances = 0;
    int mismatches = 0;
    int skipped = 0;
    int yes_instances = 0;
    std::string text;   // deterministic per-instance report, aggregated by index
    std::string timing; // per-instance wall-clock lines (not part of the report)

    bool ok() const { return mismatches == 0; }
};

/// Generates `count` source instances, solves source and target by brute
/// force, and checks the reduction's iff plus round-trip solution mapping.
/// For lift-undirected the stronger signature-set equality is checked, and
/// exhaustive mode walks every loop-free digraph on up to max_size vertices.
EquivReport run_equivcheck(const EquivOptions& options);

} // namespace equivcheck
} // namespace cyclefactor
