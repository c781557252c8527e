#pragma once

#include <string>
#include <vector>

#include "cyclefactor/format.hpp"
#include "cyclefactor/graph.hpp"

namespace cyclefactor {
namespace certify {

// Definitional verifiers. These check solution objects against the problem
// definitions only; they never call solvers or reductions, so a solver or
// mapper bug cannot certify itself.

enum class ViolationKind {
    NotCovering,
    NotDisjoint,
    BadCycle,
    OrientationInconsistent,
    ParityViolated,
    PairViolated,
    TerminalUncovered,
    NotAPath,
    NotAColoring,
    NotAMatching,
};

const char* violation_name(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::string detail;

    /// Renders as "<kind>: <ids>" for CLI diagnostics.
    std::string render() const;
};

/// Coverage requirement of verify_factor: cover everything, or only a
/// terminal set Z (vertices outside Z may stay uncovered).
struct CoverMode {
    bool all = true;
    std::vector<int> z;

    static CoverMode All() { return {true, {}}; }
    static CoverMode OnlyZ(std::vector<int> z) { return {false, std::move(z)}; }
};

/// Empty result iff f is a well-formed, vertex-disjoint, covering (per mode),
/// orientation-consistent cycle collection whose signature satisfies c.
std::vector<Violation> verify_factor(const MixedGraph& g, const CycleFactor& f,
                                     ParityConstraint c, const CoverMode& mode);

std::vector<Violation> verify_hampath(const MixedGraph& h, int s, int t, const ArcPath& path);

std::vector<Violation> verify_vdp(const MixedGraph& h, int s1, int t1, int s2, int t2,
                                  const ArcPath& p1, const ArcPath& p2);

std::vector<Violation> verify_coloring(const MixedGraph& h, const EdgeColoring& coloring);

std::vector<Violation> verify_3dm(int n, const std::vector<std::array<int, 3>>& tuples,
                                  const DmMatching& m);

std::vector<Violation> verify_p_respecting(const MixedGraph& h,
                                           const std::vector<std::pair<ElementId, ElementId>>& pairs,
                                           const CycleFactor& f);

std::string render(const std::vector<Violation>& violations);

} // namespace certify
} // namespace cyclefactor
