#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "cyclefactor/graph.hpp"

namespace cyclefactor {

struct SolveOptions {
    /// Backtrack-node budget for the exact solvers; exceeding it raises
    /// TooLarge rather than timing out silently.
    std::uint64_t node_limit = 100'000'000;
    /// Vertex bound for the exhaustive even-dicycle search.
    int even_dicycle_max_vertices = 20;
};

struct SolveResult {
    std::optional<CycleFactor> factor; // nullopt = No
    std::uint64_t nodes_explored = 0;
    double elapsed_seconds = 0.0;

    bool yes() const { return factor.has_value(); }
};

enum class GraphMode { Directed, Undirected };

/// Cycle-factor in a digraph via the vertex-split bipartite matching: Yes iff
/// the split graph has a perfect matching; the factor is read off by
/// following matched successors.
SolveResult directed_cycle_factor(const MixedGraph& d);

/// 2-factor in an undirected multigraph via a perfect matching in the Tutte
/// auxiliary graph (d endpoint nodes plus d-2 filler nodes per vertex).
SolveResult undirected_two_factor(const MixedGraph& g);

/// A simple odd cycle, or nullopt if none exists. Undirected: BFS 2-coloring,
/// nullopt iff bipartite. Directed: per strongly connected component, parity
/// reachability on the doubled graph, then cycle extraction from an odd
/// closed walk.
std::optional<OrientedCycle> find_odd_cycle(const MixedGraph& g, GraphMode mode);

/// False iff every connected component is a cactus whose cycles are all odd,
/// checked via biconnected blocks: every block must be a single edge or an
/// odd cycle.
bool has_even_cycle_undirected(const MixedGraph& g);

/// Exhaustive search for a simple even directed cycle at desk scale.
std::optional<OrientedCycle> find_even_dicycle_bruteforce(const MixedGraph& d,
                                                          const SolveOptions& opts = {});

/// Exact backtracking search for a cycle-factor of a mixed graph satisfying
/// the parity constraint. No answers are proved by exhaustion.
SolveResult solve_parity(const MixedGraph& g, ParityConstraint c, const SolveOptions& opts = {});

/// P-respecting 2-factor: at most one edge of every forbidden pair.
SolveResult solve_prcf(const MixedGraph& h, const std::vector<std::pair<ElementId, ElementId>>& pairs,
                       const SolveOptions& opts = {});

/// Z-mixed cycle-factor: vertex-disjoint mixed cycles covering every z in Z;
/// vertices outside Z may stay uncovered.
SolveResult solve_smcf(const MixedGraph& g, const std::vector<int>& z, const SolveOptions& opts = {});

/// Emits every cycle-factor of g exactly once (element-id-set equality),
/// in canonical form. The callback returns false to stop early.
void enumerate_factors(const MixedGraph& g, const std::function<bool(const CycleFactor&)>& on_factor,
                       const SolveOptions& opts = {});

std::vector<CycleFactor> all_factors(const MixedGraph& g, const SolveOptions& opts = {});

/// Z-factor enumeration; emits every factor whose cycles each cover at least
/// one terminal (dropping terminal-free cycles never hurts Z-coverage).
void enumerate_z_factors(const MixedGraph& g, const std::vector<int>& z,
                         const std::function<bool(const CycleFactor&)>& on_factor,
                         const SolveOptions& opts = {});

/// Set of parity signatures achievable by some cycle-factor of g.
std::set<ParitySignature> signature_set(const MixedGraph& g, const SolveOptions& opts = {});

} // namespace cyclefactor
