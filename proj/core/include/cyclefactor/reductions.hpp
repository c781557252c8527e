#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cyclefactor/format.hpp"
#include "cyclefactor/graph.hpp"

namespace cyclefactor {
namespace reductions {

/// Result of a reduction: the reduced instance, the constraint under which
/// the equivalence holds, and a copy of the (normalized) source. Provenance
/// is recorded in the target graph's vertex and element labels, so serialized
/// reduced instances are self-describing; the label of every target vertex
/// and element is non-empty.
struct ReductionOutput {
    std::string reduction_id;
    ProblemInstance source;
    ProblemInstance target;
    ParityConstraint target_constraint = ParityConstraint::Any;
};

// --- Hamiltonian (s,t)-path -> all-odd cycle-factor (directed) ---
// Per source arc a=uv a five-arc gadget u>x1>x2>x3>v with the chord x3>x1,
// plus the return arc t>s.
ReductionOutput reduce_hampath_to_all_odd(const ProblemInstance& ham);
CycleFactor map_hampath_to_all_odd_factor(const ReductionOutput& out, const ArcPath& path);
ArcPath map_all_odd_factor_to_hampath(const ReductionOutput& out, const CycleFactor& f);

// --- 3-edge-coloring of a cubic graph -> all-even cycle-factor (directed) ---
ReductionOutput reduce_3edgecoloring_to_all_even(const ProblemInstance& col3);
CycleFactor map_coloring_to_all_even_factor(const ReductionOutput& out, const EdgeColoring& c);
EdgeColoring map_all_even_factor_to_coloring(const ReductionOutput& out, const CycleFactor& f);

// --- two vertex-disjoint directed paths -> exists-odd cycle-factor ---
ReductionOutput reduce_2vdp_to_exists_odd(const ProblemInstance& vdp);
CycleFactor map_vdp_to_exists_odd_factor(const ReductionOutput& out, const ArcPath& p1,
                                         const ArcPath& p2);
std::pair<ArcPath, ArcPath> map_exists_odd_factor_to_vdp(const ReductionOutput& out,
                                                         const CycleFactor& f);

// --- even dicycle -> exists-even cycle-factor (directed) ---
ReductionOutput reduce_evendicycle_to_exists_even(const ProblemInstance& ec);
CycleFactor map_even_dicycle_to_factor(const ReductionOutput& out, const OrientedCycle& c);
OrientedCycle map_factor_to_even_dicycle(const ReductionOutput& out, const CycleFactor& f);

// --- parity-signature-preserving lift of a digraph to an undirected graph ---
// Replaces every vertex by the path a-b-c and every arc uv by the edge c_u a_v;
// the achievable signature sets of source and target coincide.
ReductionOutput lift_directed_to_undirected(const ProblemInstance& d);
CycleFactor lift_factor(const ReductionOutput& out, const CycleFactor& f);
CycleFactor project_factor(const ReductionOutput& out, const CycleFactor& f);

// --- 3-dimensional matching -> pair-restricted cycle-factor ---
ReductionOutput reduce_3dm_to_prcf(const ProblemInstance& dm);
CycleFactor map_3dm_matching_to_prcf_factor(const ReductionOutput& out, const DmMatching& m);
DmMatching map_prcf_factor_to_3dm_matching(const ReductionOutput& out, const CycleFactor& f);

// --- pair-restricted cycle-factor -> Steiner mixed cycle-factor ---
ReductionOutput reduce_prcf_to_smcf(const ProblemInstance& prcf);
CycleFactor map_prcf_factor_to_smcf_factor(const ReductionOutput& out, const CycleFactor& f);
CycleFactor map_smcf_factor_to_prcf_factor(const ReductionOutput& out, const CycleFactor& f);

// --- Steiner mixed cycle-factor -> mixed cycle-factor ---
ReductionOutput reduce_smcf_to_mcf(const ProblemInstance& smcf);
CycleFactor map_smcf_factor_to_mcf_factor(const ReductionOutput& out, const CycleFactor& f);
CycleFactor map_mcf_factor_to_smcf_factor(const ReductionOutput& out, const CycleFactor& f);

// --- mixed cycle-factor -> exists-even mixed cycle-factor ---
ReductionOutput reduce_mcf_to_exists_even(const ProblemInstance& mcf);
CycleFactor map_mcf_factor_to_exists_even_factor(const ReductionOutput& out, const CycleFactor& f);
CycleFactor map_exists_even_factor_to_mcf_factor(const ReductionOutput& out, const CycleFactor& f);

/// CLI names: ham-allodd, col3-alleven, vdp-existsodd, evencyc-existseven,
/// lift-undirected, 3dm-prcf, prcf-smcf, smcf-mcf, mcf-existseven.
const std::vector<std::string>& reduction_ids();
bool is_reduction_id(const std::string& id);

/// Dispatches on the id; validates that the instance kind fits the reduction.
ReductionOutput reduce_by_id(const std::string& id, const ProblemInstance& source);

/// Maps a target factor back to the source solution, serialized in the
/// source problem's solution line format. Verifies before returning.
std::string map_back_by_id(const std::string& id, const ReductionOutput& out, const CycleFactor& f);

} // namespace reductions
} // namespace cyclefactor
