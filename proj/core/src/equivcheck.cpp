#include "cyclefactor/equivcheck.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <sstream>
#include <thread>

#include "cyclefactor/certify.hpp"
#include "cyclefactor/generators.hpp"
#include "cyclefactor/reductions.hpp"
#include "cyclefactor/solvers.hpp"

namespace cyclefactor {
namespace equivcheck {

namespace {

using reductions::ReductionOutput;

// --- brute-force source solvers ---

std::optional<ArcPath> brute_hampath(const MixedGraph& h, int s, int t) {
    const int n = h.vertex_count();
    std::vector<bool> visited(n, false);
    std::vector<ElementId> path;
    std::optional<ArcPath> found;
    auto dfs = [&](auto&& self, int at, int left) -> bool {
        if (at == t) {
            if (left == 0) {
                found = ArcPath{path};
                return true;
            }
            return false;
        }
        for (const auto& inc : h.incident(at)) {
            if (!inc.can_leave || visited[inc.other]) continue;
            visited[inc.other] = true;
            path.push_back(inc.id);
            if (self(self, inc.other, left - 1)) return true;
            path.pop_back();
            visited[inc.other] = false;
        }
        return false;
    };
    if (n == 0 || s == t) return std::nullopt;
    visited[s] = true;
    dfs(dfs, s, n - 1);
    return found;
}

std::optional<EdgeColoring> brute_3edgecoloring(const MixedGraph& h) {
    const int m = h.edge_count();
    EdgeColoring coloring;
    coloring.color.assign(m, 0);
    auto conflict = [&](int k) {
        auto [u, v] = h.edges()[k];
        for (int w : {u, v})
            for (const auto& inc : h.incident(w))
                if (inc.id.index != k && coloring.color[inc.id.index] == coloring.color[k])
                    return true;
        return false;
    };
    auto dfs = [&](auto&& self, int k) -> bool {
        if (k == m) return true;
        for (int c = 1; c <= 3; ++c) {
            coloring.color[k] = c;
            if (!conflict(k) && self(self, k + 1)) return true;
        }
        coloring.color[k] = 0;
        return false;
    };
    if (dfs(dfs, 0)) return coloring;
    return std::nullopt;
}

std::optional<std::pair<ArcPath, ArcPath>> brute_vdp(const MixedGraph& h, int s1, int t1, int s2,
                                                     int t2) {
    const int n = h.vertex_count();
    std::vector<bool> used(n, false);
    std::vector<ElementId> path1, path2;
    std::optional<std::pair<ArcPath, ArcPath>> found;

    auto dfs2 = [&](auto&& self, int at) -> bool {
        if (at == t2) {
            found = std::make_pair(ArcPath{path1}, ArcPath{path2});
            return true;
        }
        for (const auto& inc : h.incident(at)) {
            if (!inc.can_leave || used[inc.other]) continue;
            used[inc.other] = true;
            path2.push_back(inc.id);
            if (self(self, inc.other)) return true;
            path2.pop_back();
            used[inc.other] = false;
        }
        return false;
    };
    auto dfs1 = [&](auto&& self, int at) -> bool {
        if (at == t1) {
            if (used[s2] || used[t2]) return false;
            used[s2] = true;
            if (dfs2(dfs2, s2)) return true;
            used[s2] = false;
            return false;
        }
        for (const auto& inc : h.incident(at)) {
            if (!inc.can_leave || used[inc.other]) continue;
            used[inc.other] = true;
            path1.push_back(inc.id);
            if (self(self, inc.other)) return true;
            path1.pop_back();
            used[inc.other] = false;
        }
        return false;
    };
    used[s1] = true;
    dfs1(dfs1, s1);
    return found;
}

std::optional<DmMatching> brute_3dm(int n, const std::vector<std::array<int, 3>>& tuples) {
    std::vector<bool> cx(n, false), cy(n, false), cz(n, false);
    DmMatching m;
    auto dfs = [&](auto&& self, int covered) -> bool {
        if (covered == n) return true;
        int x = 0;
        while (cx[x]) ++x;
        for (std::size_t j = 0; j < tuples.size(); ++j) {
            const auto& t = tuples[j];
            if (t[0] != x || cy[t[1]] || cz[t[2]]) continue;
            cx[x] = cy[t[1]] = cz[t[2]] = true;
            m.tuple_indexes.push_back(static_cast<int>(j));
            if (self(self, covered + 1)) return true;
            m.tuple_indexes.pop_back();
            cx[x] = cy[t[1]] = cz[t[2]] = false;
        }
        return false;
    };
    if (dfs(dfs, 0)) return m;
    return std::nullopt;
}

// --- instance generation per reduction id ---

ProblemInstance generate_source(const std::string& id, int max_size, Rng& rng) {
    if (id == "ham-allodd") {
        int n = rng.next_int(2, std::max(2, max_size));
        ProblemInstance inst;
        inst.kind = ProblemKind::HamPath;
        inst.graph = random_digraph(n, 0.2 + 0.5 * rng.next_double(), rng);
        int s = rng.next_int(0, n - 1);
        int t = (s + rng.next_int(1, n - 1)) % n;
        inst.terminals = {s, t};
        return inst;
    }
    if (id == "col3-alleven") {
        int n = max_size >= 6 && rng.next_bool(0.5) ? 6 : 4;
        ProblemInstance inst;
        inst.kind = ProblemKind::EdgeColoring;
        inst.graph = random_simple_cubic(n, rng);
        return inst;
    }
    if (id == "vdp-existsodd") {
        int n = rng.next_int(4, std::max(4, max_size));
        ProblemInstance inst;
        inst.kind = ProblemKind::TwoVdp;
        inst.graph = random_digraph(n, 0.2 + 0.5 * rng.next_double(), rng);
        std::vector<int> verts(n);
        for (int i = 0; i < n; ++i) verts[i] = i;
        rng.shuffle(verts);
        inst.terminals = {verts[0], verts[1], verts[2], verts[3]};
        return inst;
    }
    if (id == "evencyc-existseven") {
        int n = rng.next_int(1, std::max(1, max_size));
        ProblemInstance inst;
        inst.kind = ProblemKind::EvenDicycle;
        inst.graph = random_digraph(n, 0.2 + 0.5 * rng.next_double(), rng);
        return inst;
    }
    if (id == "lift-undirected") {
        int n = rng.next_int(0, std::max(0, max_size));
        ProblemInstance inst;
        inst.kind = ProblemKind::Graph;
        inst.graph = random_digraph(n, 0.2 + 0.6 * rng.next_double(), rng);
        return inst;
    }
    if (id == "3dm-prcf") {
        int n = rng.next_int(1, std::max(1, std::min(2, max_size)));
        return random_3dm(n, rng.next_int(1, 4 * n), rng);
    }
    if (id == "prcf-smcf") {
        return random_prcf(rng.next_int(1, std::max(1, std::min(4, max_size))), 4, rng);
    }
    if (id == "smcf-mcf") {
        int n = rng.next_int(1, std::max(1, max_size));
        return random_smcf(n, 0.2 + 0.4 * rng.next_double(), 0.1 + 0.3 * rng.next_double(), rng);
    }
    if (id == "mcf-existseven") {
        int n = rng.next_int(1, std::max(1, max_size));
        ProblemInstance inst;
        inst.kind = ProblemKind::Graph;
        inst.graph = random_mixed(n, 0.2 + 0.4 * rng.next_double(), 0.1 + 0.3 * rng.next_double(), rng);
        return inst;
    }
    fail(Errc::UnknownReduction, "'" + id + "'");
}

// Exhaustive digraph stream for lift-undirected: all loop-free digraphs on
// 0..max_n vertices, by arc-subset mask.
std::vector<ProblemInstance> exhaustive_digraphs(int max_n) {
    std::vector<ProblemInstance> out;
    for (int n = 0; n <= max_n; ++n) {
        std::vector<std::pair<int, int>> slots;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v) slots.emplace_back(u, v);
        std::uint64_t total = 1ULL << slots.size();
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            std::vector<std::pair<int, int>> arcs;
            for (std::size_t i = 0; i < slots.size(); ++i)
                if (mask >> i & 1) arcs.push_back(slots[i]);
            ProblemInstance inst;
            inst.kind = ProblemKind::Graph;
            inst.graph = MixedGraph::build(n, {}, std::move(arcs));
            out.push_back(std::move(inst));
        }
    }
    return out;
}

// The reduction id fixes the target problem; in particular a PRCF or SMCF
// target stays one even when its pair list or terminal set is empty.
SolveResult solve_target(const std::string& id, const ProblemInstance& target,
                         ParityConstraint constraint, const SolveOptions& opts) {
    if (id == "prcf-smcf") return solve_smcf(target.graph, target.z, opts);
    if (id == "3dm-prcf") return solve_prcf(target.graph, target.pairs, opts);
    return solve_parity(target.graph, constraint, opts);
}

void verify_or_throw(const std::vector<certify::Violation>& violations, const std::string& what) {
    if (!violations.empty())
        fail(Errc::NotAFactor, what + ": " + violations.front().render());
}

struct Outcome {
    bool mismatch = false;
    bool skipped = false;
    bool source_yes = false;
    std::string line;
    double seconds = 0;
};

// Solves both sides, checks the iff, and round-trips solutions through the
// forward and backward mappers.
Outcome check_instance(const std::string& id, const ProblemInstance& source,
                       const EquivOptions& options) {
    Outcome outcome;
    auto t0 = std::chrono::steady_clock::now();
    SolveOptions solve_opts;
    solve_opts.node_limit = options.node_budget;

    std::ostringstream line;
    try {
        ReductionOutput out = reductions::reduce_by_id(id, source);
        if (options.corrupt_target) options.corrupt_target(out.target);
        const ProblemInstance& target = out.target;
        line << "n=" << (source.kind == ProblemKind::ThreeDm ? source.dm_size
                                                             : source.graph.vertex_count())
             << " -> n'=" << target.graph.vertex_count();

        if (id == "lift-undirected") {
            // The stronger property: achievable signature sets coincide.
            auto source_sigs = signature_set(source.graph, solve_opts);
            auto target_sigs = signature_set(target.graph, solve_opts);
            line << " sigs=" << source_sigs.size();
            outcome.source_yes = !source_sigs.empty();
            if (source_sigs != target_sigs) {
                outcome.mismatch = true;
                line << " SIGNATURE-SET-MISMATCH";
            } else if (!source_sigs.empty()) {
                std::vector<CycleFactor> some = all_factors(source.graph, solve_opts);
                CycleFactor lifted = reductions::lift_factor(out, some.front());
                verify_or_throw(certify::verify_factor(target.graph, lifted, ParityConstraint::Any,
                                                       certify::CoverMode::All()),
                                "lifted factor");
                CycleFactor back = reductions::project_factor(out, lifted);
                verify_or_throw(certify::verify_factor(source.graph, back, ParityConstraint::Any,
                                                       certify::CoverMode::All()),
                                "projected factor");
            }
        } else {
            SolveResult target_result = solve_target(id, target, out.target_constraint, solve_opts);
            bool target_yes = target_result.yes();

            bool source_yes = false;
            // Forward mapping of the brute-force source solution, when Yes.
            if (id == "ham-allodd") {
                auto sol = brute_hampath(source.graph, source.terminals[0], source.terminals[1]);
                source_yes = sol.has_value();
                if (sol) {
                    CycleFactor fwd = reductions::map_hampath_to_all_odd_factor(out, *sol);
                    verify_or_throw(certify::verify_factor(target.graph, fwd,
                                                           ParityConstraint::AllOdd,
                                                           certify::CoverMode::All()),
                                    "forward factor");
                }
                if (target_yes) reductions::map_all_odd_factor_to_hampath(out, *target_result.factor);
            } else if (id == "col3-alleven") {
                auto sol = brute_3edgecoloring(source.graph);
                source_yes = sol.has_value();
                if (sol) {
                    CycleFactor fwd = reductions::map_coloring_to_all_even_factor(out, *sol);
                    verify_or_throw(certify::verify_factor(target.graph, fwd,
                                                           ParityConstraint::AllEven,
                                                           certify::CoverMode::All()),
                                    "forward factor");
                    // The matching (third color class) survives the round trip.
                    EdgeColoring back = reductions::map_all_even_factor_to_coloring(out, fwd);
                    for (int k = 0; k < source.graph.edge_count(); ++k)
                        if ((sol->color[k] == 3) != (back.color[k] == 3))
                            fail(Errc::NotAFactor, "round trip moved the color-3 matching");
                }
                if (target_yes)
                    reductions::map_all_even_factor_to_coloring(out, *target_result.factor);
            } else if (id == "vdp-existsodd") {
                auto sol = brute_vdp(source.graph, source.terminals[0], source.terminals[1],
                                     source.terminals[2], source.terminals[3]);
                source_yes = sol.has_value();
                if (sol) {
                    CycleFactor fwd =
                        reductions::map_vdp_to_exists_odd_factor(out, sol->first, sol->second);
                    verify_or_throw(certify::verify_factor(target.graph, fwd,
                                                           ParityConstraint::ExistsOdd,
                                                           certify::CoverMode::All()),
                                    "forward factor");
                }
                if (target_yes) reductions::map_exists_odd_factor_to_vdp(out, *target_result.factor);
            } else if (id == "evencyc-existseven") {
                auto sol = find_even_dicycle_bruteforce(source.graph, solve_opts);
                source_yes = sol.has_value();
                if (sol) {
                    CycleFactor fwd = reductions::map_even_dicycle_to_factor(out, *sol);
                    verify_or_throw(certify::verify_factor(target.graph, fwd,
                                                           ParityConstraint::ExistsEven,
                                                           certify::CoverMode::All()),
                                    "forward factor");
                }
                if (target_yes) {
                    OrientedCycle back =
                        reductions::map_factor_to_even_dicycle(out, *target_result.factor);
                    if (cycle_parity(back) != Parity::Even)
                        fail(Errc::ParityViolated, "mapped dicycle is odd");
                }
            } else if (id == "3dm-prcf") {
                auto sol = brute_3dm(out.source.dm_size, out.source.tuples);
                source_yes = sol.has_value();
                if (sol) {
                    CycleFactor fwd = reductions::map_3dm_matching_to_prcf_factor(out, *sol);
                    verify_or_throw(certify::verify_p_respecting(target.graph, target.pairs, fwd),
                                    "forward factor");
                }
                if (target_yes)
                    reductions::map_prcf_factor_to_3dm_matching(out, *target_result.factor);
            } else if (id == "prcf-smcf") {
                SolveResult src = solve_prcf(source.graph, out.source.pairs, solve_opts);
                source_yes = src.yes();
                if (source_yes) {
                    CycleFactor fwd = reductions::map_prcf_factor_to_smcf_factor(out, *src.factor);
                    verify_or_throw(certify::verify_factor(target.graph, fwd, ParityConstraint::Any,
                                                           certify::CoverMode::OnlyZ(target.z)),
                                    "forward factor");
                }
                if (target_yes)
                    reductions::map_smcf_factor_to_prcf_factor(out, *target_result.factor);
            } else if (id == "smcf-mcf") {
                SolveResult src = solve_smcf(source.graph, source.z, solve_opts);
                source_yes = src.yes();
                if (source_yes) {
                    CycleFactor fwd = reductions::map_smcf_factor_to_mcf_factor(out, *src.factor);
                    verify_or_throw(certify::verify_factor(target.graph, fwd, ParityConstraint::Any,
                                                           certify::CoverMode::All()),
                                    "forward factor");
                }
                if (target_yes)
                    reductions::map_mcf_factor_to_smcf_factor(out, *target_result.factor);
            } else if (id == "mcf-existseven") {
                SolveResult src = solve_parity(source.graph, ParityConstraint::Any, solve_opts);
                source_yes = src.yes();
                if (source_yes) {
                    CycleFactor fwd =
                        reductions::map_mcf_factor_to_exists_even_factor(out, *src.factor);
                    verify_or_throw(certify::verify_factor(target.graph, fwd,
                                                           ParityConstraint::ExistsEven,
                                                           certify::CoverMode::All()),
                                    "forward factor");
                }
                if (target_yes)
                    reductions::map_exists_even_factor_to_mcf_factor(out, *target_result.factor);
            } else {
                fail(Errc::UnknownReduction, "'" + id + "'");
            }

            outcome.source_yes = source_yes;
            line << " source=" << (source_yes ? "Yes" : "No")
                 << " target=" << (target_yes ? "Yes" : "No");
            if (source_yes != target_yes) {
                outcome.mismatch = true;
                line << " MISMATCH";
            }
        }
        if (!outcome.mismatch) line << " ok";
    } catch (const Error& e) {
        if (e.code() == Errc::TooLarge) {
            outcome.skipped = true;
            line << " skipped (" << e.what() << ")";
        } else {
            outcome.mismatch = true;
            line << " MISMATCH (" << e.what() << ")";
        }
    }
    outcome.line = line.str();
    outcome.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return outcome;
}

} // namespace

EquivReport run_equivcheck(const EquivOptions& options) {
    const std::string& id = options.reduction_id;
    if (!reductions::is_reduction_id(id)) fail(Errc::UnknownReduction, "'" + id + "'");
    if (options.exhaustive && id != "lift-undirected")
        fail(Errc::InfeasibleParameters, "exhaustive mode is supported for lift-undirected only");

    std::vector<ProblemInstance> instances;
    if (options.exhaustive) {
        instances = exhaustive_digraphs(options.max_size);
    } else {
        instances.reserve(options.count);
        for (int i = 0; i < options.count; ++i) {
            Rng rng = Rng::instance_stream(options.seed, static_cast<std::uint64_t>(i));
            instances.push_back(generate_source(id, options.max_size, rng));
        }
    }

    std::vector<Outcome> outcomes(instances.size());
    std::atomic<std::size_t> next{0};
    int workers = std::max(1, options.threads);
    auto work = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= instances.size()) return;
            outcomes[i] = check_instance(id, instances[i], options);
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    EquivReport report;
    report.instances = static_cast<int>(instances.size());
    std::ostringstream text, timing;
    text << "equivcheck " << id << " seed=" << options.seed
         << (options.exhaustive ? " exhaustive" : " count=" + std::to_string(options.count))
         << " max-size=" << options.max_size << '\n';
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        const Outcome& o = outcomes[i];
        text << "[" << i << "] " << o.line << '\n';
        timing << "[" << i << "] " << o.seconds << "s\n";
        if (o.mismatch) ++report.mismatches;
        if (o.skipped) ++report.skipped;
        if (o.source_yes) ++report.yes_instances;
    }
    text << (report.mismatches == 0 ? "OK" : "FAIL") << ": " << report.instances << " instances, "
         << report.mismatches << " mismatches, " << report.skipped << " skipped, "
         << report.yes_instances << " yes\n";
    report.text = text.str();
    report.timing = timing.str();
    return report;
}

} // namespace equivcheck
} // namespace cyclefactor
