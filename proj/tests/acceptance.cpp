// Acceptance suite. Each criterion prints one pass/fail line; the process
// exits nonzero if any criterion fails. Reports are deterministic so that
// criterion 9 can re-run criteria 1-8 and compare byte for byte; wall-clock
// timings go to stderr only.

#include <chrono>
#include <iostream>
#include <sstream>

#include "cyclefactor/certify.hpp"
#include "cyclefactor/equivcheck.hpp"
#include "cyclefactor/generators.hpp"
#include "cyclefactor/matching.hpp"
#include "cyclefactor/reductions.hpp"
#include "cyclefactor/solvers.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace cyclefactor;

namespace {

struct Criterion {
    bool pass = true;
    std::string report;

    void require(bool ok, const std::string& why) {
        if (!ok) {
            pass = false;
            report += " FAILED(" + why + ")";
        }
    }
};

bool factor_ok(const MixedGraph& g, const CycleFactor& f, ParityConstraint c,
               const certify::CoverMode& mode) {
    return certify::verify_factor(g, f, c, mode).empty();
}

// ---- criterion 1: directed solver vs subset oracle, all 4-vertex digraphs --

Criterion criterion1() {
    Criterion c;
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v)
            if (u != v) slots.emplace_back(u, v);
    int graphs = 0, yes = 0;
    for (std::uint64_t mask = 0; mask < (1ULL << 12); ++mask) {
        std::vector<std::pair<int, int>> arcs;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (mask >> i & 1) arcs.push_back(slots[i]);
        MixedGraph d = MixedGraph::build(4, {}, std::move(arcs));
        bool oracle_yes = !oracle::naive_factors(d).empty();
        SolveResult r = directed_cycle_factor(d);
        c.require(r.yes() == oracle_yes, "status mismatch at mask " + std::to_string(mask));
        if (r.yes()) {
            ++yes;
            c.require(factor_ok(d, *r.factor, ParityConstraint::Any, certify::CoverMode::All()),
                      "bad certificate at mask " + std::to_string(mask));
        }
        ++graphs;
    }
    c.report = "directed solver vs brute force on " + std::to_string(graphs) + " digraphs (" +
               std::to_string(yes) + " yes)" + c.report;
    return c;
}

// ---- criterion 2: 2-factor solver vs subset oracle, all graphs n <= 6 -----

Criterion criterion2() {
    Criterion c;
    long graphs = 0, yes = 0;
    for (int n = 0; n <= 6; ++n) {
        std::vector<std::pair<int, int>> slots;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
        for (std::uint64_t mask = 0; mask < (1ULL << slots.size()); ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (std::size_t i = 0; i < slots.size(); ++i)
                if (mask >> i & 1) edges.push_back(slots[i]);
            MixedGraph g = MixedGraph::build(n, std::move(edges), {});
            bool oracle_yes = !oracle::naive_factors(g).empty();
            SolveResult r = undirected_two_factor(g);
            c.require(r.yes() == oracle_yes,
                      "status mismatch n=" + std::to_string(n) + " mask " + std::to_string(mask));
            if (r.yes()) {
                ++yes;
                c.require(factor_ok(g, *r.factor, ParityConstraint::Any, certify::CoverMode::All()),
                          "bad certificate n=" + std::to_string(n));
            }
            ++graphs;
        }
    }
    c.report = "2-factor solver vs brute force on " + std::to_string(graphs) + " graphs (" +
               std::to_string(yes) + " yes)" + c.report;
    return c;
}

// ---- criterion 3: blossom vs brute-force matching, 2000 samples per size --

Criterion criterion3() {
    Criterion c;
    long checked = 0;
    for (int n = 1; n <= 10; ++n) {
        Rng rng(9000 + n);
        for (int trial = 0; trial < 2000; ++trial) {
            MixedGraph g = random_graph(n, 0.05 + 0.9 * rng.next_double(), rng);
            int blossom = max_general_matching(g).size();
            int brute = oracle::naive_max_matching(g);
            c.require(blossom == brute, "size mismatch at n=" + std::to_string(n) + " trial " +
                                            std::to_string(trial));
            ++checked;
        }
    }
    c.report = "blossom matching equals brute-force maximum on " + std::to_string(checked) +
               " sampled graphs" + c.report;
    return c;
}

// ---- criterion 4: lift preserves the achievable signature set -------------

Criterion criterion4() {
    Criterion c;
    long graphs = 0;
    std::size_t largest_set = 0;
    for (int n = 0; n <= 4; ++n) {
        std::vector<std::pair<int, int>> slots;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v) slots.emplace_back(u, v);
        for (std::uint64_t mask = 0; mask < (1ULL << slots.size()); ++mask) {
            std::vector<std::pair<int, int>> arcs;
            for (std::size_t i = 0; i < slots.size(); ++i)
                if (mask >> i & 1) arcs.push_back(slots[i]);
            ProblemInstance d = fixtures::graph_instance(MixedGraph::build(n, {}, std::move(arcs)));
            auto out = reductions::lift_directed_to_undirected(d);
            auto src = signature_set(d.graph);
            auto dst = signature_set(out.target.graph);
            largest_set = std::max(largest_set, src.size());
            c.require(src == dst, "signature sets differ, n=" + std::to_string(n) + " mask " +
                                      std::to_string(mask));
            ++graphs;
        }
    }
    c.report = "signature sets equal under the lift for " + std::to_string(graphs) +
               " digraphs (largest set " + std::to_string(largest_set) + ")" + c.report;
    return c;
}

// ---- criteria 5 and 6: reduction equivalence and round-trip mapping -------

struct EquivSetup {
    const char* id;
    int max_size;
};

constexpr EquivSetup kEquivSetups[] = {
    {"ham-allodd", 5},  {"col3-alleven", 6}, {"vdp-existsodd", 5}, {"evencyc-existseven", 4},
    {"3dm-prcf", 2},    {"prcf-smcf", 4},    {"smcf-mcf", 5},      {"mcf-existseven", 5},
};

std::pair<Criterion, Criterion> criteria5and6() {
    Criterion c5, c6;
    std::ostringstream detail;
    long total_yes = 0;
    for (const auto& setup : kEquivSetups) {
        equivcheck::EquivOptions opts;
        opts.reduction_id = setup.id;
        opts.count = 200;
        opts.max_size = setup.max_size;
        opts.seed = 20250810;
        opts.threads = 2;
        equivcheck::EquivReport report = equivcheck::run_equivcheck(opts);
        detail << ' ' << setup.id << ":" << report.instances << "/" << report.mismatches << "m/"
               << report.skipped << "s";
        c5.require(report.mismatches == 0, std::string(setup.id) + " mismatches");
        c5.require(report.skipped == 0, std::string(setup.id) + " skipped instances");
        total_yes += report.yes_instances;
    }
    c5.report = "reduction equivalence, 200 random instances each:" + detail.str() + c5.report;
    // Mapping failures surface as mismatches inside the harness, so a clean
    // criterion 5 run certifies the round trips of every Yes instance.
    c6.pass = c5.pass;
    c6.report = "round-trip mapping verified on " + std::to_string(total_yes) +
                " yes instances" + (c6.pass ? "" : " FAILED(see criterion 5)");
    return {c5, c6};
}

// ---- criterion 7: named instances ------------------------------------------

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
        for (int col = 1; col <= 3; ++col) {
            coloring.color[k] = col;
            if (!conflict(k) && self(self, k + 1)) return true;
        }
        coloring.color[k] = 0;
        return false;
    };
    if (dfs(dfs, 0)) return coloring;
    return std::nullopt;
}

Criterion criterion7() {
    Criterion c;

    MixedGraph k4 = fixtures::complete_graph(4);
    SolveResult k4_even = solve_parity(k4, ParityConstraint::AllEven);
    c.require(k4_even.yes() &&
                  factor_ok(k4, *k4_even.factor, ParityConstraint::AllEven, certify::CoverMode::All()),
              "K4 all-even");
    c.require(!solve_parity(k4, ParityConstraint::ExistsOdd).yes(), "K4 exists-odd must be no");

    MixedGraph k5 = fixtures::complete_graph(5);
    SolveResult k5_odd = solve_parity(k5, ParityConstraint::AllOdd);
    c.require(k5_odd.yes() &&
                  factor_ok(k5, *k5_odd.factor, ParityConstraint::AllOdd, certify::CoverMode::All()),
              "K5 all-odd");
    c.require(!solve_parity(k5, ParityConstraint::ExistsEven).yes(), "K5 exists-even must be no");

    c.require(!brute_3edgecoloring(fixtures::petersen_graph()).has_value(),
              "Petersen is 3-edge-colorable?!");

    // 2VDP figure: the drawn solution verifies, its forward image verifies,
    // the exact solver re-derives a solution, and mapping back verifies.
    ProblemInstance fig3a = fixtures::fig3a_instance();
    auto vdp_out = reductions::reduce_2vdp_to_exists_odd(fig3a);
    ArcPath p1{{arc_id(0), arc_id(1), arc_id(2)}};
    ArcPath p2{{arc_id(6), arc_id(7)}};
    c.require(certify::verify_vdp(fig3a.graph, 0, 3, 5, 7, p1, p2).empty(), "fig 3a drawn paths");
    CycleFactor orange = reductions::map_vdp_to_exists_odd_factor(vdp_out, p1, p2);
    c.require(factor_ok(vdp_out.target.graph, orange, ParityConstraint::ExistsOdd,
                        certify::CoverMode::All()),
              "fig 3b drawn factor");
    SolveResult fig3b = solve_parity(vdp_out.target.graph, ParityConstraint::ExistsOdd);
    c.require(fig3b.yes(), "fig 3b solver");
    if (fig3b.yes()) {
        auto [q1, q2] = reductions::map_exists_odd_factor_to_vdp(vdp_out, *fig3b.factor);
        c.require(certify::verify_vdp(fig3a.graph, 0, 3, 5, 7, q1, q2).empty(), "fig 3b mapback");
    }

    // SMCF figure: drawn triangle solution, re-derivation, the reduced mixed
    // graph, and the gadget-side factor.
    ProblemInstance fig6a = fixtures::fig6a_instance();
    auto tri = cycle_from_elements(fig6a.graph, {edge_id(0), edge_id(1), arc_id(0)});
    c.require(tri.has_value() &&
                  factor_ok(fig6a.graph, CycleFactor{{*tri}}, ParityConstraint::Any,
                            certify::CoverMode::OnlyZ(fig6a.z)),
              "fig 6a drawn solution");
    SolveResult smcf = solve_smcf(fig6a.graph, fig6a.z);
    c.require(smcf.yes() && factor_ok(fig6a.graph, *smcf.factor, ParityConstraint::Any,
                                      certify::CoverMode::OnlyZ(fig6a.z)),
              "fig 6a solver");

    auto mcf_out = reductions::reduce_smcf_to_mcf(fig6a);
    SolveResult fig6b = solve_parity(mcf_out.target.graph, ParityConstraint::Any);
    c.require(fig6b.yes() && factor_ok(mcf_out.target.graph, *fig6b.factor, ParityConstraint::Any,
                                       certify::CoverMode::All()),
              "fig 6b solver");
    if (smcf.yes()) {
        CycleFactor fwd = reductions::map_smcf_factor_to_mcf_factor(mcf_out, *smcf.factor);
        c.require(factor_ok(mcf_out.target.graph, fwd, ParityConstraint::Any,
                            certify::CoverMode::All()),
                  "fig 6b forward factor");
    }

    c.report = std::string("named instances: K4, K5, Petersen coloring, the 2VDP and SMCF figures") +
               c.report;
    return c;
}

// ---- criterion 8: Petersen property for 4-regular multigraphs --------------

Criterion criterion8() {
    Criterion c;
    Rng rng(4242);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        int n = rng.next_int(5, 16);
        MixedGraph g = random_regular(n, 4, rng);
        SolveResult r = undirected_two_factor(g);
        c.require(r.yes(), "4-regular multigraph without 2-factor at trial " + std::to_string(trial));
        if (r.yes())
            c.require(factor_ok(g, *r.factor, ParityConstraint::Any, certify::CoverMode::All()),
                      "bad certificate at trial " + std::to_string(trial));
        ++checked;
    }
    c.report = "2-factor found in " + std::to_string(checked) + " random 4-regular multigraphs" +
               c.report;
    return c;
}

std::vector<Criterion> run_criteria_1_to_8() {
    std::vector<Criterion> out;
    auto timed = [&](const char* name, auto&& fn) {
        auto t0 = std::chrono::steady_clock::now();
        if constexpr (std::is_same_v<decltype(fn()), std::pair<Criterion, Criterion>>) {
            auto [a, b] = fn();
            out.push_back(a);
            out.push_back(b);
        } else {
            out.push_back(fn());
        }
        std::cerr << name << " took "
                  << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()
                  << "s\n";
    };
    timed("criterion 1", criterion1);
    timed("criterion 2", criterion2);
    timed("criterion 3", criterion3);
    timed("criterion 4", criterion4);
    timed("criteria 5+6", criteria5and6);
    timed("criterion 7", criterion7);
    timed("criterion 8", criterion8);
    return out;
}

} // namespace

int main() {
    std::vector<Criterion> first = run_criteria_1_to_8();

    // criterion 9: identical seeds reproduce the reports byte for byte
    std::vector<Criterion> second = run_criteria_1_to_8();
    Criterion c9;
    for (std::size_t i = 0; i < first.size(); ++i)
        c9.require(first[i].report == second[i].report && first[i].pass == second[i].pass,
                   "criterion " + std::to_string(i + 1) + " report changed between runs");
    c9.report = "criteria 1-8 reproduce byte-identical reports" + c9.report;

    bool all_pass = true;
    for (std::size_t i = 0; i < first.size(); ++i) {
        all_pass = all_pass && first[i].pass;
        std::cout << (first[i].pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": "
                  << first[i].report << '\n';
    }
    all_pass = all_pass && c9.pass;
    std::cout << (c9.pass ? "PASS" : "FAIL") << " criterion 9: " << c9.report << '\n';
    return all_pass ? 0 : 1;
}
