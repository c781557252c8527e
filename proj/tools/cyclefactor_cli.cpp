// Command-line front end: solve instances, apply reductions, map solutions
// back, and run the reduction-equivalence harness.
//
// Exit codes: 0 = Yes / success, 1 = No, 2 = error, 3 = equivalence mismatch.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "cyclefactor/certify.hpp"
#include "cyclefactor/equivcheck.hpp"
#include "cyclefactor/format.hpp"
#include "cyclefactor/reductions.hpp"
#include "cyclefactor/solvers.hpp"

using namespace cyclefactor;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;
constexpr int kExitMismatch = 3;

std::uint64_t default_node_budget() {
    if (const char* env = std::getenv("CYCLEFACTOR_NODE_BUDGET")) {
        char* end = nullptr;
        unsigned long long parsed = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && parsed > 0) return parsed;
        std::cerr << "warning: ignoring malformed CYCLEFACTOR_NODE_BUDGET\n";
    }
    return SolveOptions{}.node_limit;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::SyntaxError, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run_solve(const std::string& path, const std::string& constraint_name,
              const std::string& method, std::uint64_t budget) {
    ProblemInstance inst = load_instance(path);
    auto constraint = parse_constraint(constraint_name);
    if (!constraint) {
        std::cerr << "error: unknown constraint '" << constraint_name << "'\n";
        return kExitError;
    }
    if (inst.kind != ProblemKind::Graph) {
        std::cerr << "error: source-problem instances are solved via 'reduce'\n";
        return kExitError;
    }
    if (inst.has_pairs() && inst.has_terminal_set()) {
        std::cerr << "error: instance mixes PRCF pairs and SMCF terminals\n";
        return kExitError;
    }

    SolveOptions opts;
    opts.node_limit = budget;
    SolveResult result;
    certify::CoverMode mode = certify::CoverMode::All();

    if (inst.has_terminal_set() || inst.has_pairs()) {
        if (*constraint != ParityConstraint::Any || method == "poly") {
            std::cerr << "error: PRCF/SMCF instances support --constraint any --method exact\n";
            return kExitError;
        }
        if (inst.has_terminal_set()) {
            result = solve_smcf(inst.graph, inst.z, opts);
            mode = certify::CoverMode::OnlyZ(inst.z);
        } else {
            result = solve_prcf(inst.graph, inst.pairs, opts);
        }
    } else if (method == "poly") {
        if (*constraint != ParityConstraint::Any) {
            std::cerr << "error: --method poly only solves --constraint any\n";
            return kExitError;
        }
        if (inst.graph.is_directed()) result = directed_cycle_factor(inst.graph);
        else if (inst.graph.is_undirected()) result = undirected_two_factor(inst.graph);
        else {
            std::cerr << "error: no polynomial method for mixed graphs\n";
            return kExitError;
        }
    } else {
        result = solve_parity(inst.graph, *constraint, opts);
    }

    if (!result.yes()) {
        std::cout << "No\n";
        return kExitNo;
    }
    auto violations = certify::verify_factor(inst.graph, *result.factor, *constraint, mode);
    if (!violations.empty() && inst.has_pairs()) {
        // pair check on top of the factor check
        auto pv = certify::verify_p_respecting(inst.graph, inst.pairs, *result.factor);
        violations.insert(violations.end(), pv.begin(), pv.end());
    }
    if (!violations.empty()) {
        std::cerr << "internal error: solver output failed verification:\n"
                  << certify::render(violations);
        return kExitError;
    }
    std::cout << serialize_factor(*result.factor);
    return kExitYes;
}

int run_reduce(const std::string& id, const std::string& path) {
    ProblemInstance source = load_instance(path);
    reductions::ReductionOutput out = reductions::reduce_by_id(id, source);
    std::cout << "# reduction: " << out.reduction_id << '\n'
              << "# constraint: " << constraint_name(out.target_constraint) << '\n'
              << serialize_instance(out.target);
    return kExitYes;
}

int run_mapback(const std::string& id, const std::string& source_path,
                const std::string& solution_path) {
    ProblemInstance source = load_instance(source_path);
    reductions::ReductionOutput out = reductions::reduce_by_id(id, source);
    CycleFactor f = parse_factor(read_file(solution_path));
    std::cout << reductions::map_back_by_id(id, out, f);
    return kExitYes;
}

int run_equivcheck(const std::string& id, const std::string& count, int max_size,
                   std::uint64_t seed, int threads, std::uint64_t budget) {
    equivcheck::EquivOptions opts;
    opts.reduction_id = id;
    opts.max_size = max_size;
    opts.seed = seed;
    opts.threads = threads;
    opts.node_budget = budget;
    if (count == "exhaustive") {
        opts.exhaustive = true;
    } else {
        try {
            opts.count = std::stoi(count);
        } catch (const std::exception&) {
            std::cerr << "error: --count takes a number or 'exhaustive'\n";
            return kExitError;
        }
    }
    equivcheck::EquivReport report = equivcheck::run_equivcheck(opts);
    std::cout << report.text;
    std::cerr << report.timing;
    return report.ok() ? kExitYes : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"parity-constrained cycle-factor toolkit"};
    app.require_subcommand(1);
    std::uint64_t budget = default_node_budget();

    std::string file, constraint = "any", method = "exact";
    CLI::App* solve = app.add_subcommand("solve", "decide a cycle-factor instance");
    solve->add_option("file", file)->required();
    solve->add_option("--constraint", constraint,
                      "any|all-odd|all-even|exists-odd|exists-even");
    solve->add_option("--method", method, "poly|exact")
        ->check(CLI::IsMember({"poly", "exact"}));
    solve->add_option("--budget", budget, "backtrack node limit");

    std::string reduction_id, source_path, solution_path;
    CLI::App* reduce = app.add_subcommand("reduce", "emit the reduced instance");
    reduce->add_option("reduction-id", reduction_id)->required();
    reduce->add_option("file", source_path)->required();

    CLI::App* mapback = app.add_subcommand("mapback", "map a target solution to the source");
    mapback->add_option("reduction-id", reduction_id)->required();
    mapback->add_option("source", source_path)->required();
    mapback->add_option("target-solution", solution_path)->required();

    std::string count = "100";
    int max_size = 4;
    std::uint64_t seed = 1;
    int threads = 2;
    CLI::App* equiv = app.add_subcommand("equivcheck", "brute-force reduction equivalence");
    equiv->add_option("reduction-id", reduction_id)->required();
    equiv->add_option("--count", count, "instance count or 'exhaustive'");
    equiv->add_option("--max-size", max_size);
    equiv->add_option("--seed", seed);
    equiv->add_option("--threads", threads);
    equiv->add_option("--budget", budget, "per-instance node cap (skip-and-warn)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitYes : kExitError;
    }

    try {
        if (solve->parsed()) return run_solve(file, constraint, method, budget);
        if (reduce->parsed()) return run_reduce(reduction_id, source_path);
        if (mapback->parsed()) return run_mapback(reduction_id, source_path, solution_path);
        if (equiv->parsed())
            return run_equivcheck(reduction_id, count, max_size, seed, threads, budget);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
