#include "cyclefactor/generators.hpp"

#include <algorithm>
#include <set>

namespace cyclefactor {

std::uint64_t Rng::splitmix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t Rng::next_u64() {
    // xorshift64*, seeded through splitmix so nearby seeds diverge.
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1DULL;
}

double Rng::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

int Rng::next_int(int lo, int hi) {
    if (lo > hi) fail(Errc::InfeasibleParameters, "empty integer range");
    std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    return lo + static_cast<int>(next_u64() % span);
}

Rng Rng::instance_stream(std::uint64_t seed, std::uint64_t index) {
    return Rng(splitmix(seed) ^ splitmix(index * 0xA24BAED4963EE407ULL + 1));
}

MixedGraph random_digraph(int n, double arc_prob, Rng& rng) {
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && rng.next_bool(arc_prob)) arcs.emplace_back(u, v);
    return MixedGraph::build(n, {}, std::move(arcs));
}

MixedGraph random_graph(int n, double edge_prob, Rng& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_bool(edge_prob)) edges.emplace_back(u, v);
    return MixedGraph::build(n, std::move(edges), {});
}

namespace {

// Configuration model: pair up degree stubs, redrawing whole pairings that
// produce a loop. Multi-edges are kept.
MixedGraph pairing_model(int n, int degree, Rng& rng) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<int> stubs;
        stubs.reserve(n * degree);
        for (int v = 0; v < n; ++v)
            for (int d = 0; d < degree; ++d) stubs.push_back(v);
        rng.shuffle(stubs);
        std::vector<std::pair<int, int>> edges;
        bool ok = true;
        for (std::size_t i = 0; i < stubs.size(); i += 2) {
            if (stubs[i] == stubs[i + 1]) {
                ok = false;
                break;
            }
            edges.emplace_back(stubs[i], stubs[i + 1]);
        }
        if (!ok) continue;
        std::sort(edges.begin(), edges.end(), [](auto a, auto b) {
            return std::minmax(a.first, a.second) < std::minmax(b.first, b.second);
        });
        return MixedGraph::build(n, std::move(edges), {});
    }
    fail(Errc::InfeasibleParameters, "pairing model failed to avoid loops");
}

} // namespace

MixedGraph random_cubic(int n, Rng& rng) {
    if (n < 4 || n % 2 != 0)
        fail(Errc::InfeasibleParameters, "cubic graphs need even n >= 4, got " + std::to_string(n));
    return pairing_model(n, 3, rng);
}

MixedGraph random_simple_cubic(int n, Rng& rng) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        MixedGraph g = random_cubic(n, rng);
        std::set<std::pair<int, int>> seen;
        bool simple = true;
        for (auto [u, v] : g.edges())
            if (!seen.insert({std::min(u, v), std::max(u, v)}).second) simple = false;
        if (simple) return g;
    }
    fail(Errc::InfeasibleParameters, "no simple cubic graph found");
}

MixedGraph random_regular(int n, int degree, Rng& rng) {
    if (degree < 2 || degree % 2 != 0)
        fail(Errc::InfeasibleParameters, "degree must be a positive even number");
    if (n < degree + 1) fail(Errc::InfeasibleParameters, "too few vertices for the degree");
    return pairing_model(n, degree, rng);
}

MixedGraph random_mixed(int n, double edge_prob, double arc_prob, Rng& rng) {
    std::vector<std::pair<int, int>> edges, arcs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_bool(edge_prob)) edges.emplace_back(u, v);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && rng.next_bool(arc_prob)) arcs.emplace_back(u, v);
    return MixedGraph::build(n, std::move(edges), std::move(arcs));
}

ProblemInstance random_3dm(int n, int tuple_count, Rng& rng) {
    if (n < 1) fail(Errc::InfeasibleParameters, "3dm universe must be non-empty");
    std::set<std::array<int, 3>> tuples;
    int budget = tuple_count * 20 + 20;
    while (static_cast<int>(tuples.size()) < tuple_count && budget-- > 0)
        tuples.insert({rng.next_int(0, n - 1), rng.next_int(0, n - 1), rng.next_int(0, n - 1)});
    ProblemInstance inst;
    inst.kind = ProblemKind::ThreeDm;
    inst.dm_size = n;
    inst.tuples.assign(tuples.begin(), tuples.end());
    return inst;
}

ProblemInstance random_prcf(int n, int max_edges, Rng& rng) {
    ProblemInstance inst;
    inst.kind = ProblemKind::Graph;
    std::vector<std::pair<int, int>> edges;
    if (n >= 2) {
        int m = rng.next_int(0, max_edges);
        for (int i = 0; i < m; ++i) {
            int u = rng.next_int(0, n - 1);
            int v = rng.next_int(0, n - 1);
            if (u == v) continue;
            edges.emplace_back(u, v);
        }
    }
    inst.graph = MixedGraph::build(n, std::move(edges), {});
    int m = inst.graph.edge_count();
    if (m >= 2) {
        int pair_count = rng.next_int(0, std::min(3, m * (m - 1) / 2));
        std::set<std::pair<ElementId, ElementId>> pairs;
        int budget = pair_count * 20 + 20;
        while (static_cast<int>(pairs.size()) < pair_count && budget-- > 0) {
            int a = rng.next_int(0, m - 1);
            int b = rng.next_int(0, m - 1);
            if (a == b) continue;
            pairs.insert({edge_id(std::min(a, b)), edge_id(std::max(a, b))});
        }
        inst.pairs.assign(pairs.begin(), pairs.end());
    }
    return inst;
}

ProblemInstance random_smcf(int n, double edge_prob, double arc_prob, Rng& rng) {
    ProblemInstance inst;
    inst.kind = ProblemKind::Graph;
    inst.graph = random_mixed(n, edge_prob, arc_prob, rng);
    for (int v = 0; v < n; ++v)
        if (rng.next_bool(0.5)) inst.z.push_back(v);
    return inst;
}

} // namespace cyclefactor
