#include "doctest.h"

#include "cyclefactor/generators.hpp"
#include "cyclefactor/matching.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace cyclefactor;

namespace {

std::vector<bool> two_sided(int a, int n) {
    std::vector<bool> left(n, false);
    for (int v = 0; v < a; ++v) left[v] = true;
    return left;
}

} // namespace

TEST_SUITE_BEGIN("matching");

TEST_CASE("bipartite: K33, star, P5") {
    MixedGraph k33 = fixtures::complete_bipartite(3, 3);
    CHECK(max_bipartite_matching(k33, two_sided(3, 6)).size() == 3);

    MixedGraph star = fixtures::star_graph(4);
    CHECK(max_bipartite_matching(star, two_sided(1, 5)).size() == 1);

    // Path on 5 vertices: the brute-force maximum is 2; frozen after checking
    // the oracle agrees.
    MixedGraph p5 = fixtures::path_graph(5);
    CHECK(oracle::naive_max_matching(p5) == 2);
    std::vector<bool> left(5, false);
    left[0] = left[2] = left[4] = true;
    CHECK(max_bipartite_matching(p5, left).size() == 2);
}

TEST_CASE("bipartition is validated") {
    MixedGraph tri = fixtures::cycle_graph(3);
    try {
        max_bipartite_matching(tri, two_sided(1, 3));
        FAIL("expected NotBipartition");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotBipartition);
    }
}

TEST_CASE("general: triangle, Petersen, odd cycles") {
    CHECK(max_general_matching(fixtures::cycle_graph(3)).size() == 1);

    // Petersen has a perfect matching; the brute-force oracle confirms 5.
    MixedGraph petersen = fixtures::petersen_graph();
    CHECK(oracle::naive_max_matching(petersen) == 5);
    Matching m = max_general_matching(petersen);
    CHECK(m.size() == 5);
    CHECK(m.is_perfect(petersen));

    for (int k = 1; k <= 4; ++k)
        CHECK(max_general_matching(fixtures::cycle_graph(2 * k + 1)).size() == k);
}

TEST_CASE("blossom equals brute force on all graphs with up to 5 vertices") {
    for (int n = 0; n <= 5; ++n) {
        std::vector<std::pair<int, int>> slots;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
        for (std::uint64_t mask = 0; mask < (1ULL << slots.size()); ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (std::size_t i = 0; i < slots.size(); ++i)
                if (mask >> i & 1) edges.push_back(slots[i]);
            MixedGraph g = MixedGraph::build(n, std::move(edges), {});
            CHECK(max_general_matching(g).size() == oracle::naive_max_matching(g));
        }
    }
}

TEST_CASE("500 random graphs up to 14 vertices: size optimal, no augmenting path") {
    Rng rng(1234);
    for (int trial = 0; trial < 500; ++trial) {
        int n = rng.next_int(0, 14);
        MixedGraph g = random_graph(n, 0.1 + 0.5 * rng.next_double(), rng);
        Matching m = max_general_matching(g);
        CHECK(m.size() == oracle::naive_max_matching(g));
        CHECK_FALSE(oracle::naive_has_augmenting_path(g, m.mate));
        // matched element ids really join the mated pairs
        for (ElementId id : m.edges) {
            auto [u, v] = g.endpoints(id);
            CHECK(m.mate[u] == v);
            CHECK(m.mate[v] == u);
        }
    }
}

TEST_CASE("the two engines agree on bipartite inputs") {
    Rng rng(99);
    for (int trial = 0; trial < 120; ++trial) {
        int a = rng.next_int(0, 5), b = rng.next_int(0, 5);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < a; ++u)
            for (int v = 0; v < b; ++v)
                if (rng.next_bool(0.5)) edges.emplace_back(u, a + v);
        MixedGraph g = MixedGraph::build(a + b, std::move(edges), {});
        CHECK(max_bipartite_matching(g, two_sided(a, a + b)).size() ==
              max_general_matching(g).size());
    }
}

TEST_CASE("parallel edges are collapsed and the smallest id is reported") {
    MixedGraph g = MixedGraph::build(2, {{0, 1}, {0, 1}, {0, 1}}, {});
    Matching m = max_general_matching(g);
    REQUIRE(m.size() == 1);
    CHECK(m.edges[0] == edge_id(0));
}

TEST_SUITE_END();
