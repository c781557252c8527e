#include "doctest.h"

#include "cyclefactor/generators.hpp"
#include "cyclefactor/graph.hpp"
#include "helpers.hpp"

using namespace cyclefactor;

TEST_SUITE_BEGIN("graph");

TEST_CASE("two anti-parallel arcs form the smallest digraph with a cycle") {
    MixedGraph g = MixedGraph::build(2, {}, {{0, 1}, {1, 0}});
    CHECK(g.is_directed());
    CHECK_FALSE(g.is_undirected());
    CHECK(g.vertex_count() == 2);
    CHECK(g.arc_count() == 2);
    CHECK(g.degree(0) == 2);
}

TEST_CASE("triangle") {
    MixedGraph g = MixedGraph::build(3, {{0, 1}, {1, 2}, {2, 0}}, {});
    CHECK(g.is_undirected());
    CHECK(g.edge_count() == 3);
}

TEST_CASE("self-loops are rejected") {
    CHECK_THROWS_AS(MixedGraph::build(1, {{0, 0}}, {}), Error);
    try {
        MixedGraph::build(2, {}, {{1, 1}});
        FAIL("expected SelfLoop");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::SelfLoop);
    }
}

TEST_CASE("endpoints must be in range") {
    try {
        MixedGraph::build(2, {{0, 2}}, {});
        FAIL("expected VertexOutOfRange");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::VertexOutOfRange);
    }
}

TEST_CASE("incidence lists are sorted and their lengths sum to 2E+2A") {
    Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        MixedGraph g = random_mixed(rng.next_int(0, 8), 0.4, 0.3, rng);
        int total = 0;
        for (int v = 0; v < g.vertex_count(); ++v) {
            const auto& inc = g.incident(v);
            total += static_cast<int>(inc.size());
            for (std::size_t i = 1; i < inc.size(); ++i) CHECK(inc[i - 1].id <= inc[i].id);
        }
        CHECK(total == 2 * g.edge_count() + 2 * g.arc_count());
    }
}

TEST_CASE("cycle parity and factor signature") {
    MixedGraph two = MixedGraph::build(2, {}, {{0, 1}, {1, 0}});
    OrientedCycle c2{{{arc_id(0), true}, {arc_id(1), true}}};
    CHECK(cycle_parity(c2) == Parity::Even);

    MixedGraph tri = fixtures::cycle_graph(3);
    OrientedCycle c3{{{edge_id(0), true}, {edge_id(1), true}, {edge_id(2), true}}};
    CHECK(cycle_parity(c3) == Parity::Odd);

    CycleFactor f{{c3, c2}};
    ParitySignature sig = signature(f);
    CHECK(sig.even_cycles == 1);
    CHECK(sig.odd_cycles == 1);
}

TEST_CASE("constraint satisfaction is a pure predicate on the signature") {
    ParitySignature all_odd{0, 3}, all_even{2, 0}, mixed{1, 1}, empty{0, 0};
    CHECK(satisfies(all_odd, ParityConstraint::AllOdd));
    CHECK_FALSE(satisfies(mixed, ParityConstraint::AllOdd));
    CHECK(satisfies(all_even, ParityConstraint::AllEven));
    CHECK(satisfies(mixed, ParityConstraint::ExistsOdd));
    CHECK_FALSE(satisfies(all_even, ParityConstraint::ExistsOdd));
    CHECK(satisfies(mixed, ParityConstraint::ExistsEven));
    CHECK(satisfies(empty, ParityConstraint::Any));
    CHECK(satisfies(empty, ParityConstraint::AllOdd)); // vacuous
    CHECK_FALSE(satisfies(empty, ParityConstraint::ExistsEven));
}

TEST_CASE("factor keys are invariant under rotation, reversal and reordering") {
    MixedGraph g = fixtures::cycle_graph(4);
    OrientedCycle c{{{edge_id(0), true}, {edge_id(1), true}, {edge_id(2), true}, {edge_id(3), true}}};
    OrientedCycle rotated{{c.elements[2], c.elements[3], c.elements[0], c.elements[1]}};
    OrientedCycle reversed;
    for (int i = 3; i >= 0; --i) reversed.elements.push_back({c.elements[i].id, false});

    CHECK(factor_key(CycleFactor{{c}}) == factor_key(CycleFactor{{rotated}}));
    CHECK(factor_key(CycleFactor{{c}}) == factor_key(CycleFactor{{reversed}}));
    CHECK(canonical_factor(g, CycleFactor{{rotated}}) == canonical_factor(g, CycleFactor{{c}}));
    CHECK(canonical_factor(g, CycleFactor{{reversed}}) == canonical_factor(g, CycleFactor{{c}}));
}

TEST_CASE("cycle_from_elements orients a mixed cycle or rejects the set") {
    ProblemInstance fig = fixtures::fig6a_instance();
    auto tri = cycle_from_elements(fig.graph, {edge_id(0), edge_id(1), arc_id(0)});
    REQUIRE(tri.has_value());
    CHECK(tri->length() == 3);
    CHECK(cycle_chain_ok(fig.graph, *tri));

    // a-b, b-c, c-d is a path, not a cycle
    CHECK_FALSE(cycle_from_elements(fig.graph, {edge_id(0), edge_id(1), edge_id(3)}).has_value());
    // two parallel edges close a 2-cycle
    MixedGraph parallel = MixedGraph::build(2, {{0, 1}, {0, 1}}, {});
    auto two = cycle_from_elements(parallel, {edge_id(0), edge_id(1)});
    REQUIRE(two.has_value());
    CHECK(two->length() == 2);
}

TEST_SUITE_END();
