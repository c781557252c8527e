#include "doctest.h"

#include "cyclefactor/format.hpp"
#include "cyclefactor/generators.hpp"
#include "helpers.hpp"

using namespace cyclefactor;

TEST_SUITE_BEGIN("format");

TEST_CASE("a mixed header with arcs only parses to a digraph") {
    ProblemInstance inst = parse_instance("g mixed 2\na 0 1\na 1 0\n");
    CHECK(inst.kind == ProblemKind::Graph);
    CHECK(inst.graph.is_directed());
    CHECK(inst.graph.vertex_count() == 2);
    CHECK(inst.graph.arc_count() == 2);
}

TEST_CASE("canonical text round-trips byte for byte") {
    for (const char* text : {
             "g directed 2\na 0 1\na 1 0\n",
             "g undirected 3\ne 0 1\ne 1 2\ne 2 0\n",
             "g mixed 4\ne 0 1\ne 1 2\na 0 2\nz 1\nz 3\n",
             "g undirected 3\ne 0 1\ne 1 2\ne 2 0\np e0 e1\nlabel v 0 start\nlabel e e1 mid\n",
             "ham 0 2\ng directed 3\na 0 1\na 1 2\n",
             "vdp 0 1 2 3\ng directed 4\na 0 1\n",
             "col3\ng undirected 4\ne 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\ne 2 3\n",
             "evencyc\ng directed 2\na 0 1\na 1 0\n",
             "3dm 2\nt 0 0 0\nt 1 1 1\n",
         }) {
        CAPTURE(text);
        CHECK(serialize_instance(parse_instance(text)) == text);
    }
}

TEST_CASE("parse(serialize(x)) returns x for generated instances") {
    Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        ProblemInstance inst = random_smcf(rng.next_int(1, 6), 0.4, 0.3, rng);
        inst.graph.set_vertex_label(0, "anchor");
        ProblemInstance back = parse_instance(serialize_instance(inst));
        CHECK(back.graph.vertex_count() == inst.graph.vertex_count());
        CHECK(back.graph.edges() == inst.graph.edges());
        CHECK(back.graph.arcs() == inst.graph.arcs());
        CHECK(back.z == inst.z);
        CHECK(back.graph.vertex_label(0) == "anchor");
    }
}

TEST_CASE("syntax errors carry the line number") {
    try {
        parse_instance("g mixed 2\nbogus 1 2\n");
        FAIL("expected SyntaxError");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::SyntaxError);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_instance(""), Error);
    CHECK_THROWS_AS(parse_instance("g directed 2\ne 0 1\n"), Error); // edge in directed
}

TEST_CASE("a pair line naming a missing edge is a dangling reference") {
    try {
        parse_instance("g undirected 3\ne 0 1\ne 1 2\ne 2 0\np e0 e9\n");
        FAIL("expected DanglingReference");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DanglingReference);
    }
}

TEST_CASE("terminal and label references are checked") {
    CHECK_THROWS_AS(parse_instance("g mixed 2\na 0 1\nz 5\n"), Error);
    CHECK_THROWS_AS(parse_instance("g mixed 2\na 0 1\nlabel e a7 oops\n"), Error);
}

TEST_CASE("solution factors round-trip through the cycle line format") {
    CycleFactor f;
    f.cycles.push_back({{{edge_id(0), true}, {edge_id(2), false}, {arc_id(1), true}}});
    f.cycles.push_back({{{arc_id(3), true}, {arc_id(4), true}}});
    std::string text = serialize_factor(f);
    CHECK(text == "cycle e0+ e2- a1+\ncycle a3+ a4+\n");
    CHECK(parse_factor(text) == f);
}

TEST_CASE("comments are skipped") {
    ProblemInstance inst = parse_instance("# reduced instance\ng directed 1\n");
    CHECK(inst.graph.vertex_count() == 1);
}

TEST_SUITE_END();
