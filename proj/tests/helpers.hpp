#pragma once

// Named instances shared across the test suites.

#include <utility>
#include <vector>

#include "cyclefactor/format.hpp"
#include "cyclefactor/graph.hpp"

namespace fixtures {

using cyclefactor::MixedGraph;
using cyclefactor::ProblemInstance;
using cyclefactor::ProblemKind;

inline MixedGraph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return MixedGraph::build(n, std::move(edges), {});
}

inline MixedGraph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return MixedGraph::build(a + b, std::move(edges), {});
}

inline MixedGraph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return MixedGraph::build(n, std::move(edges), {});
}

inline MixedGraph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return MixedGraph::build(n, std::move(edges), {});
}

inline MixedGraph directed_cycle(int n) {
    std::vector<std::pair<int, int>> arcs;
    for (int v = 0; v < n; ++v) arcs.emplace_back(v, (v + 1) % n);
    return MixedGraph::build(n, {}, std::move(arcs));
}

inline MixedGraph star_graph(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return MixedGraph::build(leaves + 1, std::move(edges), {});
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -> i+5.
inline MixedGraph petersen_graph() {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < 5; ++v) edges.emplace_back(v, (v + 1) % 5);
    for (int v = 0; v < 5; ++v) edges.emplace_back(5 + v, 5 + (v + 2) % 5);
    for (int v = 0; v < 5; ++v) edges.emplace_back(v, 5 + v);
    return MixedGraph::build(10, std::move(edges), {});
}

/// The paper's 2VDP example: vertices s1=0, a=1, b=2, t1=3, c=4, s2=5, d=6,
/// t2=7; arcs s1>a, a>b, b>t1, a>c, c>b, c>d, s2>d, d>t2.
inline ProblemInstance fig3a_instance() {
    ProblemInstance inst;
    inst.kind = ProblemKind::TwoVdp;
    inst.graph = MixedGraph::build(
        8, {},
        {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {4, 2}, {4, 6}, {5, 6}, {6, 7}});
    inst.terminals = {0, 3, 5, 7};
    return inst;
}

/// The paper's SMCF example: vertices a=0, b=1, c=2, d=3; edges a-b, b-c,
/// b-d, c-d; one arc a>c; Z = {a}. The drawn solution is the mixed triangle
/// a>c, c-b, b-a.
inline ProblemInstance fig6a_instance() {
    ProblemInstance inst;
    inst.kind = ProblemKind::Graph;
    inst.graph = MixedGraph::build(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}}, {{0, 2}});
    inst.z = {0};
    return inst;
}

inline ProblemInstance ham_instance(MixedGraph g, int s, int t) {
    ProblemInstance inst;
    inst.kind = ProblemKind::HamPath;
    inst.graph = std::move(g);
    inst.terminals = {s, t};
    return inst;
}

inline ProblemInstance graph_instance(MixedGraph g) {
    ProblemInstance inst;
    inst.kind = ProblemKind::Graph;
    inst.graph = std::move(g);
    return inst;
}

} // namespace fixtures
