#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "cyclefactor/graph.hpp"

namespace cyclefactor {

enum class ProblemKind {
    Graph,        // plain instance (possibly with PRCF pairs / SMCF terminals)
    HamPath,      // "ham <s> <t>" over a directed graph
    EdgeColoring, // "col3" over a cubic undirected graph
    TwoVdp,       // "vdp <s1> <t1> <s2> <t2>" over a directed graph
    EvenDicycle,  // "evencyc" over a directed graph
    ThreeDm,      // "3dm <n>" with "t <x> <y> <z>" tuple lines, no graph
};

/// Parsed instance: a graph plus whatever problem metadata the header and
/// optional lines carry. For ThreeDm the graph is empty.
struct ProblemInstance {
    ProblemKind kind = ProblemKind::Graph;
    MixedGraph graph;
    std::vector<int> terminals;                  // ham: {s,t}; vdp: {s1,t1,s2,t2}
    int dm_size = 0;                             // 3dm: |X| = |Y| = |Z|
    std::vector<std::array<int, 3>> tuples;      // 3dm tuples
    std::vector<std::pair<ElementId, ElementId>> pairs; // PRCF forbidden pairs
    std::vector<int> z;                          // SMCF terminal set (sorted)

    bool has_pairs() const { return !pairs.empty(); }
    bool has_terminal_set() const { return !z.empty(); }
};

ProblemInstance parse_instance(const std::string& text);
std::string serialize_instance(const ProblemInstance& inst);

ProblemInstance load_instance(const std::string& path);

// --- solution objects and their line formats ---

/// Directed path given as the arc sequence from s to t.
struct ArcPath {
    std::vector<ElementId> arcs;
};

/// Proper 3-edge-coloring: color[k] in {1,2,3} for edge k.
struct EdgeColoring {
    std::vector<int> color;
};

/// Chosen tuple indexes of a 3DM instance.
struct DmMatching {
    std::vector<int> tuple_indexes;
};

std::string serialize_factor(const CycleFactor& f);
CycleFactor parse_factor(const std::string& text);

std::string serialize_path(const ArcPath& p);
std::string serialize_vdp(const ArcPath& p1, const ArcPath& p2);
std::string serialize_coloring(const EdgeColoring& c);
std::string serialize_dm_matching(const DmMatching& m, const ProblemInstance& inst);

} // namespace cyclefactor
