#pragma once

#include <vector>

#include "cyclefactor/graph.hpp"

namespace cyclefactor {

/// A matching in an undirected graph: a set of edges no two of which share a
/// vertex. mate[v] is the matched partner of v, or -1.
struct Matching {
    std::vector<ElementId> edges; // sorted by id
    std::vector<int> mate;        // size n

    int size() const { return static_cast<int>(edges.size()); }

    bool is_perfect(const MixedGraph& g) const {
        return 2 * size() == g.vertex_count();
    }
};

/// Maximum matching in a bipartite graph. left[v] marks the side of v; every
/// edge must cross sides (validated, NotBipartition otherwise). Deterministic:
/// vertices and adjacency are scanned in increasing id order.
Matching max_bipartite_matching(const MixedGraph& g, const std::vector<bool>& left);

/// Maximum matching in a general undirected multigraph via Edmonds' blossom
/// algorithm (O(V^3)). Parallel edges are collapsed inside the matcher; the
/// reported ElementId per matched pair is the smallest edge id joining it.
Matching max_general_matching(const MixedGraph& g);

} // namespace cyclefactor
