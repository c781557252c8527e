#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclefactor/errors.hpp"

namespace cyclefactor {

enum class ElementKind : std::uint8_t { Edge = 0, Arc = 1 };

/// Identity of an edge or arc. Indices are dense per kind, in declaration
/// order; element identity matters because parallel edges and arcs are
/// allowed everywhere.
struct ElementId {
    ElementKind kind = ElementKind::Edge;
    int index = -1;

    friend auto operator<=>(const ElementId&, const ElementId&) = default;
};

inline ElementId edge_id(int index) { return {ElementKind::Edge, index}; }
inline ElementId arc_id(int index) { return {ElementKind::Arc, index}; }

std::string to_string(ElementId id);
std::optional<ElementId> parse_element_id(const std::string& token);

/// Endpoints of an element. For edges the order is the declaration order;
/// for arcs u is the tail and v is the head.
struct Endpoints {
    int u = -1;
    int v = -1;
};

/// Multigraph with labeled undirected edges and directed arcs. Vertices are
/// 0..n-1. Self-loops are rejected; parallel and anti-parallel elements are
/// allowed. Immutable after construction apart from provenance labels.
class MixedGraph {
public:
    /// One entry of a vertex's incidence list.
    ///  - can_leave: the element may start a traversal step at this vertex
    ///    (edges always; arcs only at the tail).
    ///  - can_enter: the element may end a traversal step at this vertex.
    struct Incidence {
        ElementId id;
        int other = -1;
        bool can_leave = false;
        bool can_enter = false;
    };

    MixedGraph() = default;

    static MixedGraph build(int n,
                            std::vector<std::pair<int, int>> edges,
                            std::vector<std::pair<int, int>> arcs);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    int element_count() const { return edge_count() + arc_count(); }

    bool is_directed() const { return edges_.empty(); }
    bool is_undirected() const { return arcs_.empty(); }

    bool has_element(ElementId id) const;
    Endpoints endpoints(ElementId id) const;

    /// Incidence list of v, sorted by ElementId (edges before arcs).
    const std::vector<Incidence>& incident(int v) const { return adjacency_[v]; }

    /// Number of incident element ends (edges plus arcs, any direction).
    int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }

    const std::string& vertex_label(int v) const;
    const std::string& element_label(ElementId id) const;
    void set_vertex_label(int v, std::string label);
    void set_element_label(ElementId id, std::string label);
    bool has_labels() const;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::pair<int, int>> arcs_;
    std::vector<std::vector<Incidence>> adjacency_;
    std::vector<std::string> vertex_labels_;
    std::vector<std::string> edge_labels_;
    std::vector<std::string> arc_labels_;
};

enum class Parity { Even, Odd };

/// One element of a cycle together with its traversal direction. forward
/// means the element is traversed from endpoints().u to endpoints().v; arcs
/// must always be traversed forward in a valid cycle.
struct OrientedElement {
    ElementId id;
    bool forward = true;

    friend bool operator==(const OrientedElement&, const OrientedElement&) = default;
};

/// A cyclic sequence of oriented elements. Element i leads from vertex i to
/// vertex i+1 (mod length); well-formedness (distinct vertices, chain
/// closure, arc directions) is checked by certify::verify_factor.
struct OrientedCycle {
    std::vector<OrientedElement> elements;

    int length() const { return static_cast<int>(elements.size()); }

    friend bool operator==(const OrientedCycle&, const OrientedCycle&) = default;
};

/// Start vertex of each element in traversal order (no validation).
std::vector<int> cycle_vertices(const MixedGraph& g, const OrientedCycle& c);

/// True iff consecutive elements chain up and the last one returns to the
/// first vertex, using the stored direction flags.
bool cycle_chain_ok(const MixedGraph& g, const OrientedCycle& c);

Parity cycle_parity(const OrientedCycle& c);

struct CycleFactor {
    std::vector<OrientedCycle> cycles;

    friend bool operator==(const CycleFactor&, const CycleFactor&) = default;
};

/// (a, b) = (number of even cycles, number of odd cycles).
struct ParitySignature {
    int even_cycles = 0;
    int odd_cycles = 0;

    friend auto operator<=>(const ParitySignature&, const ParitySignature&) = default;
};

ParitySignature signature(const CycleFactor& f);

enum class ParityConstraint { Any, AllOdd, AllEven, ExistsOdd, ExistsEven };

bool satisfies(ParitySignature sig, ParityConstraint c);

const char* constraint_name(ParityConstraint c);
std::optional<ParityConstraint> parse_constraint(const std::string& name);

/// Sorted element ids used by the factor; two factors are considered equal
/// iff their keys are equal (insensitive to rotation, edge-cycle direction
/// and cycle order).
std::vector<ElementId> factor_key(const CycleFactor& f);

/// Rotates the cycle to start at its minimum vertex and, for all-edge cycles,
/// flips it to the lexicographically smaller element sequence.
OrientedCycle canonical_cycle(const MixedGraph& g, const OrientedCycle& c);

/// Canonicalizes every cycle and sorts cycles by their minimum vertex.
CycleFactor canonical_factor(const MixedGraph& g, const CycleFactor& f);

/// Builds an oriented cycle from an unordered element set if the set forms a
/// single simple mixed cycle (orienting edges greedily, arcs forced).
std::optional<OrientedCycle> cycle_from_elements(const MixedGraph& g,
                                                 const std::vector<ElementId>& elements);

} // namespace cyclefactor
