#include "cyclefactor/graph.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace cyclefactor {

const char* errc_name(Errc code) {
    switch (code) {
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::DanglingReference: return "DanglingReference";
    case Errc::NotBipartition: return "NotBipartition";
    case Errc::NotDirected: return "NotDirected";
    case Errc::NotUndirected: return "NotUndirected";
    case Errc::TooLarge: return "TooLarge";
    case Errc::MissingEndpoint: return "MissingEndpoint";
    case Errc::EndpointsNotDistinct: return "EndpointsNotDistinct";
    case Errc::NotAFactor: return "NotAFactor";
    case Errc::ParityViolated: return "ParityViolated";
    case Errc::NotCubic: return "NotCubic";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::TerminalNotVertex: return "TerminalNotVertex";
    case Errc::InfeasibleParameters: return "InfeasibleParameters";
    case Errc::UnknownReduction: return "UnknownReduction";
    case Errc::BadSolution: return "BadSolution";
    }
    return "Error";
}

std::string to_string(ElementId id) {
    return (id.kind == ElementKind::Edge ? "e" : "a") + std::to_string(id.index);
}

std::optional<ElementId> parse_element_id(const std::string& token) {
    if (token.size() < 2) return std::nullopt;
    ElementKind kind;
    if (token[0] == 'e') kind = ElementKind::Edge;
    else if (token[0] == 'a') kind = ElementKind::Arc;
    else return std::nullopt;
    int index = 0;
    auto [ptr, ec] = std::from_chars(token.data() + 1, token.data() + token.size(), index);
    if (ec != std::errc() || ptr != token.data() + token.size() || index < 0) return std::nullopt;
    return ElementId{kind, index};
}

MixedGraph MixedGraph::build(int n,
                             std::vector<std::pair<int, int>> edges,
                             std::vector<std::pair<int, int>> arcs) {
    if (n < 0) fail(Errc::VertexOutOfRange, "negative vertex count");
    MixedGraph g;
    g.n_ = n;
    auto check = [&](int v, const std::string& what) {
        if (v < 0 || v >= n) fail(Errc::VertexOutOfRange, what + " endpoint " + std::to_string(v));
    };
    for (std::size_t i = 0; i < edges.size(); ++i) {
        check(edges[i].first, "edge e" + std::to_string(i));
        check(edges[i].second, "edge e" + std::to_string(i));
        if (edges[i].first == edges[i].second)
            fail(Errc::SelfLoop, "edge e" + std::to_string(i) + " at vertex " + std::to_string(edges[i].first));
    }
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        check(arcs[i].first, "arc a" + std::to_string(i));
        check(arcs[i].second, "arc a" + std::to_string(i));
        if (arcs[i].first == arcs[i].second)
            fail(Errc::SelfLoop, "arc a" + std::to_string(i) + " at vertex " + std::to_string(arcs[i].first));
    }
    g.edges_ = std::move(edges);
    g.arcs_ = std::move(arcs);
    g.adjacency_.assign(n, {});
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [u, v] = g.edges_[i];
        g.adjacency_[u].push_back({edge_id(i), v, true, true});
        g.adjacency_[v].push_back({edge_id(i), u, true, true});
    }
    for (int i = 0; i < g.arc_count(); ++i) {
        auto [t, h] = g.arcs_[i];
        g.adjacency_[t].push_back({arc_id(i), h, true, false});
        g.adjacency_[h].push_back({arc_id(i), t, false, true});
    }
    // Edges come first in declaration order, then arcs; the pushes above
    // already produce that, but keep an explicit sort as the documented
    // guarantee.
    for (auto& list : g.adjacency_)
        std::stable_sort(list.begin(), list.end(),
                         [](const Incidence& a, const Incidence& b) { return a.id < b.id; });
    g.vertex_labels_.assign(n, "");
    g.edge_labels_.assign(g.edge_count(), "");
    g.arc_labels_.assign(g.arc_count(), "");
    return g;
}

bool MixedGraph::has_element(ElementId id) const {
    if (id.index < 0) return false;
    return id.kind == ElementKind::Edge ? id.index < edge_count() : id.index < arc_count();
}

Endpoints MixedGraph::endpoints(ElementId id) const {
    if (!has_element(id)) fail(Errc::DanglingReference, "no element " + to_string(id));
    const auto& p = id.kind == ElementKind::Edge ? edges_[id.index] : arcs_[id.index];
    return {p.first, p.second};
}

void MixedGraph::check_vertex(int v) const {
    if (v < 0 || v >= n_) fail(Errc::VertexOutOfRange, "vertex " + std::to_string(v));
}

const std::string& MixedGraph::vertex_label(int v) const {
    check_vertex(v);
    return vertex_labels_[v];
}

const std::string& MixedGraph::element_label(ElementId id) const {
    if (!has_element(id)) fail(Errc::DanglingReference, "no element " + to_string(id));
    return id.kind == ElementKind::Edge ? edge_labels_[id.index] : arc_labels_[id.index];
}

void MixedGraph::set_vertex_label(int v, std::string label) {
    check_vertex(v);
    vertex_labels_[v] = std::move(label);
}

void MixedGraph::set_element_label(ElementId id, std::string label) {
    if (!has_element(id)) fail(Errc::DanglingReference, "no element " + to_string(id));
    (id.kind == ElementKind::Edge ? edge_labels_ : arc_labels_)[id.index] = std::move(label);
}

bool MixedGraph::has_labels() const {
    auto any = [](const std::vector<std::string>& v) {
        return std::any_of(v.begin(), v.end(), [](const std::string& s) { return !s.empty(); });
    };
    return any(vertex_labels_) || any(edge_labels_) || any(arc_labels_);
}

std::vector<int> cycle_vertices(const MixedGraph& g, const OrientedCycle& c) {
    std::vector<int> vs;
    vs.reserve(c.elements.size());
    for (const auto& oe : c.elements) {
        Endpoints ep = g.endpoints(oe.id);
        vs.push_back(oe.forward ? ep.u : ep.v);
    }
    return vs;
}

bool cycle_chain_ok(const MixedGraph& g, const OrientedCycle& c) {
    const int k = c.length();
    if (k == 0) return false;
    for (int i = 0; i < k; ++i) {
        const auto& cur = c.elements[i];
        const auto& nxt = c.elements[(i + 1) % k];
        if (!g.has_element(cur.id) || !g.has_element(nxt.id)) return false;
        Endpoints ce = g.endpoints(cur.id);
        Endpoints ne = g.endpoints(nxt.id);
        int cur_end = cur.forward ? ce.v : ce.u;
        int nxt_start = nxt.forward ? ne.u : ne.v;
        if (cur_end != nxt_start) return false;
    }
    return true;
}

Parity cycle_parity(const OrientedCycle& c) {
    return c.length() % 2 == 0 ? Parity::Even : Parity::Odd;
}

ParitySignature signature(const CycleFactor& f) {
    ParitySignature sig;
    for (const auto& c : f.cycles)
        (cycle_parity(c) == Parity::Even ? sig.even_cycles : sig.odd_cycles)++;
    return sig;
}

bool satisfies(ParitySignature sig, ParityConstraint c) {
    switch (c) {
    case ParityConstraint::Any: return true;
    case ParityConstraint::AllOdd: return sig.even_cycles == 0;
    case ParityConstraint::AllEven: return sig.odd_cycles == 0;
    case ParityConstraint::ExistsOdd: return sig.odd_cycles >= 1;
    case ParityConstraint::ExistsEven: return sig.even_cycles >= 1;
    }
    return false;
}

const char* constraint_name(ParityConstraint c) {
    switch (c) {
    case ParityConstraint::Any: return "any";
    case ParityConstraint::AllOdd: return "all-odd";
    case ParityConstraint::AllEven: return "all-even";
    case ParityConstraint::ExistsOdd: return "exists-odd";
    case ParityConstraint::ExistsEven: return "exists-even";
    }
    return "any";
}

std::optional<ParityConstraint> parse_constraint(const std::string& name) {
    if (name == "any") return ParityConstraint::Any;
    if (name == "all-odd") return ParityConstraint::AllOdd;
    if (name == "all-even") return ParityConstraint::AllEven;
    if (name == "exists-odd") return ParityConstraint::ExistsOdd;
    if (name == "exists-even") return ParityConstraint::ExistsEven;
    return std::nullopt;
}

std::vector<ElementId> factor_key(const CycleFactor& f) {
    std::vector<ElementId> key;
    for (const auto& c : f.cycles)
        for (const auto& oe : c.elements) key.push_back(oe.id);
    std::sort(key.begin(), key.end());
    return key;
}

namespace {

std::vector<ElementId> element_sequence(const OrientedCycle& c) {
    std::vector<ElementId> seq;
    seq.reserve(c.elements.size());
    for (const auto& oe : c.elements) seq.push_back(oe.id);
    return seq;
}

OrientedCycle rotate_to(const OrientedCycle& c, int start) {
    OrientedCycle out;
    const int k = c.length();
    out.elements.reserve(k);
    for (int i = 0; i < k; ++i) out.elements.push_back(c.elements[(start + i) % k]);
    return out;
}

OrientedCycle reverse_cycle(const OrientedCycle& c) {
    // Traverses the same cyclic sequence in the opposite direction starting
    // from the same vertex: element order reverses and every flag flips.
    OrientedCycle out;
    const int k = c.length();
    out.elements.reserve(k);
    for (int i = k - 1; i >= 0; --i)
        out.elements.push_back({c.elements[i].id, !c.elements[i].forward});
    return out;
}

} // namespace

OrientedCycle canonical_cycle(const MixedGraph& g, const OrientedCycle& c) {
    if (c.elements.empty()) return c;
    std::vector<int> vs = cycle_vertices(g, c);
    int best = 0;
    for (int i = 1; i < static_cast<int>(vs.size()); ++i)
        if (vs[i] < vs[best]) best = i;
    OrientedCycle rotated = rotate_to(c, best);
    bool all_edges = std::all_of(c.elements.begin(), c.elements.end(),
                                 [](const OrientedElement& oe) { return oe.id.kind == ElementKind::Edge; });
    if (!all_edges) return rotated;
    OrientedCycle reversed = reverse_cycle(rotated);
    return element_sequence(reversed) < element_sequence(rotated) ? reversed : rotated;
}

CycleFactor canonical_factor(const MixedGraph& g, const CycleFactor& f) {
    CycleFactor out;
    out.cycles.reserve(f.cycles.size());
    for (const auto& c : f.cycles) out.cycles.push_back(canonical_cycle(g, c));
    std::sort(out.cycles.begin(), out.cycles.end(), [&](const OrientedCycle& a, const OrientedCycle& b) {
        std::vector<int> va = cycle_vertices(g, a), vb = cycle_vertices(g, b);
        int ma = *std::min_element(va.begin(), va.end());
        int mb = *std::min_element(vb.begin(), vb.end());
        if (ma != mb) return ma < mb;
        return element_sequence(a) < element_sequence(b);
    });
    return out;
}

std::optional<OrientedCycle> cycle_from_elements(const MixedGraph& g,
                                                 const std::vector<ElementId>& elements) {
    if (elements.size() < 2) return std::nullopt;
    std::map<int, std::vector<ElementId>> at_vertex;
    for (ElementId id : elements) {
        if (!g.has_element(id)) return std::nullopt;
        Endpoints ep = g.endpoints(id);
        at_vertex[ep.u].push_back(id);
        at_vertex[ep.v].push_back(id);
    }
    for (const auto& [v, ids] : at_vertex)
        if (ids.size() != 2) return std::nullopt;
    if (at_vertex.size() != elements.size()) return std::nullopt;

    auto walk = [&](ElementId first, bool first_forward) -> std::optional<OrientedCycle> {
        OrientedCycle cycle;
        const int start = first_forward ? g.endpoints(first).u : g.endpoints(first).v;
        ElementId cur = first;
        bool forward = first_forward;
        int at = start;
        for (std::size_t step = 0; step < elements.size(); ++step) {
            Endpoints ep = g.endpoints(cur);
            if (cur.kind == ElementKind::Arc && !forward) return std::nullopt;
            if ((forward ? ep.u : ep.v) != at) return std::nullopt;
            cycle.elements.push_back({cur, forward});
            at = forward ? ep.v : ep.u;
            if (step + 1 == elements.size()) break;
            const auto& pair = at_vertex.at(at);
            ElementId nxt = pair[0] == cur ? pair[1] : pair[0];
            if (nxt == cur) return std::nullopt;
            Endpoints np = g.endpoints(nxt);
            forward = np.u == at;
            if (np.u != at && np.v != at) return std::nullopt;
            cur = nxt;
        }
        if (at != start) return std::nullopt;
        return cycle;
    };

    ElementId first = *std::min_element(elements.begin(), elements.end());
    if (auto c = walk(first, true); c && cycle_chain_ok(g, *c)) return canonical_cycle(g, *c);
    if (auto c = walk(first, false); c && cycle_chain_ok(g, *c)) return canonical_cycle(g, *c);
    return std::nullopt;
}

} // namespace cyclefactor
