#include "cyclefactor/reductions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cyclefactor/certify.hpp"

namespace cyclefactor {
namespace reductions {

namespace {

std::string num(int k) { return std::to_string(k); }

void require_kind(const ProblemInstance& inst, ProblemKind kind, const std::string& what) {
    if (inst.kind != kind) fail(Errc::SyntaxError, "reduction expects " + what + " input");
}

void require_directed(const MixedGraph& g) {
    if (!g.is_directed()) fail(Errc::NotDirected, "source graph must be directed");
}

void label_defaults(MixedGraph& g, const MixedGraph* source_vertices) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!g.vertex_label(v).empty()) continue;
        if (source_vertices && v < source_vertices->vertex_count() &&
            !source_vertices->vertex_label(v).empty())
            g.set_vertex_label(v, source_vertices->vertex_label(v));
        else
            g.set_vertex_label(v, "v" + num(v));
    }
}

// Checks the factor against the target instance and sorts violations into
// the two mapper error codes.
void require_verified_factor(const ReductionOutput& out, const CycleFactor& f) {
    certify::CoverMode mode = out.target.has_terminal_set()
                                  ? certify::CoverMode::OnlyZ(out.target.z)
                                  : certify::CoverMode::All();
    auto violations = certify::verify_factor(out.target.graph, f, out.target_constraint, mode);
    if (violations.empty() && out.target.has_pairs()) {
        auto pv = certify::verify_p_respecting(out.target.graph, out.target.pairs, f);
        violations.insert(violations.end(), pv.begin(), pv.end());
    }
    if (violations.empty()) return;
    for (const auto& v : violations)
        if (v.kind == certify::ViolationKind::ParityViolated)
            fail(Errc::ParityViolated, v.render());
    fail(Errc::NotAFactor, violations.front().render());
}

std::set<ElementId> factor_elements(const CycleFactor& f) {
    std::set<ElementId> out;
    for (const auto& c : f.cycles)
        for (const auto& oe : c.elements) out.insert(oe.id);
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Hamiltonian (s,t)-path -> all-odd (1,1)-factor.
//
// Target layout for source (n, m):
//   vertices: 0..n-1 source, then x1/x2/x3 of arc k at n+3k, n+3k+1, n+3k+2
//   arcs: per source arc k=(u,v): 5k..5k+4 = u>x1, x1>x2, x2>x3, x3>x1, x3>v;
//         the return arc t>s is 5m.
// ---------------------------------------------------------------------------

ReductionOutput reduce_hampath_to_all_odd(const ProblemInstance& ham) {
    require_kind(ham, ProblemKind::HamPath, "a 'ham <s> <t>'");
    require_directed(ham.graph);
    const MixedGraph& h = ham.graph;
    const int n = h.vertex_count();
    const int m = h.arc_count();
    int s = ham.terminals.at(0), t = ham.terminals.at(1);
    if (s < 0 || s >= n || t < 0 || t >= n)
        fail(Errc::MissingEndpoint, "terminal outside the vertex range");
    if (s == t) fail(Errc::EndpointsNotDistinct, "s and t must differ");

    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(5 * m + 1);
    for (int k = 0; k < m; ++k) {
        auto [u, v] = h.arcs()[k];
        int x1 = n + 3 * k, x2 = x1 + 1, x3 = x1 + 2;
        arcs.emplace_back(u, x1);
        arcs.emplace_back(x1, x2);
        arcs.emplace_back(x2, x3);
        arcs.emplace_back(x3, x1);
        arcs.emplace_back(x3, v);
    }
    arcs.emplace_back(t, s);

    ReductionOutput out;
    out.reduction_id = "ham-allodd";
    out.source = ham;
    out.target_constraint = ParityConstraint::AllOdd;
    out.target.kind = ProblemKind::Graph;
    out.target.graph = MixedGraph::build(n + 3 * m, {}, std::move(arcs));
    MixedGraph& d = out.target.graph;
    for (int k = 0; k < m; ++k) {
        d.set_vertex_label(n + 3 * k, "x1@a" + num(k));
        d.set_vertex_label(n + 3 * k + 1, "x2@a" + num(k));
        d.set_vertex_label(n + 3 * k + 2, "x3@a" + num(k));
        d.set_element_label(arc_id(5 * k), "u-x1@a" + num(k));
        d.set_element_label(arc_id(5 * k + 1), "x1-x2@a" + num(k));
        d.set_element_label(arc_id(5 * k + 2), "x2-x3@a" + num(k));
        d.set_element_label(arc_id(5 * k + 3), "x3-x1@a" + num(k));
        d.set_element_label(arc_id(5 * k + 4), "x3-v@a" + num(k));
    }
    d.set_element_label(arc_id(5 * m), "ts");
    label_defaults(d, &h);
    return out;
}

CycleFactor map_hampath_to_all_odd_factor(const ReductionOutput& out, const ArcPath& path) {
    const MixedGraph& h = out.source.graph;
    int s = out.source.terminals.at(0), t = out.source.terminals.at(1);
    auto violations = certify::verify_hampath(h, s, t, path);
    if (!violations.empty()) fail(Errc::BadSolution, violations.front().render());

    const int m = h.arc_count();
    std::vector<bool> on_path(m, false);
    CycleFactor f;
    OrientedCycle big;
    for (ElementId id : path.arcs) {
        int k = id.index;
        on_path[k] = true;
        big.elements.push_back({arc_id(5 * k), true});
        big.elements.push_back({arc_id(5 * k + 1), true});
        big.elements.push_back({arc_id(5 * k + 2), true});
        big.elements.push_back({arc_id(5 * k + 4), true});
    }
    big.elements.push_back({arc_id(5 * m), true});
    f.cycles.push_back(big);
    for (int k = 0; k < m; ++k) {
        if (on_path[k]) continue;
        OrientedCycle tri;
        tri.elements = {{arc_id(5 * k + 1), true}, {arc_id(5 * k + 2), true}, {arc_id(5 * k + 3), true}};
        f.cycles.push_back(tri);
    }
    return canonical_factor(out.target.graph, f);
}

ArcPath map_all_odd_factor_to_hampath(const ReductionOutput& out, const CycleFactor& f) {
    require_verified_factor(out, f);
    const MixedGraph& h = out.source.graph;
    const int n = h.vertex_count();
    std::set<ElementId> used = factor_elements(f);

    // Arc a is on the path iff its gadget is in the pass-through state,
    // signalled by the entry arc u>x1.
    std::vector<int> successor(n, -1);
    for (int k = 0; k < h.arc_count(); ++k) {
        if (!used.count(arc_id(5 * k))) continue;
        auto [u, v] = h.arcs()[k];
        if (successor[u] != -1) fail(Errc::NotAFactor, "two path arcs leave vertex " + num(u));
        successor[u] = k;
    }
    ArcPath path;
    int at = out.source.terminals.at(0);
    for (int step = 0; step + 1 < n; ++step) {
        if (successor[at] == -1) fail(Errc::NotAFactor, "path stops early at vertex " + num(at));
        path.arcs.push_back(arc_id(successor[at]));
        at = h.arcs()[successor[at]].second;
    }
    auto violations = certify::verify_hampath(h, out.source.terminals.at(0),
                                              out.source.terminals.at(1), path);
    if (!violations.empty()) fail(Errc::NotAFactor, violations.front().render());
    return path;
}

// ---------------------------------------------------------------------------
// 3-edge-coloring -> all-even (1,1)-factor.
//
// Target layout: vertices 0..n-1 source, then w'/w'' of edge k at n+2k and
// n+2k+1. Arcs per edge k=(u,v): 6k..6k+5 = u>w', v>w', w''>u, w''>v, w'>w'',
// w''>w'. The u-to-v Hamiltonian path of the gadget is {6k, 6k+4, 6k+3}, the
// v-to-u one is {6k+1, 6k+4, 6k+2}, the internal 2-cycle {6k+4, 6k+5}.
// ---------------------------------------------------------------------------

ReductionOutput reduce_3edgecoloring_to_all_even(const ProblemInstance& col3) {
    require_kind(col3, ProblemKind::EdgeColoring, "a 'col3'");
    const MixedGraph& h = col3.graph;
    if (!h.is_undirected()) fail(Errc::NotUndirected, "source graph must be undirected");
    for (int v = 0; v < h.vertex_count(); ++v)
        if (h.degree(v) != 3)
            fail(Errc::NotCubic, "vertex " + num(v) + " has degree " + num(h.degree(v)));
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : h.edges()) {
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
            fail(Errc::NotCubic, "parallel edges are not allowed in a coloring instance");
    }

    const int n = h.vertex_count();
    const int m = h.edge_count();
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(6 * m);
    for (int k = 0; k < m; ++k) {
        auto [u, v] = h.edges()[k];
        int w1 = n + 2 * k, w2 = n + 2 * k + 1;
        arcs.emplace_back(u, w1);
        arcs.emplace_back(v, w1);
        arcs.emplace_back(w2, u);
        arcs.emplace_back(w2, v);
        arcs.emplace_back(w1, w2);
        arcs.emplace_back(w2, w1);
    }

    ReductionOutput out;
    out.reduction_id = "col3-alleven";
    out.source = col3;
    out.target_constraint = ParityConstraint::AllEven;
    out.target.kind = ProblemKind::Graph;
    out.target.graph = MixedGraph::build(n + 2 * m, {}, std::move(arcs));
    MixedGraph& d = out.target.graph;
    for (int k = 0; k < m; ++k) {
        d.set_vertex_label(n + 2 * k, "w1@e" + num(k));
        d.set_vertex_label(n + 2 * k + 1, "w2@e" + num(k));
        d.set_element_label(arc_id(6 * k), "u-w1@e" + num(k));
        d.set_element_label(arc_id(6 * k + 1), "v-w1@e" + num(k));
        d.set_element_label(arc_id(6 * k + 2), "w2-u@e" + num(k));
        d.set_element_label(arc_id(6 * k + 3), "w2-v@e" + num(k));
        d.set_element_label(arc_id(6 * k + 4), "w1-w2@e" + num(k));
        d.set_element_label(arc_id(6 * k + 5), "w2-w1@e" + num(k));
    }
    label_defaults(d, &h);
    return out;
}

CycleFactor map_coloring_to_all_even_factor(const ReductionOutput& out, const EdgeColoring& c) {
    const MixedGraph& h = out.source.graph;
    auto violations = certify::verify_coloring(h, c);
    if (!violations.empty()) fail(Errc::BadSolution, violations.front().render());

    // Colors 1 and 2 induce an even cycle cover of H; color 3 becomes the
    // internal 2-cycles.
    CycleFactor f;
    std::vector<bool> visited_edge(h.edge_count(), false);
    for (int start_edge = 0; start_edge < h.edge_count(); ++start_edge) {
        if (c.color[start_edge] == 3 || visited_edge[start_edge]) continue;
        OrientedCycle cycle;
        int edge = start_edge;
        int at = h.edges()[edge].first;
        do {
            visited_edge[edge] = true;
            auto [u, v] = h.edges()[edge];
            int to = at == u ? v : u;
            // Pass-through path from `at` to `to` in gadget `edge`.
            if (at == u) {
                cycle.elements.push_back({arc_id(6 * edge), true});
                cycle.elements.push_back({arc_id(6 * edge + 4), true});
                cycle.elements.push_back({arc_id(6 * edge + 3), true});
            } else {
                cycle.elements.push_back({arc_id(6 * edge + 1), true});
                cycle.elements.push_back({arc_id(6 * edge + 4), true});
                cycle.elements.push_back({arc_id(6 * edge + 2), true});
            }
            // Continue over the other non-color-3 edge at `to`.
            int next_edge = -1;
            for (const auto& inc : h.incident(to))
                if (inc.id.index != edge && c.color[inc.id.index] != 3) {
                    next_edge = inc.id.index;
                    break;
                }
            at = to;
            edge = next_edge;
        } while (edge != -1 && !visited_edge[edge]);
        f.cycles.push_back(cycle);
    }
    for (int k = 0; k < h.edge_count(); ++k) {
        if (c.color[k] != 3) continue;
        OrientedCycle two;
        two.elements = {{arc_id(6 * k + 4), true}, {arc_id(6 * k + 5), true}};
        f.cycles.push_back(two);
    }
    return canonical_factor(out.target.graph, f);
}

EdgeColoring map_all_even_factor_to_coloring(const ReductionOutput& out, const CycleFactor& f) {
    require_verified_factor(out, f);
    const MixedGraph& h = out.source.graph;
    std::set<ElementId> used = factor_elements(f);

    EdgeColoring coloring;
    coloring.color.assign(h.edge_count(), 0);
    std::vector<bool> matched(h.edge_count(), false);
    for (int k = 0; k < h.edge_count(); ++k)
        if (used.count(arc_id(6 * k + 5))) {
            coloring.color[k] = 3;
            matched[k] = true;
        }

    // The remaining edges form even cycles in H; 2-color each alternately.
    for (int start_edge = 0; start_edge < h.edge_count(); ++start_edge) {
        if (matched[start_edge] || coloring.color[start_edge] != 0) continue;
        int edge = start_edge;
        int at = h.edges()[edge].first;
        int next_color = 1;
        while (edge != -1 && coloring.color[edge] == 0) {
            coloring.color[edge] = next_color;
            next_color = 3 - next_color;
            auto [u, v] = h.edges()[edge];
            int to = at == u ? v : u;
            int next_edge = -1;
            for (const auto& inc : h.incident(to))
                if (inc.id.index != edge && !matched[inc.id.index]) {
                    next_edge = inc.id.index;
                    break;
                }
            at = to;
            edge = next_edge;
        }
    }
    auto violations = certify::verify_coloring(h, coloring);
    if (!violations.empty()) fail(Errc::NotAFactor, violations.front().render());
    return coloring;
}

// ---------------------------------------------------------------------------
// 2VDP -> exists-odd (1,1)-factor.
//
// Target layout: x1/x2 of source vertex v at 2v and 2v+1; y1 = 2n, y2 = 2n+1.
// Arcs: per vertex v the 2-cycle {2v: x1>x2, 2v+1: x2>x1}; per source arc
// k=(u,v) the connector 2n+k: x2(u)>x1(v); then 2n+m..2n+m+3 =
// x2(t1)>y1, y1>x1(s1), x2(t2)>y2, y2>x1(s2).
// ---------------------------------------------------------------------------

ReductionOutput reduce_2vdp_to_exists_odd(const ProblemInstance& vdp) {
    require_kind(vdp, ProblemKind::TwoVdp, "a 'vdp <s1> <t1> <s2> <t2>'");
    require_directed(vdp.graph);
    const MixedGraph& h = vdp.graph;
    const int n = h.vertex_count();
    const int m = h.arc_count();
    for (int terminal : vdp.terminals)
        if (terminal < 0 || terminal >= n)
            fail(Errc::VertexOutOfRange, "terminal " + num(terminal));
    {
        std::set<int> distinct(vdp.terminals.begin(), vdp.terminals.end());
        if (distinct.size() != 4) fail(Errc::EndpointsNotDistinct, "the four terminals must differ");
    }
    int s1 = vdp.terminals[0], t1 = vdp.terminals[1], s2 = vdp.terminals[2], t2 = vdp.terminals[3];

    auto x1 = [](int v) { return 2 * v; };
    auto x2 = [](int v) { return 2 * v + 1; };
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(2 * n + m + 4);
    for (int v = 0; v < n; ++v) {
        arcs.emplace_back(x1(v), x2(v));
        arcs.emplace_back(x2(v), x1(v));
    }
    for (int k = 0; k < m; ++k) arcs.emplace_back(x2(h.arcs()[k].first), x1(h.arcs()[k].second));
    int y1 = 2 * n, y2 = 2 * n + 1;
    arcs.emplace_back(x2(t1), y1);
    arcs.emplace_back(y1, x1(s1));
    arcs.emplace_back(x2(t2), y2);
    arcs.emplace_back(y2, x1(s2));

    ReductionOutput out;
    out.reduction_id = "vdp-existsodd";
    out.source = vdp;
    out.target_constraint = ParityConstraint::ExistsOdd;
    out.target.kind = ProblemKind::Graph;
    out.target.graph = MixedGraph::build(2 * n + 2, {}, std::move(arcs));
    MixedGraph& d = out.target.graph;
    for (int v = 0; v < n; ++v) {
        d.set_vertex_label(x1(v), "x1@v" + num(v));
        d.set_vertex_label(x2(v), "x2@v" + num(v));
        d.set_element_label(arc_id(2 * v), "x1-x2@v" + num(v));
        d.set_element_label(arc_id(2 * v + 1), "x2-x1@v" + num(v));
    }
    d.set_vertex_label(y1, "y1");
    d.set_vertex_label(y2, "y2");
    for (int k = 0; k < m; ++k) d.set_element_label(arc_id(2 * n + k), "conn@a" + num(k));
    d.set_element_label(arc_id(2 * n + m), "t1-y1");
    d.set_element_label(arc_id(2 * n + m + 1), "y1-s1");
    d.set_element_label(arc_id(2 * n + m + 2), "t2-y2");
    d.set_element_label(arc_id(2 * n + m + 3), "y2-s2");
    label_defaults(d, nullptr);
    return out;
}

CycleFactor map_vdp_to_exists_odd_factor(const ReductionOutput& out, const ArcPath& p1,
                                         const ArcPath& p2) {
    const MixedGraph& h = out.source.graph;
    const auto& ts = out.source.terminals;
    auto violations = certify::verify_vdp(h, ts[0], ts[1], ts[2], ts[3], p1, p2);
    if (!violations.empty()) fail(Errc::BadSolution, violations.front().render());

    const int n = h.vertex_count();
    const int m = h.arc_count();
    std::vector<bool> covered(n, false);
    CycleFactor f;
    for (int i = 0; i < 2; ++i) {
        const ArcPath& p = i == 0 ? p1 : p2;
        int s = ts[2 * i];
        OrientedCycle cycle;
        int at = s;
        covered[at] = true;
        cycle.elements.push_back({arc_id(2 * at), true}); // x1>x2 at s
        for (ElementId a : p.arcs) {
            cycle.elements.push_back({arc_id(2 * n + a.index), true}); // connector
            at = h.arcs()[a.index].second;
            covered[at] = true;
            cycle.elements.push_back({arc_id(2 * at), true});
        }
        cycle.elements.push_back({arc_id(2 * n + m + 2 * i), true});     // x2(t)>y
        cycle.elements.push_back({arc_id(2 * n + m + 2 * i + 1), true}); // y>x1(s)
        f.cycles.push_back(cycle);
    }
    for (int v = 0; v < n; ++v) {
        if (covered[v]) continue;
        OrientedCycle two;
        two.elements = {{arc_id(2 * v), true}, {arc_id(2 * v + 1), true}};
        f.cycles.push_back(two);
    }
    return canonical_factor(out.target.graph, f);
}

std::pair<ArcPath, ArcPath> map_exists_odd_factor_to_vdp(const ReductionOutput& out,
                                                         const CycleFactor& f) {
    require_verified_factor(out, f);
    const MixedGraph& h = out.source.graph;
    const int n = h.vertex_count();
    const int m = h.arc_count();

    std::pair<ArcPath, ArcPath> result;
    for (int i = 0; i < 2; ++i) {
        int y = 2 * n + i;
        const OrientedCycle* with_y = nullptr;
        for (const auto& c : f.cycles) {
            std::vector<int> vs = cycle_vertices(out.target.graph, c);
            if (std::find(vs.begin(), vs.end(), y) != vs.end()) {
                with_y = &c;
                break;
            }
        }
        if (!with_y) fail(Errc::NotAFactor, "no cycle covers y" + num(i + 1));
        // Connector arcs along the cycle, in traversal order starting after y.
        std::vector<int> vs = cycle_vertices(out.target.graph, *with_y);
        int offset = static_cast<int>(std::find(vs.begin(), vs.end(), y) - vs.begin());
        ArcPath& p = i == 0 ? result.first : result.second;
        for (int step = 0; step < with_y->length(); ++step) {
            ElementId id = with_y->elements[(offset + step) % with_y->length()].id;
            if (id.index >= 2 * n && id.index < 2 * n + m) p.arcs.push_back(arc_id(id.index - 2 * n));
        }
    }
    const auto& ts = out.source.terminals;
    auto violations =
        certify::verify_vdp(h, ts[0], ts[1], ts[2], ts[3], result.first, result.second);
    if (!violations.empty()) fail(Errc::NotAFactor, violations.front().render());
    return result;
}

// ---------------------------------------------------------------------------
// Even dicycle -> exists-even (1,1)-factor.
//
// Target layout: source vertex v at 6v, companions v1..v5 at 6v+1..6v+5.
// Source arc k keeps id k; the 8 gadget arcs of v are m+8v .. m+8v+7 =
// v>v1, v1>v2, v2>v, v3>v4, v4>v5, v5>v3, v2>v3, v5>v1.
// ---------------------------------------------------------------------------

ReductionOutput reduce_evendicycle_to_exists_even(const ProblemInstance& ec) {
    require_kind(ec, ProblemKind::EvenDicycle, "an 'evencyc'");
    require_directed(ec.graph);
    const MixedGraph& h = ec.graph;
    const int n = h.vertex_count();
    const int m = h.arc_count();

    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(m + 8 * n);
    for (auto [u, v] : h.arcs()) arcs.emplace_back(6 * u, 6 * v);
    for (int v = 0; v < n; ++v) {
        int base = 6 * v;
        arcs.emplace_back(base, base + 1);
        arcs.emplace_back(base + 1, base + 2);
        arcs.emplace_back(base + 2, base);
        arcs.emplace_back(base + 3, base + 4);
        arcs.emplace_back(base + 4, base + 5);
        arcs.emplace_back(base + 5, base + 3);
        arcs.emplace_back(base + 2, base + 3);
        arcs.emplace_back(base + 5, base + 1);
    }

    ReductionOutput out;
    out.reduction_id = "evencyc-existseven";
    out.source = ec;
    out.target_constraint = ParityConstraint::ExistsEven;
    out.target.kind = ProblemKind::Graph;
    out.target.graph = MixedGraph::build(6 * n, {}, std::move(arcs));
    MixedGraph& d = out.target.graph;
    static const char* slot[8] = {"v-v1", "v1-v2", "v2-v", "v3-v4", "v4-v5", "v5-v3", "v2-v3", "v5-v1"};
    for (int v = 0; v < n; ++v) {
        d.set_vertex_label(6 * v, "v" + num(v));
        for (int j = 1; j <= 5; ++j) d.set_vertex_label(6 * v + j, "v" + num(j) + "@v" + num(v));
        for (int j = 0; j < 8; ++j)
            d.set_element_label(arc_id(m + 8 * v + j), std::string(slot[j]) + "@v" + num(v));
    }
    for (int k = 0; k < m; ++k) d.set_element_label(arc_id(k), "@a" + num(k));
    label_defaults(d, nullptr);
    return out;
}

CycleFactor map_even_dicycle_to_factor(const ReductionOutput& out, const OrientedCycle& c) {
    const MixedGraph& h = out.source.graph;
    auto violations = certify::verify_factor(h, CycleFactor{{c}}, ParityConstraint::ExistsEven,
                                             certify::CoverMode::OnlyZ({}));
    if (!violations.empty()) fail(Errc::BadSolution, violations.front().render());

    const int m = h.arc_count();
    CycleFactor f;
    OrientedCycle lifted;
    for (const auto& oe : c.elements) lifted.elements.push_back({arc_id(oe.id.index), true});
    f.cycles.push_back(lifted);

    std::vector<bool> on_cycle(h.vertex_count(), false);
    for (int v : cycle_vertices(h, c)) on_cycle[v] = true;
    for (int v = 0; v < h.vertex_count(); ++v) {
        int base = m + 8 * v;
        if (on_cycle[v]) {
            OrientedCycle five;
            five.elements = {{arc_id(base + 1), true},
                             {arc_id(base + 6), true},
                             {arc_id(base + 3), true},
                             {arc_id(base + 4), true},
                             {arc_id(base + 7), true}};
            f.cycles.push_back(five);
        } else {
            OrientedCycle tri1, tri2;
            tri1.elements = {{arc_id(base), true}, {arc_id(base + 1), true}, {arc_id(base + 2), true}};
            tri2.elements = {{arc_id(base + 3), true}, {arc_id(base + 4), true}, {arc_id(base + 5), true}};
            f.cycles.push_back(tri1);
            f.cycles.push_back(tri2);
        }
    }
    return canonical_factor(out.target.graph, f);
}

OrientedCycle map_factor_to_even_dicycle(const ReductionOutput& out, const CycleFactor& f) {
    require_verified_factor(out, f);
    const int m = out.source.graph.arc_count();
    for (const auto& c : f.cycles) {
        if (cycle_parity(c) != Parity::Even) continue;
        OrientedCycle source_cycle;
        for (const auto& oe : c.elements) {
            if (oe.id.index >= m)
                fail(Errc::NotAFactor, "even cycle uses gadget arc " + to_string(oe.id));
            source_cycle.elements.push_back({arc_id(oe.id.index), true});
        }
        return canonical_cycle(out.source.graph, source_cycle);
    }
    fail(Errc::ParityViolated, "factor has no even cycle");
}

// ---------------------------------------------------------------------------
// Parity-preserving lift of a digraph to an undirected graph.
//
// Target layout: a/b/c of source vertex v at 3v, 3v+1, 3v+2. Edges: per
// vertex v, 2v = a-b and 2v+1 = b-c; per source arc k=(u,v), 2n+k = c(u)-a(v).
// ---------------------------------------------------------------------------

ReductionOutput lift_directed_to_undirected(const ProblemInstance& d) {
    require_kind(d, ProblemKind::Graph, "a plain directed graph");
    require_directed(d.graph);
    const MixedGraph& h = d.graph;
    const int n = h.vertex_count();
    const int m = h.arc_count();

    std::vector<std::pair<int, int>> edges;
    edges.reserve(2 * n + m);
    for (int v = 0; v < n; ++v) {
        edges.emplace_back(3 * v, 3 * v + 1);
        edges.emplace_back(3 * v + 1, 3 * v + 2);
    }
    for (auto [u, v] : h.arcs()) edges.emplace_back(3 * u + 2, 3 * v);

    ReductionOutput out;
    out.reduction_id = "lift-undirected";
    out.source = d;
    out.target_constraint = ParityConstraint::Any;
    out.target.kind = ProblemKind::Graph;
    out.target.graph = MixedGraph::build(3 * n, std::move(edges), {});
    MixedGraph& g = out.target.graph;
    for (int v = 0; v < n; ++v) {
        g.set_vertex_label(3 * v, "a@v" + num(v));
        g.set_vertex_label(3 * v + 1, "b@v" + num(v));
        g.set_vertex_label(3 * v + 2, "c@v" + num(v));
        g.set_element_label(edge_id(2 * v), "a-b@v" + num(v));
        g.set_element_label(edge_id(2 * v + 1), "b-c@v" + num(v));
    }
    for (int k = 0; k < m; ++k) g.set_element_label(edge_id(2 * n + k), "@a" + num(k));
    label_defaults(g, nullptr);
    return out;
}

CycleFactor lift_factor(const ReductionOutput& out, const CycleFactor& f) {
    const MixedGraph& h = out.source.graph;
    auto violations = certify::verify_factor(h, f, ParityConstraint::Any, certify::CoverMode::All());
    if (!violations.empty()) fail(Errc::BadSolution, violations.front().render());

    const int n = h.vertex_count();
    CycleFactor lifted;
    for (const auto& c : f.cycles) {
        OrientedCycle cycle;
        std::vector<int> vs = cycle_vertices(h, c);
        for (int i = 0; i < c.length(); ++i) {
            int v = vs[i];
            cycle.elements.push_back({edge_id(2 * v), true});     // a-b
            cycle.elements.push_back({edge_id(2 * v + 1), true}); // b-c
            cycle.elements.push_back({edge_id(2 * n + c.elements[i].id.index), true});
        }
        lifted.cycles.push_back(cycle);
    }
    return canonical_factor(out.target.graph, lifted);
}

CycleFactor project_factor(const ReductionOutput& out, const CycleFactor& f) {
    require_verified_factor(out, f);
    const MixedGraph& h = out.source.graph;
    const int n = h.vertex_count();
    CycleFactor projected;
    for (const auto& c : f.cycles) {
        std::vector<ElementId> arcs;
        for (const auto& oe : c.elements)
            if (oe.id.index >= 2 * n) arcs.push_back(arc_id(oe.id.index - 2 * n));
        if (arcs.empty()) fail(Errc::NotAFactor, "target cycle contains no arc edge");
        auto cycle = cycle_from_elements(h, arcs);
        if (!cycle) fail(Errc::NotAFactor, "projected arcs do not form a dicycle");
        projected.cycles.push_back(*cycle);
    }
    return canonical_factor(h, projected);
}

// ---------------------------------------------------------------------------
// 3DM -> PRCF.
//
// Target layout: x_i at i, y_i at n+i, z_i at 2n+i. Tuple j = (x,y,z) yields
// the triangle edges 3j = xy, 3j+1 = yz, 3j+2 = zx (parallel edges allowed).
// P holds, per pair of distinct tuples sharing an element, the four pairs of
// edges meeting at the shared vertex, deduplicated.
// ---------------------------------------------------------------------------

ReductionOutput reduce_3dm_to_prcf(const ProblemInstance& dm) {
    require_kind(dm, ProblemKind::ThreeDm, "a '3dm <n>'");
    const int n = dm.dm_size;
    std::vector<std::array<int, 3>> tuples;
    {
        std::set<std::array<int, 3>> seen;
        for (const auto& t : dm.tuples) {
            for (int entry : t)
                if (entry < 0 || entry >= n)
                    fail(Errc::IndexOutOfRange, "tuple entry " + num(entry) + " outside [0," + num(n) + ")");
            if (seen.insert(t).second) tuples.push_back(t);
        }
    }

    std::vector<std::pair<int, int>> edges;
    edges.reserve(3 * tuples.size());
    for (const auto& t : tuples) {
        edges.emplace_back(t[0], n + t[1]);
        edges.emplace_back(n + t[1], 2 * n + t[2]);
        edges.emplace_back(2 * n + t[2], t[0]);
    }

    // Edges of tuple j at its x / y / z corner.
    auto corner_edges = [&](int j, int side) -> std::array<ElementId, 2> {
        if (side == 0) return {edge_id(3 * j), edge_id(3 * j + 2)};     // at x: xy, zx
        if (side == 1) return {edge_id(3 * j), edge_id(3 * j + 1)};     // at y: xy, yz
        return {edge_id(3 * j + 1), edge_id(3 * j + 2)};                // at z: yz, zx
    };
    std::set<std::pair<ElementId, ElementId>> pair_set;
    for (std::size_t j1 = 0; j1 < tuples.size(); ++j1)
        for (std::size_t j2 = j1 + 1; j2 < tuples.size(); ++j2)
            for (int side = 0; side < 3; ++side) {
                if (tuples[j1][side] != tuples[j2][side]) continue;
                for (ElementId e1 : corner_edges(static_cast<int>(j1), side))
                    for (ElementId e2 : corner_edges(static_cast<int>(j2), side))
                        pair_set.insert({std::min(e1, e2), std::max(e1, e2)});
            }

    ReductionOutput out;
    out.reduction_id = "3dm-prcf";
    out.source = dm;
    out.source.tuples = tuples;
    out.target_constraint = ParityConstraint::Any;
    out.target.kind = ProblemKind::Graph;
    out.target.graph = MixedGraph::build(3 * n, std::move(edges), {});
    out.target.pairs.assign(pair_set.begin(), pair_set.end());
    MixedGraph& g = out.target.graph;
    for (int i = 0; i < n; ++i) {
        g.set_vertex_label(i, "x" + num(i));
        g.set_vertex_label(n + i, "y" + num(i));
        g.set_vertex_label(2 * n + i, "z" + num(i));
    }
    for (std::size_t j = 0; j < tuples.size(); ++j) {
        g.set_element_label(edge_id(3 * static_cast<int>(j)), "xy@t" + num(static_cast<int>(j)));
        g.set_element_label(edge_id(3 * static_cast<int>(j) + 1), "yz@t" + num(static_cast<int>(j)));
        g.set_element_label(edge_id(3 * static_cast<int>(j) + 2), "zx@t" + num(static_cast<int>(j)));
    }
    return out;
}

CycleFactor map_3dm_matching_to_prcf_factor(const ReductionOutput& out, const DmMatching& m) {
    auto violations = certify::verify_3dm(out.source.dm_size, out.source.tuples, m);
    if (!violations.empty()) fail(Errc::BadSolution, violations.front().render());
    CycleFactor f;
    for (int j : m.tuple_indexes) {
        OrientedCycle tri;
        tri.elements = {{edge_id(3 * j), true}, {edge_id(3 * j + 1), true}, {edge_id(3 * j + 2), true}};
        f.cycles.push_back(tri);
    }
    return canonical_factor(out.target.graph, f);
}

DmMatching map_prcf_factor_to_3dm_matching(const ReductionOutput& out, const CycleFactor& f) {
    require_verified_factor(out, f);
    DmMatching m;
    for (const auto& c : f.cycles) {
        if (c.length() != 3) fail(Errc::NotAFactor, "cycle is not a tuple triangle");
        int j = c.elements[0].id.index / 3;
        for (const auto& oe : c.elements)
            if (oe.id.kind != ElementKind::Edge || oe.id.index / 3 != j)
                fail(Errc::NotAFactor, "cycle mixes edges of different tuples");
        m.tuple_indexes.push_back(j);
    }
    std::sort(m.tuple_indexes.begin(), m.tuple_indexes.end());
    auto violations = certify::verify_3dm(out.source.dm_size, out.source.tuples, m);
    if (!violations.empty()) fail(Errc::NotAFactor, violations.front().render());
    return m;
}

// ---------------------------------------------------------------------------
// PRCF -> SMCF.
//
// Target layout for source (n vertices, m edges, pairs P normalized (a<b)):
//   vertices: 0..n-1 source; w(e,f) at n + e*m + f for all ordered (e,f);
//             z(a,b) at n + m^2 + 2p and z(b,a) at n + m^2 + 2p + 1 for the
//             p-th pair {a,b}.
//   edges: per source edge e = (vi,vj) the subdivided path
//          e*(m+1) .. e*(m+1)+m over vi, w(e,e0), ..., w(e,e(m-1)), vj;
//          then the pair edge m*(m+1)+p = z(a,b)-z(b,a).
//   arcs: per pair p the four arcs 4p..4p+3 =
//         w(a,b)>z(a,b), z(b,a)>w(a,b), w(b,a)>z(b,a), z(a,b)>w(b,a).
//   Z = all z vertices.
// ---------------------------------------------------------------------------

namespace {

struct SmcfLayout {
    int n, m;
    int w(int e, int f) const { return n + e * m + f; }
    int z_first(int p) const { return n + m * m + 2 * p; }  // z(a,b)
    int z_second(int p) const { return n + m * m + 2 * p + 1; } // z(b,a)
    int path_edge(int e, int k) const { return e * (m + 1) + k; } // k in [0, m]
    int pair_edge(int p) const { return m * (m + 1) + p; }
};

} // namespace

ReductionOutput reduce_prcf_to_smcf(const ProblemInstance& prcf) {
    require_kind(prcf, ProblemKind::Graph, "a graph with 'p' pair lines");
    const MixedGraph& h = prcf.graph;
    if (!h.is_undirected()) fail(Errc::NotUndirected, "PRCF instances are undirected");
    const int n = h.vertex_count();
    const int m = h.edge_count();

    std::vector<std::pair<ElementId, ElementId>> pairs = prcf.pairs;
    for (auto& [a, b] : pairs) {
        if (!h.has_element(a) || a.kind != ElementKind::Edge)
            fail(Errc::DanglingReference, "pair references " + to_string(a));
        if (!h.has_element(b) || b.kind != ElementKind::Edge)
            fail(Errc::DanglingReference, "pair references " + to_string(b));
        if (a == b) fail(Errc::DanglingReference, "pair uses " + to_string(a) + " twice");
        if (b < a) std::swap(a, b);
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    const int np = static_cast<int>(pairs.size());

    SmcfLayout lay{n, m};
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m * (m + 1) + np);
    for (int e = 0; e < m; ++e) {
        auto [vi, vj] = h.edges()[e];
        edges.emplace_back(vi, lay.w(e, 0));
        for (int k = 0; k + 1 < m; ++k) edges.emplace_back(lay.w(e, k), lay.w(e, k + 1));
        edges.emplace_back(lay.w(e, m - 1), vj);
    }
    for (int p = 0; p < np; ++p) edges.emplace_back(lay.z_first(p), lay.z_second(p));

    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(4 * np);
    for (int p = 0; p < np; ++p) {
        int a = pairs[p].first.index, b = pairs[p].second.index;
        arcs.emplace_back(lay.w(a, b), lay.z_first(p));
        arcs.emplace_back(lay.z_second(p), lay.w(a, b));
        arcs.emplace_back(lay.w(b, a), lay.z_second(p));
        arcs.emplace_back(lay.z_first(p), lay.w(b, a));
    }

    ReductionOutput out;
    out.reduction_id = "prcf-smcf";
    out.source = prcf;
    out.source.pairs = pairs;
    out.target_constraint = ParityConstraint::Any;
    out.target.kind = ProblemKind::Graph;
    out.target.graph = MixedGraph::build(n + m * m + 2 * np, std::move(edges), std::move(arcs));
    // The terminal set holds the source vertices as well as the z vertices:
    // covering the source vertices is what forces the subdivided paths to
    // encode a 2-factor of H. (With the z vertices alone, the pair gadget's
    // own 3-cycles would satisfy any instance.)
    for (int v = 0; v < n; ++v) out.target.z.push_back(v);
    for (int p = 0; p < np; ++p) {
        out.target.z.push_back(lay.z_first(p));
        out.target.z.push_back(lay.z_second(p));
    }
    std::sort(out.target.z.begin(), out.target.z.end());

    MixedGraph& g = out.target.graph;
    for (int e = 0; e < m; ++e)
        for (int f = 0; f < m; ++f)
            g.set_vertex_label(lay.w(e, f), "w(e" + num(e) + ",e" + num(f) + ")");
    for (int p = 0; p < np; ++p) {
        int a = pairs[p].first.index, b = pairs[p].second.index;
        g.set_vertex_label(lay.z_first(p), "z(e" + num(a) + ",e" + num(b) + ")");
        g.set_vertex_label(lay.z_second(p), "z(e" + num(b) + ",e" + num(a) + ")");
        g.set_element_label(edge_id(lay.pair_edge(p)), "zz@p" + num(p));
        g.set_element_label(arc_id(4 * p), "w>z@p" + num(p));
        g.set_element_label(arc_id(4 * p + 1), "z'>w@p" + num(p));
        g.set_element_label(arc_id(4 * p + 2), "w'>z'@p" + num(p));
        g.set_element_label(arc_id(4 * p + 3), "z>w'@p" + num(p));
    }
    for (int e = 0; e < m; ++e)
        for (int k = 0; k <= m; ++k)
            g.set_element_label(edge_id(lay.path_edge(e, k)), "seg" + num(k) + "@e" + num(e));
    label_defaults(g, &h);
    return out;
}

CycleFactor map_prcf_factor_to_smcf_factor(const ReductionOutput& out, const CycleFactor& f) {
    const MixedGraph& h = out.source.graph;
    auto violations = certify::verify_p_respecting(h, out.source.pairs, f);
    if (!violations.empty()) fail(Errc::BadSolution, violations.front().render());

    SmcfLayout lay{h.vertex_count(), h.edge_count()};
    std::set<ElementId> chosen = factor_elements(f);

    CycleFactor target;
    for (const auto& c : f.cycles) {
        OrientedCycle cycle;
        for (const auto& oe : c.elements) {
            int e = oe.id.index;
            // The subdivided path of e, in the traversal direction.
            if (oe.forward) {
                for (int k = 0; k <= lay.m; ++k) cycle.elements.push_back({edge_id(lay.path_edge(e, k)), true});
            } else {
                for (int k = lay.m; k >= 0; --k)
                    cycle.elements.push_back({edge_id(lay.path_edge(e, k)), false});
            }
        }
        target.cycles.push_back(cycle);
    }
    for (std::size_t p = 0; p < out.source.pairs.size(); ++p) {
        auto [a, b] = out.source.pairs[p];
        int pi = static_cast<int>(p);
        OrientedCycle tri;
        if (!chosen.count(a)) {
            // 3-cycle through w(a,b): w>z(a,b), z(a,b)-z(b,a), z(b,a)>w.
            tri.elements = {{arc_id(4 * pi), true},
                            {edge_id(lay.pair_edge(pi)), true},
                            {arc_id(4 * pi + 1), true}};
        } else {
            // b is free: 3-cycle through w(b,a) the other way around.
            tri.elements = {{arc_id(4 * pi + 2), true},
                            {edge_id(lay.pair_edge(pi)), false},
                            {arc_id(4 * pi + 3), true}};
        }
        target.cycles.push_back(tri);
    }
    return canonical_factor(out.target.graph, target);
}

CycleFactor map_smcf_factor_to_prcf_factor(const ReductionOutput& out, const CycleFactor& f) {
    require_verified_factor(out, f);
    const MixedGraph& h = out.source.graph;
    SmcfLayout lay{h.vertex_count(), h.edge_count()};
    std::set<ElementId> used = factor_elements(f);

    CycleFactor source;
    for (const auto& c : f.cycles) {
        std::vector<ElementId> edges;
        for (const auto& oe : c.elements) {
            if (oe.id.kind != ElementKind::Edge) continue;
            int idx = oe.id.index;
            if (idx >= lay.m * (lay.m + 1)) continue; // pair edge, gadget cycle
            if (idx % (lay.m + 1) == 0) edges.push_back(edge_id(idx / (lay.m + 1)));
        }
        if (edges.empty()) continue; // z-gadget 3-cycle
        auto cycle = cycle_from_elements(h, edges);
        if (!cycle) fail(Errc::NotAFactor, "subdivided paths do not close in the source");
        source.cycles.push_back(*cycle);
    }
    auto violations = certify::verify_p_respecting(h, out.source.pairs, source);
    if (!violations.empty()) fail(Errc::NotAFactor, violations.front().render());
    return canonical_factor(h, source);
}

// ---------------------------------------------------------------------------
// SMCF -> MCF.
//
// Target layout: source vertices and elements keep their ids. The j-th
// non-terminal vertex v (ascending) gets u1/u2/u3 at n+3j..n+3j+2 and the
// five edges m+5j..m+5j+4 = v-u1, u1-u2, u2-u3, u3-u1, u3-v.
// ---------------------------------------------------------------------------

ReductionOutput reduce_smcf_to_mcf(const ProblemInstance& smcf) {
    require_kind(smcf, ProblemKind::Graph, "a graph with 'z' terminal lines");
    const MixedGraph& h = smcf.graph;
    const int n = h.vertex_count();
    const int m = h.edge_count();
    std::vector<bool> in_z(n, false);
    for (int v : smcf.z) {
        if (v < 0 || v >= n) fail(Errc::TerminalNotVertex, "terminal " + num(v));
        in_z[v] = true;
    }

    std::vector<int> gadget_of(n, -1);
    std::vector<int> gadget_vertex;
    for (int v = 0; v < n; ++v)
        if (!in_z[v]) {
            gadget_of[v] = static_cast<int>(gadget_vertex.size());
            gadget_vertex.push_back(v);
        }
    const int gadgets = static_cast<int>(gadget_vertex.size());

    std::vector<std::pair<int, int>> edges = h.edges();
    edges.reserve(m + 5 * gadgets);
    for (int j = 0; j < gadgets; ++j) {
        int v = gadget_vertex[j];
        int u1 = n + 3 * j, u2 = u1 + 1, u3 = u1 + 2;
        edges.emplace_back(v, u1);
        edges.emplace_back(u1, u2);
        edges.emplace_back(u2, u3);
        edges.emplace_back(u3, u1);
        edges.emplace_back(u3, v);
    }

    ReductionOutput out;
    out.reduction_id = "smcf-mcf";
    out.source = smcf;
    out.target_constraint = ParityConstraint::Any;
    out.target.kind = ProblemKind::Graph;
    out.target.graph = MixedGraph::build(n + 3 * gadgets, std::move(edges), h.arcs());
    MixedGraph& g = out.target.graph;
    for (int j = 0; j < gadgets; ++j) {
        int v = gadget_vertex[j];
        for (int i = 0; i < 3; ++i) g.set_vertex_label(n + 3 * j + i, "u" + num(i + 1) + "@v" + num(v));
        static const char* slot[5] = {"v-u1", "u1-u2", "u2-u3", "u3-u1", "u3-v"};
        for (int i = 0; i < 5; ++i)
            g.set_element_label(edge_id(m + 5 * j + i), std::string(slot[i]) + "@v" + num(v));
    }
    for (int k = 0; k < m; ++k) g.set_element_label(edge_id(k), "@e" + num(k));
    for (int k = 0; k < h.arc_count(); ++k) g.set_element_label(arc_id(k), "@a" + num(k));
    label_defaults(g, &h);
    return out;
}

CycleFactor map_smcf_factor_to_mcf_factor(const ReductionOutput& out, const CycleFactor& f) {
    const MixedGraph& h = out.source.graph;
    auto violations =
        certify::verify_factor(h, f, ParityConstraint::Any, certify::CoverMode::OnlyZ(out.source.z));
    if (!violations.empty()) fail(Errc::BadSolution, violations.front().render());

    const int n = h.vertex_count();
    const int m = h.edge_count();
    std::vector<bool> covered(n, false);
    for (const auto& c : f.cycles)
        for (int v : cycle_vertices(h, c)) covered[v] = true;

    CycleFactor target = f;
    std::vector<bool> in_z(n, false);
    for (int v : out.source.z) in_z[v] = true;
    int j = 0;
    for (int v = 0; v < n; ++v) {
        if (in_z[v]) continue;
        int base = m + 5 * j;
        OrientedCycle cycle;
        if (covered[v]) {
            // u1 > u2 > u3 > u1
            cycle.elements = {{edge_id(base + 1), true}, {edge_id(base + 2), true}, {edge_id(base + 3), true}};
        } else {
            // v > u1 > u2 > u3 > v
            cycle.elements = {{edge_id(base), true},
                              {edge_id(base + 1), true},
                              {edge_id(base + 2), true},
                              {edge_id(base + 4), true}};
        }
        target.cycles.push_back(cycle);
        ++j;
    }
    return canonical_factor(out.target.graph, target);
}

CycleFactor map_mcf_factor_to_smcf_factor(const ReductionOutput& out, const CycleFactor& f) {
    require_verified_factor(out, f);
    const MixedGraph& h = out.source.graph;
    const int m = h.edge_count();
    const int a = h.arc_count();

    CycleFactor source;
    for (const auto& c : f.cycles) {
        bool in_source = true;
        for (const auto& oe : c.elements) {
            if ((oe.id.kind == ElementKind::Edge && oe.id.index >= m) ||
                (oe.id.kind == ElementKind::Arc && oe.id.index >= a)) {
                in_source = false;
                break;
            }
        }
        if (in_source) source.cycles.push_back(c);
    }
    auto violations = certify::verify_factor(h, source, ParityConstraint::Any,
                                             certify::CoverMode::OnlyZ(out.source.z));
    if (!violations.empty()) fail(Errc::NotAFactor, violations.front().render());
    return canonical_factor(h, source);
}

// ---------------------------------------------------------------------------
// MCF -> exists-even MCF: add a disjoint directed 2-cycle on s, t.
// ---------------------------------------------------------------------------

ReductionOutput reduce_mcf_to_exists_even(const ProblemInstance& mcf) {
    require_kind(mcf, ProblemKind::Graph, "a plain mixed graph");
    const MixedGraph& h = mcf.graph;
    const int n = h.vertex_count();
    std::vector<std::pair<int, int>> arcs = h.arcs();
    arcs.emplace_back(n, n + 1);
    arcs.emplace_back(n + 1, n);

    ReductionOutput out;
    out.reduction_id = "mcf-existseven";
    out.source = mcf;
    out.target_constraint = ParityConstraint::ExistsEven;
    out.target.kind = ProblemKind::Graph;
    out.target.graph = MixedGraph::build(n + 2, h.edges(), std::move(arcs));
    MixedGraph& g = out.target.graph;
    g.set_vertex_label(n, "s");
    g.set_vertex_label(n + 1, "t");
    for (int k = 0; k < h.edge_count(); ++k) g.set_element_label(edge_id(k), "@e" + num(k));
    for (int k = 0; k < h.arc_count(); ++k) g.set_element_label(arc_id(k), "@a" + num(k));
    g.set_element_label(arc_id(h.arc_count()), "st");
    g.set_element_label(arc_id(h.arc_count() + 1), "ts");
    label_defaults(g, &h);
    return out;
}

CycleFactor map_mcf_factor_to_exists_even_factor(const ReductionOutput& out, const CycleFactor& f) {
    const MixedGraph& h = out.source.graph;
    auto violations = certify::verify_factor(h, f, ParityConstraint::Any, certify::CoverMode::All());
    if (!violations.empty()) fail(Errc::BadSolution, violations.front().render());
    CycleFactor target = f;
    OrientedCycle two;
    two.elements = {{arc_id(h.arc_count()), true}, {arc_id(h.arc_count() + 1), true}};
    target.cycles.push_back(two);
    return canonical_factor(out.target.graph, target);
}

CycleFactor map_exists_even_factor_to_mcf_factor(const ReductionOutput& out, const CycleFactor& f) {
    require_verified_factor(out, f);
    const MixedGraph& h = out.source.graph;
    CycleFactor source;
    for (const auto& c : f.cycles) {
        bool gadget = false;
        for (const auto& oe : c.elements)
            if (oe.id.kind == ElementKind::Arc && oe.id.index >= h.arc_count()) gadget = true;
        if (!gadget) source.cycles.push_back(c);
    }
    auto violations =
        certify::verify_factor(h, source, ParityConstraint::Any, certify::CoverMode::All());
    if (!violations.empty()) fail(Errc::NotAFactor, violations.front().render());
    return canonical_factor(h, source);
}

// ---------------------------------------------------------------------------
// Dispatch by id.
// ---------------------------------------------------------------------------

const std::vector<std::string>& reduction_ids() {
    static const std::vector<std::string> ids = {
        "ham-allodd",   "col3-alleven", "vdp-existsodd", "evencyc-existseven", "lift-undirected",
        "3dm-prcf",     "prcf-smcf",    "smcf-mcf",      "mcf-existseven",
    };
    return ids;
}

bool is_reduction_id(const std::string& id) {
    const auto& ids = reduction_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

ReductionOutput reduce_by_id(const std::string& id, const ProblemInstance& source) {
    if (id == "ham-allodd") return reduce_hampath_to_all_odd(source);
    if (id == "col3-alleven") return reduce_3edgecoloring_to_all_even(source);
    if (id == "vdp-existsodd") return reduce_2vdp_to_exists_odd(source);
    if (id == "evencyc-existseven") return reduce_evendicycle_to_exists_even(source);
    if (id == "lift-undirected") return lift_directed_to_undirected(source);
    if (id == "3dm-prcf") return reduce_3dm_to_prcf(source);
    if (id == "prcf-smcf") return reduce_prcf_to_smcf(source);
    if (id == "smcf-mcf") return reduce_smcf_to_mcf(source);
    if (id == "mcf-existseven") return reduce_mcf_to_exists_even(source);
    fail(Errc::UnknownReduction, "'" + id + "'");
}

std::string map_back_by_id(const std::string& id, const ReductionOutput& out, const CycleFactor& f) {
    if (id == "ham-allodd") return serialize_path(map_all_odd_factor_to_hampath(out, f));
    if (id == "col3-alleven") return serialize_coloring(map_all_even_factor_to_coloring(out, f));
    if (id == "vdp-existsodd") {
        auto [p1, p2] = map_exists_odd_factor_to_vdp(out, f);
        return serialize_vdp(p1, p2);
    }
    if (id == "evencyc-existseven")
        return serialize_factor(CycleFactor{{map_factor_to_even_dicycle(out, f)}});
    if (id == "lift-undirected") return serialize_factor(project_factor(out, f));
    if (id == "3dm-prcf")
        return serialize_dm_matching(map_prcf_factor_to_3dm_matching(out, f), out.source);
    if (id == "prcf-smcf") return serialize_factor(map_smcf_factor_to_prcf_factor(out, f));
    if (id == "smcf-mcf") return serialize_factor(map_mcf_factor_to_smcf_factor(out, f));
    if (id == "mcf-existseven") return serialize_factor(map_exists_even_factor_to_mcf_factor(out, f));
    fail(Errc::UnknownReduction, "'" + id + "'");
}

} // namespace reductions
} // namespace cyclefactor
