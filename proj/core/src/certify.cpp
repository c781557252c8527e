#include "cyclefactor/certify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cyclefactor {
namespace certify {

const char* violation_name(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::NotCovering: return "NotCovering";
    case ViolationKind::NotDisjoint: return "NotDisjoint";
    case ViolationKind::BadCycle: return "BadCycle";
    case ViolationKind::OrientationInconsistent: return "OrientationInconsistent";
    case ViolationKind::ParityViolated: return "ParityViolated";
    case ViolationKind::PairViolated: return "PairViolated";
    case ViolationKind::TerminalUncovered: return "TerminalUncovered";
    case ViolationKind::NotAPath: return "NotAPath";
    case ViolationKind::NotAColoring: return "NotAColoring";
    case ViolationKind::NotAMatching: return "NotAMatching";
    }
    return "Violation";
}

std::string Violation::render() const {
    return std::string(violation_name(kind)) + ": " + detail;
}

std::string render(const std::vector<Violation>& violations) {
    std::ostringstream out;
    for (const auto& v : violations) out << v.render() << '\n';
    return out.str();
}

namespace {

std::string cycle_desc(const OrientedCycle& c) {
    std::ostringstream out;
    for (std::size_t i = 0; i < c.elements.size(); ++i) {
        if (i) out << ' ';
        out << to_string(c.elements[i].id) << (c.elements[i].forward ? '+' : '-');
    }
    return out.str();
}

} // namespace

std::vector<Violation> verify_factor(const MixedGraph& g, const CycleFactor& f,
                                     ParityConstraint c, const CoverMode& mode) {
    std::vector<Violation> out;
    std::vector<int> owner(g.vertex_count(), -1);

    for (std::size_t ci = 0; ci < f.cycles.size(); ++ci) {
        const OrientedCycle& cyc = f.cycles[ci];
        std::string tag = "cycle " + std::to_string(ci) + " [" + cycle_desc(cyc) + "]";
        if (cyc.length() < 2) {
            out.push_back({ViolationKind::BadCycle, tag + " has fewer than 2 elements"});
            continue;
        }
        bool ids_ok = true;
        std::set<ElementId> ids;
        for (const auto& oe : cyc.elements) {
            if (!g.has_element(oe.id)) {
                out.push_back({ViolationKind::BadCycle, tag + " references missing " + to_string(oe.id)});
                ids_ok = false;
                break;
            }
            if (!ids.insert(oe.id).second) {
                out.push_back({ViolationKind::BadCycle, tag + " reuses " + to_string(oe.id)});
                ids_ok = false;
                break;
            }
        }
        if (!ids_ok) continue;
        if (!cycle_chain_ok(g, cyc)) {
            out.push_back({ViolationKind::BadCycle, tag + " does not chain into a closed cycle"});
            continue;
        }
        for (const auto& oe : cyc.elements)
            if (oe.id.kind == ElementKind::Arc && !oe.forward)
                out.push_back({ViolationKind::OrientationInconsistent,
                               tag + " traverses " + to_string(oe.id) + " against its direction"});
        std::vector<int> vs = cycle_vertices(g, cyc);
        std::set<int> distinct(vs.begin(), vs.end());
        if (distinct.size() != vs.size()) {
            out.push_back({ViolationKind::BadCycle, tag + " revisits a vertex"});
            continue;
        }
        for (int v : vs) {
            if (owner[v] != -1)
                out.push_back({ViolationKind::NotDisjoint,
                               "vertex " + std::to_string(v) + " lies on cycles " +
                                   std::to_string(owner[v]) + " and " + std::to_string(ci)});
            else
                owner[v] = static_cast<int>(ci);
        }
    }

    if (mode.all) {
        for (int v = 0; v < g.vertex_count(); ++v)
            if (owner[v] == -1)
                out.push_back({ViolationKind::NotCovering, "vertex " + std::to_string(v) + " uncovered"});
    } else {
        for (int v : mode.z)
            if (v < 0 || v >= g.vertex_count() || owner[v] == -1)
                out.push_back(
                    {ViolationKind::TerminalUncovered, "terminal " + std::to_string(v) + " uncovered"});
    }

    if (out.empty() && !satisfies(signature(f), c)) {
        ParitySignature sig = signature(f);
        out.push_back({ViolationKind::ParityViolated,
                       std::string("signature (") + std::to_string(sig.even_cycles) + "," +
                           std::to_string(sig.odd_cycles) + ") violates " + constraint_name(c)});
    }
    return out;
}

std::vector<Violation> verify_hampath(const MixedGraph& h, int s, int t, const ArcPath& path) {
    std::vector<Violation> out;
    if (s < 0 || s >= h.vertex_count() || t < 0 || t >= h.vertex_count()) {
        out.push_back({ViolationKind::NotAPath, "terminal out of range"});
        return out;
    }
    int at = s;
    std::vector<bool> seen(h.vertex_count(), false);
    seen[s] = true;
    for (ElementId id : path.arcs) {
        if (!h.has_element(id) || id.kind != ElementKind::Arc) {
            out.push_back({ViolationKind::NotAPath, "missing arc " + to_string(id)});
            return out;
        }
        Endpoints ep = h.endpoints(id);
        if (ep.u != at) {
            out.push_back({ViolationKind::NotAPath,
                           to_string(id) + " does not continue from vertex " + std::to_string(at)});
            return out;
        }
        if (seen[ep.v]) {
            out.push_back({ViolationKind::NotAPath, "vertex " + std::to_string(ep.v) + " revisited"});
            return out;
        }
        seen[ep.v] = true;
        at = ep.v;
    }
    if (at != t)
        out.push_back({ViolationKind::NotAPath, "path ends at " + std::to_string(at) + ", not " +
                                                    std::to_string(t)});
    for (int v = 0; v < h.vertex_count(); ++v)
        if (!seen[v])
            out.push_back({ViolationKind::NotCovering, "vertex " + std::to_string(v) + " not visited"});
    return out;
}

namespace {

// Simple directed (s,t)-path check shared by the two path verifiers.
void check_simple_path(const MixedGraph& h, int s, int t, const ArcPath& p, const std::string& tag,
                       std::vector<Violation>& out, std::vector<int>& visited_sink) {
    if (s < 0 || s >= h.vertex_count() || t < 0 || t >= h.vertex_count()) {
        out.push_back({ViolationKind::NotAPath, tag + ": terminal out of range"});
        return;
    }
    int at = s;
    std::set<int> seen{s};
    for (ElementId id : p.arcs) {
        if (!h.has_element(id) || id.kind != ElementKind::Arc) {
            out.push_back({ViolationKind::NotAPath, tag + ": missing arc " + to_string(id)});
            return;
        }
        Endpoints ep = h.endpoints(id);
        if (ep.u != at) {
            out.push_back({ViolationKind::NotAPath,
                           tag + ": " + to_string(id) + " does not continue from " + std::to_string(at)});
            return;
        }
        if (!seen.insert(ep.v).second) {
            out.push_back({ViolationKind::NotAPath, tag + ": vertex " + std::to_string(ep.v) + " revisited"});
            return;
        }
        at = ep.v;
    }
    if (at != t) {
        out.push_back({ViolationKind::NotAPath,
                       tag + ": ends at " + std::to_string(at) + ", not " + std::to_string(t)});
        return;
    }
    visited_sink.assign(seen.begin(), seen.end());
}

} // namespace

std::vector<Violation> verify_vdp(const MixedGraph& h, int s1, int t1, int s2, int t2,
                                  const ArcPath& p1, const ArcPath& p2) {
    std::vector<Violation> out;
    std::vector<int> v1, v2;
    check_simple_path(h, s1, t1, p1, "path 1", out, v1);
    check_simple_path(h, s2, t2, p2, "path 2", out, v2);
    if (!out.empty()) return out;
    std::vector<int> both;
    std::set_intersection(v1.begin(), v1.end(), v2.begin(), v2.end(), std::back_inserter(both));
    for (int v : both)
        out.push_back({ViolationKind::NotDisjoint, "vertex " + std::to_string(v) + " on both paths"});
    return out;
}

std::vector<Violation> verify_coloring(const MixedGraph& h, const EdgeColoring& coloring) {
    std::vector<Violation> out;
    if (static_cast<int>(coloring.color.size()) != h.edge_count()) {
        out.push_back({ViolationKind::NotAColoring, "coloring covers " +
                                                        std::to_string(coloring.color.size()) + " of " +
                                                        std::to_string(h.edge_count()) + " edges"});
        return out;
    }
    for (int i = 0; i < h.edge_count(); ++i)
        if (coloring.color[i] < 1 || coloring.color[i] > 3)
            out.push_back({ViolationKind::NotAColoring,
                           "e" + std::to_string(i) + " has color " + std::to_string(coloring.color[i])});
    for (int v = 0; v < h.vertex_count(); ++v) {
        const auto& inc = h.incident(v);
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j) {
                if (inc[i].id.kind != ElementKind::Edge || inc[j].id.kind != ElementKind::Edge) continue;
                if (coloring.color[inc[i].id.index] == coloring.color[inc[j].id.index])
                    out.push_back({ViolationKind::NotAColoring,
                                   to_string(inc[i].id) + " and " + to_string(inc[j].id) +
                                       " share a color at vertex " + std::to_string(v)});
            }
    }
    return out;
}

std::vector<Violation> verify_3dm(int n, const std::vector<std::array<int, 3>>& tuples,
                                  const DmMatching& m) {
    std::vector<Violation> out;
    std::vector<int> cover_x(n, 0), cover_y(n, 0), cover_z(n, 0);
    for (int idx : m.tuple_indexes) {
        if (idx < 0 || idx >= static_cast<int>(tuples.size())) {
            out.push_back({ViolationKind::NotAMatching, "tuple index " + std::to_string(idx) + " missing"});
            return out;
        }
        const auto& t = tuples[idx];
        ++cover_x[t[0]];
        ++cover_y[t[1]];
        ++cover_z[t[2]];
    }
    auto report = [&](const std::vector<int>& cover, const char* side) {
        for (int i = 0; i < n; ++i)
            if (cover[i] != 1)
                out.push_back({ViolationKind::NotAMatching, std::string(side) + std::to_string(i) +
                                                                " covered " + std::to_string(cover[i]) +
                                                                " times"});
    };
    report(cover_x, "x");
    report(cover_y, "y");
    report(cover_z, "z");
    return out;
}

std::vector<Violation> verify_p_respecting(const MixedGraph& h,
                                           const std::vector<std::pair<ElementId, ElementId>>& pairs,
                                           const CycleFactor& f) {
    std::vector<Violation> out = verify_factor(h, f, ParityConstraint::Any, CoverMode::All());
    std::set<ElementId> used;
    for (const auto& c : f.cycles)
        for (const auto& oe : c.elements) used.insert(oe.id);
    for (const auto& [a, b] : pairs)
        if (used.count(a) && used.count(b))
            out.push_back({ViolationKind::PairViolated,
                           "both " + to_string(a) + " and " + to_string(b) + " are in the factor"});
    return out;
}

} // namespace certify
} // namespace cyclefactor
