#pragma once

// Independent brute-force oracles for the test suites. These deliberately
// share no code with the solver implementations: factors are found by
// checking every element subset against the definitions, matchings by
// branching on the first uncovered vertex, cycles by path enumeration.

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "cyclefactor/graph.hpp"

namespace oracle {

using cyclefactor::ElementId;
using cyclefactor::ElementKind;
using cyclefactor::MixedGraph;
using cyclefactor::ParitySignature;

struct SubsetFactor {
    std::vector<std::vector<ElementId>> cycles; // each sorted
    ParitySignature sig;

    std::vector<ElementId> key() const {
        std::vector<ElementId> k;
        for (const auto& c : cycles) k.insert(k.end(), c.begin(), c.end());
        std::sort(k.begin(), k.end());
        return k;
    }
};

namespace detail {

inline ElementId element_of(const MixedGraph& g, int uid) {
    return uid < g.edge_count() ? cyclefactor::edge_id(uid)
                                : cyclefactor::arc_id(uid - g.edge_count());
}

inline std::pair<int, int> ends_of(const MixedGraph& g, int uid) {
    auto ep = g.endpoints(element_of(g, uid));
    return {ep.u, ep.v};
}

// Validates one subset: every touched vertex has exactly two chosen incident
// elements, the required vertices are touched, and every component can be
// walked around in at least one direction respecting arc orientations.
inline std::optional<SubsetFactor> validate_subset(const MixedGraph& g,
                                                   const std::vector<bool>& chosen,
                                                   const std::vector<bool>& required) {
    const int n = g.vertex_count();
    const int total = g.element_count();
    std::vector<std::vector<int>> inc(n);
    for (int uid = 0; uid < total; ++uid) {
        if (!chosen[uid]) continue;
        auto [u, v] = ends_of(g, uid);
        inc[u].push_back(uid);
        inc[v].push_back(uid);
    }
    for (int v = 0; v < n; ++v) {
        if (!inc[v].empty() && inc[v].size() != 2) return std::nullopt;
        if (required[v] && inc[v].empty()) return std::nullopt;
    }

    auto can_traverse = [&](int uid, int from) {
        ElementId id = element_of(g, uid);
        if (id.kind == ElementKind::Edge) return true;
        return g.endpoints(id).u == from; // arcs only tail to head
    };
    auto other_end = [&](int uid, int from) {
        auto [u, v] = ends_of(g, uid);
        return from == u ? v : u;
    };

    SubsetFactor out;
    std::vector<bool> visited(n, false);
    for (int start = 0; start < n; ++start) {
        if (inc[start].empty() || visited[start]) continue;
        bool closed = false;
        for (int dir = 0; dir < 2 && !closed; ++dir) {
            int at = start;
            int cur = inc[start][dir];
            std::vector<int> walk;
            std::set<int> walk_verts{start};
            bool ok = true;
            while (true) {
                if (!can_traverse(cur, at)) {
                    ok = false;
                    break;
                }
                walk.push_back(cur);
                at = other_end(cur, at);
                if (at == start) break;
                if (!walk_verts.insert(at).second) {
                    ok = false;
                    break;
                }
                cur = inc[at][0] == walk.back() ? inc[at][1] : inc[at][0];
            }
            if (!ok || walk.size() < 2) continue;
            closed = true;
            for (int v : walk_verts) visited[v] = true;
            std::vector<ElementId> ids;
            for (int uid : walk) ids.push_back(element_of(g, uid));
            std::sort(ids.begin(), ids.end());
            (walk.size() % 2 == 0 ? out.sig.even_cycles : out.sig.odd_cycles)++;
            out.cycles.push_back(std::move(ids));
        }
        if (!closed) return std::nullopt;
    }
    return out;
}

} // namespace detail

/// Every factor of g (covering `required`; all vertices when empty), by
/// exhaustive subset checking. Feasible up to ~16 elements.
inline std::vector<SubsetFactor> naive_factors(const MixedGraph& g,
                                               const std::vector<bool>* required_in = nullptr) {
    const int total = g.element_count();
    std::vector<bool> required =
        required_in ? *required_in : std::vector<bool>(g.vertex_count(), true);
    std::vector<SubsetFactor> out;
    for (std::uint64_t mask = 0; mask < (1ULL << total); ++mask) {
        std::vector<bool> chosen(total, false);
        for (int i = 0; i < total; ++i) chosen[i] = mask >> i & 1;
        if (auto f = detail::validate_subset(g, chosen, required)) out.push_back(std::move(*f));
    }
    return out;
}

inline std::set<ParitySignature> naive_signature_set(const MixedGraph& g) {
    std::set<ParitySignature> out;
    for (const auto& f : naive_factors(g)) out.insert(f.sig);
    return out;
}

inline std::set<std::vector<ElementId>> naive_factor_keys(const MixedGraph& g) {
    std::set<std::vector<ElementId>> out;
    for (const auto& f : naive_factors(g)) out.insert(f.key());
    return out;
}

inline bool naive_has_factor(const MixedGraph& g, cyclefactor::ParityConstraint c,
                             const std::vector<bool>* required = nullptr) {
    for (const auto& f : naive_factors(g, required))
        if (cyclefactor::satisfies(f.sig, c)) return true;
    return false;
}

/// Maximum matching size by branch-and-bound on the first uncovered vertex.
inline int naive_max_matching(const MixedGraph& g) {
    const int n = g.vertex_count();
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, int from) -> int {
        int v = from;
        while (v < n && used[v]) ++v;
        if (v == n) return 0;
        used[v] = true;
        int best = self(self, v + 1); // v stays unmatched
        for (const auto& inc : g.incident(v)) {
            if (inc.id.kind != ElementKind::Edge || used[inc.other]) continue;
            used[inc.other] = true;
            best = std::max(best, 1 + self(self, v + 1));
            used[inc.other] = false;
        }
        used[v] = false;
        return best;
    };
    return rec(rec, 0);
}

/// Exhaustive alternating-path search: true iff some simple path joins two
/// exposed vertices and alternates unmatched/matched edges.
inline bool naive_has_augmenting_path(const MixedGraph& g, const std::vector<int>& mate) {
    const int n = g.vertex_count();
    std::vector<bool> on_path(n, false);
    // parity 0: next edge must be unmatched; parity 1: must be the mate edge.
    auto dfs = [&](auto&& self, int at, int parity) -> bool {
        if (parity == 1) {
            int w = mate[at];
            if (w == -1 || on_path[w]) return false;
            on_path[w] = true;
            bool hit = self(self, w, 0);
            on_path[w] = false;
            return hit;
        }
        for (const auto& inc : g.incident(at)) {
            if (inc.id.kind != ElementKind::Edge || on_path[inc.other]) continue;
            if (mate[at] == inc.other) continue; // matched edge, wrong parity
            if (mate[inc.other] == -1) return true;
            on_path[inc.other] = true;
            if (self(self, inc.other, 1)) {
                on_path[inc.other] = false;
                return true;
            }
            on_path[inc.other] = false;
        }
        return false;
    };
    for (int v = 0; v < n; ++v) {
        if (mate[v] != -1) continue;
        on_path[v] = true;
        if (dfs(dfs, v, 0)) return true;
        on_path[v] = false;
    }
    return false;
}

/// Multiset of simple cycle lengths found by path enumeration. Undirected
/// cycles are reported once (canonical direction from the root).
inline std::vector<int> naive_cycle_lengths(const MixedGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> lengths;
    std::vector<bool> on_path(n, false);
    std::vector<ElementId> path;
    auto dfs = [&](auto&& self, int root, int at) -> void {
        for (const auto& inc : g.incident(at)) {
            if (!inc.can_leave) continue;
            if (inc.other == root) {
                if (path.empty() || inc.id == path.front()) continue;
                bool all_edges = inc.id.kind == ElementKind::Edge;
                for (ElementId id : path) all_edges = all_edges && id.kind == ElementKind::Edge;
                if (all_edges && inc.id < path.front()) continue; // direction dedupe
                lengths.push_back(static_cast<int>(path.size()) + 1);
                continue;
            }
            if (inc.other < root || on_path[inc.other]) continue;
            on_path[inc.other] = true;
            path.push_back(inc.id);
            self(self, root, inc.other);
            path.pop_back();
            on_path[inc.other] = false;
        }
    };
    for (int root = 0; root < n; ++root) {
        on_path[root] = true;
        dfs(dfs, root, root);
        on_path[root] = false;
    }
    return lengths;
}

inline bool naive_has_odd_cycle(const MixedGraph& g) {
    for (int len : naive_cycle_lengths(g))
        if (len % 2 == 1) return true;
    return false;
}

inline bool naive_has_even_cycle(const MixedGraph& g) {
    for (int len : naive_cycle_lengths(g))
        if (len % 2 == 0) return true;
    return false;
}

} // namespace oracle
