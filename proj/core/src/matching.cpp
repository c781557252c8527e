#include "cyclefactor/matching.hpp"

#include <algorithm>
#include <queue>

namespace cyclefactor {

namespace {

void require_undirected(const MixedGraph& g) {
    if (!g.is_undirected()) fail(Errc::NotUndirected, "matching needs an undirected graph");
}

// Neighbor lists with parallel edges collapsed; remembers the smallest edge
// id per vertex pair for reporting.
struct CollapsedAdjacency {
    std::vector<std::vector<int>> neighbors;
    std::vector<std::vector<ElementId>> via; // aligned with neighbors

    explicit CollapsedAdjacency(const MixedGraph& g) {
        const int n = g.vertex_count();
        neighbors.assign(n, {});
        via.assign(n, {});
        for (int v = 0; v < n; ++v) {
            for (const auto& inc : g.incident(v)) {
                if (inc.id.kind != ElementKind::Edge) continue;
                // incident() is sorted by id, so the first occurrence of a
                // neighbor carries the smallest edge id.
                if (std::find(neighbors[v].begin(), neighbors[v].end(), inc.other) !=
                    neighbors[v].end())
                    continue;
                neighbors[v].push_back(inc.other);
                via[v].push_back(inc.id);
            }
        }
    }

    ElementId edge_between(int u, int v) const {
        for (std::size_t i = 0; i < neighbors[u].size(); ++i)
            if (neighbors[u][i] == v) return via[u][i];
        fail(Errc::DanglingReference, "no edge between matched vertices");
    }
};

Matching finish(const MixedGraph& g, const CollapsedAdjacency& adj, const std::vector<int>& mate) {
    Matching m;
    m.mate = mate;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (mate[v] > v) m.edges.push_back(adj.edge_between(v, mate[v]));
    std::sort(m.edges.begin(), m.edges.end());
    return m;
}

} // namespace

Matching max_bipartite_matching(const MixedGraph& g, const std::vector<bool>& left) {
    require_undirected(g);
    const int n = g.vertex_count();
    if (static_cast<int>(left.size()) != n)
        fail(Errc::NotBipartition, "side vector size does not match vertex count");
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [u, v] = g.edges()[i];
        if (left[u] == left[v])
            fail(Errc::NotBipartition, "e" + std::to_string(i) + " joins two same-side vertices");
    }

    CollapsedAdjacency adj(g);
    std::vector<int> mate(n, -1);
    std::vector<bool> visited(n);

    // Kuhn's augmenting search from each left vertex, in id order.
    auto try_augment = [&](auto&& self, int u) -> bool {
        for (int w : adj.neighbors[u]) {
            if (visited[w]) continue;
            visited[w] = true;
            if (mate[w] == -1 || self(self, mate[w])) {
                mate[w] = u;
                mate[u] = w;
                return true;
            }
        }
        return false;
    };
    for (int u = 0; u < n; ++u) {
        if (!left[u] || mate[u] != -1) continue;
        std::fill(visited.begin(), visited.end(), false);
        try_augment(try_augment, u);
    }
    return finish(g, adj, mate);
}

namespace {

// Edmonds' blossom algorithm, the classical contracted-base formulation.
// One BFS phase per exposed vertex; bases of blossoms are tracked in base_[]
// and paths through blossoms are recovered via parent and bridge pointers.
class Blossom {
public:
    explicit Blossom(const CollapsedAdjacency& adj, int n) : adj_(adj), n_(n) {
        mate_.assign(n, -1);
        parent_.assign(n, -1);
        base_.assign(n, 0);
    }

    std::vector<int> solve() {
        // Greedy initial matching keeps the number of BFS phases small.
        for (int v = 0; v < n_; ++v) {
            if (mate_[v] != -1) continue;
            for (int w : adj_.neighbors[v]) {
                if (mate_[w] == -1) {
                    mate_[v] = w;
                    mate_[w] = v;
                    break;
                }
            }
        }
        for (int v = 0; v < n_; ++v)
            if (mate_[v] == -1) find_augmenting_path(v);
        return mate_;
    }

private:
    int lowest_common_base(int a, int b) {
        std::vector<bool> mark(n_, false);
        int cur = a;
        while (true) {
            cur = base_[cur];
            mark[cur] = true;
            if (mate_[cur] == -1) break;
            cur = parent_[mate_[cur]];
        }
        cur = b;
        while (true) {
            cur = base_[cur];
            if (mark[cur]) return cur;
            cur = parent_[mate_[cur]];
        }
    }

    void mark_blossom_path(int v, int b, int child, std::vector<bool>& in_blossom) {
        while (base_[v] != b) {
            in_blossom[base_[v]] = true;
            in_blossom[base_[mate_[v]]] = true;
            parent_[v] = child;
            child = mate_[v];
            v = parent_[mate_[v]];
        }
    }

    void find_augmenting_path(int root) {
        std::vector<bool> used(n_, false);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (int i = 0; i < n_; ++i) base_[i] = i;

        used[root] = true;
        std::queue<int> queue;
        queue.push(root);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            for (int to : adj_.neighbors[v]) {
                if (base_[v] == base_[to] || mate_[v] == to) continue;
                if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
                    // Both ends even: contract the blossom around their
                    // common base.
                    int cur_base = lowest_common_base(v, to);
                    std::vector<bool> in_blossom(n_, false);
                    mark_blossom_path(v, cur_base, to, in_blossom);
                    mark_blossom_path(to, cur_base, v, in_blossom);
                    for (int i = 0; i < n_; ++i) {
                        if (!in_blossom[base_[i]]) continue;
                        base_[i] = cur_base;
                        if (!used[i]) {
                            used[i] = true;
                            queue.push(i);
                        }
                    }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (mate_[to] == -1) {
                        augment(to);
                        return;
                    }
                    used[mate_[to]] = true;
                    queue.push(mate_[to]);
                }
            }
        }
    }

    void augment(int v) {
        while (v != -1) {
            int pv = parent_[v];
            int next = mate_[pv];
            mate_[v] = pv;
            mate_[pv] = v;
            v = next;
        }
    }

    const CollapsedAdjacency& adj_;
    int n_;
    std::vector<int> mate_, parent_, base_;
};

} // namespace

Matching max_general_matching(const MixedGraph& g) {
    require_undirected(g);
    CollapsedAdjacency adj(g);
    Blossom engine(adj, g.vertex_count());
    return finish(g, adj, engine.solve());
}

} // namespace cyclefactor
