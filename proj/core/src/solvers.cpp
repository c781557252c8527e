#include "cyclefactor/solvers.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <queue>
#include <set>

#include "cyclefactor/matching.hpp"

namespace cyclefactor {

namespace {

class Timer {
public:
    double seconds() const {
        return std::chrono::duration<double>(clock::now() - start_).count();
    }

private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_ = clock::now();
};

int unified(const MixedGraph& g, ElementId id) {
    return id.kind == ElementKind::Edge ? id.index : g.edge_count() + id.index;
}

// Exact backtracking search shared by solve_parity, solve_prcf, solve_smcf
// and enumerate_factors. Cycles are grown from the minimum-id uncovered
// required vertex, scanning incident elements in id order; all-edge cycles
// keep only the direction whose first element id is below the closing
// element id, so every factor is produced exactly once.
class FactorSearch {
public:
    FactorSearch(const MixedGraph& g, ParityConstraint constraint, std::vector<bool> required,
                 const std::vector<std::vector<int>>* pair_partners, std::uint64_t node_limit)
        : g_(g),
          constraint_(constraint),
          required_(std::move(required)),
          pair_partners_(pair_partners),
          node_limit_(node_limit) {
        covered_.assign(g.vertex_count(), false);
        element_used_.assign(g.element_count(), false);
        uncovered_required_ = static_cast<int>(std::count(required_.begin(), required_.end(), true));
    }

    void run(const std::function<bool(const CycleFactor&)>& on_factor) {
        on_factor_ = &on_factor;
        descend();
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    void tick() {
        if (++nodes_ > node_limit_)
            fail(Errc::TooLarge, "search exceeded " + std::to_string(node_limit_) + " nodes");
    }

    bool pair_conflict(ElementId id) const {
        if (!pair_partners_) return false;
        for (int partner : (*pair_partners_)[unified(g_, id)])
            if (element_used_[partner]) return true;
        return false;
    }

    // Necessary conditions for every still-uncovered required vertex to lie
    // on a future cycle; only called between cycles.
    bool roots_viable() const {
        for (int w = 0; w < g_.vertex_count(); ++w) {
            if (covered_[w] || !required_[w]) continue;
            int usable = 0, can_leave = 0, can_enter = 0;
            for (const auto& inc : g_.incident(w)) {
                if (covered_[inc.other]) continue;
                if (element_used_[unified(g_, inc.id)]) continue;
                ++usable;
                if (inc.can_leave) ++can_leave;
                if (inc.can_enter) ++can_enter;
            }
            if (usable < 2 || can_leave == 0 || can_enter == 0) return false;
        }
        return true;
    }

    void descend() {
        if (stop_) return;
        if (uncovered_required_ == 0) {
            CycleFactor f{committed_};
            if (satisfies(signature(f), constraint_))
                if (!(*on_factor_)(canonical_factor(g_, f))) stop_ = true;
            return;
        }
        if (!roots_viable()) return;
        int root = 0;
        while (covered_[root] || !required_[root]) ++root;
        cover(root);
        grow(root, root);
        uncover(root);
    }

    void grow(int root, int at) {
        if (stop_) return;
        tick();
        for (const auto& inc : g_.incident(at)) {
            if (stop_) return;
            if (!inc.can_leave) continue;
            if (element_used_[unified(g_, inc.id)]) continue;
            if (pair_conflict(inc.id)) continue;
            Endpoints ep = g_.endpoints(inc.id);
            bool forward = ep.u == at;
            if (inc.other == root) {
                if (path_.empty()) continue; // a cycle needs two elements
                int length = static_cast<int>(path_.size()) + 1;
                bool odd = length % 2 != 0;
                if (constraint_ == ParityConstraint::AllOdd && !odd) continue;
                if (constraint_ == ParityConstraint::AllEven && odd) continue;
                if (inc.id.kind == ElementKind::Edge && all_edges_so_far_ &&
                    inc.id < path_.front().id)
                    continue; // the reversed traversal will produce this cycle
                close_cycle(root, {inc.id, forward});
            } else if (!covered_[inc.other]) {
                bool saved_all_edges = all_edges_so_far_;
                all_edges_so_far_ = all_edges_so_far_ && inc.id.kind == ElementKind::Edge;
                cover(inc.other);
                element_used_[unified(g_, inc.id)] = true;
                path_.push_back({inc.id, forward});
                grow(root, inc.other);
                path_.pop_back();
                element_used_[unified(g_, inc.id)] = false;
                uncover(inc.other);
                all_edges_so_far_ = saved_all_edges;
            }
        }
    }

    void close_cycle(int root, OrientedElement closing) {
        OrientedCycle cycle;
        cycle.elements = path_;
        cycle.elements.push_back(closing);
        element_used_[unified(g_, closing.id)] = true;
        committed_.push_back(std::move(cycle));

        std::vector<OrientedElement> saved_path;
        saved_path.swap(path_);
        bool saved_all_edges = all_edges_so_far_;
        all_edges_so_far_ = true;

        descend();

        all_edges_so_far_ = saved_all_edges;
        path_.swap(saved_path);
        committed_.pop_back();
        element_used_[unified(g_, closing.id)] = false;
    }

    void cover(int v) {
        covered_[v] = true;
        if (required_[v]) --uncovered_required_;
    }

    void uncover(int v) {
        covered_[v] = false;
        if (required_[v]) ++uncovered_required_;
    }

    const MixedGraph& g_;
    ParityConstraint constraint_;
    std::vector<bool> required_;
    const std::vector<std::vector<int>>* pair_partners_;
    std::uint64_t node_limit_;
    const std::function<bool(const CycleFactor&)>* on_factor_ = nullptr;

    std::vector<bool> covered_;
    std::vector<bool> element_used_;
    std::vector<OrientedElement> path_;
    std::vector<OrientedCycle> committed_;
    bool all_edges_so_far_ = true;
    bool stop_ = false;
    int uncovered_required_ = 0;
    std::uint64_t nodes_ = 0;
};

SolveResult run_exact(const MixedGraph& g, ParityConstraint c, std::vector<bool> required,
                      const std::vector<std::vector<int>>* pair_partners, const SolveOptions& opts) {
    Timer timer;
    FactorSearch search(g, c, std::move(required), pair_partners, opts.node_limit);
    SolveResult result;
    search.run([&](const CycleFactor& f) {
        result.factor = f;
        return false;
    });
    result.nodes_explored = search.nodes();
    result.elapsed_seconds = timer.seconds();
    return result;
}

// Decomposes an edge set in which every covered vertex has degree exactly two
// into oriented cycles, walking from the lowest vertex over the lowest edge.
CycleFactor cycles_from_edge_set(const MixedGraph& g, const std::vector<bool>& chosen_edge) {
    std::vector<std::vector<int>> at(g.vertex_count());
    for (int k = 0; k < g.edge_count(); ++k) {
        if (!chosen_edge[k]) continue;
        at[g.edges()[k].first].push_back(k);
        at[g.edges()[k].second].push_back(k);
    }
    CycleFactor f;
    std::vector<bool> used(g.edge_count(), false);
    for (int start = 0; start < g.vertex_count(); ++start) {
        if (at[start].empty() || used[at[start][0]]) continue;
        OrientedCycle cycle;
        int v = start;
        while (true) {
            int next_edge = -1;
            for (int k : at[v])
                if (!used[k]) {
                    next_edge = k;
                    break;
                }
            if (next_edge == -1) break;
            used[next_edge] = true;
            auto [a, b] = g.edges()[next_edge];
            bool forward = a == v;
            cycle.elements.push_back({edge_id(next_edge), forward});
            v = forward ? b : a;
            if (v == start) break;
        }
        f.cycles.push_back(canonical_cycle(g, cycle));
    }
    return canonical_factor(g, f);
}

} // namespace

SolveResult directed_cycle_factor(const MixedGraph& d) {
    if (!d.is_directed()) fail(Errc::NotDirected, "directed_cycle_factor needs a digraph");
    Timer timer;
    SolveResult result;
    const int n = d.vertex_count();
    if (n == 0) {
        result.factor = CycleFactor{};
        result.elapsed_seconds = timer.seconds();
        return result;
    }

    // Split graph: out-copy of v is v, in-copy is n + v; arc k becomes edge k.
    std::vector<std::pair<int, int>> split_edges;
    split_edges.reserve(d.arc_count());
    for (const auto& [tail, head] : d.arcs()) split_edges.emplace_back(tail, n + head);
    MixedGraph split = MixedGraph::build(2 * n, std::move(split_edges), {});
    std::vector<bool> left(2 * n, false);
    for (int v = 0; v < n; ++v) left[v] = true;

    Matching m = max_bipartite_matching(split, left);
    if (!m.is_perfect(split)) {
        result.elapsed_seconds = timer.seconds();
        return result;
    }

    std::vector<int> successor_arc(n, -1);
    for (ElementId id : m.edges) successor_arc[d.arcs()[id.index].first] = id.index;

    CycleFactor f;
    std::vector<bool> covered(n, false);
    for (int start = 0; start < n; ++start) {
        if (covered[start]) continue;
        OrientedCycle cycle;
        int v = start;
        do {
            covered[v] = true;
            int k = successor_arc[v];
            cycle.elements.push_back({arc_id(k), true});
            v = d.arcs()[k].second;
        } while (v != start);
        f.cycles.push_back(cycle);
    }
    result.factor = canonical_factor(d, f);
    result.elapsed_seconds = timer.seconds();
    return result;
}

SolveResult undirected_two_factor(const MixedGraph& g) {
    if (!g.is_undirected()) fail(Errc::NotUndirected, "undirected_two_factor needs an undirected graph");
    Timer timer;
    SolveResult result;
    const int n = g.vertex_count();
    if (n == 0) {
        result.factor = CycleFactor{};
        result.elapsed_seconds = timer.seconds();
        return result;
    }
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) < 2) {
            result.elapsed_seconds = timer.seconds();
            return result;
        }
    }

    // Tutte gadget: per vertex of degree d, one endpoint node per incident
    // edge end plus d-2 filler nodes joined to all of them. Original edge k
    // becomes auxiliary edge k between its two endpoint nodes; an edge is in
    // the 2-factor iff that auxiliary edge is matched.
    std::vector<int> endpoint_base(n, 0), filler_base(n, 0);
    int aux_n = 0;
    for (int v = 0; v < n; ++v) {
        endpoint_base[v] = aux_n;
        aux_n += g.degree(v);
    }
    for (int v = 0; v < n; ++v) {
        filler_base[v] = aux_n;
        aux_n += g.degree(v) - 2;
    }
    std::vector<int> slot_cursor(n, 0);
    std::vector<std::pair<int, int>> endpoint_node(g.edge_count(), {-1, -1});
    for (int k = 0; k < g.edge_count(); ++k) {
        auto [u, v] = g.edges()[k];
        endpoint_node[k].first = endpoint_base[u] + slot_cursor[u]++;
        endpoint_node[k].second = endpoint_base[v] + slot_cursor[v]++;
    }
    std::vector<std::pair<int, int>> aux_edges;
    for (int k = 0; k < g.edge_count(); ++k) aux_edges.push_back(endpoint_node[k]);
    for (int v = 0; v < n; ++v)
        for (int j = 0; j < g.degree(v) - 2; ++j)
            for (int i = 0; i < g.degree(v); ++i)
                aux_edges.emplace_back(filler_base[v] + j, endpoint_base[v] + i);

    MixedGraph aux = MixedGraph::build(aux_n, std::move(aux_edges), {});
    Matching m = max_general_matching(aux);
    if (!m.is_perfect(aux)) {
        result.elapsed_seconds = timer.seconds();
        return result;
    }

    std::vector<bool> chosen(g.edge_count(), false);
    for (ElementId id : m.edges)
        if (id.index < g.edge_count()) chosen[id.index] = true;
    result.factor = cycles_from_edge_set(g, chosen);
    result.elapsed_seconds = timer.seconds();
    return result;
}

namespace {

std::optional<OrientedCycle> odd_cycle_undirected(const MixedGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    std::vector<int> parent(n, -1);
    std::vector<ElementId> parent_elem(n);
    for (int root = 0; root < n; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        std::queue<int> queue;
        queue.push(root);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            for (const auto& inc : g.incident(u)) {
                if (color[inc.other] == -1) {
                    color[inc.other] = color[u] ^ 1;
                    parent[inc.other] = u;
                    parent_elem[inc.other] = inc.id;
                    queue.push(inc.other);
                    continue;
                }
                if (inc.other == parent[u] && inc.id == parent_elem[u]) continue;
                if (color[inc.other] != color[u]) continue;

                // Odd cycle: tree paths from both endpoints to their lowest
                // common ancestor plus this edge.
                int w = inc.other;
                std::vector<bool> on_u_path(n, false);
                for (int x = u; x != -1; x = parent[x]) on_u_path[x] = true;
                int lca = w;
                while (!on_u_path[lca]) lca = parent[lca];

                OrientedCycle cycle;
                auto push_step = [&](int from, ElementId id) {
                    Endpoints ep = g.endpoints(id);
                    cycle.elements.push_back({id, ep.u == from});
                };
                std::vector<std::pair<int, ElementId>> down;
                for (int x = u; x != lca; x = parent[x]) {
                    push_step(x, parent_elem[x]);
                }
                for (int x = w; x != lca; x = parent[x]) down.push_back({parent[x], parent_elem[x]});
                std::reverse(down.begin(), down.end());
                for (auto [from, id] : down) push_step(from, id);
                push_step(w, inc.id);
                return cycle;
            }
        }
    }
    return std::nullopt;
}

// Tarjan SCC, iterative, deterministic in arc order.
std::vector<int> strongly_connected_components(const MixedGraph& g, int& comp_count) {
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1), disc(n, -1), low(n, 0), stack;
    std::vector<bool> on_stack(n, false);
    int time = 0;
    comp_count = 0;

    struct Frame {
        int v;
        std::size_t next = 0;
    };
    for (int start = 0; start < n; ++start) {
        if (disc[start] != -1) continue;
        std::vector<Frame> frames{{start}};
        disc[start] = low[start] = time++;
        stack.push_back(start);
        on_stack[start] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto& inc = g.incident(f.v);
            bool descended = false;
            while (f.next < inc.size()) {
                const auto& step = inc[f.next++];
                if (!step.can_leave || step.id.kind != ElementKind::Arc) continue;
                int w = step.other;
                if (disc[w] == -1) {
                    disc[w] = low[w] = time++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w});
                    descended = true;
                    break;
                }
                if (on_stack[w]) low[f.v] = std::min(low[f.v], disc[w]);
            }
            if (descended) continue;
            if (low[f.v] == disc[f.v]) {
                while (true) {
                    int w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = comp_count;
                    if (w == f.v) break;
                }
                ++comp_count;
            }
            int finished = f.v;
            frames.pop_back();
            if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[finished]);
        }
    }
    return comp;
}

std::optional<OrientedCycle> odd_cycle_directed(const MixedGraph& g) {
    const int n = g.vertex_count();
    int comp_count = 0;
    std::vector<int> comp = strongly_connected_components(g, comp_count);

    std::vector<int> comp_root(comp_count, n);
    for (int v = n - 1; v >= 0; --v) comp_root[comp[v]] = v;
    std::vector<int> order(comp_count);
    for (int c = 0; c < comp_count; ++c) order[c] = c;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return comp_root[a] < comp_root[b]; });

    for (int c : order) {
        int root = comp_root[c];
        // Parity BFS inside the component: state (v, parity of walk length).
        std::vector<std::array<int, 2>> parent_state(n, {-1, -1}), parent_arc(n, {-1, -1});
        std::vector<std::array<bool, 2>> seen(n, {false, false});
        seen[root][0] = true;
        std::queue<std::pair<int, int>> queue;
        queue.push({root, 0});
        bool found = false;
        while (!queue.empty() && !found) {
            auto [v, p] = queue.front();
            queue.pop();
            for (const auto& inc : g.incident(v)) {
                if (!inc.can_leave || inc.id.kind != ElementKind::Arc) continue;
                if (comp[inc.other] != c) continue;
                int q = p ^ 1;
                if (inc.other == root && q == 1) {
                    parent_state[root][1] = v * 2 + p;
                    parent_arc[root][1] = inc.id.index;
                    seen[root][1] = true;
                    found = true;
                    break;
                }
                if (seen[inc.other][q]) continue;
                seen[inc.other][q] = true;
                parent_state[inc.other][q] = v * 2 + p;
                parent_arc[inc.other][q] = inc.id.index;
                queue.push({inc.other, q});
            }
        }
        if (!found) continue;

        // Reconstruct the odd closed walk, then slice simple cycles off it
        // until an odd one appears (one must, since the total is odd).
        std::vector<int> walk_arcs;
        int v = root, p = 1;
        while (!(v == root && p == 0)) {
            walk_arcs.push_back(parent_arc[v][p]);
            int enc = parent_state[v][p];
            v = enc / 2;
            p = enc % 2;
        }
        std::reverse(walk_arcs.begin(), walk_arcs.end());

        std::vector<int> pos(n, -1);
        std::vector<int> stack_verts{root};
        std::vector<int> stack_arcs;
        pos[root] = 0;
        for (int arc : walk_arcs) {
            int w = g.arcs()[arc].second;
            if (pos[w] != -1) {
                int j = pos[w];
                int cycle_len = static_cast<int>(stack_arcs.size()) - j + 1;
                if (cycle_len % 2 == 1) {
                    OrientedCycle cycle;
                    for (std::size_t i = j; i < stack_arcs.size(); ++i)
                        cycle.elements.push_back({arc_id(stack_arcs[i]), true});
                    cycle.elements.push_back({arc_id(arc), true});
                    return cycle;
                }
                while (static_cast<int>(stack_arcs.size()) > j) {
                    pos[stack_verts.back()] = -1;
                    stack_verts.pop_back();
                    stack_arcs.pop_back();
                }
                pos[w] = j; // w stays as the top of the spliced walk
            } else {
                stack_arcs.push_back(arc);
                stack_verts.push_back(w);
                pos[w] = static_cast<int>(stack_verts.size()) - 1;
            }
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<OrientedCycle> find_odd_cycle(const MixedGraph& g, GraphMode mode) {
    if (mode == GraphMode::Undirected) {
        if (!g.is_undirected()) fail(Errc::NotUndirected, "mode undirected but graph has arcs");
        if (auto c = odd_cycle_undirected(g)) return canonical_cycle(g, *c);
        return std::nullopt;
    }
    if (!g.is_directed()) fail(Errc::NotDirected, "mode directed but graph has edges");
    if (auto c = odd_cycle_directed(g)) return canonical_cycle(g, *c);
    return std::nullopt;
}

bool has_even_cycle_undirected(const MixedGraph& g) {
    if (!g.is_undirected()) fail(Errc::NotUndirected, "has_even_cycle_undirected needs edges only");
    const int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<ElementId> parent_elem(n);
    std::vector<int> edge_stack; // edge indexes
    int time = 0;

    // Check one popped block: fine iff it is a single edge or an odd cycle.
    auto block_has_even_cycle = [&](const std::vector<int>& block_edges) {
        if (block_edges.size() < 2) return false;
        std::set<int> verts;
        for (int k : block_edges) {
            verts.insert(g.edges()[k].first);
            verts.insert(g.edges()[k].second);
        }
        if (block_edges.size() != verts.size()) return true; // not a bare cycle
        return block_edges.size() % 2 == 0;                  // even cycle block
    };

    struct Frame {
        int v;
        std::size_t next = 0;
    };
    for (int start = 0; start < n; ++start) {
        if (disc[start] != -1) continue;
        std::vector<Frame> frames{{start}};
        disc[start] = low[start] = time++;
        parent_elem[start] = ElementId{ElementKind::Edge, -1};
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto& inc = g.incident(f.v);
            bool descended = false;
            while (f.next < inc.size()) {
                const auto& step = inc[f.next++];
                if (step.id == parent_elem[f.v]) continue;
                int w = step.other;
                if (disc[w] == -1) {
                    disc[w] = low[w] = time++;
                    parent_elem[w] = step.id;
                    edge_stack.push_back(step.id.index);
                    frames.push_back({w});
                    descended = true;
                    break;
                }
                if (disc[w] < disc[f.v]) {
                    edge_stack.push_back(step.id.index);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            }
            if (descended) continue;
            int child = f.v;
            frames.pop_back();
            if (frames.empty()) break;
            int parent = frames.back().v;
            low[parent] = std::min(low[parent], low[child]);
            if (low[child] >= disc[parent]) {
                std::vector<int> block;
                int tree_edge = parent_elem[child].index;
                while (true) {
                    int k = edge_stack.back();
                    edge_stack.pop_back();
                    block.push_back(k);
                    if (k == tree_edge) break;
                }
                if (block_has_even_cycle(block)) return true;
            }
        }
    }
    return false;
}

std::optional<OrientedCycle> find_even_dicycle_bruteforce(const MixedGraph& d,
                                                          const SolveOptions& opts) {
    if (!d.is_directed()) fail(Errc::NotDirected, "find_even_dicycle_bruteforce needs a digraph");
    if (d.vertex_count() > opts.even_dicycle_max_vertices)
        fail(Errc::TooLarge, "graph above the even-dicycle search bound of " +
                                 std::to_string(opts.even_dicycle_max_vertices) + " vertices");
    const int n = d.vertex_count();
    std::vector<bool> on_path(n, false);
    std::vector<OrientedElement> path;
    std::uint64_t nodes = 0;
    std::optional<OrientedCycle> found;

    // Enumerates each simple dicycle once: the root is its minimum vertex.
    auto dfs = [&](auto&& self, int root, int at) -> bool {
        if (++nodes > opts.node_limit)
            fail(Errc::TooLarge, "even-dicycle search exceeded node budget");
        for (const auto& inc : d.incident(at)) {
            if (!inc.can_leave) continue;
            if (inc.other == root) {
                if (path.size() % 2 == 1) { // closing arc makes the length even
                    OrientedCycle cycle;
                    cycle.elements = path;
                    cycle.elements.push_back({inc.id, true});
                    found = canonical_cycle(d, cycle);
                    return true;
                }
                continue;
            }
            if (inc.other < root || on_path[inc.other]) continue;
            on_path[inc.other] = true;
            path.push_back({inc.id, true});
            bool done = self(self, root, inc.other);
            path.pop_back();
            on_path[inc.other] = false;
            if (done) return true;
        }
        return false;
    };

    for (int root = 0; root < n; ++root) {
        on_path[root] = true;
        if (dfs(dfs, root, root)) return found;
        on_path[root] = false;
    }
    return std::nullopt;
}

SolveResult solve_parity(const MixedGraph& g, ParityConstraint c, const SolveOptions& opts) {
    return run_exact(g, c, std::vector<bool>(g.vertex_count(), true), nullptr, opts);
}

SolveResult solve_prcf(const MixedGraph& h, const std::vector<std::pair<ElementId, ElementId>>& pairs,
                       const SolveOptions& opts) {
    if (!h.is_undirected()) fail(Errc::NotUndirected, "PRCF instances are undirected");
    std::vector<std::vector<int>> partners(h.element_count());
    for (const auto& [a, b] : pairs) {
        if (!h.has_element(a) || a.kind != ElementKind::Edge)
            fail(Errc::DanglingReference, "pair references " + to_string(a));
        if (!h.has_element(b) || b.kind != ElementKind::Edge)
            fail(Errc::DanglingReference, "pair references " + to_string(b));
        if (a == b) fail(Errc::DanglingReference, "pair uses " + to_string(a) + " twice");
        partners[unified(h, a)].push_back(unified(h, b));
        partners[unified(h, b)].push_back(unified(h, a));
    }
    return run_exact(h, ParityConstraint::Any, std::vector<bool>(h.vertex_count(), true), &partners,
                     opts);
}

SolveResult solve_smcf(const MixedGraph& g, const std::vector<int>& z, const SolveOptions& opts) {
    std::vector<bool> required(g.vertex_count(), false);
    for (int v : z) {
        if (v < 0 || v >= g.vertex_count())
            fail(Errc::TerminalNotVertex, "terminal " + std::to_string(v) + " is not a vertex");
        required[v] = true;
    }
    return run_exact(g, ParityConstraint::Any, std::move(required), nullptr, opts);
}

void enumerate_factors(const MixedGraph& g, const std::function<bool(const CycleFactor&)>& on_factor,
                       const SolveOptions& opts) {
    FactorSearch search(g, ParityConstraint::Any, std::vector<bool>(g.vertex_count(), true), nullptr,
                        opts.node_limit);
    search.run(on_factor);
}

void enumerate_z_factors(const MixedGraph& g, const std::vector<int>& z,
                         const std::function<bool(const CycleFactor&)>& on_factor,
                         const SolveOptions& opts) {
    std::vector<bool> required(g.vertex_count(), false);
    for (int v : z) {
        if (v < 0 || v >= g.vertex_count())
            fail(Errc::TerminalNotVertex, "terminal " + std::to_string(v) + " is not a vertex");
        required[v] = true;
    }
    FactorSearch search(g, ParityConstraint::Any, std::move(required), nullptr, opts.node_limit);
    search.run(on_factor);
}

std::vector<CycleFactor> all_factors(const MixedGraph& g, const SolveOptions& opts) {
    std::vector<CycleFactor> out;
    enumerate_factors(
        g,
        [&](const CycleFactor& f) {
            out.push_back(f);
            return true;
        },
        opts);
    return out;
}

std::set<ParitySignature> signature_set(const MixedGraph& g, const SolveOptions& opts) {
    std::set<ParitySignature> out;
    enumerate_factors(
        g,
        [&](const CycleFactor& f) {
            out.insert(signature(f));
            return true;
        },
        opts);
    return out;
}

} // namespace cyclefactor
