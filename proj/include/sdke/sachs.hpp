#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "sdke/budget.hpp"
#include "sdke/graph.hpp"

namespace sdke {

struct SachsComponent {
    enum class Kind { k2, cycle };
    Kind kind = Kind::k2;
    std::vector<int> vertices;  // K2: the two endpoints; cycle: in traversal order
};

/// Spanning subgraph whose components are single edges or cycles.
struct SachsSubgraph {
    EdgeList edges;
    std::vector<SachsComponent> components;
};

namespace detail {

/// Component census of an edge set whose degrees are all 1 or 2; returns
/// nullopt unless every component is a K2 or a cycle.
inline std::optional<std::vector<SachsComponent>> sachs_census(int n, const EdgeList& edges) {
    std::vector<std::vector<int>> adj(n);
    for (const Edge& e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<bool> seen(n, false);
    std::vector<SachsComponent> comps;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        if (adj[s].empty()) return std::nullopt;  // not spanning
        if (adj[s].size() == 1) {
            int u = adj[s][0];
            if (adj[u].size() != 1) return std::nullopt;  // path longer than K2
            seen[s] = seen[u] = true;
            comps.push_back({SachsComponent::Kind::k2, {std::min(s, u), std::max(s, u)}});
            continue;
        }
        // degree 2: walk the cycle
        std::vector<int> cyc{s};
        seen[s] = true;
        int prev = s, cur = adj[s][0];
        while (cur != s) {
            if (adj[cur].size() != 2) return std::nullopt;
            cyc.push_back(cur);
            seen[cur] = true;
            int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = nxt;
        }
        comps.push_back({SachsComponent::Kind::cycle, std::move(cyc)});
    }
    return comps;
}

template <class Fn>
void sachs_rec(const Graph& g, const EdgeList& all_edges, const std::vector<int>& last_edge_of,
               std::size_t idx, std::vector<int>& deg, EdgeList& chosen, Budget& budget, Fn& fn) {
    budget.spend();
    if (idx == all_edges.size()) {
        if (auto comps = sachs_census(g.vertex_count(), chosen)) {
            fn(SachsSubgraph{chosen, std::move(*comps)});
        }
        return;
    }
    const Edge& e = all_edges[idx];
    auto closes_ok = [&](int v) {
        // all edges at v decided: final degree must be 1 or 2
        return last_edge_of[v] != static_cast<int>(idx) || (deg[v] == 1 || deg[v] == 2);
    };
    // exclude e
    if (closes_ok(e.u) && closes_ok(e.v)) {
        sachs_rec(g, all_edges, last_edge_of, idx + 1, deg, chosen, budget, fn);
    }
    // include e
    if (deg[e.u] < 2 && deg[e.v] < 2) {
        ++deg[e.u];
        ++deg[e.v];
        if (closes_ok(e.u) && closes_ok(e.v)) {
            chosen.push_back(e);
            sachs_rec(g, all_edges, last_edge_of, idx + 1, deg, chosen, budget, fn);
            chosen.pop_back();
        }
        --deg[e.u];
        --deg[e.v];
    }
}

}  // namespace detail

/// Calls fn once for every Sachs subgraph. Exponential; budgeted.
template <class Fn>
void for_each_sachs_subgraph(const Graph& g, Budget& budget, Fn&& fn) {
    if (g.vertex_count() == 0) {
        fn(SachsSubgraph{});  // the empty subgraph spans the empty graph
        return;
    }
    EdgeList edges = g.edges();
    std::vector<int> last_edge_of(g.vertex_count(), -1);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        last_edge_of[edges[i].u] = static_cast<int>(i);
        last_edge_of[edges[i].v] = static_cast<int>(i);
    }
    if (isolated_count(g) > 0) return;  // an isolated vertex can never be spanned
    std::vector<int> deg(g.vertex_count(), 0);
    EdgeList chosen;
    detail::sachs_rec(g, edges, last_edge_of, 0, deg, chosen, budget, fn);
}

inline std::vector<SachsSubgraph> all_sachs_subgraphs(const Graph& g, Budget& budget) {
    std::vector<SachsSubgraph> out;
    for_each_sachs_subgraph(g, budget, [&](const SachsSubgraph& s) { out.push_back(s); });
    return out;
}

/// Existence of a Sachs subgraph without enumeration: G has one exactly when
/// i(G - S) <= |S| for every S (the perfect 2-matching condition, the k = 0
/// case of the Sachs-criticality characterization).
inline bool has_sachs_subgraph(const Graph& g, Budget& budget) {
    const int n = g.vertex_count();
    if (n > 24) throw std::invalid_argument("has_sachs_subgraph: graph too large for subset scan");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        budget.spend();
        VertexSet s(n);
        for (int v = 0; v < n; ++v) {
            if (mask >> v & 1) s.set(v);
        }
        int isolated = 0;
        VertexSet rest = s.complement();
        rest.for_each([&](int v) {
            if (!g.adj(v).intersects(rest)) ++isolated;
        });
        if (isolated > s.count()) return false;
    }
    return true;
}

struct KSachsResult {
    bool critical = false;
    std::optional<VertexSet> witness;  // failing S when not critical
};

/// k-Sachs criticality via the characterization i(G - S) <= |S| - k for
/// every S with |S| >= k.
inline KSachsResult k_sachs_critical(const Graph& g, int k, Budget& budget) {
    const int n = g.vertex_count();
    if (k < 0) throw std::invalid_argument("k_sachs_critical: negative k");
    if (n > 24) throw std::invalid_argument("k_sachs_critical: graph too large for subset scan");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        budget.spend();
        if (__builtin_popcountll(mask) < k) continue;
        VertexSet s(n);
        for (int v = 0; v < n; ++v) {
            if (mask >> v & 1) s.set(v);
        }
        int isolated = 0;
        VertexSet rest = s.complement();
        rest.for_each([&](int v) {
            if (!g.adj(v).intersects(rest)) ++isolated;
        });
        if (isolated > s.count() - k) return {false, s};
    }
    return {true, std::nullopt};
}

namespace detail {

// Enumerates simple odd cycles whose minimum vertex is path[0], restricted to
// `allowed`, each cycle once (second vertex smaller than the closing one).
template <class Fn>
void odd_cycle_dfs(const Graph& g, const VertexSet& allowed, std::vector<int>& path,
                   VertexSet& on_path, Budget& budget, bool& stop, Fn& fn) {
    if (stop) return;
    budget.spend();
    const int root = path[0];
    const int cur = path.back();
    for (int w : g.neighbors(cur)) {
        if (stop) return;
        if (w == root && path.size() >= 3 && path.size() % 2 == 1 && path[1] < path.back()) {
            fn(path);
            continue;
        }
        if (w <= root || on_path.test(w) || !allowed.test(w)) continue;
        path.push_back(w);
        on_path.set(w);
        odd_cycle_dfs(g, allowed, path, on_path, budget, stop, fn);
        on_path.reset(w);
        path.pop_back();
    }
}

template <class Fn>
void for_each_odd_cycle(const Graph& g, const VertexSet& allowed, Budget& budget, bool& stop,
                        Fn&& fn) {
    allowed.for_each([&](int v) {
        if (stop) return;
        std::vector<int> path{v};
        VertexSet on_path(g.vertex_count());
        on_path.set(v);
        odd_cycle_dfs(g, allowed, path, on_path, budget, stop, fn);
    });
}

// Exact cover of `remaining` by vertex-disjoint odd cycles.
inline bool odd_cycle_cover(const Graph& g, VertexSet& remaining, EdgeList& chosen,
                            std::vector<std::vector<int>>& cycles, Budget& budget) {
    budget.spend();
    int count = remaining.count();
    if (count == 0) return true;
    if (count < 3 || count == 4) return false;  // not a sum of odd numbers >= 3
    int head = remaining.to_vector().front();
    bool ok = false;
    bool stop = false;
    std::vector<std::vector<int>> candidates;
    std::vector<int> path{head};
    VertexSet on_path(g.vertex_count());
    on_path.set(head);
    auto collect = [&](const std::vector<int>& cyc) { candidates.push_back(cyc); };
    detail::odd_cycle_dfs(g, remaining, path, on_path, budget, stop, collect);
    for (const auto& cyc : candidates) {
        for (int v : cyc) remaining.reset(v);
        if (odd_cycle_cover(g, remaining, chosen, cycles, budget)) {
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                chosen.emplace_back(cyc[i], cyc[(i + 1) % cyc.size()]);
            }
            cycles.push_back(cyc);
            ok = true;
        }
        for (int v : cyc) remaining.set(v);
        if (ok) break;
    }
    return ok;
}

}  // namespace detail

struct OddCycleFactorResult {
    bool found = false;
    std::optional<SachsSubgraph> factor;
};

/// A spanning 2-regular subgraph all of whose cycles are odd.
inline OddCycleFactorResult has_odd_cycle_factor(const Graph& g, Budget& budget) {
    VertexSet remaining = VertexSet::full(g.vertex_count());
    EdgeList chosen;
    std::vector<std::vector<int>> cycles;
    if (!detail::odd_cycle_cover(g, remaining, chosen, cycles, budget)) return {false, std::nullopt};
    SachsSubgraph s;
    std::sort(chosen.begin(), chosen.end());
    s.edges = std::move(chosen);
    std::reverse(cycles.begin(), cycles.end());  // recursion appends innermost first
    for (auto& cyc : cycles) s.components.push_back({SachsComponent::Kind::cycle, std::move(cyc)});
    return {true, std::move(s)};
}

/// Union of the odd cycles over all Sachs subgraphs: an odd cycle C joins
/// exactly when the rest of the graph still has a Sachs subgraph. Guaranteed
/// to sit inside SD(G).
inline VertexSet odd_sachs_cover(const Graph& g, Budget& budget) {
    const int n = g.vertex_count();
    VertexSet cover(n);
    bool stop = false;
    detail::for_each_odd_cycle(g, VertexSet::full(n), budget, stop, [&](const std::vector<int>& cyc) {
        VertexSet cycle_set(n);
        for (int v : cyc) cycle_set.set(v);
        if (cycle_set.is_subset_of(cover)) return;  // nothing new from this cycle
        auto [rest, ignore] = induced_subgraph(g, cycle_set.complement());
        if (has_sachs_subgraph(rest, budget)) {
            cover |= cycle_set;
            if (cover == VertexSet::full(n)) stop = true;
        }
    });
    return cover;
}

/// Partition into triangles; the s = 3 instance of clique-factor detection.
inline bool has_triangle_factor(const Graph& g, Budget& budget) {
    if (g.vertex_count() % 3 != 0) return false;
    struct Rec {
        const Graph& g;
        Budget& budget;
        bool run(VertexSet& remaining) {
            budget.spend();
            if (remaining.empty()) return true;
            int v = remaining.to_vector().front();
            auto nb = (g.adj(v) & remaining).to_vector();
            for (std::size_t i = 0; i < nb.size(); ++i) {
                for (std::size_t j = i + 1; j < nb.size(); ++j) {
                    if (!g.has_edge(nb[i], nb[j])) continue;
                    remaining.reset(v);
                    remaining.reset(nb[i]);
                    remaining.reset(nb[j]);
                    if (run(remaining)) return true;
                    remaining.set(v);
                    remaining.set(nb[i]);
                    remaining.set(nb[j]);
                }
            }
            return false;
        }
    } rec{g, budget};
    VertexSet remaining = VertexSet::full(g.vertex_count());
    return rec.run(remaining);
}

}  // namespace sdke
