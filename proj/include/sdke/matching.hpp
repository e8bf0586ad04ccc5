#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <queue>
#include <vector>

#include "sdke/budget.hpp"
#include "sdke/graph.hpp"

namespace sdke {

/// A matching viewed both as an edge set and as the involution v -> mate(v),
/// with mate(v) == v exactly on unsaturated vertices.
class Matching {
public:
    static Matching from_edges(const Graph& g, EdgeList edges) {
        Matching m;
        m.mate_.resize(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) m.mate_[v] = v;
        std::sort(edges.begin(), edges.end());
        for (const Edge& e : edges) {
            if (!g.has_edge(e.u, e.v)) throw std::invalid_argument("Matching: edge not in graph");
            if (m.mate_[e.u] != e.u || m.mate_[e.v] != e.v) {
                throw std::invalid_argument("Matching: edges are not pairwise disjoint");
            }
            m.mate_[e.u] = e.v;
            m.mate_[e.v] = e.u;
        }
        m.edges_ = std::move(edges);
        return m;
    }

    static Matching empty(const Graph& g) { return from_edges(g, {}); }

    int size() const { return static_cast<int>(edges_.size()); }
    const EdgeList& edges() const { return edges_; }
    int vertex_count() const { return static_cast<int>(mate_.size()); }

    int mate(int v) const { return mate_.at(v); }
    bool saturates(int v) const { return mate_.at(v) != v; }
    bool contains(int u, int v) const { return u != v && mate_.at(u) == v; }

    bool operator==(const Matching& o) const { return edges_ == o.edges_ && mate_ == o.mate_; }
    bool operator<(const Matching& o) const { return edges_ < o.edges_; }

private:
    EdgeList edges_;
    std::vector<int> mate_;
};

inline bool is_perfect(const Graph& g, const Matching& m) {
    return 2 * m.size() == g.vertex_count();
}

inline bool is_near_perfect(const Graph& g, const Matching& m) {
    return g.vertex_count() - 2 * m.size() == 1;
}

namespace detail {

// Blossom-shrinking maximum matching (the classic O(V^3) formulation).
// Deterministic: vertices are scanned in increasing id order and
// neighbour lists are sorted.
class BlossomSolver {
public:
    explicit BlossomSolver(const Graph& g)
        : g_(g), n_(g.vertex_count()), match_(n_, -1), parent_(n_), base_(n_), used_(n_), in_blossom_(n_) {}

    std::vector<int> solve() {
        for (int v = 0; v < n_; ++v) {
            if (match_[v] == -1) {
                int u = find_augmenting_path(v);
                while (u != -1) {
                    int pv = parent_[u];
                    int ppv = match_[pv];
                    match_[u] = pv;
                    match_[pv] = u;
                    u = ppv;
                }
            }
        }
        return match_;
    }

private:
    int lowest_common_base(int a, int b) {
        std::vector<bool> on_path(n_, false);
        int x = a;
        for (;;) {
            x = base_[x];
            on_path[x] = true;
            if (match_[x] == -1) break;
            x = parent_[match_[x]];
        }
        int y = b;
        for (;;) {
            y = base_[y];
            if (on_path[y]) return y;
            y = parent_[match_[y]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = true;
            in_blossom_[base_[match_[v]]] = true;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    int find_augmenting_path(int root) {
        std::fill(used_.begin(), used_.end(), false);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (int i = 0; i < n_; ++i) base_[i] = i;
        used_[root] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : g_.neighbors(v)) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
                    int b = lowest_common_base(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), false);
                    mark_path(v, b, to);
                    mark_path(to, b, v);
                    for (int i = 0; i < n_; ++i) {
                        if (in_blossom_[base_[i]]) {
                            base_[i] = b;
                            if (!used_[i]) {
                                used_[i] = true;
                                q.push(i);
                            }
                        }
                    }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (match_[to] == -1) return to;
                    used_[match_[to]] = true;
                    q.push(match_[to]);
                }
            }
        }
        return -1;
    }

    const Graph& g_;
    int n_;
    std::vector<int> match_, parent_, base_;
    std::vector<bool> used_, in_blossom_;
};

}  // namespace detail

inline Matching maximum_matching(const Graph& g) {
    std::vector<int> match = detail::BlossomSolver(g).solve();
    EdgeList edges;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (match[v] > v) edges.emplace_back(v, match[v]);
    }
    return Matching::from_edges(g, edges);
}

inline int matching_number(const Graph& g) { return maximum_matching(g).size(); }

namespace detail {

template <class Fn>
void max_matching_rec(const Graph& g, int v, int matched, int free_remaining, int mu,
                      std::vector<int>& mate, Budget& budget, Fn& fn) {
    budget.spend();
    if (matched + free_remaining / 2 < mu) return;
    const int n = g.vertex_count();
    while (v < n && mate[v] != -1) ++v;
    if (v == n) {
        if (matched == mu) {
            EdgeList edges;
            for (int a = 0; a < n; ++a) {
                if (mate[a] > a) edges.emplace_back(a, mate[a]);
            }
            fn(Matching::from_edges(g, edges));
        }
        return;
    }
    // v matched to an undecided neighbour (necessarily of larger id); the
    // matched branches precede the exposed branch so matchings stream out in
    // lexicographic order of their edge lists
    for (int u : g.neighbors(v)) {
        if (u > v && mate[u] == -1) {
            mate[v] = u;
            mate[u] = v;
            max_matching_rec(g, v + 1, matched + 1, free_remaining - 2, mu, mate, budget, fn);
            mate[v] = -1;
            mate[u] = -1;
        }
    }
    // v stays exposed
    mate[v] = -2;
    max_matching_rec(g, v + 1, matched, free_remaining - 1, mu, mate, budget, fn);
    mate[v] = -1;
}

}  // namespace detail

/// Calls fn once per maximum matching. Exponential; budgeted.
template <class Fn>
void for_each_maximum_matching(const Graph& g, Budget& budget, Fn&& fn) {
    int mu = matching_number(g);
    std::vector<int> mate(g.vertex_count(), -1);
    detail::max_matching_rec(g, 0, 0, g.vertex_count(), mu, mate, budget, fn);
}

inline std::vector<Matching> all_maximum_matchings(const Graph& g, Budget& budget) {
    std::vector<Matching> out;
    for_each_maximum_matching(g, budget, [&](const Matching& m) { out.push_back(m); });
    return out;
}

struct UniquePerfectMatching {
    bool unique = false;
    std::optional<Matching> matching;  // a perfect matching when one exists
};

/// Uniqueness is decided from a single perfect matching M: a second perfect
/// matching exists iff some edge e of M can be re-matched around, i.e.
/// G - e still has a perfect matching (M triangle M' is then a disjoint
/// union of M-alternating cycles, one of which crosses e).
inline UniquePerfectMatching has_unique_perfect_matching(const Graph& g) {
    Matching m = maximum_matching(g);
    if (!is_perfect(g, m)) return {false, std::nullopt};
    for (const Edge& e : m.edges()) {
        Graph h = delete_edge(g, e.u, e.v);
        if (2 * matching_number(h) == g.vertex_count()) return {false, std::move(m)};
    }
    return {true, std::move(m)};
}

enum class EdgeKind { matched = 0, unmatched = 1 };

struct WalkState {
    int vertex = 0;
    EdgeKind last_edge = EdgeKind::matched;

    bool operator==(const WalkState& o) const { return vertex == o.vertex && last_edge == o.last_edge; }
    bool operator<(const WalkState& o) const {
        return vertex != o.vertex ? vertex < o.vertex
                                  : static_cast<int>(last_edge) < static_cast<int>(o.last_edge);
    }
};

/// All (vertex, last-edge-kind) states reachable from start by alternating
/// walks whose first edge has the requested kind. Walks may repeat vertices,
/// so the state space is the 2n automaton, not the path tree.
inline std::vector<WalkState> alternating_reach(const Graph& g, const Matching& m, int start,
                                                EdgeKind first_edge) {
    const int n = g.vertex_count();
    std::vector<std::array<bool, 2>> seen(n, {false, false});
    std::queue<WalkState> q;
    auto push = [&](int v, EdgeKind k) {
        if (!seen[v][static_cast<int>(k)]) {
            seen[v][static_cast<int>(k)] = true;
            q.push({v, k});
        }
    };
    if (first_edge == EdgeKind::matched) {
        if (m.saturates(start)) push(m.mate(start), EdgeKind::matched);
    } else {
        for (int w : g.neighbors(start)) {
            if (!m.contains(start, w)) push(w, EdgeKind::unmatched);
        }
    }
    while (!q.empty()) {
        WalkState s = q.front();
        q.pop();
        if (s.last_edge == EdgeKind::matched) {
            for (int w : g.neighbors(s.vertex)) {
                if (!m.contains(s.vertex, w)) push(w, EdgeKind::unmatched);
            }
        } else if (m.saturates(s.vertex)) {
            push(m.mate(s.vertex), EdgeKind::matched);
        }
    }
    std::vector<WalkState> out;
    for (int v = 0; v < n; ++v) {
        for (int k = 0; k < 2; ++k) {
            if (seen[v][k]) out.push_back({v, static_cast<EdgeKind>(k)});
        }
    }
    return out;
}

/// G - v has a perfect matching for every vertex v.
inline bool is_factor_critical(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0 || n % 2 == 0) return false;
    if (!is_connected(g)) return false;
    for (int v = 0; v < n; ++v) {
        auto [h, ignore] = delete_vertex(g, v);
        if (2 * matching_number(h) != n - 1) return false;
    }
    return true;
}

}  // namespace sdke
