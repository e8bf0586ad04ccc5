#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sdke/bitset.hpp"

namespace sdke {

/// Undirected edge, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}

    bool operator==(const Edge& o) const { return u == o.u && v == o.v; }
    bool operator!=(const Edge& o) const { return !(*this == o); }
    bool operator<(const Edge& o) const { return u != o.u ? u < o.u : v < o.v; }
};

using EdgeList = std::vector<Edge>;

/// Immutable simple undirected graph on dense vertex ids 0..n-1.
class Graph {
public:
    Graph() = default;

    static Graph from_edges(int n, const EdgeList& edges) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
        Graph g;
        g.n_ = n;
        g.adj_.assign(n, {});
        g.adj_bits_.assign(n, VertexSet(n));
        for (const Edge& e : edges) {
            if (e.u < 0 || e.v >= n) {
                throw std::invalid_argument("Graph: vertex " + std::to_string(e.v) +
                                            " out of range [0," + std::to_string(n) + ")");
            }
            if (e.u == e.v) {
                throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(e.u));
            }
            if (g.adj_bits_[e.u].test(e.v)) {
                throw std::invalid_argument("Graph: duplicate edge " + std::to_string(e.u) + "-" +
                                            std::to_string(e.v));
            }
            g.adj_bits_[e.u].set(e.v);
            g.adj_bits_[e.v].set(e.u);
            g.adj_[e.u].push_back(e.v);
            g.adj_[e.v].push_back(e.u);
            ++g.m_;
        }
        for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
        return g;
    }

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }

    const std::vector<int>& neighbors(int v) const {
        check(v);
        return adj_[v];
    }

    const VertexSet& adj(int v) const {
        check(v);
        return adj_bits_[v];
    }

    bool has_edge(int u, int v) const {
        check(u);
        return u != v && adj_bits_[u].test(v);
    }

    int degree(int v) const {
        check(v);
        return static_cast<int>(adj_[v].size());
    }

    EdgeList edges() const {
        EdgeList out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int u = 0; u < n_; ++u) {
            for (int v : adj_[u]) {
                if (u < v) out.emplace_back(u, v);
            }
        }
        return out;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    void check(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
    }

    int n_ = 0;
    long long m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<VertexSet> adj_bits_;
};

/// N(S): union of neighbourhoods of the members of S. May intersect S.
inline VertexSet neighborhood(const Graph& g, const VertexSet& s) {
    VertexSet out(g.vertex_count());
    s.for_each([&](int v) { out |= g.adj(v); });
    return out;
}

/// Boundary of S: edges with exactly one endpoint in S.
inline EdgeList boundary(const Graph& g, const VertexSet& s) {
    EdgeList out;
    for (const Edge& e : g.edges()) {
        if (s.test(e.u) != s.test(e.v)) out.push_back(e);
    }
    return out;
}

inline int isolated_count(const Graph& g) {
    int c = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0) ++c;
    }
    return c;
}

inline std::vector<VertexSet> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<VertexSet> comps;
    std::vector<bool> seen(n, false);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        VertexSet comp(n);
        stack.push_back(s);
        seen[s] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.set(v);
            for (int w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline bool is_connected(const Graph& g) {
    return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

/// Number of connected components of odd order.
inline int odd_component_count(const Graph& g) {
    int c = 0;
    for (const VertexSet& comp : connected_components(g)) {
        if (comp.count() % 2 == 1) ++c;
    }
    return c;
}

inline int min_degree(const Graph& g) {
    int d = g.vertex_count() == 0 ? 0 : g.vertex_count();
    for (int v = 0; v < g.vertex_count(); ++v) d = std::min(d, g.degree(v));
    return d;
}

/// G[X] with dense relabeling; second result maps new ids to old ids.
inline std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& x) {
    std::vector<int> new_to_old = x.to_vector();
    std::vector<int> old_to_new(g.vertex_count(), -1);
    for (std::size_t i = 0; i < new_to_old.size(); ++i) old_to_new[new_to_old[i]] = static_cast<int>(i);
    EdgeList edges;
    for (const Edge& e : g.edges()) {
        if (x.test(e.u) && x.test(e.v)) edges.emplace_back(old_to_new[e.u], old_to_new[e.v]);
    }
    return {Graph::from_edges(static_cast<int>(new_to_old.size()), edges), std::move(new_to_old)};
}

inline std::pair<Graph, std::vector<int>> delete_vertex(const Graph& g, int v) {
    VertexSet keep = VertexSet::full(g.vertex_count());
    keep.reset(v);
    return induced_subgraph(g, keep);
}

inline Graph delete_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("delete_edge: not an edge");
    EdgeList edges;
    const Edge gone(u, v);
    for (const Edge& e : g.edges()) {
        if (e != gone) edges.push_back(e);
    }
    return Graph::from_edges(g.vertex_count(), edges);
}

}  // namespace sdke
