#pragma once

#include "sdke/graph.hpp"

namespace sdke {

inline Graph empty_graph(int n) { return Graph::from_edges(n, {}); }

inline Graph path_graph(int n) {
    EdgeList e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    EdgeList e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
}

inline Graph complete_graph(int n) {
    EdgeList e;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    }
    return Graph::from_edges(n, e);
}

inline Graph complete_bipartite(int a, int b) {
    EdgeList e;
    for (int u = 0; u < a; ++u) {
        for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
    }
    return Graph::from_edges(a + b, e);
}

/// Two triangles {0,1,2} and {3,4,5} joined by the bridge 2-3.
inline Graph barbell_graph() {
    return Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {2, 3}});
}

/// Outer cycle 0..4, inner pentagram 5..9, spokes i - (i+5).
inline Graph petersen_graph() {
    EdgeList e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
        e.emplace_back(i, 5 + i);
    }
    return Graph::from_edges(10, e);
}

}  // namespace sdke
