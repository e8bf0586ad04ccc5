#pragma once

#include <cstdint>
#include <random>
#include <unordered_set>
#include <vector>

#include "sdke/graph.hpp"

namespace sdke {

namespace detail {

// Lexicographically smallest adjacency bit string over all vertex orderings,
// bits in column-major pair order (0,1),(0,2),(1,2),(0,3),... so that fixing
// the first k vertices of the ordering determines a prefix. Backtracking
// with prefix pruning against the best code found so far.
class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g)
        : g_(g), n_(g.vertex_count()), total_bits_(n_ * (n_ - 1) / 2), perm_(n_), used_(n_, false) {}

    std::uint64_t run() {
        if (n_ > 11) throw std::invalid_argument("canonical_code: supported only for n <= 11");
        if (n_ <= 1) return 0;
        rec(0, 0, 0);
        return best_;
    }

private:
    void rec(int k, std::uint64_t prefix, int bits) {
        if (k == n_) {
            if (!have_best_ || prefix < best_) {
                best_ = prefix;
                have_best_ = true;
            }
            return;
        }
        for (int v = 0; v < n_; ++v) {
            if (used_[v]) continue;
            std::uint64_t np = prefix;
            for (int i = 0; i < k; ++i) np = (np << 1) | (g_.has_edge(perm_[i], v) ? 1 : 0);
            int nbits = bits + k;
            if (have_best_ && np > (best_ >> (total_bits_ - nbits))) continue;
            perm_[k] = v;
            used_[v] = true;
            rec(k + 1, np, nbits);
            used_[v] = false;
        }
    }

    const Graph& g_;
    int n_;
    int total_bits_;
    std::vector<int> perm_;
    std::vector<bool> used_;
    std::uint64_t best_ = ~std::uint64_t{0};
    bool have_best_ = false;
};

}  // namespace detail

/// Canonical isomorphism code for small graphs (n <= 11).
inline std::uint64_t canonical_code(const Graph& g) { return detail::CanonicalSearch(g).run(); }

/// All graphs on n vertices up to isomorphism, built by extending the
/// (n-1)-vertex list with every possible neighbourhood of a new vertex and
/// deduplicating by canonical code. Memoized across calls.
inline const std::vector<Graph>& all_graphs(int n) {
    static std::vector<std::vector<Graph>> cache{{Graph::from_edges(0, {})}};
    if (n < 0 || n > 9) throw std::invalid_argument("all_graphs: supported only for 0 <= n <= 9");
    while (static_cast<int>(cache.size()) <= n) {
        int k = static_cast<int>(cache.size());
        std::vector<Graph> next;
        std::unordered_set<std::uint64_t> seen;
        for (const Graph& base : cache[k - 1]) {
            EdgeList base_edges = base.edges();
            for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
                EdgeList edges = base_edges;
                for (int v = 0; v < k - 1; ++v) {
                    if (mask >> v & 1) edges.emplace_back(v, k - 1);
                }
                Graph candidate = Graph::from_edges(k, edges);
                if (seen.insert(canonical_code(candidate)).second) {
                    next.push_back(std::move(candidate));
                }
            }
        }
        cache.push_back(std::move(next));
    }
    return cache[n];
}

inline std::vector<Graph> connected_graphs(int n) {
    std::vector<Graph> out;
    for (const Graph& g : all_graphs(n)) {
        if (is_connected(g)) out.push_back(g);
    }
    return out;
}

inline Graph random_graph(int n, double edge_probability, std::mt19937_64& rng) {
    std::bernoulli_distribution flip(edge_probability);
    EdgeList edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (flip(rng)) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

/// Random graph conditioned on minimum degree: sample dense, then add edges
/// at deficient vertices until the bound holds.
inline Graph random_graph_min_degree(int n, int min_deg, std::mt19937_64& rng) {
    if (min_deg > n - 1) throw std::invalid_argument("random_graph_min_degree: bound too large");
    std::uniform_real_distribution<double> pdist(0.70, 0.95);
    Graph g = random_graph(n, pdist(rng), rng);
    for (;;) {
        int worst = -1;
        for (int v = 0; v < n; ++v) {
            if (g.degree(v) < min_deg && (worst == -1 || g.degree(v) < g.degree(worst))) worst = v;
        }
        if (worst == -1) return g;
        std::vector<int> candidates;
        for (int u = 0; u < n; ++u) {
            if (u != worst && !g.has_edge(worst, u)) candidates.push_back(u);
        }
        std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
        EdgeList edges = g.edges();
        edges.emplace_back(worst, candidates[pick(rng)]);
        g = Graph::from_edges(n, edges);
    }
}

}  // namespace sdke
