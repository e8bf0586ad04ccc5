#pragma once

#include <algorithm>
#include <vector>

#include "sdke/budget.hpp"
#include "sdke/graph.hpp"

namespace sdke {

namespace detail {

template <class Fn>
void independent_rec(const Graph& g, int next, VertexSet& current, const VertexSet& blocked,
                     Budget& budget, Fn& fn) {
    budget.spend();
    if (next == g.vertex_count()) {
        fn(const_cast<const VertexSet&>(current));
        return;
    }
    independent_rec(g, next + 1, current, blocked, budget, fn);
    if (!blocked.test(next)) {
        VertexSet blocked2 = blocked;
        blocked2 |= g.adj(next);
        current.set(next);
        independent_rec(g, next + 1, current, blocked2, budget, fn);
        current.reset(next);
    }
}

}  // namespace detail

/// Calls fn for every independent set of g exactly once, including the
/// empty set. Exponential; intended for small graphs, guarded by budget.
template <class Fn>
void for_each_independent_set(const Graph& g, Budget& budget, Fn&& fn) {
    VertexSet current(g.vertex_count());
    VertexSet blocked(g.vertex_count());
    detail::independent_rec(g, 0, current, blocked, budget, fn);
}

inline std::vector<VertexSet> all_independent_sets(const Graph& g, Budget& budget) {
    std::vector<VertexSet> out;
    for_each_independent_set(g, budget, [&](const VertexSet& s) { out.push_back(s); });
    return out;
}

namespace detail {

inline void alpha_rec(const Graph& g, VertexSet candidates, int current, int& best, Budget& budget) {
    budget.spend();
    if (current + candidates.count() <= best) return;
    if (candidates.empty()) {
        best = std::max(best, current);
        return;
    }
    // branch on a candidate of maximum degree within the candidate set
    int pick = -1, pick_deg = -1;
    candidates.for_each([&](int v) {
        int d = (g.adj(v) & candidates).count();
        if (d > pick_deg) {
            pick_deg = d;
            pick = v;
        }
    });
    VertexSet with = candidates;
    with.reset(pick);
    with -= g.adj(pick);
    alpha_rec(g, with, current + 1, best, budget);
    VertexSet without = candidates;
    without.reset(pick);
    alpha_rec(g, without, current, best, budget);
}

}  // namespace detail

/// alpha(G) by branch and bound. Refuses very large inputs outright.
inline int independence_number(const Graph& g, Budget& budget) {
    if (g.vertex_count() > 40) {
        throw std::invalid_argument("independence_number: graph too large for exact search");
    }
    int best = 0;
    detail::alpha_rec(g, VertexSet::full(g.vertex_count()), 0, best, budget);
    return best;
}

inline int independence_number(const Graph& g) {
    Budget b;
    return independence_number(g, b);
}

/// Omega(G): all maximum independent sets, lexicographically ordered.
inline std::vector<VertexSet> maximum_independent_sets(const Graph& g, Budget& budget) {
    int alpha = independence_number(g, budget);
    std::vector<VertexSet> out;
    for_each_independent_set(g, budget, [&](const VertexSet& s) {
        if (s.count() == alpha) out.push_back(s);
    });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace sdke
