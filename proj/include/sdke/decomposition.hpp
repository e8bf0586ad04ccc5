#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sdke/budget.hpp"
#include "sdke/graph.hpp"
#include "sdke/independent.hpp"
#include "sdke/matching.hpp"
#include "sdke/structures.hpp"

namespace sdke {

struct GallaiEdmondsDecomposition {
    VertexSet d;  // vertices missed by some maximum matching
    VertexSet a;  // N(D) \ D
    VertexSet c;  // the rest
    std::vector<VertexSet> components_of_d;  // components of G[D], each a subset of d
    std::vector<bool> component_nontrivial;  // parallel to components_of_d
};

inline GallaiEdmondsDecomposition gallai_edmonds(const Graph& g) {
    const int n = g.vertex_count();
    const int mu = matching_number(g);
    GallaiEdmondsDecomposition ge{VertexSet(n), VertexSet(n), VertexSet(n), {}, {}};
    for (int v = 0; v < n; ++v) {
        auto [h, ignore] = delete_vertex(g, v);
        if (matching_number(h) == mu) ge.d.set(v);
    }
    ge.a = neighborhood(g, ge.d) - ge.d;
    ge.c = (ge.d | ge.a).complement();
    auto [gd, new_to_old] = induced_subgraph(g, ge.d);
    for (const VertexSet& comp : connected_components(gd)) {
        VertexSet original(n);
        comp.for_each([&](int v) { original.set(new_to_old[v]); });
        ge.components_of_d.push_back(original);
        ge.component_nontrivial.push_back(original.count() > 1);
    }
    return ge;
}

enum class SdKeRoute { algorithm1, larson, reduction_oracle, oracle };

inline const char* route_name(SdKeRoute r) {
    switch (r) {
        case SdKeRoute::algorithm1: return "algorithm1";
        case SdKeRoute::larson: return "larson";
        case SdKeRoute::reduction_oracle: return "reduction+oracle";
        case SdKeRoute::oracle: return "oracle";
    }
    return "?";
}

struct SdKePartition {
    VertexSet sd;
    VertexSet ke;
    SdKeRoute route = SdKeRoute::oracle;
};

/// Leaf peeling for graphs with a unique perfect matching: a leaf and its
/// (forced) partner are Konig-Egervary and the rest reduces recursively.
/// The matching itself is never needed: a leaf's partner is its only
/// neighbour.
inline SdKePartition algorithm1_sdke(const Graph& g) {
    UniquePerfectMatching upm = has_unique_perfect_matching(g);
    if (!upm.matching) throw std::invalid_argument("algorithm1_sdke: graph has no perfect matching");
    if (!upm.unique) throw std::invalid_argument("algorithm1_sdke: perfect matching is not unique");
    const int n = g.vertex_count();
    std::vector<int> degree(n);
    for (int v = 0; v < n; ++v) degree[v] = g.degree(v);
    VertexSet alive = VertexSet::full(n);
    VertexSet ke(n);
    bool progress = true;
    while (progress) {
        progress = false;
        for (int v = 0; v < n; ++v) {
            if (!alive.test(v) || degree[v] != 1) continue;
            int partner = -1;
            for (int w : g.neighbors(v)) {
                if (alive.test(w)) partner = w;
            }
            ke.set(v);
            ke.set(partner);
            for (int x : {v, partner}) {
                alive.reset(x);
                for (int w : g.neighbors(x)) {
                    if (alive.test(w)) --degree[w];
                }
            }
            progress = true;
            break;
        }
    }
    return {ke.complement(), ke, SdKeRoute::algorithm1};
}

/// An independent set maximizing |I| - |N(I)|, then cardinality, then
/// lexicographic order. Brute force over all independent sets.
inline VertexSet max_critical_independent_set(const Graph& g, Budget& budget) {
    VertexSet best(g.vertex_count());
    int best_diff = 0;  // the empty set achieves 0
    int best_size = 0;
    for_each_independent_set(g, budget, [&](const VertexSet& s) {
        int diff = s.count() - neighborhood(g, s).count();
        if (diff > best_diff || (diff == best_diff && s.count() > best_size) ||
            (diff == best_diff && s.count() == best_size && s < best)) {
            best = s;
            best_diff = diff;
            best_size = s.count();
        }
    });
    return best;
}

/// For graphs with a perfect matching KE(G) equals the Larson set
/// L(G) = J u N(J) for a maximum critical independent set J.
inline SdKePartition larson_sdke(const Graph& g, Budget& budget) {
    if (2 * matching_number(g) != g.vertex_count()) {
        throw std::invalid_argument("larson_sdke: graph has no perfect matching");
    }
    VertexSet j = max_critical_independent_set(g, budget);
    VertexSet ke = j | neighborhood(g, j);
    return {ke.complement(), ke, SdKeRoute::larson};
}

struct HallTutteResult {
    bool holds = false;
    int failed_condition = 0;          // 1: Hall with excess, 2: Tutte; 0 when holds
    std::optional<VertexSet> witness;  // violating S when !holds
};

/// G is Sterboul-Deming with a perfect matching iff |N(S)| > |S| for every
/// nonempty independent S and odd(G-S) <= |S| for every S. Both conditions
/// checked by brute force, a failing S returned as witness.
inline HallTutteResult hall_tutte_sd_with_pm(const Graph& g, Budget& budget) {
    const int n = g.vertex_count();
    if (n > 24) throw std::invalid_argument("hall_tutte_sd_with_pm: graph too large for subset scan");
    // condition 1 over independent sets only
    HallTutteResult out;
    std::optional<VertexSet> violation;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        budget.spend();
        VertexSet s(n);
        bool independent = true;
        for (int v = 0; v < n && independent; ++v) {
            if (!(mask >> v & 1)) continue;
            if (s.intersects(g.adj(v))) independent = false;
            s.set(v);
        }
        if (!independent) continue;
        if (neighborhood(g, s).count() <= s.count()) {
            out.holds = false;
            out.failed_condition = 1;
            out.witness = s;
            return out;
        }
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        budget.spend();
        VertexSet s(n);
        for (int v = 0; v < n; ++v) {
            if (mask >> v & 1) s.set(v);
        }
        auto [h, ignore] = induced_subgraph(g, s.complement());
        if (odd_component_count(h) > s.count()) {
            out.holds = false;
            out.failed_condition = 2;
            out.witness = s;
            return out;
        }
    }
    out.holds = true;
    return out;
}

/// Origin of one vertex of R(G).
struct ReducedOrigin {
    enum class Kind { original, triangle };
    Kind kind = Kind::original;
    int origin = -1;             // original vertex id, or triangle index
    bool distinguished = false;  // t_i, the triangle vertex carrying attachments
};

struct ReducedForm {
    Graph graph;
    std::vector<ReducedOrigin> origin;        // per vertex of graph
    std::vector<int> kept_to_reduced;         // original id -> reduced id, -1 if removed
    std::vector<VertexSet> removed_components;  // nontrivial D-components, triangle order
    GallaiEdmondsDecomposition ge;            // decomposition of the input graph
};

/// R(G): every nontrivial component of G[D(G)] collapses to a triangle whose
/// distinguished vertex t_i inherits the component's attachments to A(G).
inline ReducedForm reduce(const Graph& g) {
    const int n = g.vertex_count();
    GallaiEdmondsDecomposition ge = gallai_edmonds(g);
    VertexSet removed(n);
    std::vector<VertexSet> removed_components;
    for (std::size_t i = 0; i < ge.components_of_d.size(); ++i) {
        if (ge.component_nontrivial[i]) {
            removed |= ge.components_of_d[i];
            removed_components.push_back(ge.components_of_d[i]);
        }
    }
    std::vector<int> kept_to_reduced(n, -1);
    std::vector<ReducedOrigin> origin;
    int next = 0;
    for (int v = 0; v < n; ++v) {
        if (!removed.test(v)) {
            kept_to_reduced[v] = next++;
            origin.push_back({ReducedOrigin::Kind::original, v, false});
        }
    }
    EdgeList edges;
    for (const Edge& e : g.edges()) {
        if (!removed.test(e.u) && !removed.test(e.v)) {
            edges.emplace_back(kept_to_reduced[e.u], kept_to_reduced[e.v]);
        }
    }
    for (std::size_t i = 0; i < removed_components.size(); ++i) {
        int t = next;
        origin.push_back({ReducedOrigin::Kind::triangle, static_cast<int>(i), true});
        origin.push_back({ReducedOrigin::Kind::triangle, static_cast<int>(i), false});
        origin.push_back({ReducedOrigin::Kind::triangle, static_cast<int>(i), false});
        edges.emplace_back(t, t + 1);
        edges.emplace_back(t, t + 2);
        edges.emplace_back(t + 1, t + 2);
        VertexSet attach = neighborhood(g, removed_components[i]) & ge.a;
        attach.for_each([&](int x) { edges.emplace_back(kept_to_reduced[x], t); });
        next += 3;
    }
    return {Graph::from_edges(next, edges), std::move(origin), std::move(kept_to_reduced),
            std::move(removed_components), std::move(ge)};
}

inline int triangle_vertex(const ReducedForm& r, int triangle_index) {
    for (int v = 0; v < r.graph.vertex_count(); ++v) {
        if (r.origin[v].kind == ReducedOrigin::Kind::triangle && r.origin[v].origin == triangle_index &&
            r.origin[v].distinguished) {
            return v;
        }
    }
    throw std::out_of_range("triangle_vertex: no such triangle");
}

/// R(M): keep matching edges outside the removed components, reroute each
/// matched A-to-component edge to the component's t_i, and give every
/// triangle its internal edge {u_i, w_i} (mirroring the near-perfect
/// restriction of M to the component).
inline Matching reduce_matching(const Graph& g, const Matching& m, const ReducedForm& r) {
    VertexSet removed(g.vertex_count());
    for (const VertexSet& comp : r.removed_components) removed |= comp;
    EdgeList edges;
    for (const Edge& e : m.edges()) {
        bool ru = removed.test(e.u), rv = removed.test(e.v);
        if (!ru && !rv) {
            edges.emplace_back(r.kept_to_reduced[e.u], r.kept_to_reduced[e.v]);
        } else if (ru != rv) {
            int a = ru ? e.v : e.u;
            int d = ru ? e.u : e.v;
            for (std::size_t i = 0; i < r.removed_components.size(); ++i) {
                if (r.removed_components[i].test(d)) {
                    int t = triangle_vertex(r, static_cast<int>(i));
                    edges.emplace_back(r.kept_to_reduced[a], t);
                    break;
                }
            }
        }
    }
    for (std::size_t i = 0; i < r.removed_components.size(); ++i) {
        int t = triangle_vertex(r, static_cast<int>(i));
        edges.emplace_back(t + 1, t + 2);
    }
    return Matching::from_edges(r.graph, std::move(edges));
}

/// The SD-KE decomposition, routed by what the graph admits:
/// unique perfect matching -> leaf peeling; perfect matching -> Larson set;
/// otherwise the certificate oracle, run on R(G) when the reduction shrinks
/// the graph (KE(G) = KE(R(G))) and directly when it would be the identity.
inline SdKePartition sdke(const Graph& g, Budget& budget) {
    const int n = g.vertex_count();
    UniquePerfectMatching upm = has_unique_perfect_matching(g);
    if (upm.unique) return algorithm1_sdke(g);
    if (upm.matching) return larson_sdke(g, budget);
    ReducedForm r = reduce(g);
    if (r.removed_components.empty()) {
        VertexSet sd = sd_oracle(g, StructureVariant::J, budget);
        return {sd, sd.complement(), SdKeRoute::oracle};
    }
    VertexSet ke_reduced = sd_oracle(r.graph, StructureVariant::J, budget).complement();
    VertexSet ke(n);
    ke_reduced.for_each([&](int v) {
        const ReducedOrigin& o = r.origin[v];
        if (o.kind == ReducedOrigin::Kind::original) ke.set(o.origin);
        // triangle vertices always land in SD(R(G)); nothing to map back
    });
    return {ke.complement(), ke, SdKeRoute::reduction_oracle};
}

inline SdKePartition sdke(const Graph& g) {
    Budget b;
    return sdke(g, b);
}

/// alpha(G) + mu(G) == |V(G)|.
inline bool is_konig_egervary(const Graph& g, Budget& budget) {
    return independence_number(g, budget) + matching_number(g) == g.vertex_count();
}

/// KE(G) empty, i.e. every vertex is covered by some flower or posy.
inline bool is_sd_graph(const Graph& g, Budget& budget) {
    return sdke(g, budget).ke.empty();
}

}  // namespace sdke
