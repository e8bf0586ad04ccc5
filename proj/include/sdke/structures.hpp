#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <queue>
#include <variant>
#include <vector>

#include "sdke/budget.hpp"
#include "sdke/graph.hpp"
#include "sdke/matching.hpp"

namespace sdke {

enum class StructureVariant { T, S, J };

/// Odd alternating cycle. cycle[0] is the base (the unique cycle vertex not
/// saturated by a cycle edge); cycle edge i, from cycle[i] to cycle[i+1]
/// (wrapping), is matched exactly when i is odd.
struct Blossom {
    std::vector<int> cycle;

    int base() const { return cycle.front(); }
    bool operator==(const Blossom& o) const { return cycle == o.cycle; }
    bool operator<(const Blossom& o) const { return cycle < o.cycle; }
};

/// Blossom plus an even alternating stem from the base to an unsaturated
/// root. stem.front() == base, stem.back() == root; stem == {base} when the
/// base itself is unsaturated. Variant T requires the stem to be a path
/// meeting the cycle only at the base; variant J allows any walk.
struct FlowerCertificate {
    Blossom blossom;
    std::vector<int> stem;
    int root = -1;
    StructureVariant variant = StructureVariant::J;
};

/// Two blossoms whose bases are joined by an alternating connector starting
/// and ending with matched edges. Variant T/S require a simple path with no
/// internal vertex in either blossom (T additionally constrains how the
/// blossoms may overlap); variant J allows any walk.
struct PosyCertificate {
    Blossom first;
    Blossom second;
    std::vector<int> connector;
    StructureVariant variant = StructureVariant::J;
};

struct Certificate {
    std::variant<FlowerCertificate, PosyCertificate> witness;
    Matching matching;
};

namespace detail {

inline VertexSet vertex_set_of(int n, const std::vector<int>& vs) {
    VertexSet s(n);
    for (int v : vs) s.set(v);
    return s;
}

template <class Fn>
void blossom_dfs(const Graph& g, const Matching& m, int base, std::vector<int>& path,
                 VertexSet& on_path, int edges_so_far, Budget& budget, Fn& fn) {
    budget.spend();
    const int cur = path.back();
    const bool next_matched = (edges_so_far + 1) % 2 == 0;
    if (next_matched) {
        if (!m.saturates(cur)) return;
        int w = m.mate(cur);
        if (!on_path.test(w)) {
            path.push_back(w);
            on_path.set(w);
            blossom_dfs(g, m, base, path, on_path, edges_so_far + 1, budget, fn);
            on_path.reset(w);
            path.pop_back();
        }
        return;
    }
    for (int w : g.neighbors(cur)) {
        if (m.contains(cur, w)) continue;
        if (w == base) {
            // closing edge is unmatched; cycle needs >= 2 prior edges and the
            // canonical traversal direction to be reported once
            if (edges_so_far >= 2 && path[1] < path.back()) fn(path);
            continue;
        }
        if (on_path.test(w)) continue;
        path.push_back(w);
        on_path.set(w);
        blossom_dfs(g, m, base, path, on_path, edges_so_far + 1, budget, fn);
        on_path.reset(w);
        path.pop_back();
    }
}

}  // namespace detail

/// Calls fn for every M-blossom, each exactly once, base first in the cycle.
template <class Fn>
void for_each_blossom(const Graph& g, const Matching& m, Budget& budget, Fn&& fn) {
    for (int base = 0; base < g.vertex_count(); ++base) {
        std::vector<int> path{base};
        VertexSet on_path(g.vertex_count());
        on_path.set(base);
        auto emit = [&](const std::vector<int>& cycle) { fn(Blossom{cycle}); };
        detail::blossom_dfs(g, m, base, path, on_path, 0, budget, emit);
    }
}

inline std::vector<Blossom> find_blossoms(const Graph& g, const Matching& m, Budget& budget) {
    std::vector<Blossom> out;
    for_each_blossom(g, m, budget, [&](const Blossom& b) { out.push_back(b); });
    return out;
}

namespace detail {

/// Reachability over the (vertex, last-edge-kind) automaton from a set of
/// seed states, with predecessors kept for walk reconstruction.
struct ReachTable {
    struct Pred {
        int vertex = -1;  // predecessor state vertex, -1 for seed states
        int kind = -1;    // predecessor state kind
        int source = -1;  // walk origin (base or unsaturated vertex)
    };

    std::array<std::vector<char>, 2> reach;
    std::array<std::vector<Pred>, 2> pred;

    explicit ReachTable(int n) {
        reach[0].assign(n, 0);
        reach[1].assign(n, 0);
        pred[0].assign(n, {});
        pred[1].assign(n, {});
    }

    bool at(int v, EdgeKind k) const { return reach[static_cast<int>(k)][v] != 0; }
};

struct Seed {
    int vertex;
    EdgeKind kind;
    int source;
};

inline ReachTable alternating_closure(const Graph& g, const Matching& m,
                                      const std::vector<Seed>& seeds) {
    ReachTable table(g.vertex_count());
    std::queue<WalkState> q;
    auto visit = [&](int v, EdgeKind k, ReachTable::Pred p) {
        auto idx = static_cast<int>(k);
        if (!table.reach[idx][v]) {
            table.reach[idx][v] = 1;
            table.pred[idx][v] = p;
            q.push({v, k});
        }
    };
    for (const Seed& s : seeds) visit(s.vertex, s.kind, {-1, -1, s.source});
    while (!q.empty()) {
        WalkState s = q.front();
        q.pop();
        ReachTable::Pred p{s.vertex, static_cast<int>(s.last_edge), -1};
        if (s.last_edge == EdgeKind::matched) {
            for (int w : g.neighbors(s.vertex)) {
                if (!m.contains(s.vertex, w)) visit(w, EdgeKind::unmatched, p);
            }
        } else if (m.saturates(s.vertex)) {
            visit(m.mate(s.vertex), EdgeKind::matched, p);
        }
    }
    return table;
}

}  // namespace detail

/// All blossoms plus the two automaton closures the J-structure
/// characterization needs: walks leaving blossom bases through their matched
/// edges, and walks leaving unsaturated vertices through unmatched edges.
struct StructureScan {
    std::vector<Blossom> blossoms;  // sorted lexicographically by cycle
    VertexSet bases;
    std::vector<VertexSet> base_cover;  // base_cover[b]: vertices on blossoms based at b
    detail::ReachTable from_base;
    detail::ReachTable from_unsat;
};

inline StructureScan scan_structures(const Graph& g, const Matching& m, Budget& budget) {
    const int n = g.vertex_count();
    StructureScan scan{{}, VertexSet(n), std::vector<VertexSet>(n, VertexSet(n)),
                       detail::ReachTable(n), detail::ReachTable(n)};
    scan.blossoms = find_blossoms(g, m, budget);
    std::sort(scan.blossoms.begin(), scan.blossoms.end());
    for (const Blossom& b : scan.blossoms) {
        scan.bases.set(b.base());
        for (int v : b.cycle) scan.base_cover[b.base()].set(v);
    }
    std::vector<detail::Seed> base_seeds;
    scan.bases.for_each([&](int b) {
        if (m.saturates(b)) base_seeds.push_back({m.mate(b), EdgeKind::matched, b});
    });
    scan.from_base = detail::alternating_closure(g, m, base_seeds);
    std::vector<detail::Seed> unsat_seeds;
    for (int r = 0; r < n; ++r) {
        if (!m.saturates(r)) {
            for (int w : g.neighbors(r)) unsat_seeds.push_back({w, EdgeKind::unmatched, r});
        }
    }
    scan.from_unsat = detail::alternating_closure(g, m, unsat_seeds);
    return scan;
}

struct StructureSets {
    VertexSet flower;
    VertexSet posy;
};

/// Vertices lying on some M-Jflower / M-Jposy, via the walk automaton:
///  - a posy vertex is one reached from blossom bases by walks of both
///    terminal kinds (gluing the two reversed walks yields the connector);
///  - a flower vertex is on a blossom whose base reaches an unsaturated
///    root, or on a stem (reached from a base ending matched and from an
///    unsaturated vertex ending unmatched, in opposite directions).
inline StructureSets j_structure_vertices(const Graph& g, const Matching& m, Budget& budget) {
    const int n = g.vertex_count();
    StructureScan scan = scan_structures(g, m, budget);
    StructureSets out{VertexSet(n), VertexSet(n)};
    for (int v = 0; v < n; ++v) {
        if (scan.from_base.at(v, EdgeKind::matched) && scan.from_base.at(v, EdgeKind::unmatched)) {
            out.posy.set(v);
        }
    }
    scan.bases.for_each([&](int b) {
        bool live = !m.saturates(b) || scan.from_unsat.at(b, EdgeKind::matched);
        if (live) out.flower |= scan.base_cover[b];
    });
    for (int v = 0; v < n; ++v) {
        bool stem = (scan.from_base.at(v, EdgeKind::matched) && scan.from_unsat.at(v, EdgeKind::unmatched)) ||
                    (scan.from_base.at(v, EdgeKind::unmatched) && scan.from_unsat.at(v, EdgeKind::matched));
        bool root = !m.saturates(v) && scan.from_base.at(v, EdgeKind::unmatched);
        if (stem || root) out.flower.set(v);
    }
    return out;
}

namespace detail {

// Simple alternating stem paths out of a blossom base: first edge matched,
// even total length, ending at an unsaturated root, internally avoiding the
// cycle. Reports every such path (the same path prefix may extend further).
// Setting `stop` from the callback abandons the search.
template <class Fn>
void stem_dfs(const Graph& g, const Matching& m, std::vector<int>& path, VertexSet& on_path,
              const VertexSet& cycle_set, int edges_so_far, Budget& budget, bool& stop, Fn& fn) {
    if (stop) return;
    budget.spend();
    const int cur = path.back();
    const bool next_matched = (edges_so_far + 1) % 2 == 1;  // stem edges alternate m,n,m,...
    auto step = [&](int w) {
        if (stop || on_path.test(w) || cycle_set.test(w)) return;
        path.push_back(w);
        on_path.set(w);
        if ((edges_so_far + 1) % 2 == 0 && !m.saturates(w)) fn(path);
        stem_dfs(g, m, path, on_path, cycle_set, edges_so_far + 1, budget, stop, fn);
        on_path.reset(w);
        path.pop_back();
    };
    if (next_matched) {
        if (m.saturates(cur)) step(m.mate(cur));
    } else {
        for (int w : g.neighbors(cur)) {
            if (!m.contains(cur, w)) step(w);
        }
    }
}

// Simple alternating mm-paths from b1 to b2 internally avoiding `avoid`.
template <class Fn>
void connector_dfs(const Graph& g, const Matching& m, int target, std::vector<int>& path,
                   VertexSet& on_path, const VertexSet& avoid, int edges_so_far, Budget& budget,
                   bool& stop, Fn& fn) {
    if (stop) return;
    budget.spend();
    const int cur = path.back();
    const bool next_matched = (edges_so_far + 1) % 2 == 1;  // connector edges alternate m,n,...,m
    auto step = [&](int w) {
        if (stop) return;
        if (w == target) {
            if (next_matched) {
                path.push_back(w);
                fn(path);
                path.pop_back();
            }
            return;
        }
        if (on_path.test(w) || avoid.test(w)) return;
        path.push_back(w);
        on_path.set(w);
        connector_dfs(g, m, target, path, on_path, avoid, edges_so_far + 1, budget, stop, fn);
        on_path.reset(w);
        path.pop_back();
    };
    if (next_matched) {
        if (m.saturates(cur)) step(m.mate(cur));
    } else {
        for (int w : g.neighbors(cur)) {
            if (!m.contains(cur, w)) step(w);
        }
    }
}

/// T-posy overlap rule: the blossoms are either vertex-disjoint or share
/// exactly an alternating path whose terminal edges are matched.
inline bool t_intersection_ok(const Blossom& a, const Blossom& b, const Matching& m) {
    std::vector<int> shared;
    for (int v : a.cycle) {
        if (std::find(b.cycle.begin(), b.cycle.end(), v) != b.cycle.end()) shared.push_back(v);
    }
    if (shared.empty()) return true;
    auto cycle_edges = [](const Blossom& bl) {
        EdgeList es;
        for (std::size_t i = 0; i < bl.cycle.size(); ++i) {
            es.emplace_back(bl.cycle[i], bl.cycle[(i + 1) % bl.cycle.size()]);
        }
        std::sort(es.begin(), es.end());
        return es;
    };
    EdgeList ea = cycle_edges(a), eb = cycle_edges(b), common;
    std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(common));
    if (common.size() + 1 != shared.size()) return false;  // shared part must be a tree, in fact a path
    std::sort(shared.begin(), shared.end());
    std::vector<int> deg(shared.size(), 0);
    auto index_of = [&](int v) {
        return static_cast<int>(std::lower_bound(shared.begin(), shared.end(), v) - shared.begin());
    };
    std::vector<std::vector<int>> adj(shared.size());
    for (const Edge& e : common) {
        int iu = index_of(e.u), iv = index_of(e.v);
        ++deg[iu];
        ++deg[iv];
        adj[iu].push_back(iv);
        adj[iv].push_back(iu);
    }
    int ends = 0;
    for (int d : deg) {
        if (d == 0 || d > 2) return false;
        if (d == 1) ++ends;
    }
    if (ends != 2) return false;
    // walk the path from its smaller endpoint and check the mm alternation
    int start = -1;
    for (std::size_t i = 0; i < deg.size(); ++i) {
        if (deg[i] == 1) {
            start = static_cast<int>(i);
            break;
        }
    }
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (order.size() < shared.size()) {
        int nxt = -1;
        for (int w : adj[cur]) {
            if (w != prev) nxt = w;
        }
        if (nxt == -1) return false;  // disconnected shared part
        order.push_back(nxt);
        prev = cur;
        cur = nxt;
    }
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        bool matched = m.contains(shared[order[i]], shared[order[i + 1]]);
        bool want = (i % 2 == 0);  // terminal edges matched, alternating inside
        if (matched != want) return false;
    }
    return (order.size() - 1) % 2 == 1;  // odd edge count so both ends are matched
}

struct TScanOptions {
    bool collect = true;          // gather full vertex sets vs. existence-only
    bool flowers = true;
    bool posies = true;
    StructureVariant posy_variant = StructureVariant::T;
};

struct TScanResult {
    VertexSet flower;
    VertexSet posy;
    bool found_flower = false;
    bool found_posy = false;
};

inline TScanResult t_scan(const Graph& g, const Matching& m, const TScanOptions& opt,
                          Budget& budget) {
    const int n = g.vertex_count();
    TScanResult res{VertexSet(n), VertexSet(n), false, false};
    const VertexSet everything = VertexSet::full(n);
    std::vector<Blossom> blossoms = find_blossoms(g, m, budget);
    std::sort(blossoms.begin(), blossoms.end());
    if (opt.flowers) {
        for (const Blossom& b : blossoms) {
            if (!opt.collect && res.found_flower) break;
            if (opt.collect && res.flower == everything) break;
            VertexSet cycle_set = vertex_set_of(n, b.cycle);
            if (!m.saturates(b.base())) {
                res.found_flower = true;
                res.flower |= cycle_set;
                continue;
            }
            std::vector<int> path{b.base()};
            VertexSet on_path(n);
            on_path.set(b.base());
            VertexSet avoid = cycle_set;
            avoid.reset(b.base());
            bool stop = false;
            auto on_stem = [&](const std::vector<int>& stem) {
                res.found_flower = true;
                if (opt.collect) {
                    res.flower |= cycle_set;
                    res.flower |= vertex_set_of(n, stem);
                } else {
                    stop = true;
                }
            };
            stem_dfs(g, m, path, on_path, avoid, 0, budget, stop, on_stem);
        }
    }
    if (opt.posies) {
        for (std::size_t i = 0; i < blossoms.size(); ++i) {
            if (!opt.collect && res.found_posy) break;
            if (opt.collect && res.posy == everything) break;
            for (std::size_t j = i + 1; j < blossoms.size(); ++j) {
                if (!opt.collect && res.found_posy) break;
                if (opt.collect && res.posy == everything) break;
                const Blossom& a = blossoms[i];
                const Blossom& b = blossoms[j];
                if (a.base() == b.base()) continue;
                if (!m.saturates(a.base()) || !m.saturates(b.base())) continue;
                if (opt.posy_variant == StructureVariant::T && !t_intersection_ok(a, b, m)) continue;
                VertexSet avoid = vertex_set_of(n, a.cycle);
                avoid |= vertex_set_of(n, b.cycle);
                VertexSet pair_cover = avoid;
                std::vector<int> path{a.base()};
                VertexSet on_path(n);
                on_path.set(a.base());
                bool stop = false;
                auto on_connector = [&](const std::vector<int>& conn) {
                    res.found_posy = true;
                    if (opt.collect) {
                        res.posy |= pair_cover;
                        res.posy |= vertex_set_of(n, conn);
                    } else {
                        stop = true;
                    }
                };
                connector_dfs(g, m, b.base(), path, on_path, avoid, 0, budget, stop, on_connector);
            }
        }
    }
    return res;
}

}  // namespace detail

/// Vertices on M-Tflowers / M-Tposies, found by explicit simple-path search.
/// Exponential; budgeted.
inline StructureSets t_structure_vertices(const Graph& g, const Matching& m, Budget& budget) {
    detail::TScanOptions opt;
    detail::TScanResult r = detail::t_scan(g, m, opt, budget);
    return {r.flower, r.posy};
}

/// Existence checks used by the characterization of non-Konig-Egervary
/// graphs: a Tflower or an Sposy (every-matching side), a Tflower or a
/// Tposy (some-matching side).
inline bool has_t_flower_or_s_posy(const Graph& g, const Matching& m, Budget& budget) {
    detail::TScanOptions opt;
    opt.collect = false;
    opt.posy_variant = StructureVariant::S;
    detail::TScanResult r = detail::t_scan(g, m, opt, budget);
    return r.found_flower || r.found_posy;
}

inline bool has_t_flower_or_t_posy(const Graph& g, const Matching& m, Budget& budget) {
    detail::TScanOptions opt;
    opt.collect = false;
    opt.posy_variant = StructureVariant::T;
    detail::TScanResult r = detail::t_scan(g, m, opt, budget);
    return r.found_flower || r.found_posy;
}

/// SD(G): union of flower/posy vertices over every maximum matching, in the
/// requested variant (T and J must agree; that equality is test-enforced).
inline VertexSet sd_oracle(const Graph& g, StructureVariant variant, Budget& budget) {
    if (variant == StructureVariant::S) {
        throw std::invalid_argument("sd_oracle: variant must be T or J");
    }
    const int n = g.vertex_count();
    VertexSet sd(n);
    const VertexSet everything = VertexSet::full(n);
    for_each_maximum_matching(g, budget, [&](const Matching& m) {
        if (sd == everything) return;
        StructureSets s = variant == StructureVariant::J ? j_structure_vertices(g, m, budget)
                                                         : t_structure_vertices(g, m, budget);
        sd |= s.flower;
        sd |= s.posy;
    });
    return sd;
}

inline VertexSet sd_oracle(const Graph& g, Budget& budget) {
    return sd_oracle(g, StructureVariant::J, budget);
}

struct PosyFlowerSets {
    VertexSet posy;    // Posy(G): on an M-Tposy for some maximum matching
    VertexSet flower;  // Flower(G): on an M-Tflower for some maximum matching
};

inline PosyFlowerSets posy_flower_sets(const Graph& g, Budget& budget) {
    const int n = g.vertex_count();
    PosyFlowerSets out{VertexSet(n), VertexSet(n)};
    const VertexSet everything = VertexSet::full(n);
    for_each_maximum_matching(g, budget, [&](const Matching& m) {
        if (out.posy == everything && out.flower == everything) return;
        StructureSets s = t_structure_vertices(g, m, budget);
        out.posy |= s.posy;
        out.flower |= s.flower;
    });
    return out;
}

namespace detail {

inline bool valid_matching_of(const Graph& g, const Matching& m) {
    if (m.vertex_count() != g.vertex_count()) return false;
    std::vector<int> seen(g.vertex_count(), 0);
    for (const Edge& e : m.edges()) {
        if (!g.has_edge(e.u, e.v)) return false;
        if (seen[e.u]++ || seen[e.v]++) return false;
        if (m.mate(e.u) != e.v || m.mate(e.v) != e.u) return false;
    }
    return true;
}

inline bool verify_blossom(const Graph& g, const Matching& m, const Blossom& b) {
    const auto& c = b.cycle;
    if (c.size() < 3 || c.size() % 2 == 0) return false;
    VertexSet seen(g.vertex_count());
    for (int v : c) {
        if (v < 0 || v >= g.vertex_count() || seen.test(v)) return false;
        seen.set(v);
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
        int u = c[i], v = c[(i + 1) % c.size()];
        if (!g.has_edge(u, v)) return false;
        bool want_matched = (i % 2 == 1);
        if (m.contains(u, v) != want_matched) return false;
    }
    return true;
}

inline bool verify_walk(const Graph& g, const Matching& m, const std::vector<int>& walk,
                        bool first_matched) {
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
        int u = walk[i], v = walk[i + 1];
        if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count()) return false;
        if (!g.has_edge(u, v)) return false;
        bool want_matched = (i % 2 == 0) == first_matched;
        if (m.contains(u, v) != want_matched) return false;
    }
    return true;
}

inline bool all_distinct(const std::vector<int>& vs) {
    std::vector<int> s = vs;
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) == s.end();
}

}  // namespace detail

/// Full structural check of a certificate against the graph, including
/// maximality of the stored matching. Returns false rather than throwing.
inline bool verify_certificate(const Graph& g, const Certificate& cert) {
    const Matching& m = cert.matching;
    if (!detail::valid_matching_of(g, m)) return false;
    if (m.size() != matching_number(g)) return false;
    if (const auto* flower = std::get_if<FlowerCertificate>(&cert.witness)) {
        if (flower->variant == StructureVariant::S) return false;
        if (!detail::verify_blossom(g, m, flower->blossom)) return false;
        const auto& stem = flower->stem;
        if (stem.empty() || stem.front() != flower->blossom.base()) return false;
        if (stem.back() != flower->root) return false;
        if (flower->root < 0 || flower->root >= g.vertex_count()) return false;
        if (m.saturates(flower->root)) return false;
        if ((stem.size() - 1) % 2 != 0) return false;
        if (!detail::verify_walk(g, m, stem, /*first_matched=*/true)) return false;
        if (flower->variant == StructureVariant::T) {
            if (!detail::all_distinct(stem)) return false;
            for (std::size_t i = 1; i < stem.size(); ++i) {
                const auto& c = flower->blossom.cycle;
                if (std::find(c.begin(), c.end(), stem[i]) != c.end()) return false;
            }
        }
        return true;
    }
    const auto& posy = std::get<PosyCertificate>(cert.witness);
    if (!detail::verify_blossom(g, m, posy.first)) return false;
    if (!detail::verify_blossom(g, m, posy.second)) return false;
    const auto& conn = posy.connector;
    if (conn.size() < 2) return false;
    if (conn.front() != posy.first.base() || conn.back() != posy.second.base()) return false;
    if ((conn.size() - 1) % 2 != 1) return false;  // odd length: matched at both ends
    if (!detail::verify_walk(g, m, conn, /*first_matched=*/true)) return false;
    if (posy.variant == StructureVariant::T || posy.variant == StructureVariant::S) {
        if (posy.first.base() == posy.second.base()) return false;
        if (!detail::all_distinct(conn)) return false;
        for (std::size_t i = 1; i + 1 < conn.size(); ++i) {
            const auto& c1 = posy.first.cycle;
            const auto& c2 = posy.second.cycle;
            if (std::find(c1.begin(), c1.end(), conn[i]) != c1.end()) return false;
            if (std::find(c2.begin(), c2.end(), conn[i]) != c2.end()) return false;
        }
    }
    if (posy.variant == StructureVariant::T &&
        !detail::t_intersection_ok(posy.first, posy.second, m)) {
        return false;
    }
    return true;
}

namespace detail {

/// Rebuild the walk origin -> ... -> v recorded by a reachability closure.
inline std::vector<int> recover_walk(const ReachTable& table, int v, EdgeKind k) {
    std::vector<int> seq{v};
    int cv = v, ck = static_cast<int>(k);
    for (;;) {
        const ReachTable::Pred& p = table.pred[ck][cv];
        if (p.vertex < 0) {
            seq.push_back(p.source);
            break;
        }
        seq.push_back(p.vertex);
        cv = p.vertex;
        ck = p.kind;
    }
    std::reverse(seq.begin(), seq.end());
    return seq;
}

inline std::optional<Blossom> smallest_blossom_at(const StructureScan& scan, int base) {
    for (const Blossom& b : scan.blossoms) {
        if (b.base() == base) return b;  // scan.blossoms sorted, so first is smallest
    }
    return std::nullopt;
}

inline std::optional<Blossom> smallest_blossom_covering(const StructureScan& scan, int v,
                                                        const Matching& m,
                                                        const ReachTable& from_unsat) {
    for (const Blossom& b : scan.blossoms) {
        bool live = !m.saturates(b.base()) || from_unsat.at(b.base(), EdgeKind::matched);
        if (!live) continue;
        if (std::find(b.cycle.begin(), b.cycle.end(), v) != b.cycle.end()) return b;
    }
    return std::nullopt;
}

inline StructureVariant classify_flower(const FlowerCertificate& f) {
    if (!all_distinct(f.stem)) return StructureVariant::J;
    for (std::size_t i = 1; i < f.stem.size(); ++i) {
        if (std::find(f.blossom.cycle.begin(), f.blossom.cycle.end(), f.stem[i]) !=
            f.blossom.cycle.end()) {
            return StructureVariant::J;
        }
    }
    return StructureVariant::T;
}

inline StructureVariant classify_posy(const PosyCertificate& p, const Matching& m) {
    if (p.first.base() == p.second.base()) return StructureVariant::J;
    if (!all_distinct(p.connector)) return StructureVariant::J;
    for (std::size_t i = 1; i + 1 < p.connector.size(); ++i) {
        int v = p.connector[i];
        if (std::find(p.first.cycle.begin(), p.first.cycle.end(), v) != p.first.cycle.end() ||
            std::find(p.second.cycle.begin(), p.second.cycle.end(), v) != p.second.cycle.end()) {
            return StructureVariant::J;
        }
    }
    if (t_intersection_ok(p.first, p.second, m)) return StructureVariant::T;
    return StructureVariant::S;
}

}  // namespace detail

/// A verified flower/posy witness putting `vertex` in SD(G), searched over
/// maximum matchings in enumeration order; nullopt means vertex is in KE(G).
inline std::optional<Certificate> find_certificate(const Graph& g, int vertex, Budget& budget) {
    if (vertex < 0 || vertex >= g.vertex_count()) {
        throw std::invalid_argument("find_certificate: vertex out of range");
    }
    std::optional<Certificate> found;
    for_each_maximum_matching(g, budget, [&](const Matching& m) {
        if (found) return;
        StructureScan scan = scan_structures(g, m, budget);
        const auto& fb = scan.from_base;
        const auto& fu = scan.from_unsat;

        // flower: vertex on a live blossom
        if (auto b = detail::smallest_blossom_covering(scan, vertex, m, fu)) {
            FlowerCertificate f;
            f.blossom = *b;
            if (!m.saturates(b->base())) {
                f.stem = {b->base()};
                f.root = b->base();
            } else {
                std::vector<int> walk = detail::recover_walk(fu, b->base(), EdgeKind::matched);
                std::reverse(walk.begin(), walk.end());  // base -> ... -> root
                f.stem = walk;
                f.root = walk.back();
            }
            f.variant = detail::classify_flower(f);
            found = Certificate{f, m};
            return;
        }
        // flower: vertex on a stem (or an unsaturated root)
        auto stem_case = [&](EdgeKind base_kind, EdgeKind unsat_kind) -> bool {
            if (!fb.at(vertex, base_kind) || !fu.at(vertex, unsat_kind)) return false;
            std::vector<int> to_v = detail::recover_walk(fb, vertex, base_kind);  // base..v
            std::vector<int> from_r = detail::recover_walk(fu, vertex, unsat_kind);  // root..v
            FlowerCertificate f;
            auto b = detail::smallest_blossom_at(scan, to_v.front());
            if (!b) return false;
            f.blossom = *b;
            f.stem = to_v;
            for (auto it = from_r.rbegin() + 1; it != from_r.rend(); ++it) f.stem.push_back(*it);
            f.root = f.stem.back();
            f.variant = detail::classify_flower(f);
            found = Certificate{f, m};
            return true;
        };
        if (stem_case(EdgeKind::matched, EdgeKind::unmatched)) return;
        if (!m.saturates(vertex) && fb.at(vertex, EdgeKind::unmatched)) {
            std::vector<int> walk = detail::recover_walk(fb, vertex, EdgeKind::unmatched);
            FlowerCertificate f;
            auto b = detail::smallest_blossom_at(scan, walk.front());
            if (b) {
                f.blossom = *b;
                f.stem = walk;
                f.root = vertex;
                f.variant = detail::classify_flower(f);
                found = Certificate{f, m};
                return;
            }
        }
        if (stem_case(EdgeKind::unmatched, EdgeKind::matched)) return;

        // posy: vertex reached from bases with both terminal kinds
        if (fb.at(vertex, EdgeKind::matched) && fb.at(vertex, EdgeKind::unmatched)) {
            std::vector<int> left = detail::recover_walk(fb, vertex, EdgeKind::matched);  // b1..v
            std::vector<int> right = detail::recover_walk(fb, vertex, EdgeKind::unmatched);  // b2..v
            PosyCertificate p;
            auto b1 = detail::smallest_blossom_at(scan, left.front());
            auto b2 = detail::smallest_blossom_at(scan, right.front());
            if (b1 && b2) {
                p.first = *b1;
                p.second = *b2;
                p.connector = left;
                for (auto it = right.rbegin() + 1; it != right.rend(); ++it) {
                    p.connector.push_back(*it);
                }
                p.variant = detail::classify_posy(p, m);
                found = Certificate{p, m};
            }
        }
    });
    return found;
}

}  // namespace sdke
