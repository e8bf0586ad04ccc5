#pragma once

#include <set>
#include <sstream>
#include <string>

#include "sdke/decomposition.hpp"
#include "sdke/graph.hpp"
#include "sdke/structures.hpp"

namespace sdke {

namespace detail {

struct DotStyle {
    const VertexSet* sd = nullptr;
    const VertexSet* ke = nullptr;
    const Certificate* cert = nullptr;
};

inline std::string dot_render(const Graph& g, const DotStyle& style) {
    std::ostringstream out;
    out << "graph G {\n";
    out << "  node [shape=circle, fontsize=10];\n";
    std::set<int> special;
    std::set<Edge> matched, structural;
    if (style.cert) {
        for (const Edge& e : style.cert->matching.edges()) matched.insert(e);
        auto add_walk = [&](const std::vector<int>& walk) {
            for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
                structural.insert(Edge(walk[i], walk[i + 1]));
            }
        };
        auto add_cycle = [&](const Blossom& b) {
            for (std::size_t i = 0; i < b.cycle.size(); ++i) {
                structural.insert(Edge(b.cycle[i], b.cycle[(i + 1) % b.cycle.size()]));
            }
        };
        if (const auto* f = std::get_if<FlowerCertificate>(&style.cert->witness)) {
            add_cycle(f->blossom);
            add_walk(f->stem);
            special.insert(f->blossom.base());
            special.insert(f->root);
        } else {
            const auto& p = std::get<PosyCertificate>(style.cert->witness);
            add_cycle(p.first);
            add_cycle(p.second);
            add_walk(p.connector);
            special.insert(p.first.base());
            special.insert(p.second.base());
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v << " [";
        if (style.sd && style.sd->test(v)) {
            out << "style=filled, fillcolor=lightcoral";
        } else if (style.ke && style.ke->test(v)) {
            out << "style=filled, fillcolor=lightblue";
        } else {
            out << "style=solid";
        }
        if (special.count(v)) out << ", shape=doublecircle";
        out << "];\n";
    }
    for (const Edge& e : g.edges()) {
        out << "  " << e.u << " -- " << e.v;
        bool is_matched = matched.count(e) > 0;
        bool is_structural = structural.count(e) > 0;
        if (is_matched || is_structural) {
            out << " [";
            if (is_matched) out << "penwidth=2.5";
            if (is_matched && is_structural) out << ", ";
            if (is_structural) out << "color=red";
            out << "]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace detail

inline std::string to_dot(const Graph& g) { return detail::dot_render(g, {}); }

inline std::string to_dot(const Graph& g, const SdKePartition& part) {
    detail::DotStyle style;
    style.sd = &part.sd;
    style.ke = &part.ke;
    return detail::dot_render(g, style);
}

inline std::string to_dot(const Graph& g, const Certificate& cert) {
    detail::DotStyle style;
    style.cert = &cert;
    return detail::dot_render(g, style);
}

}  // namespace sdke
