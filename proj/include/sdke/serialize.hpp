#pragma once

#include <string>

#include "json.hpp"
#include "sdke/decomposition.hpp"
#include "sdke/graph.hpp"
#include "sdke/matching.hpp"
#include "sdke/sachs.hpp"
#include "sdke/structures.hpp"

namespace sdke {

using json = nlohmann::json;

inline void to_json(json& j, const VertexSet& s) { j = s.to_vector(); }

inline void to_json(json& j, const Edge& e) { j = json::array({e.u, e.v}); }

inline void to_json(json& j, const Graph& g) {
    j = json{{"n", g.vertex_count()}, {"edges", g.edges()}};
}

inline Graph graph_from_json(const json& j) {
    EdgeList edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return Graph::from_edges(j.at("n").get<int>(), edges);
}

inline void to_json(json& j, const Matching& m) { j = m.edges(); }

inline Matching matching_from_json(const Graph& g, const json& j) {
    EdgeList edges;
    for (const auto& e : j) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return Matching::from_edges(g, edges);
}

inline void to_json(json& j, const Blossom& b) {
    j = json{{"cycle", b.cycle}, {"base", b.base()}};
}

inline std::string variant_name(StructureVariant v) {
    switch (v) {
        case StructureVariant::T: return "T";
        case StructureVariant::S: return "S";
        case StructureVariant::J: return "J";
    }
    return "?";
}

inline StructureVariant variant_from_name(const std::string& s) {
    if (s == "T") return StructureVariant::T;
    if (s == "S") return StructureVariant::S;
    if (s == "J") return StructureVariant::J;
    throw std::invalid_argument("unknown structure variant: " + s);
}

inline void to_json(json& j, const Certificate& cert) {
    j = json{{"matching", cert.matching}};
    if (const auto* flower = std::get_if<FlowerCertificate>(&cert.witness)) {
        j["kind"] = "flower";
        j["variant"] = variant_name(flower->variant);
        j["blossom"] = flower->blossom;
        j["stem"] = flower->stem;
        j["root"] = flower->root;
    } else {
        const auto& posy = std::get<PosyCertificate>(cert.witness);
        j["kind"] = "posy";
        j["variant"] = variant_name(posy.variant);
        j["blossoms"] = json::array({posy.first, posy.second});
        j["connector"] = posy.connector;
    }
}

inline Certificate certificate_from_json(const Graph& g, const json& j) {
    Matching m = matching_from_json(g, j.at("matching"));
    auto blossom_at = [](const json& b) {
        return Blossom{b.at("cycle").get<std::vector<int>>()};
    };
    if (j.at("kind") == "flower") {
        FlowerCertificate f;
        f.blossom = blossom_at(j.at("blossom"));
        f.stem = j.at("stem").get<std::vector<int>>();
        f.root = j.at("root").get<int>();
        f.variant = variant_from_name(j.at("variant").get<std::string>());
        return {f, std::move(m)};
    }
    PosyCertificate p;
    p.first = blossom_at(j.at("blossoms").at(0));
    p.second = blossom_at(j.at("blossoms").at(1));
    p.connector = j.at("connector").get<std::vector<int>>();
    p.variant = variant_from_name(j.at("variant").get<std::string>());
    return {p, std::move(m)};
}

inline void to_json(json& j, const SdKePartition& p) {
    j = json{{"sd", p.sd}, {"ke", p.ke}, {"route", route_name(p.route)}};
}

inline void to_json(json& j, const GallaiEdmondsDecomposition& ge) {
    json comps = json::array();
    for (std::size_t i = 0; i < ge.components_of_d.size(); ++i) {
        comps.push_back(json{{"vertices", ge.components_of_d[i]},
                             {"trivial", !ge.component_nontrivial[i]}});
    }
    j = json{{"d", ge.d}, {"a", ge.a}, {"c", ge.c}, {"components", comps}};
}

inline void to_json(json& j, const ReducedOrigin& o) {
    j = json{{"kind", o.kind == ReducedOrigin::Kind::original ? "original" : "triangle"},
             {"origin", o.origin},
             {"distinguished", o.distinguished}};
}

inline void to_json(json& j, const ReducedForm& r) {
    j = json{{"graph", r.graph}, {"origin_map", r.origin}};
}

inline void to_json(json& j, const SachsComponent& c) {
    j = json{{"kind", c.kind == SachsComponent::Kind::k2 ? "k2" : "cycle"},
             {"vertices", c.vertices}};
}

inline void to_json(json& j, const SachsSubgraph& s) {
    j = json{{"edges", s.edges}, {"components", s.components}};
}

inline void to_json(json& j, const WalkState& s) {
    j = json{{"vertex", s.vertex},
             {"last_edge", s.last_edge == EdgeKind::matched ? "matched" : "unmatched"}};
}

}  // namespace sdke
