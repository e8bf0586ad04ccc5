// Batch front end: parse graphs, run the SD-KE decomposition routes and
// checks, emit JSON/DOT reports, and drive the cross-route comparison suite.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "sdke/sdke.hpp"
#include "sdke/dot.hpp"

namespace {

using sdke::Budget;
using sdke::Graph;
using sdke::json;

struct CommonOptions {
    std::string format = "auto";  // el | g6 | auto
    std::uint64_t budget = Budget::default_limit();
    bool dot = false;
    bool json_output = true;  // default output form; --json keeps it explicit
    bool timing = false;
};

Graph load_graph(const std::string& path, const std::string& format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw sdke::parse_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    sdke::GraphFormat fmt;
    if (format == "el") {
        fmt = sdke::GraphFormat::edge_list;
    } else if (format == "g6") {
        fmt = sdke::GraphFormat::graph6;
    } else {
        fmt = sdke::guess_format_from_path(path);
    }
    return sdke::parse_graph(buf.str(), fmt);
}

class Timer {
public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(clock::now() - start_).count();
    }

private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_ = clock::now();
};

void print_report(const std::string& command, const std::string& input, json result,
                  const Budget& budget, const CommonOptions& opt, const Timer& timer) {
    json report{{"command", command},
                {"input", input},
                {"result", std::move(result)},
                {"budget_used", budget.used}};
    if (opt.timing) report["timing_ms"] = timer.elapsed_ms();
    std::cout << report.dump(2) << '\n';
}

int cmd_decompose(const std::string& path, const std::string& route, const CommonOptions& opt) {
    Timer timer;
    Graph g = load_graph(path, opt.format);
    Budget budget(opt.budget);
    sdke::SdKePartition part;
    if (route == "auto") {
        part = sdke::sdke(g, budget);
    } else if (route == "algorithm1") {
        part = sdke::algorithm1_sdke(g);
    } else if (route == "larson") {
        part = sdke::larson_sdke(g, budget);
    } else if (route == "oracle") {
        sdke::VertexSet sd = sdke::sd_oracle(g, budget);
        part = {sd, sd.complement(), sdke::SdKeRoute::oracle};
    } else if (route == "reduction") {
        sdke::ReducedForm r = sdke::reduce(g);
        sdke::VertexSet ke_reduced = sdke::sd_oracle(r.graph, budget).complement();
        sdke::VertexSet ke(g.vertex_count());
        ke_reduced.for_each([&](int v) {
            if (r.origin[v].kind == sdke::ReducedOrigin::Kind::original) ke.set(r.origin[v].origin);
        });
        part = {ke.complement(), ke, sdke::SdKeRoute::reduction_oracle};
    } else {
        throw std::invalid_argument("unknown route: " + route);
    }
    if (opt.dot) {
        std::cout << sdke::to_dot(g, part);
        return 0;
    }
    print_report("decompose", path, part, budget, opt, timer);
    return 0;
}

int cmd_check(const std::string& path, const std::string& predicate, const CommonOptions& opt) {
    Timer timer;
    Graph g = load_graph(path, opt.format);
    Budget budget(opt.budget);
    bool value = false;
    json witness;
    if (predicate == "sd") {
        value = sdke::is_sd_graph(g, budget);
    } else if (predicate == "ke") {
        value = sdke::is_konig_egervary(g, budget);
    } else if (predicate == "unique-pm") {
        auto res = sdke::has_unique_perfect_matching(g);
        value = res.unique;
        if (res.matching) witness = *res.matching;
    } else if (predicate == "1-sachs") {
        auto res = sdke::k_sachs_critical(g, 1, budget);
        value = res.critical;
        if (res.witness) witness = *res.witness;
    } else if (predicate == "odd-factor") {
        auto res = sdke::has_odd_cycle_factor(g, budget);
        value = res.found;
        if (res.factor) witness = *res.factor;
    } else if (predicate == "hall-tutte") {
        auto res = sdke::hall_tutte_sd_with_pm(g, budget);
        value = res.holds;
        if (res.witness) {
            witness = json{{"set", *res.witness}, {"failed_condition", res.failed_condition}};
        }
    } else {
        throw std::invalid_argument("unknown predicate: " + predicate);
    }
    json result{{"predicate", predicate}, {"value", value}};
    if (!witness.is_null()) result["witness"] = witness;
    print_report("check", path, result, budget, opt, timer);
    return value ? 0 : 1;
}

int cmd_certify(const std::string& path, int vertex, const CommonOptions& opt) {
    Timer timer;
    Graph g = load_graph(path, opt.format);
    Budget budget(opt.budget);
    auto cert = sdke::find_certificate(g, vertex, budget);
    if (cert && !sdke::verify_certificate(g, *cert)) {
        throw std::logic_error("internal error: emitted certificate failed verification");
    }
    if (opt.dot) {
        std::cout << (cert ? sdke::to_dot(g, *cert) : sdke::to_dot(g));
        return cert ? 0 : 1;
    }
    json result{{"vertex", vertex}, {"verdict", cert ? "sd" : "ke"}};
    if (cert) result["certificate"] = *cert;
    print_report("certify", path, result, budget, opt, timer);
    return cert ? 0 : 1;
}

int cmd_reduce(const std::string& path, const CommonOptions& opt) {
    Timer timer;
    Graph g = load_graph(path, opt.format);
    Budget budget(opt.budget);
    sdke::ReducedForm r = sdke::reduce(g);
    if (opt.dot) {
        std::cout << sdke::to_dot(r.graph);
        return 0;
    }
    sdke::Matching rm = sdke::reduce_matching(g, sdke::maximum_matching(g), r);
    json result = r;
    result["reduced_matching"] = rm;
    result["gallai_edmonds"] = r.ge;
    print_report("reduce", path, result, budget, opt, timer);
    return 0;
}

int cmd_matchings(const std::string& path, const CommonOptions& opt) {
    Timer timer;
    Graph g = load_graph(path, opt.format);
    Budget budget(opt.budget);
    json list = json::array();
    sdke::for_each_maximum_matching(g, budget, [&](const sdke::Matching& m) { list.push_back(m); });
    json result{{"matching_number", sdke::matching_number(g)},
                {"count", list.size()},
                {"matchings", std::move(list)}};
    print_report("matchings", path, result, budget, opt, timer);
    return 0;
}

int cmd_sachs(const std::string& path, const CommonOptions& opt) {
    Timer timer;
    Graph g = load_graph(path, opt.format);
    Budget budget(opt.budget);
    json list = json::array();
    sdke::for_each_sachs_subgraph(g, budget,
                                  [&](const sdke::SachsSubgraph& s) { list.push_back(s); });
    json result{{"count", list.size()}, {"sachs_subgraphs", std::move(list)}};
    print_report("sachs", path, result, budget, opt, timer);
    return 0;
}

// Cross-route equivalence over exhaustive or sampled small graphs: the T and
// J oracles must agree, every routed partition must match the oracle, and
// KE must pull back unchanged through the reduction.
int cmd_oracle_compare(int max_n, int count, std::uint64_t seed, const CommonOptions& opt) {
    Timer timer;
    Budget budget(opt.budget);
    json mismatches = json::array();
    long long checked = 0;
    auto examine = [&](const Graph& g) {
        ++checked;
        auto note = [&](const std::string& what, const json& detail) {
            mismatches.push_back(json{{"graph", g}, {"issue", what}, {"detail", detail}});
        };
        sdke::VertexSet sd_t = sdke::sd_oracle(g, sdke::StructureVariant::T, budget);
        sdke::VertexSet sd_j = sdke::sd_oracle(g, sdke::StructureVariant::J, budget);
        if (sd_t != sd_j) note("T and J oracles disagree", json{{"t", sd_t}, {"j", sd_j}});
        auto part = sdke::sdke(g, budget);
        if (part.sd != sd_j) {
            note("routed partition disagrees with oracle",
                 json{{"route", sdke::route_name(part.route)}, {"sd", part.sd}, {"oracle", sd_j}});
        }
        if (2 * sdke::matching_number(g) == g.vertex_count()) {
            auto larson = sdke::larson_sdke(g, budget);
            if (larson.sd != sd_j) note("larson disagrees with oracle", json{{"sd", larson.sd}});
            if (sdke::has_unique_perfect_matching(g).unique) {
                auto alg1 = sdke::algorithm1_sdke(g);
                if (alg1.sd != sd_j) note("algorithm1 disagrees with oracle", json{{"sd", alg1.sd}});
            }
        }
        sdke::ReducedForm r = sdke::reduce(g);
        sdke::VertexSet ke_r = sdke::sd_oracle(r.graph, budget).complement();
        sdke::VertexSet ke_back(g.vertex_count());
        ke_r.for_each([&](int v) {
            if (r.origin[v].kind == sdke::ReducedOrigin::Kind::original) ke_back.set(r.origin[v].origin);
        });
        if (ke_back != sd_j.complement()) {
            note("reduction changes KE", json{{"ke_reduced", ke_back}, {"ke", sd_j.complement()}});
        }
    };
    if (count > 0) {
        std::mt19937_64 rng(seed);
        for (int i = 0; i < count; ++i) {
            int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n));
            std::uniform_real_distribution<double> p(0.2, 0.8);
            examine(sdke::random_graph(n, p(rng), rng));
        }
    } else {
        if (max_n > 8) throw std::invalid_argument("oracle-compare: exhaustive mode needs --max-n <= 8");
        for (int n = 1; n <= max_n; ++n) {
            for (const Graph& g : sdke::connected_graphs(n)) examine(g);
        }
    }
    json result{{"graphs_checked", checked},
                {"seed", seed},
                {"mismatches", std::move(mismatches)}};
    bool ok = result["mismatches"].empty();
    print_report("oracle-compare", count > 0 ? "<random>" : "<exhaustive>", result, budget, opt,
                 timer);
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sterboul-Deming / Konig-Egervary graph decomposition toolkit"};
    app.require_subcommand(1);

    CommonOptions opt;
    app.add_option("--format", opt.format, "input format: el, g6 or auto (by extension)")
        ->check(CLI::IsMember({"el", "g6", "auto"}));
    app.add_option("--budget", opt.budget, "search budget in steps (env SDKE_BUDGET sets the default)");
    app.add_flag("--json", opt.json_output, "emit the JSON report (default)");
    app.add_flag("--dot", opt.dot, "emit DOT instead of JSON where supported");
    app.add_flag("--timing", opt.timing, "include timing_ms in the report");

    std::string path, route = "auto", predicate;
    int vertex = 0, max_n = 6, count = 0;
    std::uint64_t seed = 0;

    auto* decompose = app.add_subcommand("decompose", "compute the SD-KE partition");
    decompose->add_option("path", path)->required();
    decompose->add_option("--route", route, "auto|algorithm1|larson|oracle|reduction")
        ->check(CLI::IsMember({"auto", "algorithm1", "larson", "oracle", "reduction"}));

    auto* check = app.add_subcommand("check", "evaluate a predicate");
    check->add_option("path", path)->required();
    check->add_option("predicate", predicate)
        ->required()
        ->check(CLI::IsMember({"sd", "ke", "unique-pm", "1-sachs", "odd-factor", "hall-tutte"}));

    auto* certify = app.add_subcommand("certify", "emit a flower/posy witness for a vertex");
    certify->add_option("path", path)->required();
    certify->add_option("vertex", vertex)->required();

    auto* reduce = app.add_subcommand("reduce", "emit the reduced form R(G) with its origin map");
    reduce->add_option("path", path)->required();

    auto* matchings = app.add_subcommand("matchings", "list all maximum matchings");
    matchings->add_option("path", path)->required();

    auto* sachs = app.add_subcommand("sachs", "list all Sachs subgraphs");
    sachs->add_option("path", path)->required();

    auto* compare = app.add_subcommand("oracle-compare", "cross-route equivalence suite");
    compare->add_option("--max-n", max_n, "largest graph order");
    compare->add_option("--count", count, "number of random graphs (0 = exhaustive connected)");
    compare->add_option("--seed", seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (decompose->parsed()) return cmd_decompose(path, route, opt);
        if (check->parsed()) return cmd_check(path, predicate, opt);
        if (certify->parsed()) return cmd_certify(path, vertex, opt);
        if (reduce->parsed()) return cmd_reduce(path, opt);
        if (matchings->parsed()) return cmd_matchings(path, opt);
        if (sachs->parsed()) return cmd_sachs(path, opt);
        if (compare->parsed()) return cmd_oracle_compare(max_n, count, seed, opt);
    } catch (const sdke::parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const sdke::budget_exceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
