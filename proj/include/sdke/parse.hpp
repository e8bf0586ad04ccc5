#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>

#include "sdke/budget.hpp"
#include "sdke/graph.hpp"

namespace sdke {

enum class GraphFormat { edge_list, graph6 };

/// Edge-list format: first line is n, then one "u v" pair per line,
/// 0-indexed. Blank lines and '#' comments are allowed.
inline Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    int n = -1;
    EdgeList edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n)) continue;  // skip leading blank/comment lines
            if (n < 0) throw parse_error("line " + std::to_string(line_no) + ": negative vertex count");
            std::string extra;
            if (ls >> extra) throw parse_error("line " + std::to_string(line_no) + ": expected a single vertex count");
            continue;
        }
        int u, v;
        if (!(ls >> u)) continue;
        if (!(ls >> v)) throw parse_error("line " + std::to_string(line_no) + ": expected 'u v'");
        std::string extra;
        if (ls >> extra) throw parse_error("line " + std::to_string(line_no) + ": trailing tokens after edge");
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw parse_error("line " + std::to_string(line_no) + ": vertex out of range [0," +
                              std::to_string(n) + ")");
        }
        if (u == v) throw parse_error("line " + std::to_string(line_no) + ": self-loop at " + std::to_string(u));
        Edge e(u, v);
        for (const Edge& prev : edges) {
            if (prev == e) throw parse_error("line " + std::to_string(line_no) + ": duplicate edge");
        }
        edges.push_back(e);
    }
    if (n < 0) throw parse_error("missing vertex count line");
    return Graph::from_edges(n, edges);
}

/// graph6 ASCII encoding (single line). Supports the short form (n <= 62)
/// and the 4-byte '~' form.
inline Graph parse_graph6(std::string_view text) {
    // strip optional header and surrounding whitespace
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.rfind(">>graph6<<", 0) == 0) s.erase(0, 10);
    if (s.empty()) throw parse_error("graph6: empty input");
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= s.size()) throw parse_error("graph6: truncated input");
        unsigned char c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126) throw parse_error("graph6: byte out of range at position " + std::to_string(pos - 1));
        return c - 63;
    };
    long long n;
    int first = next();
    if (first < 63) {
        n = first;
    } else {
        n = 0;
        for (int i = 0; i < 3; ++i) n = (n << 6) | next();
        if (n > 100000) throw parse_error("graph6: graph too large");
    }
    EdgeList edges;
    int bits_left = 0, current = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (bits_left == 0) {
                current = next();
                bits_left = 6;
            }
            if (current & (1 << (bits_left - 1))) edges.emplace_back(u, v);
            --bits_left;
        }
    }
    if (pos != s.size()) throw parse_error("graph6: trailing bytes");
    return Graph::from_edges(static_cast<int>(n), edges);
}

inline std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 62) throw std::invalid_argument("to_graph6: only n <= 62 supported");
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int bits = 0, current = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            current = (current << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(63 + current));
                bits = 0;
                current = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>(63 + (current << (6 - bits))));
    return out;
}

inline std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

inline Graph parse_graph(std::string_view text, GraphFormat format) {
    return format == GraphFormat::graph6 ? parse_graph6(text) : parse_edge_list(text);
}

inline GraphFormat guess_format_from_path(std::string_view path) {
    if (path.size() >= 3 && path.substr(path.size() - 3) == ".g6") return GraphFormat::graph6;
    return GraphFormat::edge_list;
}

}  // namespace sdke
