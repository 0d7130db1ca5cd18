#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "perclab/graph.hpp"

namespace perclab {

/// Raised on malformed edge-list input; the CLI maps it to a usage error.
struct EdgeListError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Format: optional '#' comment lines, a header line "n m", then m lines
// "u v" with 0-based ids. Whitespace separated, LF terminated.
inline Graph read_edge_list(std::istream& in) {
    std::string line;
    auto next_data_line = [&](std::string& out) -> bool {
        while (std::getline(in, line)) {
            std::size_t i = line.find_first_not_of(" \t\r");
            if (i == std::string::npos || line[i] == '#')
                continue;
            out = line;
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_data_line(header))
        throw EdgeListError("edge list: missing header line");
    std::istringstream hs(header);
    long long n = -1, m = -1;
    if (!(hs >> n >> m) || n < 0 || m < 0)
        throw EdgeListError("edge list: bad header line '" + header + "'");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long k = 0; k < m; ++k) {
        std::string e;
        if (!next_data_line(e))
            throw EdgeListError("edge list: expected " + std::to_string(m) + " edges, got " +
                                std::to_string(k));
        std::istringstream es(e);
        long long u, v;
        if (!(es >> u >> v))
            throw EdgeListError("edge list: bad edge line '" + e + "'");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw EdgeListError("edge list: endpoint out of range in '" + e + "'");
        if (u == v)
            throw EdgeListError("edge list: loop edge in '" + e + "'");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

inline Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw EdgeListError("cannot open '" + path + "'");
    return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g,
                            const std::vector<std::string>& comments = {}) {
    for (const auto& c : comments)
        out << "# " << c << "\n";
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges())
        out << u << " " << v << "\n";
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

}  // namespace perclab
