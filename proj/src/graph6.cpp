#include "elckit/graph6.hpp"

#include <sstream>

namespace elckit {

std::string to_graph6(const Graph& g) {
    int n = g.order();
    if (n > 62) throw std::invalid_argument("graph6 encoding supports order <= 62");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int acc = 0, nbits = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph from_graph6(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty graph6 string");
    unsigned char header = static_cast<unsigned char>(s[0]);
    if (header == 126) throw std::invalid_argument("multi-byte graph6 headers (n > 62) unsupported");
    if (header < 63 || header > 125) throw std::invalid_argument("invalid graph6 header byte");
    int n = header - 63;
    if (n < 1) throw std::invalid_argument("graph6 order must be at least 1");
    size_t need = (static_cast<size_t>(n) * (n - 1) / 2 + 5) / 6;
    if (s.size() != 1 + need)
        throw std::invalid_argument("graph6 string has wrong length for order " + std::to_string(n));
    Graph g(n);
    size_t pos = 1;
    int acc = 0, nbits = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            if (nbits == 0) {
                unsigned char c = static_cast<unsigned char>(s[pos++]);
                if (c < 63 || c > 126) throw std::invalid_argument("invalid graph6 data byte");
                acc = c - 63;
                nbits = 6;
            }
            if ((acc >> (nbits - 1)) & 1) g.add_edge(row, col);
            --nbits;
        }
    }
    return g;
}

std::string to_adjacency_text(const Graph& g) {
    std::string out;
    int n = g.order();
    for (int v = 0; v < n; ++v) {
        for (int u = 0; u < n; ++u) out.push_back(g.has_edge(v, u) && v != u ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

Graph from_adjacency_text(const std::string& text) {
    std::vector<std::string> rows;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        rows.push_back(line);
    }
    int n = static_cast<int>(rows.size());
    if (n < 1) throw std::invalid_argument("adjacency text has no rows");
    Graph g(n);
    for (int v = 0; v < n; ++v) {
        if (static_cast<int>(rows[static_cast<size_t>(v)].size()) != n)
            throw std::invalid_argument("adjacency text is not square");
        for (int u = 0; u < n; ++u) {
            char c = rows[static_cast<size_t>(v)][static_cast<size_t>(u)];
            if (c != '0' && c != '1') throw std::invalid_argument("adjacency text must be 0/1");
            if (c == '1' && u > v) g.add_edge(v, u);
        }
    }
    // Validate symmetry and zero diagonal against the raw text.
    for (int v = 0; v < n; ++v) {
        if (rows[static_cast<size_t>(v)][static_cast<size_t>(v)] != '0')
            throw std::invalid_argument("adjacency text has a loop");
        for (int u = 0; u < n; ++u)
            if (rows[static_cast<size_t>(v)][static_cast<size_t>(u)] !=
                rows[static_cast<size_t>(u)][static_cast<size_t>(v)])
                throw std::invalid_argument("adjacency text is not symmetric");
    }
    return g;
}

std::vector<Graph> read_graph6_lines(const std::string& text) {
    std::vector<Graph> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        out.push_back(from_graph6(line));
    }
    return out;
}

}  // namespace elckit
