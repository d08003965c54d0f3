#include "cospec/graph_io.hpp"

#include <sstream>
#include <stdexcept>

namespace cospec {

namespace {

constexpr int kBias = 63;
constexpr int kMaxShort = 62;
constexpr int kMaxLong = 258047;  // 2^18 - 1, the 3-chunk size limit

void append_size(std::string& out, int n) {
    if (n <= kMaxShort) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= kMaxLong) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
        out.push_back(static_cast<char>((n & 0x3f) + kBias));
    } else {
        throw std::invalid_argument("graph too large for this graph6 encoder");
    }
}

}  // namespace

std::string encode_graph6(const Graph& g) {
    const int n = g.size();
    std::string out;
    append_size(out, n);
    int chunk = 0;
    int bits = 0;
    // Upper triangle in column order: (0,1), (0,2), (1,2), (0,3), ...
    for (Vertex col = 1; col < n; ++col) {
        for (Vertex row = 0; row < col; ++row) {
            chunk = (chunk << 1) | (g.adjacent(row, col) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(chunk + kBias));
                chunk = 0;
                bits = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((chunk << (6 - bits)) + kBias));
    return out;
}

Graph decode_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty graph6 string");

    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= text.size()) throw std::invalid_argument("truncated graph6 string");
        int c = static_cast<unsigned char>(text[pos++]);
        if (c < kBias || c > kBias + 63) throw std::invalid_argument("invalid graph6 byte");
        return c - kBias;
    };

    long n;
    int first = next();
    if (first == 63) {
        long a = next(), b = next(), c = next();
        n = (a << 12) | (b << 6) | c;
    } else {
        n = first;
    }

    Graph g(static_cast<int>(n));
    int chunk = 0;
    int bits = 0;
    for (Vertex col = 1; col < n; ++col) {
        for (Vertex row = 0; row < col; ++row) {
            if (bits == 0) {
                chunk = next();
                bits = 6;
            }
            if (chunk & (1 << (bits - 1))) g.add_edge(row, col);
            --bits;
        }
    }
    if (pos != text.size()) throw std::invalid_argument("trailing bytes after graph6 data");
    return g;
}

std::string to_dot(const Graph& g, const std::vector<std::string>& vertex_labels) {
    if (!vertex_labels.empty() && vertex_labels.size() != static_cast<std::size_t>(g.size()))
        throw std::invalid_argument("need one label per vertex");
    std::ostringstream out;
    out << "graph {\n";
    for (Vertex v = 0; v < g.size(); ++v) {
        out << "  " << v;
        if (!vertex_labels.empty()) out << " [label=\"" << vertex_labels[static_cast<std::size_t>(v)] << "\"]";
        out << ";\n";
    }
    for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace cospec
