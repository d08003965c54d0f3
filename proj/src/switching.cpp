#include "cospec/switching.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cospec {

VertexSet SwitchingPartition::y() const {
    std::vector<bool> in_x(static_cast<std::size_t>(n), false);
    for (Vertex v : x) in_x[static_cast<std::size_t>(v)] = true;
    VertexSet out;
    out.reserve(static_cast<std::size_t>(n) - x.size());
    for (Vertex v = 0; v < n; ++v)
        if (!in_x[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

SwitchingPartition make_partition(const Graph& g, VertexSet x) {
    std::sort(x.begin(), x.end());
    if (std::adjacent_find(x.begin(), x.end()) != x.end())
        throw std::invalid_argument("switching set contains a duplicate vertex");
    if (!x.empty() && (x.front() < 0 || x.back() >= g.size()))
        throw std::invalid_argument("switching set vertex out of range");
    if (x.size() < 2 || x.size() % 2 != 0)
        throw std::invalid_argument("switching set size must be even and at least 2, got " +
                                    std::to_string(x.size()));
    return SwitchingPartition{g.size(), std::move(x)};
}

SwitchingReport validate_switching_set(const Graph& g, const SwitchingPartition& p) {
    if (p.n != g.size()) throw std::invalid_argument("partition does not cover this graph");
    boost::dynamic_bitset<> in_x(static_cast<std::size_t>(g.size()));
    for (Vertex v : p.x) in_x.set(static_cast<std::size_t>(v));

    SwitchingReport report;
    int degree = -1;
    bool regular = true;
    for (Vertex v : p.x) {
        const int d = static_cast<int>((g.neighbourhood(v) & in_x).count());
        if (degree == -1) degree = d;
        if (d != degree) regular = false;
    }
    if (regular && degree >= 0) report.x_induced_degree = degree;

    const int half = static_cast<int>(p.x.size()) / 2;
    for (Vertex y = 0; y < g.size(); ++y) {
        if (in_x.test(static_cast<std::size_t>(y))) continue;
        const int c = static_cast<int>((g.neighbourhood(y) & in_x).count());
        if (c != 0 && c != half && c != 2 * half) report.offenders.emplace_back(y, c);
    }
    report.valid = regular && report.offenders.empty();
    return report;
}

Graph apply_switch(const Graph& g, const SwitchingPartition& p) {
    const auto report = validate_switching_set(g, p);
    if (!report.valid) {
        std::string why = "not a Godsil-McKay switching set:";
        if (!report.x_induced_degree) why += " X does not induce a regular subgraph;";
        for (const auto& [y, c] : report.offenders)
            why += " vertex " + std::to_string(y) + " has " + std::to_string(c) +
                   " neighbours in X;";
        throw std::invalid_argument(why);
    }

    boost::dynamic_bitset<> in_x(static_cast<std::size_t>(g.size()));
    for (Vertex v : p.x) in_x.set(static_cast<std::size_t>(v));
    const int half = static_cast<int>(p.x.size()) / 2;

    Graph out = g;
    for (Vertex y = 0; y < g.size(); ++y) {
        if (in_x.test(static_cast<std::size_t>(y))) continue;
        const auto seen = g.neighbourhood(y) & in_x;
        if (static_cast<int>(seen.count()) != half) continue;
        for (Vertex x : p.x) {
            if (seen.test(static_cast<std::size_t>(x)))
                out.remove_edge(y, x);
            else
                out.add_edge(y, x);
        }
    }
    return out;
}

}  // namespace cospec
