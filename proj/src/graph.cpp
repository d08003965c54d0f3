#include "cospec/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cospec {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("graph size must be nonnegative");
    adj_.assign(static_cast<std::size_t>(n), boost::dynamic_bitset<>(static_cast<std::size_t>(n)));
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) {
        throw std::out_of_range("vertex " + std::to_string(v) + " not in 0.." +
                                std::to_string(n_ - 1));
    }
}

void Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u) + " rejected");
    if (adj_[u].test(v)) return;
    adj_[u].set(v);
    adj_[v].set(u);
    ++edges_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (!adj_[u].test(v)) return;
    adj_[u].reset(v);
    adj_[v].reset(u);
    --edges_;
}

VertexSet Graph::neighbors(Vertex v) const {
    check_vertex(v);
    VertexSet out;
    out.reserve(adj_[v].count());
    for_each_neighbor(v, [&](Vertex u) { out.push_back(u); });
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edges_);
    for (Vertex u = 0; u < n_; ++u) {
        for (auto w = adj_[u].find_next(u); w != boost::dynamic_bitset<>::npos;
             w = adj_[u].find_next(w)) {
            out.emplace_back(u, static_cast<Vertex>(w));
        }
    }
    return out;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g(n);
    for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph complement(const Graph& g) {
    const int n = g.size();
    Graph out(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v)) out.add_edge(u, v);
        }
    }
    return out;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    const int n1 = g1.size();
    Graph out(n1 + g2.size());
    for (const auto& [u, v] : g1.edges()) out.add_edge(u, v);
    for (const auto& [u, v] : g2.edges()) out.add_edge(u + n1, v + n1);
    return out;
}

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& s) {
    const int n = g.size();
    std::vector<bool> dropped(static_cast<std::size_t>(n), false);
    for (Vertex v : s) {
        if (v < 0 || v >= n) throw std::out_of_range("vertex set not in range");
        dropped[static_cast<std::size_t>(v)] = true;
    }
    InducedSubgraph out;
    std::vector<Vertex> new_label(static_cast<std::size_t>(n), -1);
    for (Vertex v = 0; v < n; ++v) {
        if (!dropped[static_cast<std::size_t>(v)]) {
            new_label[static_cast<std::size_t>(v)] = static_cast<Vertex>(out.original_labels.size());
            out.original_labels.push_back(v);
        }
    }
    out.graph = Graph(static_cast<int>(out.original_labels.size()));
    for (const auto& [u, v] : g.edges()) {
        if (!dropped[static_cast<std::size_t>(u)] && !dropped[static_cast<std::size_t>(v)]) {
            out.graph.add_edge(new_label[static_cast<std::size_t>(u)],
                               new_label[static_cast<std::size_t>(v)]);
        }
    }
    return out;
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
    Graph out(g.size());
    for (const auto& [u, v] : g.edges())
        out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return out;
}

std::vector<VertexSet> components(const Graph& g) {
    const int n = g.size();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<VertexSet> out;
    VertexSet queue;
    for (Vertex root = 0; root < n; ++root) {
        if (seen[static_cast<std::size_t>(root)]) continue;
        VertexSet comp;
        queue.clear();
        queue.push_back(root);
        seen[static_cast<std::size_t>(root)] = true;
        while (!queue.empty()) {
            Vertex v = queue.back();
            queue.pop_back();
            comp.push_back(v);
            g.for_each_neighbor(v, [&](Vertex u) {
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = true;
                    queue.push_back(u);
                }
            });
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

int odd_component_count(const Graph& g) {
    int odd = 0;
    for (const auto& comp : components(g))
        if (comp.size() % 2 == 1) ++odd;
    return odd;
}

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> degs;
    degs.reserve(static_cast<std::size_t>(g.size()));
    for (Vertex v = 0; v < g.size(); ++v) degs.push_back(g.degree(v));
    std::sort(degs.begin(), degs.end());
    return degs;
}

bool is_regular(const Graph& g, int k) {
    for (Vertex v = 0; v < g.size(); ++v)
        if (g.degree(v) != k) return false;
    return true;
}

}  // namespace cospec
