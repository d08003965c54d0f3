#ifndef COSPEC_GRAPH_HPP
#define COSPEC_GRAPH_HPP

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace cospec {

using Vertex = int;
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1. Adjacency is kept as one
/// bitset row per vertex, so membership tests and complementation are cheap
/// at the sizes this library works with (n up to a few hundred).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int size() const { return n_; }
    std::size_t edge_count() const { return edges_; }

    bool adjacent(Vertex u, Vertex v) const { return adj_[u].test(v); }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].count()); }

    /// Inserts {u,v}; idempotent. Rejects loops and out-of-range endpoints.
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    const boost::dynamic_bitset<>& neighbourhood(Vertex v) const { return adj_[v]; }

    /// Neighbours of v in ascending order.
    VertexSet neighbors(Vertex v) const;

    /// All edges as (u,v) with u < v, ascending lexicographic order.
    std::vector<Edge> edges() const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }
    bool operator!=(const Graph& other) const { return !(*this == other); }

    template <class F>
    void for_each_neighbor(Vertex v, F&& f) const {
        for (auto u = adj_[v].find_first(); u != boost::dynamic_bitset<>::npos;
             u = adj_[v].find_next(u)) {
            f(static_cast<Vertex>(u));
        }
    }

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::size_t edges_ = 0;
    std::vector<boost::dynamic_bitset<>> adj_;
};

// Elementary constructions.
Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);   // P_n has n vertices (n-1 edges)
Graph cycle_graph(int n);  // requires n >= 3

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g1, const Graph& g2);

/// Result of deleting a vertex set: the induced subgraph on the remaining
/// vertices, relabeled consecutively, plus the order-preserving map from
/// new labels back to the original ones.
struct InducedSubgraph {
    Graph graph;
    VertexSet original_labels;  // original_labels[new] = old
};
InducedSubgraph delete_vertices(const Graph& g, const VertexSet& s);

/// Apply a relabeling: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);
int odd_component_count(const Graph& g);

std::vector<int> degree_sequence(const Graph& g);  // ascending
bool is_regular(const Graph& g, int k);

}  // namespace cospec

#endif
