#ifndef COSPEC_MATCHING_HPP
#define COSPEC_MATCHING_HPP

#include <utility>
#include <vector>

#include "cospec/graph.hpp"

namespace cospec {

/// A set of pairwise disjoint edges, stored as (u,v) with u < v in
/// ascending lexicographic order.
struct Matching {
    std::vector<Edge> edges;

    std::size_t size() const { return edges.size(); }
    bool covers(int n) const { return edges.size() * 2 == static_cast<std::size_t>(n); }
};

/// Maximum-cardinality matching via augmenting paths with blossom
/// contraction. Vertices and neighbours are scanned in ascending label
/// order after a greedy seed matching, so the result is deterministic.
Matching maximum_matching(const Graph& g);

/// True iff m is a valid matching of g: every pair an edge, endpoints disjoint.
bool verify_matching(const Graph& g, const Matching& m);

bool has_perfect_matching(const Graph& g);

/// n - 2 * |maximum matching|.
int deficiency(const Graph& g);

/// Tutte certificate for a vertex set S: the orders of the components of
/// G - S and the number of odd ones. Violating (odd > |S|) proves that G
/// has no perfect matching.
struct TutteViolator {
    VertexSet s;
    std::vector<int> component_orders;
    int odd_components = 0;

    bool violating() const { return odd_components > static_cast<int>(s.size()); }
};

TutteViolator check_tutte_violator(const Graph& g, const VertexSet& s);

}  // namespace cospec

#endif
