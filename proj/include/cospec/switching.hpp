#ifndef COSPEC_SWITCHING_HPP
#define COSPEC_SWITCHING_HPP

#include <optional>
#include <utility>
#include <vector>

#include "cospec/graph.hpp"

namespace cospec {

/// A bipartition {X, Y} of the vertices of an n-vertex graph, X given
/// explicitly and Y implied. |X| must be even and at least 2.
struct SwitchingPartition {
    int n = 0;
    VertexSet x;  // sorted, duplicate-free

    VertexSet y() const;
};

/// Validates well-formedness (range, duplicates, even |X| >= 2) and throws
/// std::invalid_argument otherwise.
SwitchingPartition make_partition(const Graph& g, VertexSet x);

/// Outcome of checking the Godsil-McKay hypotheses: X must induce a regular
/// subgraph and every y outside X must see 0, |X|/2, or |X| of it. Offenders
/// are reported with their X-neighbour counts so failures are diagnosable.
struct SwitchingReport {
    bool valid = false;
    std::optional<int> x_induced_degree;           // empty when X is not regular
    std::vector<std::pair<Vertex, int>> offenders;  // (y, neighbours in X)
};

SwitchingReport validate_switching_set(const Graph& g, const SwitchingPartition& p);

/// Godsil-McKay switch: each y with exactly |X|/2 neighbours in X has its
/// X-neighbourhood complemented within X; everything else is untouched.
/// Refuses (std::invalid_argument) if the partition fails validation.
Graph apply_switch(const Graph& g, const SwitchingPartition& p);

}  // namespace cospec

#endif
