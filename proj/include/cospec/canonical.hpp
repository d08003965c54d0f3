#ifndef COSPEC_CANONICAL_HPP
#define COSPEC_CANONICAL_HPP

#include <string>

#include "cospec/graph.hpp"

namespace cospec {

/// Canonically relabeled copy of g: the labeling that maximizes the graph6
/// bit string, found by individualization-refinement backtracking with
/// prefix and automorphism pruning. Exact for any graph; intended for the
/// small-n regime (n up to a few dozen), where the search tree stays tiny.
Graph canonical_graph(const Graph& g);

/// graph6 line of canonical_graph(g); equal for two graphs iff isomorphic.
std::string canonical_form(const Graph& g);

/// True iff g's own labeling already attains the canonical code. Cheaper
/// than a full canonicalization when the answer is no, which makes it the
/// isomorph-rejection test of the orderly generator.
bool is_canonically_labeled(const Graph& g);

}  // namespace cospec

#endif
