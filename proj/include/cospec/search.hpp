#ifndef COSPEC_SEARCH_HPP
#define COSPEC_SEARCH_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "cospec/charpoly.hpp"
#include "cospec/graph.hpp"

namespace cospec {

/// All connected k-regular graphs on n vertices, one per isomorphism class,
/// in a fixed generation order. Partial adjacency rows are extended vertex
/// by vertex; a completed candidate is kept only when its labeling is the
/// canonical representative of its class. Infeasible parameters (odd n*k,
/// k >= n) yield an empty list. Small-n regime: n is capped at 31.
std::vector<Graph> enumerate_regular(int n, int k);

/// Graphs sharing one characteristic polynomial, keyed by canonical form so
/// members are pairwise non-isomorphic, each with its matching status.
struct CospectralClass {
    CharPoly poly;
    std::vector<std::string> members;  // canonical graph6, ascending
    std::vector<bool> pm_flags;

    bool mixed() const;
};

/// Buckets arbitrary graphs by exact characteristic polynomial and drops
/// isomorphic duplicates within a bucket. Exposed separately so externally
/// built pairs can be fed through the same classifier the scan uses.
std::vector<CospectralClass> classify_cospectral(const std::vector<Graph>& graphs);

struct ScanSummary {
    int n = 0;
    std::size_t graph_count = 0;
    std::size_t class_count = 0;             // distinct characteristic polynomials
    std::size_t nontrivial_class_count = 0;  // classes with >= 2 members
};

struct ScanResult {
    int k = 0;
    int n_max = 0;
    std::vector<ScanSummary> per_n;
    std::vector<CospectralClass> discrepant;  // classes with mixed matching status
};

/// For each even n <= n_max, enumerate connected k-regular graphs, bucket
/// them by characteristic polynomial, and collect every class whose members
/// disagree on having a perfect matching.
ScanResult scan_cospectral_pm(int k, int n_max);

}  // namespace cospec

#endif
