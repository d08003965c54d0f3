#ifndef COSPEC_CHARPOLY_HPP
#define COSPEC_CHARPOLY_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "cospec/graph.hpp"

namespace cospec {

using BigInt = boost::multiprecision::cpp_int;

/// Exact integer characteristic polynomial det(xI - A) of an adjacency
/// matrix, leading coefficient first. Always monic with zero trace term;
/// coeffs[2] equals minus the edge count.
struct CharPoly {
    std::vector<BigInt> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool operator==(const CharPoly& other) const { return coeffs == other.coeffs; }
    bool operator!=(const CharPoly& other) const { return coeffs != other.coeffs; }

    /// Coefficients as decimal strings (the JSON wire form).
    std::vector<std::string> decimal_coeffs() const;
};

/// Faddeev-LeVerrier over exact integers; every division in the recurrence
/// is exact, which is asserted. No floating point anywhere.
CharPoly char_poly(const Graph& g);

/// True iff the two coefficient sequences are identical (implies equal n).
bool cospectral(const Graph& g1, const Graph& g2);

/// True iff p(-x) = (-1)^n p(x), i.e. the spectrum is symmetric about zero.
/// For graphs this holds iff the graph is bipartite.
bool spectrum_symmetric(const CharPoly& p);

/// -coeffs[2]; requires degree >= 2.
BigInt edge_count_from_spectrum(const CharPoly& p);

/// Exact polynomial product, used for the disjoint-union identity.
CharPoly multiply(const CharPoly& a, const CharPoly& b);

}  // namespace cospec

#endif
