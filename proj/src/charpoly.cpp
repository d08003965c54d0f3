#include "cospec/charpoly.hpp"

#include <stdexcept>

namespace cospec {

std::vector<std::string> CharPoly::decimal_coeffs() const {
    std::vector<std::string> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) out.push_back(c.str());
    return out;
}

CharPoly char_poly(const Graph& g) {
    const int n = g.size();
    CharPoly p;
    p.coeffs.assign(static_cast<std::size_t>(n) + 1, BigInt(0));
    p.coeffs[0] = 1;
    if (n == 0) return p;

    // Faddeev-LeVerrier: M_k = A*M_{k-1} + a_{k-1}*I, a_k = -tr(A*M_k)/k.
    // A is 0/1, so A*M rows are plain sums over neighbour rows.
    const auto nn = static_cast<std::size_t>(n);
    std::vector<BigInt> m(nn * nn, BigInt(0));  // M_{k-1}
    std::vector<BigInt> prod(nn * nn);          // A * M_{k-1}
    BigInt a_prev = 1;                          // a_0

    for (int k = 1; k <= n; ++k) {
        for (Vertex i = 0; i < n; ++i) {
            BigInt* row = prod.data() + static_cast<std::size_t>(i) * nn;
            for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = 0;
            g.for_each_neighbor(i, [&](Vertex u) {
                const BigInt* src = m.data() + static_cast<std::size_t>(u) * nn;
                for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] += src[static_cast<std::size_t>(j)];
            });
        }
        // M_k = prod + a_{k-1} I; tr(A*M_k) = tr(A*prod) since tr(A) = 0.
        BigInt trace = 0;
        for (Vertex i = 0; i < n; ++i) {
            g.for_each_neighbor(i, [&](Vertex u) {
                trace += prod[static_cast<std::size_t>(u) * nn + static_cast<std::size_t>(i)];
            });
        }
        BigInt a_k = -trace / k;
        if (a_k * k != -trace) throw std::logic_error("Faddeev-LeVerrier division not exact");
        p.coeffs[static_cast<std::size_t>(k)] = a_k;

        if (k < n) {
            m.swap(prod);
            for (Vertex i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * nn + static_cast<std::size_t>(i)] += a_prev;
            a_prev = a_k;
        }
    }
    return p;
}

bool cospectral(const Graph& g1, const Graph& g2) {
    if (g1.size() != g2.size()) return false;
    return char_poly(g1) == char_poly(g2);
}

bool spectrum_symmetric(const CharPoly& p) {
    for (std::size_t k = 1; k < p.coeffs.size(); k += 2)
        if (p.coeffs[k] != 0) return false;
    return true;
}

BigInt edge_count_from_spectrum(const CharPoly& p) {
    if (p.degree() < 2) throw std::invalid_argument("need degree >= 2 to read the edge count");
    return -p.coeffs[2];
}

CharPoly multiply(const CharPoly& a, const CharPoly& b) {
    CharPoly out;
    out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    return out;
}

}  // namespace cospec
