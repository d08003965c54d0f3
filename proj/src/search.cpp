#include "cospec/search.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "cospec/canonical.hpp"
#include "cospec/matching.hpp"

namespace cospec {

namespace {

// Orderly generation over adjacency rows. Vertex i's neighbours above i are
// chosen so deg(i) lands exactly on k, then the partial matrix is tested
// against two sound filters before descending:
//   - the residual degree sequence must stay graphical (Erdos-Gallai), and
//   - no transposition of already-placed labels may produce a larger
//     column-order bit code, since such a labeling could never be canonical.
// A completed candidate is emitted iff it is connected and its labeling is
// canonical, which makes the output isomorph-free.
class RegularGraphGenerator {
public:
    RegularGraphGenerator(int n, int k, std::vector<Graph>& out) : n_(n), k_(k), out_(out) {
        adj_.assign(static_cast<std::size_t>(n), 0u);
        deg_.assign(static_cast<std::size_t>(n), 0);
    }

    void run() {
        // Canonical labelings of a k-regular graph start with 0 joined to
        // exactly 1..k, so the first row is forced.
        for (Vertex j = 1; j <= k_; ++j) link(0, j);
        std::vector<Transposition> tied;
        if (row_checks_pass(0, tied)) fill_row(1, tied);
    }

private:
    struct Transposition {
        std::uint8_t a, b;
    };

    bool edge(int r, int c) const { return (adj_[static_cast<std::size_t>(r)] >> c) & 1u; }

    void link(int u, int v) {
        adj_[static_cast<std::size_t>(u)] |= 1u << v;
        adj_[static_cast<std::size_t>(v)] |= 1u << u;
        ++deg_[static_cast<std::size_t>(u)];
        ++deg_[static_cast<std::size_t>(v)];
    }

    void unlink(int u, int v) {
        adj_[static_cast<std::size_t>(u)] &= ~(1u << v);
        adj_[static_cast<std::size_t>(v)] &= ~(1u << u);
        --deg_[static_cast<std::size_t>(u)];
        --deg_[static_cast<std::size_t>(v)];
    }

    // Column-order comparison of the relabeling by (a b) against the
    // identity over all pairs within 0..upto: +1 means the swap wins.
    int compare_swap(int a, int b, int upto) const {
        auto tau = [&](int x) { return x == a ? b : (x == b ? a : x); };
        for (int c = 1; c <= upto; ++c) {
            for (int r = 0; r < c; ++r) {
                const bool swapped = edge(tau(r), tau(c));
                const bool mine = edge(r, c);
                if (swapped != mine) return swapped ? 1 : -1;
            }
        }
        return 0;
    }

    // Runs after row i is placed, when pairs within 0..i+1 are all decided.
    // `tied` carries the swaps that were indistinguishable so far; each only
    // needs its two new bits compared. Returns false to prune.
    bool row_checks_pass(int i, std::vector<Transposition>& tied) {
        const int c0 = i + 1;
        if (c0 >= n_) return true;  // nothing new becomes comparable
        for (std::size_t t = 0; t < tied.size();) {
            const auto [a, b] = tied[t];
            const bool swapped = edge(b, c0);
            const bool mine = edge(a, c0);
            if (swapped != mine) {
                if (swapped) return false;
                tied[t] = tied.back();
                tied.pop_back();
            } else {
                ++t;
            }
        }
        for (int a = 0; a < c0; ++a) {
            const int cmp = compare_swap(a, c0, c0);
            if (cmp > 0) return false;
            if (cmp == 0) tied.push_back({static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(c0)});
        }
        return residual_graphical(i);
    }

    // Erdos-Gallai on the degrees still owed to vertices above i.
    bool residual_graphical(int i) const {
        std::vector<int> caps;
        long total = 0;
        for (int j = i + 1; j < n_; ++j) {
            const int c = k_ - deg_[static_cast<std::size_t>(j)];
            if (c < 0) return false;
            caps.push_back(c);
            total += c;
        }
        if (total % 2 != 0) return false;
        std::sort(caps.begin(), caps.end(), std::greater<>());
        long lhs = 0;
        for (std::size_t r = 1; r <= caps.size(); ++r) {
            lhs += caps[r - 1];
            long rhs = static_cast<long>(r) * (static_cast<long>(r) - 1);
            for (std::size_t j = r; j < caps.size(); ++j)
                rhs += std::min<long>(caps[j], static_cast<long>(r));
            if (lhs > rhs) return false;
        }
        return true;
    }

    void fill_row(int i, const std::vector<Transposition>& tied) {
        if (i == n_) {
            accept();
            return;
        }
        const int need = k_ - deg_[static_cast<std::size_t>(i)];
        std::vector<int> slots;
        for (int j = i + 1; j < n_; ++j)
            if (deg_[static_cast<std::size_t>(j)] < k_) slots.push_back(j);
        choose(i, need, 0, slots, tied);
    }

    void choose(int i, int need, std::size_t from, const std::vector<int>& slots,
                const std::vector<Transposition>& tied) {
        if (need == 0) {
            auto child = tied;
            if (row_checks_pass(i, child)) fill_row(i + 1, child);
            return;
        }
        if (slots.size() - from < static_cast<std::size_t>(need)) return;
        for (std::size_t s = from; s + static_cast<std::size_t>(need) <= slots.size(); ++s) {
            const int j = slots[s];
            link(i, j);
            choose(i, need - 1, s + 1, slots, tied);
            unlink(i, j);
        }
    }

    bool connected() const {
        std::uint32_t seen = 1u;
        std::uint32_t frontier = 1u;
        while (frontier != 0) {
            std::uint32_t next = 0;
            for (int v = 0; v < n_; ++v)
                if (frontier & (1u << v)) next |= adj_[static_cast<std::size_t>(v)];
            frontier = next & ~seen;
            seen |= next;
        }
        return seen == (n_ >= 32 ? ~0u : (1u << n_) - 1u);
    }

    void accept() {
        if (!connected()) return;
        Graph g(n_);
        for (int r = 0; r < n_; ++r)
            for (int c = r + 1; c < n_; ++c)
                if (edge(r, c)) g.add_edge(r, c);
        if (is_canonically_labeled(g)) out_.push_back(std::move(g));
    }

    int n_, k_;
    std::vector<Graph>& out_;
    std::vector<std::uint32_t> adj_;
    std::vector<int> deg_;
};

}  // namespace

std::vector<Graph> enumerate_regular(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("vertex count and degree must be nonnegative");
    if (n > 31) throw std::invalid_argument("enumeration is a small-n routine (n <= 31)");
    std::vector<Graph> out;
    if (k >= n || (static_cast<long>(n) * k) % 2 != 0) return out;  // infeasible
    if (k == 0) {
        if (n == 1) out.push_back(Graph(1));  // the only connected 0-regular graph
        return out;
    }
    RegularGraphGenerator gen(n, k, out);
    gen.run();
    return out;
}

bool CospectralClass::mixed() const {
    for (std::size_t i = 1; i < pm_flags.size(); ++i)
        if (pm_flags[i] != pm_flags[0]) return true;
    return false;
}

std::vector<CospectralClass> classify_cospectral(const std::vector<Graph>& graphs) {
    struct Member {
        std::string canon;
        bool pm;
    };
    std::map<std::vector<std::string>, std::vector<Member>> buckets;
    for (const auto& g : graphs) {
        const auto poly = char_poly(g);
        auto& bucket = buckets[poly.decimal_coeffs()];
        std::string canon = canonical_form(g);
        const bool dup = std::any_of(bucket.begin(), bucket.end(),
                                     [&](const Member& m) { return m.canon == canon; });
        if (!dup) bucket.push_back({std::move(canon), has_perfect_matching(g)});
    }
    std::vector<CospectralClass> classes;
    classes.reserve(buckets.size());
    for (auto& [coeffs, members] : buckets) {
        std::sort(members.begin(), members.end(),
                  [](const Member& a, const Member& b) { return a.canon < b.canon; });
        CospectralClass cls;
        cls.poly.coeffs.reserve(coeffs.size());
        for (const auto& c : coeffs) cls.poly.coeffs.emplace_back(c);
        for (auto& m : members) {
            cls.members.push_back(std::move(m.canon));
            cls.pm_flags.push_back(m.pm);
        }
        classes.push_back(std::move(cls));
    }
    return classes;
}

ScanResult scan_cospectral_pm(int k, int n_max) {
    ScanResult result;
    result.k = k;
    result.n_max = n_max;
    int start = k + 1;
    if (start % 2 != 0) ++start;
    if (start < 2) start = 2;
    for (int n = start; n <= n_max; n += 2) {
        const auto graphs = enumerate_regular(n, k);
        const auto classes = classify_cospectral(graphs);
        ScanSummary summary;
        summary.n = n;
        summary.graph_count = graphs.size();
        summary.class_count = classes.size();
        for (const auto& cls : classes) {
            if (cls.members.size() >= 2) ++summary.nontrivial_class_count;
            if (cls.mixed()) result.discrepant.push_back(cls);
        }
        result.per_n.push_back(summary);
    }
    return result;
}

}  // namespace cospec
