#include "cospec/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "cospec/graph_io.hpp"

namespace cospec {

namespace {

using Cells = std::vector<std::vector<Vertex>>;

// Equitable refinement: split every cell by the vector of neighbour counts
// against all current cells, new subcells ordered by that vector. The
// procedure is label-independent, so isomorphic graphs refine identically.
class Refiner {
public:
    explicit Refiner(const Graph& g) : g_(g), n_(g.size()) {}

    void refine(Cells& cells) const {
        std::vector<boost::dynamic_bitset<>> masks;
        std::vector<std::vector<int>> sig(static_cast<std::size_t>(n_));
        while (true) {
            masks.assign(cells.size(), boost::dynamic_bitset<>(static_cast<std::size_t>(n_)));
            for (std::size_t ci = 0; ci < cells.size(); ++ci)
                for (Vertex v : cells[ci]) masks[ci].set(static_cast<std::size_t>(v));
            for (Vertex v = 0; v < n_; ++v) {
                auto& s = sig[static_cast<std::size_t>(v)];
                s.resize(cells.size());
                for (std::size_t ci = 0; ci < cells.size(); ++ci)
                    s[ci] = static_cast<int>((g_.neighbourhood(v) & masks[ci]).count());
            }
            Cells next;
            next.reserve(cells.size());
            bool changed = false;
            for (const auto& cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                auto sorted = cell;
                std::stable_sort(sorted.begin(), sorted.end(), [&](Vertex a, Vertex b) {
                    return sig[static_cast<std::size_t>(a)] < sig[static_cast<std::size_t>(b)];
                });
                std::vector<Vertex> current{sorted.front()};
                for (std::size_t i = 1; i < sorted.size(); ++i) {
                    if (sig[static_cast<std::size_t>(sorted[i])] !=
                        sig[static_cast<std::size_t>(sorted[i - 1])]) {
                        next.push_back(std::move(current));
                        current.clear();
                        changed = true;
                    }
                    current.push_back(sorted[i]);
                }
                next.push_back(std::move(current));
            }
            cells.swap(next);
            if (!changed) return;
        }
    }

private:
    const Graph& g_;
    int n_;
};

// Bit code of a (possibly partial) labeling in graph6 order: pairs (r,c)
// grouped by column. Packed MSB-first so lexicographic order is plain
// word-wise comparison.
class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.size()), refiner_(g) {}

    /// Full search for the maximal labeling.
    std::vector<Vertex> find_best() {
        seed_identity_best();
        run();
        return best_inverse_;  // label -> vertex
    }

    /// True iff no labeling beats the identity labeling.
    bool identity_is_best() {
        seed_identity_best();
        reject_mode_ = true;
        run();
        return !beaten_;
    }

private:
    static bool get_bit(const std::vector<std::uint64_t>& code, std::size_t t) {
        return (code[t >> 6] >> (63 - (t & 63))) & 1u;
    }
    static void set_bit(std::vector<std::uint64_t>& code, std::size_t t, bool v) {
        if (v) code[t >> 6] |= std::uint64_t{1} << (63 - (t & 63));
    }

    // The identity labeling is one candidate, so its code is a sound lower
    // bound for the maximum; seeding it makes prefix pruning active from
    // the first branch.
    void seed_identity_best() {
        best_inverse_.resize(static_cast<std::size_t>(n_));
        std::iota(best_inverse_.begin(), best_inverse_.end(), 0);
        best_code_ = code_of(best_inverse_, n_);
    }

    std::vector<std::uint64_t> code_of(const std::vector<Vertex>& inverse, int upto) const {
        const std::size_t bits = static_cast<std::size_t>(upto) * (upto - 1) / 2;
        std::vector<std::uint64_t> code((bits + 63) / 64, 0);
        std::size_t t = 0;
        for (int c = 1; c < upto; ++c)
            for (int r = 0; r < c; ++r, ++t)
                set_bit(code, t,
                        g_.adjacent(inverse[static_cast<std::size_t>(r)],
                                    inverse[static_cast<std::size_t>(c)]));
        return code;
    }

    // -1 / 0 / +1: prefix over the first `upto` labels vs. the current best.
    int compare_prefix(const std::vector<Vertex>& inverse, int upto) const {
        std::size_t t = 0;
        for (int c = 1; c < upto; ++c) {
            for (int r = 0; r < c; ++r, ++t) {
                const bool mine = g_.adjacent(inverse[static_cast<std::size_t>(r)],
                                              inverse[static_cast<std::size_t>(c)]);
                const bool theirs = get_bit(best_code_, t);
                if (mine != theirs) return mine ? 1 : -1;
            }
        }
        return 0;
    }

    void run() {
        if (n_ == 0) return;
        Cells cells{std::vector<Vertex>(static_cast<std::size_t>(n_))};
        std::iota(cells[0].begin(), cells[0].end(), 0);
        descend(cells);
    }

    void descend(Cells cells) {
        if (beaten_) return;
        refiner_.refine(cells);

        std::vector<Vertex> inverse;
        inverse.reserve(cells.size());
        std::size_t target = cells.size();
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (cells[i].size() == 1) {
                if (target == cells.size()) inverse.push_back(cells[i][0]);
            } else if (target == cells.size()) {
                target = i;
            }
        }

        const int prefix_len = static_cast<int>(inverse.size());
        const int cmp = compare_prefix(inverse, prefix_len);
        if (cmp < 0) return;  // no completion can reach the maximum

        if (target == cells.size()) {
            // Discrete: inverse is a full labeling and cmp compared all of it.
            if (cmp > 0) {
                if (reject_mode_) {
                    beaten_ = true;
                    return;
                }
                best_inverse_ = inverse;
                best_code_ = code_of(best_inverse_, n_);
            } else if (cmp == 0) {
                record_automorphism(cells);
            }
            return;
        }

        std::vector<Vertex> tried;
        for (Vertex v : cells[target]) {
            if (pruned_by_automorphism(v, tried)) continue;
            Cells child;
            child.reserve(cells.size() + 1);
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i != target) {
                    child.push_back(cells[i]);
                    continue;
                }
                child.push_back({v});
                std::vector<Vertex> rest;
                for (Vertex w : cells[i])
                    if (w != v) rest.push_back(w);
                child.push_back(std::move(rest));
            }
            individualized_.push_back(v);
            descend(std::move(child));
            individualized_.pop_back();
            if (beaten_) return;
            tried.push_back(v);
        }
    }

    void record_automorphism(const Cells& cells) {
        if (autos_.size() >= kMaxStoredAutos) return;
        // labels agree with best's labels, so best_inverse o labels is an
        // automorphism of g.
        std::vector<Vertex> labels(static_cast<std::size_t>(n_));
        for (std::size_t i = 0; i < cells.size(); ++i)
            labels[static_cast<std::size_t>(cells[i][0])] = static_cast<Vertex>(i);
        std::vector<Vertex> sigma(static_cast<std::size_t>(n_));
        bool identity = true;
        for (Vertex a = 0; a < n_; ++a) {
            sigma[static_cast<std::size_t>(a)] =
                best_inverse_[static_cast<std::size_t>(labels[static_cast<std::size_t>(a)])];
            if (sigma[static_cast<std::size_t>(a)] != a) identity = false;
        }
        if (!identity) autos_.push_back(std::move(sigma));
    }

    // Sound skip: an automorphism fixing every individualized vertex maps
    // this candidate onto an already-explored sibling subtree.
    bool pruned_by_automorphism(Vertex v, const std::vector<Vertex>& tried) const {
        if (tried.empty()) return false;
        for (const auto& sigma : autos_) {
            bool fixes = true;
            for (Vertex w : individualized_) {
                if (sigma[static_cast<std::size_t>(w)] != w) {
                    fixes = false;
                    break;
                }
            }
            if (!fixes) continue;
            const Vertex image = sigma[static_cast<std::size_t>(v)];
            if (std::find(tried.begin(), tried.end(), image) != tried.end()) return true;
        }
        return false;
    }

    static constexpr std::size_t kMaxStoredAutos = 64;

    const Graph& g_;
    int n_;
    Refiner refiner_;
    std::vector<std::uint64_t> best_code_;
    std::vector<Vertex> best_inverse_;
    std::vector<std::vector<Vertex>> autos_;
    std::vector<Vertex> individualized_;
    bool reject_mode_ = false;
    bool beaten_ = false;
};

}  // namespace

Graph canonical_graph(const Graph& g) {
    if (g.size() <= 1) return g;
    CanonicalSearch search(g);
    const auto inverse = search.find_best();  // label -> vertex
    std::vector<Vertex> labels(inverse.size());
    for (std::size_t i = 0; i < inverse.size(); ++i)
        labels[static_cast<std::size_t>(inverse[i])] = static_cast<Vertex>(i);
    return relabel(g, labels);
}

std::string canonical_form(const Graph& g) { return encode_graph6(canonical_graph(g)); }

bool is_canonically_labeled(const Graph& g) {
    if (g.size() <= 1) return true;
    CanonicalSearch search(g);
    return search.identity_is_best();
}

}  // namespace cospec
