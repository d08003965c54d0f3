#include "cospec/matching.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace cospec {

namespace {

// Blossom-contraction search, the classic array formulation. base_[v] is the
// representative of the contracted blossom containing v; p[] stores the
// alternating forest.
class BlossomSolver {
public:
    explicit BlossomSolver(const Graph& g)
        : g_(g),
          n_(g.size()),
          match_(static_cast<std::size_t>(n_), -1),
          parent_(static_cast<std::size_t>(n_)),
          base_(static_cast<std::size_t>(n_)),
          in_tree_(static_cast<std::size_t>(n_)),
          in_blossom_(static_cast<std::size_t>(n_)) {
        for (Vertex u = 0; u < n_; ++u) {
            adj_.push_back(g.neighbors(u));  // ascending
        }
    }

    std::vector<int> solve() {
        // Greedy seed matching; final size is unaffected, phases get fewer.
        for (Vertex u = 0; u < n_; ++u) {
            if (match_[static_cast<std::size_t>(u)] != -1) continue;
            for (Vertex v : adj_[static_cast<std::size_t>(u)]) {
                if (match_[static_cast<std::size_t>(v)] == -1) {
                    match_[static_cast<std::size_t>(u)] = v;
                    match_[static_cast<std::size_t>(v)] = u;
                    break;
                }
            }
        }
        for (Vertex u = 0; u < n_; ++u)
            if (match_[static_cast<std::size_t>(u)] == -1) find_augmenting_path(u);
        return match_;
    }

private:
    int lca(int a, int b) {
        std::vector<bool> seen(static_cast<std::size_t>(n_), false);
        int cur = a;
        while (true) {
            cur = base_[static_cast<std::size_t>(cur)];
            seen[static_cast<std::size_t>(cur)] = true;
            if (match_[static_cast<std::size_t>(cur)] == -1) break;
            cur = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(cur)])];
        }
        cur = b;
        while (true) {
            cur = base_[static_cast<std::size_t>(cur)];
            if (seen[static_cast<std::size_t>(cur)]) return cur;
            cur = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(cur)])];
        }
    }

    void mark_path(int v, int stem, int child) {
        while (base_[static_cast<std::size_t>(v)] != stem) {
            const int mv = match_[static_cast<std::size_t>(v)];
            in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = true;
            in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(mv)])] = true;
            parent_[static_cast<std::size_t>(v)] = child;
            child = mv;
            v = parent_[static_cast<std::size_t>(mv)];
        }
    }

    void contract(int v, int to, std::deque<int>& queue) {
        const int stem = lca(v, to);
        std::fill(in_blossom_.begin(), in_blossom_.end(), false);
        mark_path(v, stem, to);
        mark_path(to, stem, v);
        for (Vertex i = 0; i < n_; ++i) {
            if (in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(i)])]) {
                base_[static_cast<std::size_t>(i)] = stem;
                if (!in_tree_[static_cast<std::size_t>(i)]) {
                    in_tree_[static_cast<std::size_t>(i)] = true;
                    queue.push_back(i);
                }
            }
        }
    }

    bool find_augmenting_path(int root) {
        std::fill(in_tree_.begin(), in_tree_.end(), false);
        std::fill(parent_.begin(), parent_.end(), -1);
        std::iota(base_.begin(), base_.end(), 0);
        in_tree_[static_cast<std::size_t>(root)] = true;

        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (Vertex to : adj_[static_cast<std::size_t>(v)]) {
                if (base_[static_cast<std::size_t>(v)] == base_[static_cast<std::size_t>(to)] ||
                    match_[static_cast<std::size_t>(v)] == to)
                    continue;
                if (to == root ||
                    (match_[static_cast<std::size_t>(to)] != -1 &&
                     parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(to)])] != -1)) {
                    contract(v, to, queue);
                } else if (parent_[static_cast<std::size_t>(to)] == -1) {
                    parent_[static_cast<std::size_t>(to)] = v;
                    if (match_[static_cast<std::size_t>(to)] == -1) {
                        augment(to);
                        return true;
                    }
                    const int mt = match_[static_cast<std::size_t>(to)];
                    in_tree_[static_cast<std::size_t>(mt)] = true;
                    queue.push_back(mt);
                }
            }
        }
        return false;
    }

    void augment(int leaf) {
        int v = leaf;
        while (v != -1) {
            const int pv = parent_[static_cast<std::size_t>(v)];
            const int next = match_[static_cast<std::size_t>(pv)];
            match_[static_cast<std::size_t>(v)] = pv;
            match_[static_cast<std::size_t>(pv)] = v;
            v = next;
        }
    }

    const Graph& g_;
    int n_;
    std::vector<VertexSet> adj_;
    std::vector<int> match_, parent_, base_;
    std::vector<bool> in_tree_, in_blossom_;
};

}  // namespace

Matching maximum_matching(const Graph& g) {
    BlossomSolver solver(g);
    const auto match = solver.solve();
    Matching m;
    for (Vertex v = 0; v < g.size(); ++v) {
        const int partner = match[static_cast<std::size_t>(v)];
        if (partner > v) m.edges.emplace_back(v, partner);
    }
    return m;
}

bool verify_matching(const Graph& g, const Matching& m) {
    std::vector<bool> used(static_cast<std::size_t>(g.size()), false);
    for (const auto& [u, v] : m.edges) {
        if (u < 0 || v < 0 || u >= g.size() || v >= g.size()) return false;
        if (u == v || !g.adjacent(u, v)) return false;
        if (used[static_cast<std::size_t>(u)] || used[static_cast<std::size_t>(v)]) return false;
        used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

bool has_perfect_matching(const Graph& g) {
    if (g.size() % 2 != 0) return false;
    return maximum_matching(g).covers(g.size());
}

int deficiency(const Graph& g) {
    return g.size() - 2 * static_cast<int>(maximum_matching(g).size());
}

TutteViolator check_tutte_violator(const Graph& g, const VertexSet& s) {
    TutteViolator cert;
    cert.s = s;
    std::sort(cert.s.begin(), cert.s.end());
    const auto rest = delete_vertices(g, cert.s);
    for (const auto& comp : components(rest.graph)) {
        cert.component_orders.push_back(static_cast<int>(comp.size()));
        if (comp.size() % 2 == 1) ++cert.odd_components;
    }
    std::sort(cert.component_orders.begin(), cert.component_orders.end());
    return cert;
}

}  // namespace cospec
