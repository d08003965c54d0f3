#include "cospec/family.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace cospec {

namespace {

void require_odd_degree(int b) {
    if (b < 5 || b % 2 == 0)
        throw std::invalid_argument("odd-case gadget needs odd b >= 5, got " + std::to_string(b));
}

/// Hands out big-cycle endpoints to attaching vertices. Keeping every pick
/// on a least-loaded cycle vertex keeps the loads within one of each other
/// at all times, so the exact total (b-2 per cycle vertex) is always hit.
class CycleAttacher {
public:
    CycleAttacher(Graph& g, VertexSet cycle, std::optional<std::uint64_t> seed)
        : g_(g), cycle_(std::move(cycle)), load_(cycle_.size(), 0) {
        if (seed) rng_.emplace(*seed);
    }

    void attach(Vertex from, int quota) {
        if (quota > static_cast<int>(cycle_.size()))
            throw std::logic_error("attachment quota exceeds cycle length");
        std::vector<bool> taken(cycle_.size(), false);
        for (int t = 0; t < quota; ++t) {
            std::size_t pick = choose(taken);
            taken[pick] = true;
            ++load_[pick];
            g_.add_edge(from, cycle_[pick]);
        }
    }

private:
    std::size_t choose(const std::vector<bool>& taken) {
        int best = -1;
        std::vector<std::size_t> ties;
        for (std::size_t i = 0; i < cycle_.size(); ++i) {
            if (taken[i]) continue;
            if (best == -1 || load_[i] < best) {
                best = load_[i];
                ties.clear();
            }
            if (load_[i] == best) ties.push_back(i);
        }
        if (!rng_) return ties.front();
        std::uniform_int_distribution<std::size_t> pick(0, ties.size() - 1);
        return ties[pick(*rng_)];
    }

    Graph& g_;
    VertexSet cycle_;
    std::vector<int> load_;
    std::optional<std::mt19937_64> rng_;
};

/// Copies src into dst at the next free offset and returns that offset.
int append_subgraph(Graph& dst, const Graph& src, int& next) {
    const int offset = next;
    next += src.size();
    for (const auto& [u, v] : src.edges()) dst.add_edge(u + offset, v + offset);
    return offset;
}

}  // namespace

HGadget build_H(int b) {
    require_odd_degree(b);
    // (b-1)/2 disjoint edges on 0..b-2, then the 3-vertex path on b-1, b, b+1.
    Graph u_graph(b + 2);
    for (int i = 0; i < (b - 1) / 2; ++i) u_graph.add_edge(2 * i, 2 * i + 1);
    u_graph.add_edge(b - 1, b);
    u_graph.add_edge(b, b + 1);
    return HGadget{complement(u_graph), b};
}

PendantGadget build_H_tilde(int b) {
    auto h = build_H(b);
    Graph g(b + 3);
    for (const auto& [x, y] : h.graph.edges()) g.add_edge(x, y);
    const Vertex v = b + 2;
    g.add_edge(h.u, v);
    return PendantGadget{std::move(g), h.u, v};
}

EvenGadget build_gadget_even(int b) {
    if (b < 6 || b % 2 == 1)
        throw std::invalid_argument("even-case gadget needs even b >= 6, got " + std::to_string(b));
    Graph g(b + 2);
    for (Vertex x = 0; x <= b; ++x)
        for (Vertex y = x + 1; y <= b; ++y) g.add_edge(x, y);
    g.remove_edge(0, 1);
    const Vertex v = b + 1;
    g.add_edge(0, v);
    g.add_edge(1, v);
    return EvenGadget{std::move(g), v, {0, 1}};
}

int expected_order(int b) {
    if (b < 5) throw std::invalid_argument("family requires b >= 5; b <= 4 is open");
    return b % 2 == 1 ? b * b + 5 * b - 8 : b * b + 3 * b - 10;
}

std::vector<std::string> FamilyLayout::vertex_labels() const {
    std::vector<std::string> labels(static_cast<std::size_t>(graph.size()));
    for (const auto& block : blocks)
        for (int i = 0; i < block.size; ++i)
            labels[static_cast<std::size_t>(block.start + i)] = block.name + ":" + std::to_string(i);
    return labels;
}

FamilyLayout build_family(FamilyParams params, std::optional<std::uint64_t> seed) {
    const int b = params.b;
    const int n = expected_order(b);  // rejects b < 5
    const bool odd = b % 2 == 1;
    const int cycle_len = odd ? 2 * b - 5 : 2 * b - 7;

    FamilyLayout layout;
    layout.b = b;
    Graph g(n);
    int next = 0;

    auto add_block = [&](const std::string& name, int size) {
        layout.blocks.push_back(Block{name, next, size});
    };

    // Switching set: triangle then big cycle, labels 0..|X|-1.
    add_block("triangle", 3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    next = 3;
    add_block("big_cycle", cycle_len);
    VertexSet cycle(static_cast<std::size_t>(cycle_len));
    for (int i = 0; i < cycle_len; ++i) {
        cycle[static_cast<std::size_t>(i)] = next + i;
        g.add_edge(next + i, next + (i + 1) % cycle_len);
    }
    next += cycle_len;

    struct Attachment {
        Vertex vertex;
        int quota;
        bool to_triangle;
    };
    std::vector<Attachment> plan;

    // b-2 gadget copies; their pendant vertices form W.
    for (int copy = 0; copy < b - 2; ++copy) {
        if (odd) {
            auto gadget = build_H_tilde(b);
            const int offset = append_subgraph(g, gadget.graph, next);
            add_block("gadget_" + std::to_string(copy), gadget.graph.size());
            layout.u_v_pairs.push_back(GadgetLabels{{gadget.u + offset}, gadget.v + offset});
            layout.w.push_back(gadget.v + offset);
            plan.push_back({gadget.v + offset, b - 4, true});
        } else {
            auto gadget = build_gadget_even(b);
            const int offset = append_subgraph(g, gadget.graph, next);
            add_block("gadget_" + std::to_string(copy), gadget.graph.size());
            layout.u_v_pairs.push_back(
                GadgetLabels{{gadget.anchors.first + offset, gadget.anchors.second + offset},
                             gadget.v + offset});
            layout.w.push_back(gadget.v + offset);
            plan.push_back({gadget.v + offset, b - 5, true});
        }
    }

    if (odd) {
        // One more pendant gadget hung on the big cycle only.
        auto gadget = build_H_tilde(b);
        const int offset = append_subgraph(g, gadget.graph, next);
        add_block("extra_gadget", gadget.graph.size());
        layout.u_v_pairs.push_back(GadgetLabels{{gadget.u + offset}, gadget.v + offset});
        plan.push_back({gadget.v + offset, b - 1, false});
        // (b-3)/2 pendant pairs, both endpoints wired to the big cycle.
        for (int pair = 0; pair < (b - 3) / 2; ++pair) {
            add_block("pendant_pair_" + std::to_string(pair), 2);
            g.add_edge(next, next + 1);
            plan.push_back({next, b - 1, false});
            plan.push_back({next + 1, b - 1, false});
            next += 2;
        }
    } else {
        // Filler cycle C_{b-2}, every vertex wired to the big cycle.
        add_block("filler_cycle", b - 2);
        for (int i = 0; i < b - 2; ++i) {
            g.add_edge(next + i, next + (i + 1) % (b - 2));
            plan.push_back({next + i, b - 2, false});
        }
        next += b - 2;
    }

    if (next != n) throw std::logic_error("family block sizes disagree with the order formula");

    CycleAttacher attacher(g, cycle, seed);
    for (const auto& a : plan) {
        if (a.to_triangle)
            for (Vertex t = 0; t < 3; ++t) g.add_edge(a.vertex, t);
        attacher.attach(a.vertex, a.quota);
    }

    VertexSet x(static_cast<std::size_t>(3 + cycle_len));
    for (int i = 0; i < 3 + cycle_len; ++i) x[static_cast<std::size_t>(i)] = i;
    layout.partition = make_partition(g, std::move(x));
    layout.graph = std::move(g);
    return layout;
}

FamilyPair build_pair(FamilyParams params, std::optional<std::uint64_t> seed) {
    FamilyPair pair;
    pair.layout = build_family(params, seed);
    pair.switched = apply_switch(pair.layout.graph, pair.layout.partition);
    return pair;
}

std::pair<Graph, Graph> intro_fixture(int n) {
    if (n % 2 != 0 || n < 8)
        throw std::invalid_argument("fixture needs even n >= 8, got " + std::to_string(n));
    Graph with_pm = disjoint_union(cycle_graph(4), path_graph(n - 4));
    // Path on 0..n-5 with pendant leaves n-4, n-3 at one endpoint and
    // n-2, n-1 at the other.
    Graph without_pm(n);
    for (Vertex v = 0; v + 1 < n - 4; ++v) without_pm.add_edge(v, v + 1);
    without_pm.add_edge(0, n - 4);
    without_pm.add_edge(0, n - 3);
    without_pm.add_edge(n - 5, n - 2);
    without_pm.add_edge(n - 5, n - 1);
    return {std::move(with_pm), std::move(without_pm)};
}

}  // namespace cospec
