#ifndef COSPEC_FAMILY_HPP
#define COSPEC_FAMILY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cospec/graph.hpp"
#include "cospec/switching.hpp"

namespace cospec {

struct FamilyParams {
    int b = 5;  // degree, must be >= 5; parity selects the construction branch
};

/// Odd-degree gadget: complement of (b-1)/2 disjoint edges plus the
/// 3-vertex path, on b+2 vertices. Every degree is b except u (the path
/// midpoint) at b-1.
struct HGadget {
    Graph graph;
    Vertex u;
};
HGadget build_H(int b);

/// H with a pendant vertex v attached to u; b+3 vertices, all of degree b
/// except v of degree 1. Every perfect matching must use {u,v}.
struct PendantGadget {
    Graph graph;
    Vertex u;
    Vertex v;
};
PendantGadget build_H_tilde(int b);

/// Even-degree gadget: K_{b+1} minus one edge, plus v joined to the two
/// endpoints of the removed edge; b+2 vertices, all of degree b except v
/// of degree 2.
struct EvenGadget {
    Graph graph;
    Vertex v;
    std::pair<Vertex, Vertex> anchors;  // the two vertices of degree b-1 in K_{b+1}-e
};
EvenGadget build_gadget_even(int b);

/// b^2+5b-8 vertices for odd b, b^2+3b-10 for even b.
int expected_order(int b);

struct Block {
    std::string name;
    int start = 0;
    int size = 0;
};

/// Per-gadget labels: v is the attachment vertex (a member of W for the
/// first b-2 copies); anchors holds u for odd b and the two K_{b+1}-e
/// endpoints for even b.
struct GadgetLabels {
    std::vector<Vertex> anchors;
    Vertex v;
};

/// The unswitched family graph together with everything a certifier needs:
/// the switching partition, the Tutte set W, the block decomposition, and
/// the per-gadget labels.
struct FamilyLayout {
    int b = 0;
    Graph graph;
    SwitchingPartition partition;
    VertexSet w;
    std::vector<Block> blocks;
    std::vector<GadgetLabels> u_v_pairs;

    /// One block-qualified label per vertex, e.g. "big_cycle:4".
    std::vector<std::string> vertex_labels() const;
};

/// Builds the unswitched graph. Wiring into the big cycle is balanced:
/// attaching vertices are processed in a fixed order and each repeatedly
/// takes a currently least-loaded cycle vertex. With no seed ties break
/// toward the smallest label (fully deterministic); with a seed ties break
/// uniformly at random, which realizes the construction's wiring freedom.
FamilyLayout build_family(FamilyParams params, std::optional<std::uint64_t> seed = std::nullopt);

struct FamilyPair {
    FamilyLayout layout;
    Graph switched;
};
FamilyPair build_pair(FamilyParams params, std::optional<std::uint64_t> seed = std::nullopt);

/// The introductory non-regular pair on n vertices (n even, n >= 8):
/// C_4 + P_{n-4}, which has a perfect matching, and the cospectral tree
/// made of P_{n-4} with two pendant vertices on each endpoint, which does
/// not.
std::pair<Graph, Graph> intro_fixture(int n);

}  // namespace cospec

#endif
