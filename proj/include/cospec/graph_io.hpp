#ifndef COSPEC_GRAPH_IO_HPP
#define COSPEC_GRAPH_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "cospec/graph.hpp"

namespace cospec {

/// graph6 line for g (no trailing newline, no ">>graph6<<" header).
std::string encode_graph6(const Graph& g);

/// Parses one graph6 line; tolerates an optional ">>graph6<<" prefix and
/// trailing whitespace. Throws std::invalid_argument on malformed input.
Graph decode_graph6(std::string_view text);

/// Undirected DOT with each edge listed once. When vertex_labels is nonempty
/// it must have one entry per vertex; entries become node label attributes.
std::string to_dot(const Graph& g, const std::vector<std::string>& vertex_labels = {});

}  // namespace cospec

#endif
