#pragma once

// graph6 text encoding for small simple undirected graphs: one printable
// ASCII string per graph, upper-triangle adjacency bits packed six per byte.
// Both the short order prefix (n <= 62) and the three-byte long form used
// for 63 <= n <= 64 are supported.

#include <string>

#include "quipu/graph.hpp"

namespace quipu {

std::string to_graph6(const Graph& g);

// Throws std::invalid_argument on malformed input (bad characters, truncated
// bit section, order above 64).
Graph from_graph6(const std::string& text);

}  // namespace quipu
