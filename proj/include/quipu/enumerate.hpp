#pragma once

// Exhaustive generation of small graphs, one representative per isomorphism
// class: free trees by leaf augmentation, connected unicyclic graphs by
// adding a single chord to a tree.  Both serve as independent completeness
// oracles for the structured family sweeps elsewhere.

#include <vector>

#include "quipu/graph.hpp"

namespace quipu {

// Every free tree with 1..max_order vertices, exactly one per isomorphism
// class, sorted by order.  max_order in [1, 18].
std::vector<Graph> all_trees(int max_order);

// Every connected unicyclic graph with 3..max_order vertices, exactly one
// per isomorphism class, sorted by order.  max_order in [3, 16].
std::vector<Graph> all_unicyclic(int max_order);

}  // namespace quipu
