#include "quipu/enumerate.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace quipu {

namespace {

Graph with_extra_vertex(const Graph& g) {
  Graph bigger(g.order() + 1);
  for (auto [u, v] : g.edges()) bigger.add_edge(u, v);
  return bigger;
}

}  // namespace

std::vector<Graph> all_trees(int max_order) {
  if (max_order < 1 || max_order > 18)
    throw std::invalid_argument("all_trees: max_order must lie in [1, 18]");
  std::vector<Graph> out{Graph(1)};
  std::vector<Graph> layer = out;
  for (int n = 2; n <= max_order; ++n) {
    std::set<std::string> seen;
    std::vector<Graph> next;
    for (const Graph& t : layer)
      for (int v = 0; v < t.order(); ++v) {
        Graph bigger = with_extra_vertex(t);
        bigger.add_edge(v, t.order());
        if (seen.insert(canonical_code(bigger)).second)
          next.push_back(bigger);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::vector<Graph> all_unicyclic(int max_order) {
  if (max_order < 3 || max_order > 16)
    throw std::invalid_argument("all_unicyclic: max_order must lie in [3, 16]");
  std::vector<Graph> out;
  std::set<std::string> seen;
  for (const Graph& t : all_trees(max_order)) {
    if (t.order() < 3) continue;
    for (int u = 0; u < t.order(); ++u)
      for (int v = u + 1; v < t.order(); ++v) {
        if (t.has_edge(u, v)) continue;
        Graph g = t;
        g.add_edge(u, v);
        if (seen.insert(canonical_code(g)).second) out.push_back(g);
      }
  }
  return out;
}

}  // namespace quipu
