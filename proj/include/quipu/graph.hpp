#pragma once

// Small simple undirected graphs (at most 64 vertices) with bitset adjacency
// rows, plus the structural statistics and brute-force counts the spectral
// layers are checked against.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quipu/intpoly.hpp"

namespace quipu {

class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;                 // null graph (0 vertices)
  explicit Graph(int n);             // n isolated vertices, 0 <= n <= 64

  int order() const { return n_; }   // vertex count
  int size() const;                  // edge count
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);       // rejects loops and out-of-range labels
  std::uint64_t neighbors(int v) const { return adj_[v]; }
  int degree(int v) const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic
  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }
  bool operator!=(const Graph& o) const { return !(*this == o); }

  // Vertices above a removed vertex shift down by one; resulting labels stay
  // contiguous.
  Graph delete_vertex(int v) const;
  Graph delete_edge(int u, int v) const;
  // Remove every vertex whose bit is set in mask.
  Graph delete_vertices(std::uint64_t mask) const;
  // Vertices of b are relabeled to follow those of a.
  static Graph disjoint_union(const Graph& a, const Graph& b);
  // Replace edge (u, v) by u - w - v where w is the new vertex labeled n.
  Graph subdivide_edge(int u, int v) const;

  // Induced subgraph on the listed vertices (new label = rank in the sorted
  // list).
  Graph induced(std::vector<int> vertices) const;

  std::vector<std::vector<int>> components() const;  // each sorted, order by minimum vertex
  bool connected() const;  // null graph counts as connected
  bool is_tree() const;
  bool is_unicyclic() const;  // connected with exactly one cycle

 private:
  void check_vertex(int v) const;
  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

struct StructuralStats {
  int order = 0;
  int size = 0;
  std::vector<int> degree_sequence;              // descending
  std::optional<int> girth;                      // absent for forests
  long long triangles = 0;                       // 3-cycle count
  long long quadrangles = 0;                     // 4-cycle count
  bool bipartite = true;
  std::vector<std::vector<int>> components;
  // (smaller endpoint degree, larger endpoint degree) -> number of edges
  std::map<std::pair<int, int>, int> edge_type_counts;
};

StructuralStats structural_stats(const Graph& g);

// Number of k-edge matchings, by direct enumeration.
Integer matchings_brute(const Graph& g, int k);

// Number of closed walks of length k (trace of the k-th adjacency power),
// by iterated integer matrix-vector products.
Integer closed_walks(const Graph& g, int k);

// Isomorphism-invariant byte string: equal codes iff isomorphic graphs.
// Trees use rooted-center canonical encoding, unicyclic graphs a canonical
// rotation/reflection of the cycle with canonical subtree codes, and other
// graphs an ordered backtracking over vertex placements with invariant
// pruning (exponential in the worst case; intended for small graphs).
// Disconnected graphs combine sorted component codes.
std::string canonical_code(const Graph& g);

}  // namespace quipu
