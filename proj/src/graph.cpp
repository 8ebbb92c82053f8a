#include "quipu/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace quipu {

Graph::Graph(int n) : n_(n), adj_(n, 0) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("graph order must be between 0 and 64, got " +
                                std::to_string(n));
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " out of range for order " + std::to_string(n_));
}

int Graph::size() const {
  int twice = 0;
  for (auto row : adj_) twice += std::popcount(row);
  return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] >> v) & 1u;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loops are not allowed");
  adj_[u] |= std::uint64_t(1) << v;
  adj_[v] |= std::uint64_t(1) << u;
}

int Graph::degree(int v) const {
  check_vertex(v);
  return std::popcount(adj_[v]);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    std::uint64_t higher = adj_[u] >> (u + 1);
    while (higher) {
      int v = u + 1 + std::countr_zero(higher);
      out.emplace_back(u, v);
      higher &= higher - 1;
    }
  }
  return out;
}

Graph Graph::delete_vertices(std::uint64_t mask) const {
  std::vector<int> keep;
  keep.reserve(n_);
  for (int v = 0; v < n_; ++v)
    if (!((mask >> v) & 1u)) keep.push_back(v);
  return induced(std::move(keep));
}

Graph Graph::delete_vertex(int v) const {
  check_vertex(v);
  return delete_vertices(std::uint64_t(1) << v);
}

Graph Graph::delete_edge(int u, int v) const {
  if (!has_edge(u, v)) throw std::invalid_argument("edge to delete is absent");
  Graph g(*this);
  g.adj_[u] &= ~(std::uint64_t(1) << v);
  g.adj_[v] &= ~(std::uint64_t(1) << u);
  return g;
}

Graph Graph::disjoint_union(const Graph& a, const Graph& b) {
  if (a.n_ + b.n_ > kMaxVertices)
    throw std::invalid_argument("union exceeds the 64-vertex cap");
  Graph g(a.n_ + b.n_);
  for (int v = 0; v < a.n_; ++v) g.adj_[v] = a.adj_[v];
  for (int v = 0; v < b.n_; ++v) g.adj_[a.n_ + v] = b.adj_[v] << a.n_;
  return g;
}

Graph Graph::subdivide_edge(int u, int v) const {
  if (!has_edge(u, v)) throw std::invalid_argument("edge to subdivide is absent");
  if (n_ + 1 > kMaxVertices)
    throw std::invalid_argument("subdivision exceeds the 64-vertex cap");
  Graph g(n_ + 1);
  g.adj_.assign(adj_.begin(), adj_.end());
  g.adj_.push_back(0);
  g.n_ = n_ + 1;
  g.adj_[u] &= ~(std::uint64_t(1) << v);
  g.adj_[v] &= ~(std::uint64_t(1) << u);
  g.add_edge(u, n_);
  g.add_edge(v, n_);
  return g;
}

Graph Graph::induced(std::vector<int> vertices) const {
  std::sort(vertices.begin(), vertices.end());
  for (int v : vertices) check_vertex(v);
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw std::invalid_argument("duplicate vertex in induced subgraph");
  Graph g(static_cast<int>(vertices.size()));
  for (size_t i = 0; i < vertices.size(); ++i)
    for (size_t j = i + 1; j < vertices.size(); ++j)
      if (has_edge(vertices[i], vertices[j])) g.add_edge(int(i), int(j));
  return g;
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<std::vector<int>> out;
  std::uint64_t seen = 0;
  for (int v = 0; v < n_; ++v) {
    if ((seen >> v) & 1u) continue;
    std::uint64_t comp = std::uint64_t(1) << v;
    for (;;) {
      std::uint64_t grown = comp;
      std::uint64_t bits = comp;
      while (bits) {
        int u = std::countr_zero(bits);
        bits &= bits - 1;
        grown |= adj_[u];
      }
      if (grown == comp) break;
      comp = grown;
    }
    seen |= comp;
    std::vector<int> verts;
    while (comp) {
      verts.push_back(std::countr_zero(comp));
      comp &= comp - 1;
    }
    out.push_back(std::move(verts));
  }
  return out;
}

bool Graph::connected() const { return components().size() <= 1; }

bool Graph::is_tree() const {
  return n_ == 0 || (connected() && size() == n_ - 1);
}

bool Graph::is_unicyclic() const { return n_ > 0 && connected() && size() == n_; }

namespace {

// Shortest cycle through the BFS tree rooted at src, or none.
std::optional<int> shortest_cycle_from(const Graph& g, int src) {
  std::vector<int> dist(g.order(), -1), parent(g.order(), -1);
  std::vector<int> queue{src};
  dist[src] = 0;
  std::optional<int> best;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int u = queue[qi];
    std::uint64_t nb = g.neighbors(u);
    while (nb) {
      int w = std::countr_zero(nb);
      nb &= nb - 1;
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        parent[w] = u;
        queue.push_back(w);
      } else if (w != parent[u] && u < w) {
        int len = dist[u] + dist[w] + 1;
        if (!best || len < *best) best = len;
      }
    }
  }
  return best;
}

}  // namespace

StructuralStats structural_stats(const Graph& g) {
  StructuralStats s;
  s.order = g.order();
  s.size = g.size();
  for (int v = 0; v < g.order(); ++v) s.degree_sequence.push_back(g.degree(v));
  std::sort(s.degree_sequence.rbegin(), s.degree_sequence.rend());
  s.components = g.components();

  for (int v = 0; v < g.order(); ++v) {
    auto cyc = shortest_cycle_from(g, v);
    if (cyc && (!s.girth || *cyc < *s.girth)) s.girth = cyc;
  }

  // triangles: ordered triples u < v < w
  for (int u = 0; u < g.order(); ++u) {
    std::uint64_t higher_u = g.neighbors(u) & ~((std::uint64_t(2) << u) - 1);
    std::uint64_t nb = higher_u;
    while (nb) {
      int v = std::countr_zero(nb);
      nb &= nb - 1;
      std::uint64_t common = g.neighbors(v) & higher_u;
      s.triangles += std::popcount(common & ~((std::uint64_t(2) << v) - 1));
    }
  }

  // quadrangles: each 4-cycle counted once per diagonal pair, i.e. twice
  long long twice = 0;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v) {
      long long c = std::popcount(g.neighbors(u) & g.neighbors(v));
      twice += c * (c - 1) / 2;
    }
  s.quadrangles = twice / 2;

  // two-coloring per component
  std::vector<int> color(g.order(), -1);
  for (auto& comp : s.components) {
    color[comp.front()] = 0;
    std::vector<int> queue{comp.front()};
    for (size_t qi = 0; qi < queue.size() && s.bipartite; ++qi) {
      int u = queue[qi];
      std::uint64_t nb = g.neighbors(u);
      while (nb) {
        int w = std::countr_zero(nb);
        nb &= nb - 1;
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          s.bipartite = false;
          break;
        }
      }
    }
  }

  for (auto [u, v] : g.edges()) {
    int a = g.degree(u), b = g.degree(v);
    if (a > b) std::swap(a, b);
    ++s.edge_type_counts[{a, b}];
  }
  return s;
}

namespace {

unsigned long long count_matchings(const std::vector<std::pair<int, int>>& edges,
                                   size_t from, std::uint64_t used, int k) {
  if (k == 0) return 1;
  if (edges.size() - from < static_cast<size_t>(k)) return 0;
  unsigned long long total = 0;
  for (size_t i = from; i + k <= edges.size(); ++i) {
    auto [u, v] = edges[i];
    std::uint64_t mask = (std::uint64_t(1) << u) | (std::uint64_t(1) << v);
    if (used & mask) continue;
    total += count_matchings(edges, i + 1, used | mask, k - 1);
  }
  return total;
}

}  // namespace

Integer matchings_brute(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("negative matching size");
  if (k == 0) return 1;
  auto edges = g.edges();
  return Integer(static_cast<unsigned long>(count_matchings(edges, 0, 0, k)));
}

Integer closed_walks(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("negative walk length");
  if (k == 0) return Integer(g.order());
  Integer trace = 0;
  std::vector<Integer> v(g.order()), next(g.order());
  for (int i = 0; i < g.order(); ++i) {
    for (auto& x : v) x = 0;
    v[i] = 1;
    for (int step = 0; step < k; ++step) {
      for (int u = 0; u < g.order(); ++u) {
        next[u] = 0;
        std::uint64_t nb = g.neighbors(u);
        while (nb) {
          int w = std::countr_zero(nb);
          nb &= nb - 1;
          next[u] += v[w];
        }
      }
      std::swap(v, next);
    }
    trace += v[i];
  }
  return trace;
}

}  // namespace quipu
