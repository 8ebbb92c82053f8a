#include "quipu/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace quipu {

namespace {

// Canonical parenthesization of the subtree rooted at v, walking away from
// parent; uses only edges whose endpoints both lie in the allowed mask.
std::string ahu(const Graph& g, int v, int parent, std::uint64_t allowed) {
  std::vector<std::string> child_codes;
  std::uint64_t nb = g.neighbors(v) & allowed;
  while (nb) {
    int w = std::countr_zero(nb);
    nb &= nb - 1;
    if (w == parent) continue;
    child_codes.push_back(ahu(g, w, v, allowed));
  }
  std::sort(child_codes.begin(), child_codes.end());
  std::string code = "(";
  for (auto& c : child_codes) code += c;
  code += ")";
  return code;
}

std::string tree_code(const Graph& g) {
  // centers: iteratively strip leaves
  int n = g.order();
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<int> layer;
  std::vector<bool> removed(n, false);
  int remaining = n;
  for (int v = 0; v < n; ++v)
    if (deg[v] <= 1) layer.push_back(v);
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      removed[v] = true;
      --remaining;
      std::uint64_t nb = g.neighbors(v);
      while (nb) {
        int w = std::countr_zero(nb);
        nb &= nb - 1;
        if (!removed[w] && --deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::vector<int> centers;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) centers.push_back(v);

  std::uint64_t all = (n == 64) ? ~std::uint64_t(0)
                                : ((std::uint64_t(1) << n) - 1);
  if (centers.size() == 1) return "T1" + ahu(g, centers[0], -1, all);
  std::string a = ahu(g, centers[0], centers[1], all);
  std::string b = ahu(g, centers[1], centers[0], all);
  if (b < a) std::swap(a, b);
  return "T2" + a + b;
}

std::string unicyclic_code(const Graph& g) {
  // the 2-core of a connected unicyclic graph is its unique cycle
  int n = g.order();
  std::vector<int> deg(n);
  std::vector<bool> dropped(n, false);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<int> stack;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) stack.push_back(v);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    dropped[v] = true;
    std::uint64_t nb = g.neighbors(v);
    while (nb) {
      int w = std::countr_zero(nb);
      nb &= nb - 1;
      if (!dropped[w] && --deg[w] == 1) stack.push_back(w);
    }
  }
  std::vector<int> cycle;
  std::uint64_t cycle_mask = 0;
  for (int v = 0; v < n; ++v)
    if (!dropped[v]) cycle_mask |= std::uint64_t(1) << v;
  // walk around the cycle
  int start = std::countr_zero(cycle_mask);
  int prev = -1, cur = start;
  do {
    cycle.push_back(cur);
    std::uint64_t nb = g.neighbors(cur) & cycle_mask;
    int next = -1;
    while (nb) {
      int w = std::countr_zero(nb);
      nb &= nb - 1;
      if (w != prev) {
        next = w;
        break;
      }
    }
    prev = cur;
    cur = next;
  } while (cur != start);

  // hanging tree code at each cycle vertex (cycle neighbors masked off)
  int glen = static_cast<int>(cycle.size());
  std::uint64_t all = (n == 64) ? ~std::uint64_t(0)
                                : ((std::uint64_t(1) << n) - 1);
  std::vector<std::string> hang(glen);
  for (int i = 0; i < glen; ++i)
    hang[i] = ahu(g, cycle[i], -1, (all & ~cycle_mask) | (std::uint64_t(1) << cycle[i]));

  auto joined = [&](const std::vector<std::string>& seq) {
    std::string s;
    for (const auto& part : seq) {
      s += part;
      s += '|';
    }
    return s;
  };
  std::string best;
  for (int dir = 0; dir < 2; ++dir) {
    std::vector<std::string> seq = hang;
    if (dir) std::reverse(seq.begin(), seq.end());
    for (int rot = 0; rot < glen; ++rot) {
      std::rotate(seq.begin(), seq.begin() + 1, seq.end());
      std::string s = joined(seq);
      if (best.empty() || s < best) best = std::move(s);
    }
  }
  return "U" + std::to_string(glen) + ":" + best;
}

// Lexicographically minimal concatenation of adjacency-to-placed bit chunks
// over all vertex placements.  At each step only the candidates achieving
// the minimal next chunk can lead to the minimal full string; ties must all
// be explored, except that twins (vertices swapped by an automorphism fixing
// the rest pointwise) yield identical continuations, so one per twin class
// suffices.
void minimal_placement(const Graph& g, std::vector<int>& placed,
                       std::uint64_t used, std::string& out, bool& have_out,
                       std::string& cur) {
  int n = g.order();
  if (static_cast<int>(placed.size()) == n) {
    if (!have_out || cur < out) {
      out = cur;
      have_out = true;
    }
    return;
  }
  std::string best_chunk;
  std::vector<int> winners;
  for (int v = 0; v < n; ++v) {
    if ((used >> v) & 1u) continue;
    std::string chunk;
    chunk.reserve(placed.size());
    for (int p : placed) chunk += g.has_edge(v, p) ? '1' : '0';
    if (winners.empty() || chunk < best_chunk) {
      best_chunk = std::move(chunk);
      winners.assign(1, v);
    } else if (chunk == best_chunk) {
      winners.push_back(v);
    }
  }
  // drop all but one representative of each twin class
  std::vector<int> reps;
  for (int v : winners) {
    bool twin = false;
    for (int r : reps) {
      std::uint64_t diff = (g.neighbors(v) ^ g.neighbors(r)) &
                           ~((std::uint64_t(1) << v) | (std::uint64_t(1) << r));
      if (diff == 0) { twin = true; break; }
    }
    if (!twin) reps.push_back(v);
  }
  cur += best_chunk;
  for (int v : reps) {
    placed.push_back(v);
    minimal_placement(g, placed, used | (std::uint64_t(1) << v), out, have_out,
                      cur);
    placed.pop_back();
  }
  cur.resize(cur.size() - best_chunk.size());
}

std::string general_code(const Graph& g) {
  if (g.order() > 24)
    throw std::invalid_argument(
        "canonical code fallback is limited to 24 vertices");
  std::vector<int> placed;
  std::string out, cur;
  bool have_out = false;
  minimal_placement(g, placed, 0, out, have_out, cur);
  return "G" + std::to_string(g.order()) + ":" + out;
}

std::string component_code(const Graph& comp) {
  if (comp.is_tree()) return tree_code(comp);
  if (comp.is_unicyclic()) return unicyclic_code(comp);
  return general_code(comp);
}

}  // namespace

std::string canonical_code(const Graph& g) {
  auto comps = g.components();
  std::vector<std::string> codes;
  codes.reserve(comps.size());
  for (auto& verts : comps) {
    Graph comp = g.induced(verts);
    codes.push_back(std::to_string(comp.order()) + "#" + component_code(comp));
  }
  std::sort(codes.begin(), codes.end());
  std::string out = "v" + std::to_string(g.order()) + ";";
  for (auto& c : codes) {
    out += c;
    out += '\x1e';
  }
  return out;
}

}  // namespace quipu
