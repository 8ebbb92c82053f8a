#include "quipu/matchings.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

namespace quipu {

namespace {

Integer choose2(long d) { return Integer(d) * (d - 1) / 2; }
Integer choose3(long d) { return Integer(d) * (d - 1) * (d - 2) / 6; }

// Vertices of the unique cycle of a unicyclic graph: peel leaves until only
// the 2-core remains.
std::vector<int> cycle_vertices(const Graph& g) {
  const int n = g.order();
  std::vector<int> deg(n);
  std::vector<int> stack;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] == 1) stack.push_back(v);
  }
  std::vector<bool> peeled(n, false);
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    peeled[v] = true;
    std::uint64_t nb = g.neighbors(v);
    while (nb) {
      const int w = std::countr_zero(nb);
      nb &= nb - 1;
      if (!peeled[w] && --deg[w] == 1) stack.push_back(w);
    }
  }
  std::vector<int> cyc;
  for (int v = 0; v < n; ++v)
    if (!peeled[v]) cyc.push_back(v);
  return cyc;
}

}  // namespace

Integer m2_closed_form(const Graph& g) {
  Integer total = choose2(g.size());
  for (int v = 0; v < g.order(); ++v) total -= choose2(g.degree(v));
  return total;
}

Integer m2_tree_form(const Graph& g) {
  if (!g.is_tree() || g.order() == 0)
    throw std::invalid_argument("m2_tree_form: tree required");
  long k = 0;
  int max_deg = 0;
  for (int v = 0; v < g.order(); ++v) {
    const int d = g.degree(v);
    max_deg = std::max(max_deg, d);
    if (d == 3) ++k;
  }
  if (max_deg != 3)
    throw std::invalid_argument("m2_tree_form: maximum degree 3 required");
  const Integer nu(g.order());
  return (nu * nu - 5 * nu) / 2 + 3 - k;
}

Integer m2_closed_quipu_form(const Graph& g) {
  if (!g.is_unicyclic())
    throw std::invalid_argument("m2_closed_quipu_form: unicyclic graph required");
  long k = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 3)
      throw std::invalid_argument("m2_closed_quipu_form: maximum degree 3 required");
    if (g.degree(v) == 3) ++k;
  }
  long on_cycle = 0;
  for (const int v : cycle_vertices(g))
    if (g.degree(v) == 3) ++on_cycle;
  if (on_cycle != k)
    throw std::invalid_argument(
        "m2_closed_quipu_form: branch vertices must lie on the cycle");
  const Integer nu(g.order());
  return (nu * nu - 3 * nu) / 2 - k;
}

Integer m3_closed_form(const Graph& g) {
  const long eps = g.size();
  Integer total = Integer(eps) * (eps - 1) * (eps - 2) / 6;
  Integer pair_sum = 0, triple_sum = 0;
  for (int v = 0; v < g.order(); ++v) {
    pair_sum += choose2(g.degree(v));
    triple_sum += choose3(g.degree(v));
  }
  total -= (eps - 2) * pair_sum;
  total += 2 * triple_sum;
  for (auto [u, v] : g.edges())
    total += Integer(g.degree(u) - 1) * (g.degree(v) - 1);
  total -= Integer(static_cast<long>(structural_stats(g).triangles));
  return total;
}

namespace {

struct FiveSegments {
  int a1, a2;  // arms at one branch vertex, ascending
  int c1, c2;  // arms at the other, ascending
  int middle;  // edges between the branch vertices
};

FiveSegments split_segments(const Graph& g) {
  const int n = g.order();
  if (n == 0 || !g.is_tree())
    throw std::invalid_argument("two-branch tree required");
  int deg3 = 0, u = -1, v = -1;
  for (int w = 0; w < n; ++w) {
    const int d = g.degree(w);
    if (d > 3) throw std::invalid_argument("two-branch tree required");
    if (d == 3) {
      ++deg3;
      (u < 0 ? u : v) = w;
    }
  }
  if (deg3 != 2) throw std::invalid_argument("two-branch tree required");
  auto arms_at = [&](int c, int other) {
    std::vector<int> arms;
    std::uint64_t nb = g.neighbors(c);
    while (nb) {
      const int w = std::countr_zero(nb);
      nb &= nb - 1;
      int p = c, cur = w, steps = 1;
      while (cur != other && g.degree(cur) == 2) {
        const std::uint64_t nxt = g.neighbors(cur) & ~(std::uint64_t(1) << p);
        p = cur;
        cur = std::countr_zero(nxt);
        ++steps;
      }
      if (cur != other) arms.push_back(steps);
    }
    std::sort(arms.begin(), arms.end());
    return arms;
  };
  const std::vector<int> au = arms_at(u, v), av = arms_at(v, u);
  if (au.size() != 2 || av.size() != 2)
    throw std::invalid_argument("two-branch tree required");
  FiveSegments s;
  s.a1 = au[0];
  s.a2 = au[1];
  s.c1 = av[0];
  s.c2 = av[1];
  s.middle = (n - 1) - (s.a1 + s.a2 + s.c1 + s.c2);
  return s;
}

// 0 = both arms single edges, 1 = one longer, 2 = both longer.
int side_type(int lo, int hi) { return (lo >= 2 ? 1 : 0) + (hi >= 2 ? 1 : 0); }

}  // namespace

int hshape_class(const Graph& t) {
  const FiveSegments s = split_segments(t);
  int t1 = side_type(s.a1, s.a2), t2 = side_type(s.c1, s.c2);
  if (t1 > t2) std::swap(t1, t2);
  const bool long_middle = s.middle >= 2;
  // sides (t1, t2) x middle flag -> class index
  if (t1 == 0 && t2 == 0) return long_middle ? 1 : 2;
  if (t1 == 0 && t2 == 1) return long_middle ? 3 : 6;
  if (t1 == 0 && t2 == 2) return long_middle ? 4 : 9;
  if (t1 == 1 && t2 == 1) return long_middle ? 5 : 8;
  if (t1 == 1 && t2 == 2) return long_middle ? 7 : 11;
  return long_middle ? 10 : 12;
}

Integer m3_predict_hshape(const Graph& t) {
  static const int offsets[12] = {0, 1, 1, 2, 2, 2, 3, 3, 3, 4, 4, 5};
  const int cls = hshape_class(t);
  const Integer n(t.order());
  return (n * n * n - 12 * n * n + 35 * n) / 6 + offsets[cls - 1];
}

}  // namespace quipu
