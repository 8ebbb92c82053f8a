#include "quipu/charpoly.hpp"

#include <bit>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace quipu {

namespace {

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

constexpr std::uint64_t bit(int v) { return std::uint64_t(1) << v; }

struct Memo {
  std::mutex mutex;
  std::map<std::string, IntPoly> table;
};

Memo& memo() {
  static Memo m;
  return m;
}

IntPoly char_poly_connected(const Graph& g) {
  const int n = g.order();
  if (n == 0) return IntPoly::one();
  if (n == 1) return IntPoly::variable();
  const bool tree = g.is_tree();
  if (!tree && !g.is_unicyclic()) return char_poly_berkowitz(g);

  int max_deg = 0;
  for (int v = 0; v < n; ++v) max_deg = std::max(max_deg, g.degree(v));
  if (max_deg <= 2) return tree ? path_poly(n) : cycle_poly(n);

  const std::string key = canonical_code(g);
  {
    std::lock_guard<std::mutex> lock(memo().mutex);
    auto it = memo().table.find(key);
    if (it != memo().table.end()) return it->second;
  }

  // A tree of order >= 2, or a unicyclic graph that is not a cycle, always
  // has a pendant vertex.
  int leaf = -1;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 1) {
      leaf = v;
      break;
    }
  const int u = std::countr_zero(g.neighbors(leaf));
  IntPoly result = IntPoly::variable() * char_poly(g.delete_vertex(leaf)) -
                   char_poly(g.delete_vertices(bit(leaf) | bit(u)));

  {
    std::lock_guard<std::mutex> lock(memo().mutex);
    memo().table.emplace(key, result);
  }
  return result;
}

std::vector<std::uint64_t> cycles_through_vertex(const Graph& g, int v) {
  std::vector<std::uint64_t> out;
  int first = -1;
  std::function<void(int, std::uint64_t)> walk = [&](int cur, std::uint64_t mask) {
    for (std::uint64_t nb = g.neighbors(cur); nb; nb &= nb - 1) {
      const int w = std::countr_zero(nb);
      if (w == v) {
        // Each cycle is traced in both directions; keep the one whose start
        // neighbor is the smaller endpoint.
        if (std::popcount(mask) >= 3 && first < cur) out.push_back(mask);
      } else if (!(mask & bit(w))) {
        walk(w, mask | bit(w));
      }
    }
  };
  for (std::uint64_t nb = g.neighbors(v); nb; nb &= nb - 1) {
    first = std::countr_zero(nb);
    walk(first, bit(v) | bit(first));
  }
  return out;
}

std::vector<std::uint64_t> cycles_through_edge(const Graph& g, int u, int v) {
  // A cycle through (u, v) minus that edge is a simple u-v path, and the DFS
  // from u reaches each such path exactly once.
  std::vector<std::uint64_t> out;
  std::function<void(int, std::uint64_t)> walk = [&](int cur, std::uint64_t mask) {
    for (std::uint64_t nb = g.neighbors(cur); nb; nb &= nb - 1) {
      const int w = std::countr_zero(nb);
      if (w == v) {
        if (cur != u) out.push_back(mask | bit(v));
      } else if (!(mask & bit(w))) {
        walk(w, mask | bit(w));
      }
    }
  };
  walk(u, bit(u));
  return out;
}

}  // namespace

IntPoly char_poly(const Graph& g) {
  if (g.connected()) return char_poly_connected(g);
  IntPoly result = IntPoly::one();
  for (const auto& comp : g.components()) result *= char_poly_connected(g.induced(comp));
  return result;
}

IntPoly char_poly_berkowitz(const Graph& g) {
  const int n = g.order();
  // p holds the coefficients of det(x I_r - A_r) for the leading principal
  // r x r submatrix, highest power first; extend one row/column at a time.
  std::vector<Integer> p{Integer(1)};
  for (int r = 1; r <= n; ++r) {
    const int i = r - 1;
    // Toeplitz column: 1, -a_ii, -(R S), -(R A S), -(R A^2 S), ... where R/S
    // are the new off-diagonal row/column and A the previous submatrix.
    std::vector<Integer> t(r + 1);
    t[0] = 1;
    t[1] = 0;  // adjacency diagonal
    std::vector<Integer> w(i);
    for (int x = 0; x < i; ++x) w[x] = g.has_edge(x, i) ? 1 : 0;
    for (int k = 2; k <= r; ++k) {
      Integer dot = 0;
      for (int x = 0; x < i; ++x)
        if (g.has_edge(i, x)) dot += w[x];
      t[k] = -dot;
      if (k < r) {
        std::vector<Integer> next(i);
        for (int x = 0; x < i; ++x) {
          Integer acc = 0;
          for (int y = 0; y < i; ++y)
            if (g.has_edge(x, y)) acc += w[y];
          next[x] = acc;
        }
        w = std::move(next);
      }
    }
    std::vector<Integer> np(r + 1);
    for (int j = 0; j <= r; ++j) {
      Integer acc = 0;
      for (int m = std::max(0, j - r); m < r && m <= j; ++m) acc += t[j - m] * p[m];
      np[j] = acc;
    }
    p = std::move(np);
  }
  std::vector<Integer> low_first(p.rbegin(), p.rend());
  return IntPoly(low_first);
}

IntPoly path_poly(long n) {
  if (n < 0) throw std::invalid_argument("path_poly: order must be >= 0");
  std::vector<Integer> c(n + 1);
  for (long r = 0; 2 * r <= n; ++r) {
    Integer term = binomial(n - r, r);
    if (r % 2) term = -term;
    c[n - 2 * r] = term;
  }
  return IntPoly(c);
}

IntPoly cycle_poly(long n) {
  if (n < 3) throw std::invalid_argument("cycle_poly: order must be >= 3");
  std::vector<Integer> c(n + 1);
  for (long r = 0; 2 * r <= n; ++r) {
    // n/(n-r) C(n-r, r) is the Lucas coefficient, always an integer.
    Integer term = binomial(n - r, r) * n;
    mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), n - r);
    if (r % 2) term = -term;
    c[n - 2 * r] = term;
  }
  c[0] -= 2;
  return IntPoly(c);
}

IntPoly tshape_poly(long m) {
  if (m < 5) throw std::invalid_argument("tshape_poly: order must be >= 5");
  return IntPoly::of({-1, 0, 1}) * (path_poly(m - 2) - path_poly(m - 5).shifted(1));
}

IntPoly hshape_poly(long n) {
  if (n < 10) throw std::invalid_argument("hshape_poly: order must be >= 10");
  return IntPoly::of({-1, 0, 1}) * (tshape_poly(n - 2) - tshape_poly(n - 5).shifted(1));
}

IntPoly lollipop_poly(long ell, long g) {
  if (ell < 1) throw std::invalid_argument("lollipop_poly: tail must be >= 1");
  if (g < 3) throw std::invalid_argument("lollipop_poly: girth must be >= 3");
  return path_poly(ell) * cycle_poly(g) - path_poly(ell - 1) * path_poly(g - 1);
}

IntPoly schwenk_vertex(const Graph& g, int v) {
  IntPoly rhs = IntPoly::variable() * char_poly(g.delete_vertex(v));
  for (std::uint64_t nb = g.neighbors(v); nb; nb &= nb - 1) {
    const int u = std::countr_zero(nb);
    rhs -= char_poly(g.delete_vertices(bit(u) | bit(v)));
  }
  for (std::uint64_t mask : cycles_through_vertex(g, v))
    rhs -= char_poly(g.delete_vertices(mask)) * Integer(2);
  return rhs;
}

IntPoly schwenk_edge(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v))
    throw std::invalid_argument("schwenk_edge: (" + std::to_string(u) + ", " +
                                std::to_string(v) + ") is not an edge");
  IntPoly rhs =
      char_poly(g.delete_edge(u, v)) - char_poly(g.delete_vertices(bit(u) | bit(v)));
  for (std::uint64_t mask : cycles_through_edge(g, u, v))
    rhs -= char_poly(g.delete_vertices(mask)) * Integer(2);
  return rhs;
}

std::optional<LowestTerm> predicted_lowest_term(const FamilySpec& spec) {
  using K = FamilySpec::Kind;
  switch (spec.kind) {
    case K::Path: {
      const long n = spec.n;
      if (n < 0) return std::nullopt;
      const long k = n / 4;
      switch (n % 4) {
        case 0: return LowestTerm{Integer(1), 0};
        case 1: return LowestTerm{Integer(2 * k + 1), 1};
        case 2: return LowestTerm{Integer(-1), 0};
        default: return LowestTerm{Integer(-2 * (k + 1)), 1};
      }
    }
    case K::Cycle: {
      const long n = spec.n;
      if (n < 3) return std::nullopt;
      const long k = n / 4;
      if (n % 2) return LowestTerm{Integer(-2), 0};
      if (n % 4 == 0) return LowestTerm{Integer(-4 * k * k), 2};
      return LowestTerm{Integer(-4), 0};
    }
    case K::TShape:
    case K::HShape: {
      const long n = spec.n;
      if (spec.kind == K::TShape ? n < 5 : n < 10) return std::nullopt;
      const long s = n / 4;
      switch (n % 4) {
        case 0: return LowestTerm{Integer(1), 0};
        case 1: return LowestTerm{Integer(2 * s + 1), 1};
        case 2: return LowestTerm{Integer(-1), 0};
        default: return LowestTerm{Integer(-(2 * s + 2)), 1};
      }
    }
    case K::Lollipop: {
      const long ell = spec.n, g = spec.girth;
      if (ell < 1 || g < 3 || ell % 2 || g % 2) return std::nullopt;
      // ell = 4s - 2*e1, g = 4t + 2*e2 with e1, e2 in {0, 1}
      const int e1 = (ell % 4 == 0) ? 0 : 1;
      const int e2 = (g % 4 == 0) ? 0 : 1;
      const long s = (ell + 2 * e1) / 4;
      const long t = (g - 2 * e2) / 4;
      if (e1 == 0 && e2 == 0) return LowestTerm{Integer(-4 * t * (s + t)), 2};
      if (e1 == 0 && e2 == 1) return LowestTerm{Integer(-4), 0};
      if (e1 == 1 && e2 == 0) return LowestTerm{Integer(2 * t * (2 * s + 2 * t - 1)), 2};
      return LowestTerm{Integer(4), 0};
    }
    default:
      return std::nullopt;
  }
}

}  // namespace quipu
