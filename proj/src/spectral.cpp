#include "quipu/spectral.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "quipu/charpoly.hpp"
#include "quipu/graph6.hpp"

namespace quipu {

namespace {

Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / 2; }

// Smallest integer B >= 1 with every real root of p in [-B, B]:
// twice the Fujiwara-style max of (|c_{deg-k}| / |lead|)^(1/k).  Cheap and
// close to the actual root magnitude, which keeps the integer-root scan
// short for eigenvalue-sized roots.
Integer integer_root_span(const IntPoly& p) {
  const int d = p.degree();
  const Integer lead = abs(p.leading());
  Integer best = 1;
  for (int k = 1; k <= d; ++k) {
    Integer num = abs(p.coeff(d - k));
    if (num == 0) continue;
    // ceil(|c|/|lead|), then the k-th root rounded up (mpz_root truncates).
    Integer q = (num + lead - 1) / lead;
    Integer root;
    mpz_root(root.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(k));
    Integer check;
    mpz_pow_ui(check.get_mpz_t(), root.get_mpz_t(), static_cast<unsigned long>(k));
    if (check < q) root += 1;
    if (root > best) best = root;
  }
  return 2 * best;
}

// Splits one squarefree factor into exact rational roots plus
// rational-root-free remainder.  Guaranteed complete for monic factors
// (their rational roots are integers in the scanned span); non-monic
// factors only get the integer roots found by the same scan, with any
// remaining rational root still caught later by an exact bisection hit.
IntPoly extract_integer_roots(IntPoly f, std::vector<Rational>& out) {
  if (f.degree() < 1) return f;
  const Integer span = integer_root_span(f);
  for (Integer d = -span; d <= span; ++d) {
    if (f.degree() < 1) break;
    const Integer c0 = f.coeff(0);
    if (d == 0 ? c0 != 0 : c0 % d != 0) continue;  // rational root test, cheap filter
    if (eval_at(f, d) == 0) {
      out.push_back(Rational(d));
      auto q = divide_exact(f, IntPoly::monomial(1, 1) - IntPoly::monomial(d, 0));
      if (!q) throw std::logic_error("extract_integer_roots: division failed");
      f = *q;
    }
  }
  return f;
}

struct RawRoot {
  AlgebraicNumber value;
  int multiplicity;
};

bool roots_disjoint(const RawRoot& a, const RawRoot& b) {
  // a sorted before b by lower endpoint
  if (a.value.exact && b.value.exact) return a.value.lower != b.value.lower;
  if (a.value.exact) return a.value.lower <= b.value.lower;  // point v <= open left end
  if (b.value.exact) return b.value.lower > a.value.upper;   // point strictly above (l,u]
  return a.value.upper <= b.value.lower;
}

}  // namespace

double AlgebraicNumber::approx() const {
  Rational m = exact ? lower : midpoint(lower, upper);
  return m.get_d();
}

void AlgebraicNumber::refine_step() {
  if (exact) return;
  Rational m = midpoint(lower, upper);
  const int sm = defining.sign_at(m);
  if (sm == 0) {
    lower = upper = m;
    exact = true;
    return;
  }
  if (sm == defining.sign_at(lower))
    lower = m;
  else
    upper = m;
}

void AlgebraicNumber::refine(const Rational& width) {
  while (!exact && upper - lower > width) refine_step();
}

std::vector<IsolatedRoot> isolate_real_roots(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  std::vector<RawRoot> roots;
  if (p.degree() >= 1) {
    for (auto& [factor, mult] : squarefree_decomposition(p)) {
      std::vector<Rational> rational_roots;
      IntPoly rest = extract_integer_roots(factor, rational_roots);
      for (const Rational& v : rational_roots)
        roots.push_back({AlgebraicNumber{factor, v, v, true}, mult});
      if (rest.degree() < 1) continue;

      SturmChain chain(rest);
      const Rational bound = cauchy_root_bound(rest);
      std::vector<std::pair<Rational, Rational>> work;
      work.emplace_back(-bound, bound);
      while (!work.empty()) {
        auto [a, b] = work.back();
        work.pop_back();
        const int count = chain.count(a, b);
        if (count == 0) continue;
        if (count == 1) {
          // Sharpen until the endpoints carry opposite nonzero signs, so
          // the interval supports plain sign bisection from here on.
          Rational lo = a, hi = b;
          while (true) {
            const int slo = rest.sign_at(lo), shi = rest.sign_at(hi);
            if (slo != 0 && shi != 0 && slo != shi) break;
            if (shi == 0) {  // rational root sitting on the right endpoint
              roots.push_back({AlgebraicNumber{rest, hi, hi, true}, mult});
              lo = hi;  // nothing left in (lo, hi)
              break;
            }
            // slo == 0 cannot happen (a root at `lo` would lie outside the
            // half-open window (lo, hi]); equal nonzero signs mean the root
            // is in the open middle, shrink from the left.
            Rational m = midpoint(lo, hi);
            if (rest.sign_at(m) == 0) {
              roots.push_back({AlgebraicNumber{rest, m, m, true}, mult});
              lo = m;
              break;
            }
            if (chain.count(lo, m) == 1)
              hi = m;
            else
              lo = m;
          }
          if (lo != hi)
            roots.push_back({AlgebraicNumber{rest, lo, hi, false}, mult});
          continue;
        }
        Rational m = midpoint(a, b);
        if (rest.sign_at(m) == 0) {
          // Exact bisection hit on a rational root (non-monic factors only).
          roots.push_back({AlgebraicNumber{rest, m, m, true}, mult});
        }
        work.emplace_back(a, m);
        work.emplace_back(m, b);
      }
    }
  }

  // Separate intervals across factors so the collection is totally ordered.
  std::sort(roots.begin(), roots.end(), [](const RawRoot& x, const RawRoot& y) {
    if (x.value.lower != y.value.lower) return x.value.lower < y.value.lower;
    return x.value.upper < y.value.upper;
  });
  bool clean = false;
  while (!clean) {
    clean = true;
    for (size_t i = 0; i + 1 < roots.size(); ++i) {
      if (!roots_disjoint(roots[i], roots[i + 1])) {
        roots[i].value.refine_step();
        roots[i + 1].value.refine_step();
        clean = false;
      }
    }
    if (!clean)
      std::sort(roots.begin(), roots.end(), [](const RawRoot& x, const RawRoot& y) {
        if (x.value.lower != y.value.lower) return x.value.lower < y.value.lower;
        return x.value.upper < y.value.upper;
      });
  }

  std::vector<IsolatedRoot> out;
  out.reserve(roots.size());
  for (auto& r : roots) out.push_back({std::move(r.value), r.multiplicity});
  return out;
}

namespace {

constexpr int kMaxRefineRounds = 100000;

Ordering from_rationals(const Rational& a, const Rational& b) {
  if (a < b) return Ordering::Less;
  if (a > b) return Ordering::Greater;
  return Ordering::Equal;
}

Ordering flipped(Ordering o) {
  switch (o) {
    case Ordering::Less: return Ordering::Greater;
    case Ordering::Greater: return Ordering::Less;
    case Ordering::Equal: return Ordering::Equal;
  }
  return Ordering::Equal;
}

}  // namespace

Ordering algebraic_compare(AlgebraicNumber a, const Rational& q) {
  if (a.exact) return from_rationals(a.lower, q);
  if (a.lower < q && q <= a.upper && a.defining.sign_at(q) == 0) return Ordering::Equal;
  for (int round = 0; round < kMaxRefineRounds; ++round) {
    if (q <= a.lower) return Ordering::Greater;
    if (q > a.upper) return Ordering::Less;
    a.refine_step();
    if (a.exact) return from_rationals(a.lower, q);
  }
  throw std::logic_error("algebraic_compare: refinement failed to separate");
}

Ordering algebraic_compare(AlgebraicNumber a, AlgebraicNumber b) {
  if (b.exact) return algebraic_compare(std::move(a), b.lower);
  if (a.exact) return flipped(algebraic_compare(std::move(b), a.lower));

  const IntPoly common = gcd(a.defining, b.defining);
  const bool share_factor = common.degree() >= 1;
  std::optional<SturmChain> common_chain;
  if (share_factor) common_chain.emplace(common);

  for (int round = 0; round < kMaxRefineRounds; ++round) {
    if (a.exact) return flipped(algebraic_compare(std::move(b), a.lower));
    if (b.exact) return algebraic_compare(std::move(a), b.lower);
    if (a.upper <= b.lower) return Ordering::Less;
    if (b.upper <= a.lower) return Ordering::Greater;
    if (share_factor) {
      const Rational hull_lo = std::min(a.lower, b.lower);
      const Rational hull_hi = std::max(a.upper, b.upper);
      if (common_chain->count(a.lower, a.upper) == 1 &&
          common_chain->count(b.lower, b.upper) == 1 &&
          common_chain->count(hull_lo, hull_hi) == 1)
        return Ordering::Equal;
    }
    a.refine_step();
    b.refine_step();
  }
  throw std::logic_error("algebraic_compare: refinement failed to separate");
}

double EigenInterval::approx() const {
  Rational m = exact ? lower : midpoint(lower, upper);
  return m.get_d();
}

namespace {

std::string code_or_graph6(const Graph& g) {
  try {
    return canonical_code(g);
  } catch (const std::exception&) {
    return "g6:" + to_graph6(g);
  }
}

// Descending eigenvalues of g, one entry per distinct value.
std::vector<IsolatedRoot> eigenvalues_desc(const Graph& g) {
  auto roots = isolate_real_roots(char_poly(g));
  int total = 0;
  for (auto& r : roots) total += r.multiplicity;
  if (total != g.order())
    throw std::logic_error("eigenvalues_desc: non-real roots in an adjacency polynomial");
  std::reverse(roots.begin(), roots.end());
  return roots;
}

}  // namespace

EigenInterval kth_eigenvalue(const Graph& g, int k, const Rational& width) {
  if (g.order() < 1) throw std::invalid_argument("kth_eigenvalue: empty graph");
  if (k < 1 || k > g.order())
    throw std::invalid_argument("kth_eigenvalue: index out of range");
  if (width <= 0) throw std::invalid_argument("kth_eigenvalue: width must be positive");

  auto roots = eigenvalues_desc(g);
  int cumulative = 0;
  for (auto& r : roots) {
    cumulative += r.multiplicity;
    if (cumulative >= k) {
      r.value.refine(width);
      EigenInterval out;
      out.lower = r.value.lower;
      out.upper = r.value.upper;
      out.index = k;
      out.multiplicity = r.multiplicity;
      out.graph_code = code_or_graph6(g);
      out.exact = r.value.exact;
      return out;
    }
  }
  throw std::logic_error("kth_eigenvalue: rank walk fell through");
}

AlgebraicNumber spectral_radius(const Graph& g) {
  if (g.order() < 1) throw std::invalid_argument("spectral_radius: empty graph");
  return eigenvalues_desc(g).front().value;
}

Ordering compare_radii(const Graph& a, const Graph& b) {
  if (a.order() < 1 || b.order() < 1)
    throw std::invalid_argument("compare_radii: empty graph");
  return algebraic_compare(spectral_radius(a), spectral_radius(b));
}

const AlgebraicThreshold& threshold_two() {
  static const AlgebraicThreshold t{"two", IntPoly::of({-2, 1}), Rational(2), Rational(2)};
  return t;
}

const AlgebraicThreshold& threshold_hoffman() {
  static const AlgebraicThreshold t{"hoffman", IntPoly::of({-1, 0, -4, 0, 1}),
                                    Rational(2), Rational(3)};
  return t;
}

const AlgebraicThreshold& threshold_three_over_sqrt2() {
  static const AlgebraicThreshold t{"three_over_sqrt2", IntPoly::of({-9, 0, 2}),
                                    Rational(2), Rational(3)};
  return t;
}

AlgebraicNumber AlgebraicThreshold::value() const {
  if (lower == upper) return AlgebraicNumber{minimal_poly, lower, upper, true};
  return AlgebraicNumber{minimal_poly, lower, upper, false};
}

std::string to_string(ThresholdBucket b) {
  switch (b) {
    case ThresholdBucket::below_two: return "below_two";
    case ThresholdBucket::exactly_two: return "exactly_two";
    case ThresholdBucket::two_to_hoffman: return "two_to_hoffman";
    case ThresholdBucket::hoffman_to_3sqrt2half: return "hoffman_to_3sqrt2half";
    case ThresholdBucket::above: return "above";
  }
  return "?";
}

ThresholdBucket threshold_classify(const Graph& g) {
  if (g.order() < 1 || !g.connected())
    throw std::invalid_argument("threshold_classify: connected graph required");
  AlgebraicNumber rho = spectral_radius(g);
  switch (algebraic_compare(rho, Rational(2))) {
    case Ordering::Less: return ThresholdBucket::below_two;
    case Ordering::Equal: return ThresholdBucket::exactly_two;
    case Ordering::Greater: break;
  }
  switch (algebraic_compare(rho, threshold_hoffman().value())) {
    case Ordering::Less: return ThresholdBucket::two_to_hoffman;
    case Ordering::Equal:
      throw std::logic_error("threshold_classify: the Hoffman value cannot be an eigenvalue");
    case Ordering::Greater: break;
  }
  switch (algebraic_compare(rho, threshold_three_over_sqrt2().value())) {
    case Ordering::Less: return ThresholdBucket::hoffman_to_3sqrt2half;
    case Ordering::Equal:
      throw std::logic_error("threshold_classify: 3/sqrt(2) cannot be an eigenvalue");
    case Ordering::Greater: return ThresholdBucket::above;
  }
  return ThresholdBucket::above;
}

std::string to_string(StructuralClass c) {
  switch (c) {
    case StructuralClass::index_below_two: return "index_below_two";
    case StructuralClass::index_two: return "index_two";
    case StructuralClass::index_two_to_hoffman: return "index_two_to_hoffman";
  }
  return "?";
}

namespace {

// Arm lengths (in edges) of the pendant chains hanging off vertex c through
// each neighbor not in `skip`.  Only valid when those chains are paths.
std::vector<int> pendant_arms(const Graph& g, int c, std::uint64_t skip) {
  std::vector<int> arms;
  std::uint64_t nb = g.neighbors(c) & ~skip;
  while (nb) {
    int v = std::countr_zero(nb);
    nb &= nb - 1;
    int length = 1;
    int prev = c, cur = v;
    while (g.degree(cur) == 2) {
      const std::uint64_t next_mask = g.neighbors(cur) & ~(std::uint64_t(1) << prev);
      prev = cur;
      cur = std::countr_zero(next_mask);
      ++length;
    }
    arms.push_back(length);
  }
  std::sort(arms.begin(), arms.end());
  return arms;
}

long bstar(long a, long c) {
  if (a == 1) return c;
  if (a == 2) return c + 3;
  return a + c + 2;
}

// The five sporadic pendant-vertex H-shapes with index just under the
// Hoffman value, as (tail, middle, tail) triples normalized tail-ascending.
bool hoffman_sporadic(long a, long b, long c) {
  if (a > c) std::swap(a, c);
  return (a == 1 && b == 1 && c == 2) || (a == 2 && b == 4 && c == 2) ||
         (a == 2 && b == 5 && c == 3) || (a == 3 && b == 7 && c == 3) ||
         (a == 3 && b == 8 && c == 4);
}

}  // namespace

std::optional<StructuralMatch> structural_class_lookup(const Graph& g) {
  const int n = g.order();
  if (n == 0 || !g.connected()) return std::nullopt;

  int max_deg = 0, deg3 = 0;
  for (int v = 0; v < n; ++v) {
    const int d = g.degree(v);
    max_deg = std::max(max_deg, d);
    if (d == 3) ++deg3;
  }

  // K_{1,4}: the unique listed graph with a degree-4 vertex.
  if (n == 5 && max_deg == 4 && g.size() == 4)
    return StructuralMatch{StructuralClass::index_two, FamilySpec::star(4)};
  if (max_deg > 3) return std::nullopt;

  if (!g.is_tree()) {
    if (max_deg == 2 && g.is_unicyclic())  // plain cycle
      return StructuralMatch{StructuralClass::index_two, FamilySpec::cycle(n)};
    return std::nullopt;  // branched unicyclic and denser graphs all exceed the window
  }

  if (max_deg <= 2)  // path (n == 1 included)
    return StructuralMatch{StructuralClass::index_below_two, FamilySpec::path(n)};

  if (deg3 == 1) {
    int center = 0;
    while (g.degree(center) != 3) ++center;
    const std::vector<int> arms = pendant_arms(g, center, 0);
    const long s1 = arms[0], s2 = arms[1], s3 = arms[2];
    const FamilySpec witness = FamilySpec::open_quipu(
        s1 + s3 + 1, {static_cast<int>(s1)}, {static_cast<int>(s2)});
    if (s1 == 1 && s2 == 1)  // arms {1,1,m}
      return StructuralMatch{StructuralClass::index_below_two, witness};
    if (s1 == 1 && s2 == 2 && s3 >= 2 && s3 <= 4)  // {1,2,2}, {1,2,3}, {1,2,4}
      return StructuralMatch{StructuralClass::index_below_two, witness};
    if ((s1 == 2 && s2 == 2 && s3 == 2) || (s1 == 1 && s2 == 3 && s3 == 3) ||
        (s1 == 1 && s2 == 2 && s3 == 5))  // the affine spiders
      return StructuralMatch{StructuralClass::index_two, witness};
    if (s1 == 1 && s2 == 2 && s3 >= 6)
      return StructuralMatch{StructuralClass::index_two_to_hoffman, witness};
    if (s1 == 1 && s2 >= 3 && s3 >= 4)
      return StructuralMatch{StructuralClass::index_two_to_hoffman, witness};
    if (s1 == 2 && s2 == 2 && s3 >= 3)
      return StructuralMatch{StructuralClass::index_two_to_hoffman, witness};
    if (s1 == 2 && s2 == 3 && s3 == 3)
      return StructuralMatch{StructuralClass::index_two_to_hoffman, witness};
    return std::nullopt;
  }

  if (deg3 == 2) {
    int u = -1, v = -1;
    for (int w = 0; w < n; ++w)
      if (g.degree(w) == 3) (u < 0 ? u : v) = w;
    // Pendant chains at each branch vertex; the chain toward the other
    // branch vertex stops early (it hits a degree-3 vertex) and is dropped.
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
    if (au.size() != 2 || av.size() != 2) return std::nullopt;
    // Five segments partition the n-1 edges.
    const long b = (n - 1) - (au[0] + au[1] + av[0] + av[1]);
    if (au[0] == 1 && au[1] == 1 && av[0] == 1 && av[1] == 1) {
      // Two pendant pairs: index exactly 2.
      return StructuralMatch{
          StructuralClass::index_two,
          FamilySpec::open_quipu(b + 3, {1, static_cast<int>(b + 1)}, {1, 1})};
    }
    if (au[0] == 1 && av[0] == 1) {
      const long a = au[1], c = av[1];
      const bool in_family = b >= bstar(a, c) || b >= bstar(c, a);
      if (in_family || hoffman_sporadic(a, b, c)) {
        return StructuralMatch{
            StructuralClass::index_two_to_hoffman,
            FamilySpec::open_quipu(a + b + c + 1,
                                   {static_cast<int>(a), static_cast<int>(a + b)},
                                   {1, 1})};
      }
      return std::nullopt;
    }
    return std::nullopt;  // some branch vertex has both arms of length >= 2
  }

  return std::nullopt;
}

bool interlacing_holds(const Graph& g, int v) {
  const int n = g.order();
  if (n < 1) throw std::invalid_argument("interlacing_holds: empty graph");
  if (v < 0 || v >= n) throw std::invalid_argument("interlacing_holds: bad vertex");
  if (n == 1) return true;

  auto expand = [](const std::vector<IsolatedRoot>& roots) {
    std::vector<AlgebraicNumber> flat;
    for (const auto& r : roots)
      for (int i = 0; i < r.multiplicity; ++i) flat.push_back(r.value);
    return flat;
  };
  const std::vector<AlgebraicNumber> lam = expand(eigenvalues_desc(g));
  const std::vector<AlgebraicNumber> mu = expand(eigenvalues_desc(g.delete_vertex(v)));
  for (size_t k = 0; k < mu.size(); ++k) {
    if (algebraic_compare(lam[k], mu[k]) == Ordering::Less) return false;
    if (algebraic_compare(mu[k], lam[k + 1]) == Ordering::Less) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// eigen_location_suite
// ---------------------------------------------------------------------------

namespace {

std::string rat_str(const Rational& q) { return q.get_str(); }

nlohmann::json interval_json(const AlgebraicNumber& x) {
  return {{"lower", rat_str(x.lower)},
          {"upper", rat_str(x.upper)},
          {"exact", x.exact},
          {"approx", x.approx()}};
}

// All compositions of `total` into `parts` positive summands.
void compositions(int total, int parts, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& emit) {
  if (parts == 1) {
    if (total >= 1) {
      cur.push_back(total);
      emit(cur);
      cur.pop_back();
    }
    return;
  }
  for (int first = 1; first <= total - (parts - 1); ++first) {
    cur.push_back(first);
    compositions(total - first, parts - 1, cur, emit);
    cur.pop_back();
  }
}

// All closed quipus (cycle plus at least one pendant path, max degree 3) on
// `nu` vertices, one spec per isomorphism class.
std::vector<FamilySpec> closed_quipus_of_order(int nu) {
  std::vector<FamilySpec> out;
  std::set<std::string> seen;
  for (int g = 3; g < nu; ++g) {
    const int extra = nu - g;
    for (int b = 1; b <= std::min(g, extra); ++b) {
      std::vector<int> pos(b);
      for (int i = 0; i < b; ++i) pos[i] = i;
      while (true) {
        std::vector<int> scratch;
        compositions(extra, b, scratch, [&](const std::vector<int>& len) {
          FamilySpec spec = FamilySpec::closed_quipu(g, pos, len);
          const std::string code = canonical_code(build_family(spec));
          if (seen.insert(code).second) out.push_back(spec);
        });
        int i = b - 1;
        while (i >= 0 && pos[i] == g - b + i) --i;
        if (i < 0) break;
        ++pos[i];
        for (int j = i + 1; j < b; ++j) pos[j] = pos[j - 1] + 1;
      }
    }
  }
  return out;
}

// All trees made of two degree-3 vertices joined by a middle path, with two
// pendant paths at each end, every one of the five segments of length >= 2 —
// one spec per isomorphism class, each paired with its canonical code.
std::vector<std::pair<FamilySpec, std::string>> five_segment_trees(int n) {
  std::vector<std::pair<FamilySpec, std::string>> out;
  std::set<std::string> seen;
  // The five segment lengths partition the n-1 edges.
  for (int a1 = 2; a1 <= n; ++a1)
    for (int a2 = a1; a2 <= n; ++a2)
      for (int c1 = 2; c1 <= n; ++c1)
        for (int c2 = c1; c2 <= n; ++c2) {
          const int m = (n - 1) - (a1 + a2 + c1 + c2);
          if (m < 2) continue;
          FamilySpec spec = FamilySpec::open_quipu(a2 + m + c2 + 1, {a2, a2 + m},
                                                   {a1, c1});
          const std::string code = canonical_code(build_family(spec));
          if (seen.insert(code).second) out.emplace_back(spec, code);
        }
  return out;
}

Graph h_shape_graph(long n) { return build_family(FamilySpec::h_shape(n)); }

}  // namespace

nlohmann::json eigen_location_suite(long n_lo, long n_hi) {
  if (n_lo < 10 || n_lo > n_hi || n_hi > 40)
    throw std::invalid_argument("eigen_location_suite: range must satisfy 10 <= lo <= hi <= 40");

  nlohmann::json claims = nlohmann::json::array();
  bool all_hold = true;
  const auto record = [&](std::string name, nlohmann::json params, bool verdict,
                          nlohmann::json extra = nlohmann::json::object()) {
    extra["claim"] = std::move(name);
    extra["params"] = std::move(params);
    extra["verdict"] = verdict;
    claims.push_back(std::move(extra));
    all_hold = all_hold && verdict;
  };

  const AlgebraicNumber hoffman = threshold_hoffman().value();

  for (long n = n_lo; n <= n_hi; ++n) {
    const Graph hn = h_shape_graph(n);
    const auto roots = eigenvalues_desc(hn);
    std::vector<AlgebraicNumber> flat;
    for (const auto& r : roots)
      for (int i = 0; i < r.multiplicity && flat.size() < 3; ++i) flat.push_back(r.value);
    const AlgebraicNumber rho = flat[0], lam2 = flat[1], lam3 = flat[2];

    // Third eigenvalue always below 2.
    record("third_eigenvalue_below_two", {{"n", n}},
           algebraic_compare(lam3, Rational(2)) == Ordering::Less,
           {{"lambda3", interval_json(lam3)}});

    // Second eigenvalue: below 2 for n < 15, exactly 2 at n = 15, then
    // strictly between 2 and the Hoffman value.
    {
      const Ordering vs2 = algebraic_compare(lam2, Rational(2));
      bool ok;
      if (n < 15)
        ok = vs2 == Ordering::Less;
      else if (n == 15)
        ok = vs2 == Ordering::Equal;
      else
        ok = vs2 == Ordering::Greater &&
             algebraic_compare(lam2, hoffman) == Ordering::Less;
      record("second_eigenvalue_placement", {{"n", n}}, ok,
             {{"lambda2", interval_json(lam2)}});
    }

    // Index window: strictly above 3/sqrt(2) for n in {10, 11}, strictly
    // between the Hoffman value and 3/sqrt(2) from n = 12 on.
    {
      const ThresholdBucket bucket = threshold_classify(hn);
      const ThresholdBucket want = n >= 12 ? ThresholdBucket::hoffman_to_3sqrt2half
                                           : ThresholdBucket::above;
      record("index_window", {{"n", n}}, bucket == want,
             {{"bucket", to_string(bucket)}, {"rho", interval_json(rho)}});
    }

    // Index strictly decreasing in n.
    if (n < n_hi)
      record("index_strictly_decreasing", {{"n", n}, {"next", n + 1}},
             compare_radii(hn, h_shape_graph(n + 1)) == Ordering::Greater);

    // Odd orders: the tailed even cycle with girth n - 7 shares the index.
    if (n % 2 == 1 && n >= 11) {
      const long k = (n - 1) / 2;
      const long s = k - 3;
      if (s >= 2) {
        const Graph tailed = build_family(FamilySpec::lollipop(1, 2 * s));
        record("tailed_even_cycle_index_match", {{"n", n}, {"girth", 2 * s}},
               compare_radii(tailed, hn) == Ordering::Equal);
      }
    }
  }

  // Moving a single pendant vertex toward the antipode of the cycle lowers
  // the index: girth 12, tails {1,2}, attachment offset k = 2..6.
  {
    bool ok = true;
    for (int k = 2; k <= 5; ++k) {
      const Graph a = build_family(FamilySpec::closed_quipu(12, {0, k}, {1, 2}));
      const Graph b = build_family(FamilySpec::closed_quipu(12, {0, k + 1}, {1, 2}));
      ok = ok && compare_radii(a, b) == Ordering::Greater;
    }
    record("pendant_position_monotone_girth12", {{"girth", 12}, {"offsets", "2..6"}}, ok);
  }

  // Antipodal two-tail chain: girth 2s, tails {1,2} at offset s, strictly
  // decreasing for s = 2..6, with the last member still above 3/sqrt(2) and
  // close to 2.1215.
  {
    bool ok = true;
    std::vector<Graph> chain;
    for (int s = 2; s <= 6; ++s)
      chain.push_back(build_family(FamilySpec::closed_quipu(2 * s, {0, s}, {1, 2})));
    for (size_t i = 0; i + 1 < chain.size(); ++i)
      ok = ok && compare_radii(chain[i], chain[i + 1]) == Ordering::Greater;
    AlgebraicNumber last = spectral_radius(chain.back());
    ok = ok && algebraic_compare(last, threshold_three_over_sqrt2().value()) ==
                   Ordering::Greater;
    last.refine(Rational(1, 1000000));
    const Rational target(21215, 10000), tol(1, 1000);
    ok = ok && last.lower >= target - tol && last.upper <= target + tol;
    record("antipodal_chain_girth4_to_12", {{"s", "2..6"}}, ok,
           {{"last_radius", interval_json(last)}});
  }

  // Girth bound: the order-9/10 comparisons that force girth >= 8 for any
  // closed quipu sharing an H index at n >= 12, n != 13.
  {
    const Graph h12 = h_shape_graph(12), h13 = h_shape_graph(13);
    bool ok = compare_radii(build_family(FamilySpec::lollipop(1, 6)), h13) ==
              Ordering::Equal;
    ok = ok && compare_radii(build_family(FamilySpec::lollipop(1, 4)), h12) ==
                   Ordering::Greater;
    const std::vector<FamilySpec> girth6{
        FamilySpec::lollipop(2, 6),
        FamilySpec::closed_quipu(6, {0, 1}, {1, 1}),
        FamilySpec::closed_quipu(6, {0, 2}, {1, 1}),
        FamilySpec::closed_quipu(6, {0, 3}, {1, 1}),
    };
    for (const auto& spec : girth6)
      ok = ok && compare_radii(build_family(spec), h12) == Ordering::Greater;
    record("small_girth_exceeds_order12_index", {{"girths", "4,6"}}, ok);
  }

  // Among five-segment trees of each order, the balanced middle-heavy shape
  // is the strict index minimizer.
  for (long n = n_lo; n <= n_hi; ++n) {
    const Graph hn = h_shape_graph(n);
    const std::string hn_code = canonical_code(hn);
    AlgebraicNumber rho_n = spectral_radius(hn);
    rho_n.refine(Rational(1, 1 << 20));
    const Rational cutoff = rho_n.upper;
    bool ok = true;
    long competitors = 0;
    for (const auto& [spec, code] : five_segment_trees(static_cast<int>(n))) {
      if (code == hn_code) continue;
      ++competitors;
      const Graph g = build_family(spec);
      // Cheap exact certificate first: any squarefree-part root above the
      // refined upper bound of rho(H_n) settles the comparison.
      const IntPoly sf = squarefree_part(char_poly(g));
      if (SturmChain(sf).count_greater(cutoff) >= 1) continue;
      if (compare_radii(g, hn) != Ordering::Greater) {
        ok = false;
        break;
      }
    }
    record("five_segment_minimizer", {{"n", n}, {"competitors", competitors}}, ok);
  }

  // Among closed quipus of each order, the single-pendant odd lollipop
  // minimizes the index, landing in (hoffman, rho(H_10)] with equality only
  // at order 4 (and matching rho(H_11) at order 5).
  {
    const Graph h10 = h_shape_graph(10), h11 = h_shape_graph(11);
    for (int nu = 4; nu <= std::min<long>(n_hi, 14); ++nu) {
      const Graph best = build_family(FamilySpec::lollipop(1, nu - 1));
      const std::string best_code = canonical_code(best);
      AlgebraicNumber rho_best = spectral_radius(best);
      rho_best.refine(Rational(1, 1 << 20));
      const Rational cutoff = rho_best.upper;
      bool ok = true;
      long competitors = 0;
      for (const auto& spec : closed_quipus_of_order(nu)) {
        const Graph g = build_family(spec);
        if (canonical_code(g) == best_code) continue;
        ++competitors;
        const IntPoly sf = squarefree_part(char_poly(g));
        if (SturmChain(sf).count_greater(cutoff) >= 1) continue;
        if (compare_radii(g, best) != Ordering::Greater) {
          ok = false;
          break;
        }
      }
      ok = ok && algebraic_compare(spectral_radius(best), hoffman) == Ordering::Greater;
      const Ordering vs10 = compare_radii(best, h10);
      ok = ok && (nu == 4 ? vs10 == Ordering::Equal : vs10 == Ordering::Less);
      const Ordering vs11 = compare_radii(best, h11);
      ok = ok && (nu == 5   ? vs11 == Ordering::Equal
                  : nu == 4 ? vs11 == Ordering::Greater
                            : vs11 == Ordering::Less);
      record("lollipop_minimizes_closed_quipus",
             {{"order", nu}, {"competitors", competitors}}, ok);
    }
  }

  nlohmann::json out;
  out["range"] = {n_lo, n_hi};
  out["claims"] = std::move(claims);
  out["all_hold"] = all_hold;
  out["notes"] = nlohmann::json::array(
      {"source text is ambiguous about whether the lollipop minimality parameter "
       "counts the whole order or the cycle length; the claims here fix it as the "
       "whole order, where the stated equal-index cases at 4 and 5 check out "
       "exactly"});
  return out;
}

}  // namespace quipu
