#pragma once

// Exact eigenvalue localization over the rationals: real-root isolation of
// integer polynomials (Sturm bisection with exact rational-root detection),
// certified trichotomy comparisons between real algebraic numbers, k-th
// eigenvalue intervals, spectral-radius comparison with a shared-factor
// equality certificate, placement of the spectral radius against the three
// algebraic thresholds 2, sqrt(2+sqrt(5)) and 3/sqrt(2), the structural
// lookup of the classified families with index below the second threshold,
// interlacing verification, and a JSON-reporting eigenvalue-location suite
// for the H-shape family and its companion closed quipus.
//
// Everything here is exact: floating point appears only in report rendering
// (the approx() helpers), never in a comparison or a verdict.

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "quipu/family.hpp"
#include "quipu/graph.hpp"
#include "quipu/intpoly.hpp"

namespace quipu {

// A real algebraic number: the unique root of a squarefree integer
// polynomial inside a half-open rational interval (lower, upper], or an
// exact rational point when exact is true (then lower == upper == the value,
// and defining vanishes there).
struct AlgebraicNumber {
  IntPoly defining;
  Rational lower;
  Rational upper;
  bool exact = false;

  double approx() const;            // midpoint as double (rendering only)
  void refine(const Rational& width);  // shrink the interval to <= width
  void refine_step();                  // one bisection step
};

struct IsolatedRoot {
  AlgebraicNumber value;
  int multiplicity;
};

// All real roots of p (p nonzero), in increasing order, with multiplicities
// taken from the squarefree decomposition.  Rational roots come back as
// exact points; every other root gets a sign-change isolating interval of
// its (monic, squarefree, rational-root-free) defining factor.
std::vector<IsolatedRoot> isolate_real_roots(const IntPoly& p);

enum class Ordering { Less, Equal, Greater };

// Exact trichotomy.  Equality is certified through a shared root of
// gcd(a.defining, b.defining) pinned in both isolating intervals; it is
// never inferred from interval overlap.
Ordering algebraic_compare(AlgebraicNumber a, AlgebraicNumber b);
Ordering algebraic_compare(AlgebraicNumber a, const Rational& q);

// A certified eigenvalue bracket for a graph: the k-th largest adjacency
// eigenvalue (1-based, counted with multiplicity) lies in (lower, upper],
// a width-zero exact point when the eigenvalue is rational.
struct EigenInterval {
  Rational lower;
  Rational upper;
  int index = 0;
  int multiplicity = 0;     // multiplicity of this eigenvalue in char_poly
  std::string graph_code;   // canonical code (graph6-prefixed fallback)
  bool exact = false;

  double approx() const;
};

// Certified isolating interval of width <= width around the k-th largest
// eigenvalue.  Requires 1 <= k <= order and width > 0.
EigenInterval kth_eigenvalue(const Graph& g, int k,
                             const Rational& width = Rational(1, 1000000000));

// The spectral radius as an algebraic number (largest root of char_poly).
// Requires a graph with at least one vertex.
AlgebraicNumber spectral_radius(const Graph& g);

// Exact spectral-radius trichotomy.  Equal is certified by a common factor
// of the two characteristic polynomials holding both radii.
Ordering compare_radii(const Graph& a, const Graph& b);

// One of the three algebraic thresholds the classification pivots on.
// minimal_poly has exactly one root in (lower, upper] (an exact point for
// the rational threshold 2).
struct AlgebraicThreshold {
  std::string name;
  IntPoly minimal_poly;
  Rational lower;
  Rational upper;

  AlgebraicNumber value() const;
};

const AlgebraicThreshold& threshold_two();              // x - 2
const AlgebraicThreshold& threshold_hoffman();          // x^4 - 4x^2 - 1, root sqrt(2+sqrt(5))
const AlgebraicThreshold& threshold_three_over_sqrt2();  // 2x^2 - 9

enum class ThresholdBucket {
  below_two,
  exactly_two,
  two_to_hoffman,        // radius in (2, sqrt(2+sqrt(5)))
  hoffman_to_3sqrt2half,  // radius in (sqrt(2+sqrt(5)), 3/sqrt(2))
  above                   // radius above 3/sqrt(2)
};

std::string to_string(ThresholdBucket b);

// Exact placement of the spectral radius of a connected graph against the
// three thresholds.  Neither irrational threshold can ever tie with a graph
// eigenvalue (their minimal polynomials are not monic or have nonreal
// roots), so the refinement loop always separates; a tie with 2 is detected
// exactly.  Disconnected input rejected.
ThresholdBucket threshold_classify(const Graph& g);

enum class StructuralClass {
  index_below_two,        // paths, two-pendant spiders, the three E spiders
  index_two,              // cycles, double-pendant-pair trees, K_{1,4}, the affine spiders
  index_two_to_hoffman    // the classified T-shape and pendant-vertex H-shape trees
};

std::string to_string(StructuralClass c);

struct StructuralMatch {
  StructuralClass cls;
  FamilySpec witness;  // family parameters rebuilding the matched shape
};

// Purely structural membership test against the explicit classified lists
// of connected graphs with index < 2, = 2, and in (2, sqrt(2+sqrt(5))).
// Returns the class and a witness spec, or nullopt when the graph belongs
// to none of the three lists (its index then exceeds the Hoffman value).
std::optional<StructuralMatch> structural_class_lookup(const Graph& g);

// Certified interlacing check: with eigenvalues lambda_1 >= ... >= lambda_n
// of g and mu_1 >= ... >= mu_{n-1} of g - v, verifies
// lambda_k >= mu_k >= lambda_{k+1} for every k.  Requires 1 <= order and
// 0 <= v < order.
bool interlacing_holds(const Graph& g, int v);

// Runs the eigenvalue-location checks for the H-shape family over orders
// [n_lo, n_hi] (10 <= n_lo <= n_hi <= 40): third eigenvalue below 2, the
// three-way second-eigenvalue placement, radius monotonicity, the
// lollipop-radius coincidences, the closed-quipu radius orderings and
// threshold inequalities at their boundary parameters, and minimality of
// the H-shape / lollipop radii over enumerated same-order competitors.
// The report is JSON: one record per claim with parameters, verdict, and
// certified interval endpoints as exact rational strings; "all_hold"
// summarizes.  Violations are reported, never thrown.
nlohmann::json eigen_location_suite(long n_lo, long n_hi);

}  // namespace quipu
