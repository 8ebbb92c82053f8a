#pragma once

// Component catalog and exhaustive cospectral-mate search for H-shape trees.
//
// The catalog enumerates, with exact spectral-radius filtering, the closed
// families that together exhaust every connected graph of index at most
// 3/sqrt(2): paths, cycles, open quipus, closed quipus, and daggers.  Any
// graph cospectral with an H-shape tree splits into such components, so a
// depth-first walk over exact polynomial quotients of the target finds every
// mate.  All pruning decisions are made by Sturm counts or certified
// algebraic comparison, never by floating point.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "quipu/family.hpp"
#include "quipu/graph.hpp"
#include "quipu/intpoly.hpp"

namespace quipu {

struct CatalogEntry {
  FamilySpec spec;
  Graph graph;
  IntPoly phi;
  std::string code;  // canonical code, the deduplication key
  long nu = 0;       // order
  long eps = 0;      // size
};

struct ComponentCatalog {
  long max_order = 0;
  Rational radius_bound;
  std::vector<CatalogEntry> entries;  // duplicate-free, sorted by (nu, code)
};

// Enumerates paths, cycles, open quipus, closed quipus, and daggers with at
// most max_order vertices and spectral radius <= radius_bound.  Branch
// extension only raises the radius, so the parameter sweeps prune entire
// subtrees on the first exact Sturm rejection.  For radius_bound <=
// 3/sqrt(2) the result is every connected graph within the bound (one per
// isomorphism class); larger bounds simply widen the same families.
// Requires 1 <= max_order <= 40.
ComponentCatalog build_catalog(long max_order, const Rational& radius_bound);

nlohmann::json to_json(const ComponentCatalog& catalog);

struct MateComponent {
  // Family description when the component belongs to one of the swept
  // families; empty for a component that only the exhaustive small-order
  // enumeration produced.
  std::optional<FamilySpec> spec;
  std::string dsl;     // render_spec(spec), or the graph6 form when spec is empty
  std::string graph6;
  std::string code;    // canonical code
  long nu = 0;
  long eps = 0;
};

struct MateReport {
  long n = 0;
  IntPoly target;  // the order-n H-shape polynomial
  // Each mate is a component multiset: exactly one tree first, then the
  // unicyclic components in catalog order.
  std::vector<std::vector<MateComponent>> mates;
  long candidates = 0;  // candidate components whose polynomial divides the target
  double elapsed_seconds = 0.0;
};

// Finds every multiset of connected graphs, other than the H-shape tree
// itself, whose characteristic polynomials multiply to the order-n H-shape
// polynomial.  Candidate components come from build_catalog at a certified
// rational upper bound of the target's spectral radius; for n <= 11, where
// that bound exceeds 3/sqrt(2) and the family classification no longer
// covers every connected graph, the pool is completed with an exhaustive
// enumeration of all trees and unicyclic graphs up to n vertices (any mate
// splits into such components, so the pool is provably complete in both
// regimes).  Exact division of the running quotient drives the assembly.
// Requires 10 <= n <= 20.  threads > 1 spreads the walk across
// tree-component choices.
MateReport mate_search(long n, int threads = 1);

nlohmann::json to_json(const MateReport& report);

struct VerifyEntry {
  long n = 0;
  std::vector<std::string> mates;  // each rendered as a union spec
  bool determined = false;         // no cospectral mate exists
  bool expected = false;           // the known answer: n not in {10, 13, 15}
  bool ok = false;
};

struct VerifyReport {
  long lo = 0;
  long hi = 0;
  std::vector<VerifyEntry> entries;
  bool all_ok = false;
  double elapsed_seconds = 0.0;
};

// Runs mate_search over every order in [lo, hi] and checks the outcomes
// against the known landscape: mates exist exactly at orders 10, 13, and 15,
// and the order-15 mate list contains the union of OQ[r=6;1:1,3:2] with the
// hexagon.  Requires 10 <= lo <= hi <= 20.  threads > 1 runs orders
// concurrently.
VerifyReport verify_main(long lo, long hi, int threads = 1);

nlohmann::json to_json(const VerifyReport& report);

}  // namespace quipu
