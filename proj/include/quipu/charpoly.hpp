#pragma once

// Adjacency characteristic polynomials det(xI - A), exact over the integers.
//
// Two independent engines are kept deliberately separate so they can check
// each other:
//   * char_poly: pendant-vertex elimination with closed forms for paths and
//     cycles and a canonical-code memo (forests and unicyclic graphs); any
//     connected graph outside that class falls through to the division-free
//     engine below.
//   * char_poly_berkowitz: Berkowitz' division-free algorithm, straight from
//     the adjacency matrix, for any graph.
//
// The closed-form family polynomials (path_poly, cycle_poly, tshape_poly,
// hshape_poly) take arbitrary orders -- they are binomial sums, not graph
// computations -- and provide a third route that still works far beyond the
// 64-vertex graph limit.

#include <optional>

#include "quipu/family.hpp"
#include "quipu/graph.hpp"
#include "quipu/intpoly.hpp"

namespace quipu {

// Product over components; pendant elimination inside each component when it
// is a tree or unicyclic, Berkowitz otherwise.  Thread-safe (shared memo
// behind a mutex).
IntPoly char_poly(const Graph& g);

// Division-free characteristic polynomial of the adjacency matrix.
IntPoly char_poly_berkowitz(const Graph& g);

// phi(P_n) = sum_r (-1)^r C(n-r, r) x^(n-2r);  phi(P_0) = 1.
IntPoly path_poly(long n);

// phi(C_n) = -2 + sum_r (-1)^r n/(n-r) C(n-r, r) x^(n-2r),  n >= 3.
IntPoly cycle_poly(long n);

// T-shape tree of order m (spine of m-2 vertices, one 2-edge branch at spine
// position 2):  (x^2-1) (phi(P_{m-2}) - x phi(P_{m-5})),  m >= 5
// (m = 5 degenerates to the path P_5).
IntPoly tshape_poly(long m);

// H-shape tree of order n (spine of n-4 vertices, 2-edge branches at spine
// positions 2 and n-7):  (x^2-1) (tshape(n-2) - x tshape(n-5)),  n >= 10.
IntPoly hshape_poly(long n);

// Tailed cycle (lollipop): pendant path of ell >= 1 vertices attached to a
// cycle of length g >= 3, via the one-vertex coalescence identity
//   phi = phi(P_ell) phi(C_g) - phi(P_{ell-1}) phi(P_{g-1}).
IntPoly lollipop_poly(long ell, long g);

// Right-hand side of the vertex elimination identity
//   phi(G) = x phi(G-v) - sum_{u ~ v} phi(G-v-u) - 2 sum_{cycles Z through v} phi(G-Z),
// evaluated by enumerating the cycles explicitly.
IntPoly schwenk_vertex(const Graph& g, int v);

// Right-hand side of the edge elimination identity for e = (u, v):
//   phi(G) = phi(G-e) - phi(G-u-v) - 2 sum_{cycles Z through e} phi(G-Z).
IntPoly schwenk_edge(const Graph& g, int u, int v);

// Closed-form lowest nonzero term of the characteristic polynomial for the
// families where one is known: paths, cycles, T-shapes, H-shapes, and
// lollipops with even cycle length and even pendant length.  Empty when the
// family (or parameter residue) is not covered.
std::optional<LowestTerm> predicted_lowest_term(const FamilySpec& spec);

}  // namespace quipu
