#pragma once

// Closed-form matching counts, and the classification of two-branch trees by
// their 3-matching count.

#include "quipu/graph.hpp"
#include "quipu/intpoly.hpp"

namespace quipu {

// Number of 2-matchings via the degree-sequence form
// C(eps, 2) - sum_i C(d_i, 2).  Valid for every graph.
Integer m2_closed_form(const Graph& g);

// 2-matching count via the specialization for trees with maximum degree
// exactly 3: (nu^2 - 5 nu)/2 + 3 - k with k the number of degree-3 vertices.
// Rejects graphs outside that family.
Integer m2_tree_form(const Graph& g);

// 2-matching count via the closed-quipu specialization (nu^2 - 3 nu)/2 - k
// with k the number of pendant paths.  Accepts exactly the connected
// unicyclic graphs of maximum degree <= 3 whose degree-3 vertices all lie on
// the cycle (the plain cycle has k = 0); rejects everything else.
Integer m2_closed_quipu_form(const Graph& g);

// Number of 3-matchings via the closed form
//   C(eps,3) - (eps-2) sum_i C(d_i,2) + 2 sum_i C(d_i,3)
//     + sum_{ij in E} (d_i - 1)(d_j - 1) - N,
// N the triangle count.  Valid for every graph.
Integer m3_closed_form(const Graph& g);

// Shape class (1..12) of a two-branch tree: exactly two degree-3 vertices,
// maximum degree 3, so the tree is a middle path joining two branch vertices
// that carry two pendant arms each.  Each of the five segments is either a
// single edge or longer; sides are unordered.  The class order follows the
// catalog used by m3_predict_hshape: class 1 is the double-pendant-pair
// shape with a long middle, class 2 the same with middle 1, ..., class 10 is
// all five segments long, class 12 all four arms long with middle 1.
// Rejects trees outside the family.
int hshape_class(const Graph& t);

// Predicted 3-matching count of a two-branch tree on n vertices:
// f(n) + offset with f(n) = (n^3 - 12n^2 + 35n)/6 and per-class offsets
// 0,1,1,2,2,2,3,3,3,4,4,5.  Always equals m3_closed_form on the family.
Integer m3_predict_hshape(const Graph& t);

}  // namespace quipu
