// Closed-form matching counts against brute enumeration, the twelve-class
// shape table for two-branch trees, and the cospectral matching invariants.

#include <doctest.h>

#include <random>

#include "quipu/charpoly.hpp"
#include "quipu/family.hpp"
#include "quipu/graph.hpp"
#include "quipu/matchings.hpp"

using namespace quipu;

namespace {

Graph H(long n) { return build_family(FamilySpec::h_shape(n)); }

Graph two_branch(int a1, int a2, int m, int c1, int c2) {
  return build_family(
      FamilySpec::open_quipu(a2 + m + c2 + 1, {a2, a2 + m}, {a1, c1}));
}

}  // namespace

TEST_CASE("2-matchings: the degree-sequence form") {
  CHECK(m2_closed_form(build_family(FamilySpec::path(4))) == 1);
  CHECK(m2_closed_form(build_family(FamilySpec::star(3))) == 0);
  CHECK(m2_closed_form(build_family(FamilySpec::cycle(6))) == 9);
  CHECK(m2_closed_form(H(12)) == 43);
  CHECK(m2_closed_form(Graph(0)) == 0);
  CHECK(m2_closed_form(Graph(1)) == 0);
}

TEST_CASE("2-matchings: the maximum-degree-3 tree specialization") {
  CHECK(m2_tree_form(build_family(FamilySpec::star(3))) == 0);
  CHECK(m2_tree_form(H(12)) == 43);
  for (long n : {10, 11, 13, 14})
    CHECK(m2_tree_form(H(n)) == m2_closed_form(H(n)));
  for (long n : {6, 8, 11}) {
    const Graph t = build_family(FamilySpec::t_shape(n));
    CHECK(m2_tree_form(t) == matchings_brute(t, 2));
  }
  CHECK_THROWS_AS(m2_tree_form(build_family(FamilySpec::path(5))),
                  std::invalid_argument);  // maximum degree 2
  CHECK_THROWS_AS(m2_tree_form(build_family(FamilySpec::cycle(6))),
                  std::invalid_argument);  // not a tree
  CHECK_THROWS_AS(m2_tree_form(build_family(FamilySpec::star(4))),
                  std::invalid_argument);  // degree 4
  CHECK_THROWS_AS(m2_tree_form(Graph(0)), std::invalid_argument);
}

TEST_CASE("2-matchings: the closed-quipu specialization") {
  CHECK(m2_closed_quipu_form(build_family(FamilySpec::cycle(6))) == 9);
  const Graph ll = build_family(FamilySpec::lollipop(1, 6));
  CHECK(m2_closed_quipu_form(ll) == 13);
  CHECK(m2_closed_quipu_form(ll) == matchings_brute(ll, 2));
  const Graph cq = build_family(FamilySpec::closed_quipu(6, {0, 3}, {1, 1}));
  CHECK(m2_closed_quipu_form(cq) == 18);
  CHECK(m2_closed_quipu_form(cq) == matchings_brute(cq, 2));
  for (long g = 3; g <= 7; ++g)
    for (long p = 1; p <= 3; ++p) {
      const Graph q = build_family(FamilySpec::lollipop(p, g));
      CHECK(m2_closed_quipu_form(q) == matchings_brute(q, 2));
    }

  CHECK_THROWS_AS(m2_closed_quipu_form(build_family(FamilySpec::path(5))),
                  std::invalid_argument);  // acyclic
  {
    Graph g(6);  // C4 with two pendant edges at the same cycle vertex
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 0);
    g.add_edge(0, 4);
    g.add_edge(0, 5);
    CHECK_THROWS_AS(m2_closed_quipu_form(g), std::invalid_argument);  // degree 4
  }
  {
    Graph g(6);  // triangle with a pendant path that branches off-cycle
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(0, 3);
    g.add_edge(3, 4);
    g.add_edge(3, 5);
    CHECK_THROWS_AS(m2_closed_quipu_form(g), std::invalid_argument);
  }
}

TEST_CASE("3-matchings: the closed form with triangle correction") {
  CHECK(m3_closed_form(build_family(FamilySpec::cycle(6))) == 2);
  CHECK(m3_closed_form(build_family(FamilySpec::path(6))) == 1);
  CHECK(m3_closed_form(build_family(FamilySpec::cycle(3))) == 0);
  CHECK(m3_closed_form(Graph(2)) == 0);
  // complete graph on 4 vertices: no room for three disjoint edges
  {
    Graph k4(4);
    for (int u = 0; u < 4; ++u)
      for (int v = u + 1; v < 4; ++v) k4.add_edge(u, v);
    CHECK(m3_closed_form(k4) == 0);
    CHECK(m3_closed_form(k4) == matchings_brute(k4, 3));
  }
}

TEST_CASE("closed forms equal brute force on every graph with at most six vertices") {
  // exhaustive over all labeled graphs; connected counts cross-checked
  const long long expect_connected[7] = {0, 1, 1, 4, 38, 728, 26704};
  for (int n = 1; n <= 6; ++n) {
    const int bits = n * (n - 1) / 2;
    long long connected_count = 0;
    for (long mask = 0; mask < (1L << bits); ++mask) {
      Graph g(n);
      int b = 0;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++b)
          if (mask & (1L << b)) g.add_edge(u, v);
      CHECK(m2_closed_form(g) == matchings_brute(g, 2));
      CHECK(m3_closed_form(g) == matchings_brute(g, 3));
      if (g.connected()) ++connected_count;
    }
    CHECK(connected_count == expect_connected[n]);
  }
}

TEST_CASE("closed forms equal brute force on random graphs up to 14 vertices") {
  std::mt19937 rng(987654);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 13);  // 2..14
    const int denom = 2 + static_cast<int>(rng() % 7);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % denom == 0) g.add_edge(u, v);
    CHECK(m2_closed_form(g) == matchings_brute(g, 2));
    CHECK(m3_closed_form(g) == matchings_brute(g, 3));
  }
}

TEST_CASE("the twelve shape classes of two-branch trees") {
  // one representative per class, keyed (arm, arm, middle, arm, arm)
  CHECK(hshape_class(two_branch(1, 1, 2, 1, 1)) == 1);
  CHECK(hshape_class(two_branch(1, 1, 1, 1, 1)) == 2);
  CHECK(hshape_class(two_branch(1, 1, 2, 1, 2)) == 3);
  CHECK(hshape_class(two_branch(1, 1, 2, 2, 2)) == 4);
  CHECK(hshape_class(two_branch(1, 2, 2, 1, 2)) == 5);
  CHECK(hshape_class(two_branch(1, 1, 1, 1, 2)) == 6);
  CHECK(hshape_class(two_branch(1, 2, 2, 2, 2)) == 7);
  CHECK(hshape_class(two_branch(1, 2, 1, 1, 2)) == 8);
  CHECK(hshape_class(two_branch(1, 1, 1, 2, 2)) == 9);
  CHECK(hshape_class(two_branch(2, 2, 2, 2, 2)) == 10);
  CHECK(hshape_class(two_branch(1, 2, 1, 2, 2)) == 11);
  CHECK(hshape_class(two_branch(2, 2, 1, 2, 2)) == 12);

  // side order is immaterial
  CHECK(hshape_class(two_branch(2, 2, 2, 1, 1)) == hshape_class(two_branch(1, 1, 2, 2, 2)));
  CHECK(hshape_class(two_branch(1, 2, 1, 2, 2)) == hshape_class(two_branch(2, 2, 1, 1, 2)));

  // longer segments stay in the same class
  CHECK(hshape_class(two_branch(1, 5, 7, 1, 3)) == 5);
  CHECK(hshape_class(two_branch(4, 6, 1, 2, 9)) == 12);

  // the named examples
  CHECK(hshape_class(build_family(FamilySpec::open_quipu(7, {1, 5}, {1, 1}))) == 1);
  CHECK(hshape_class(build_family(FamilySpec::open_quipu(4, {1, 2}, {1, 1}))) == 2);
  CHECK(hshape_class(build_family(FamilySpec::open_quipu(7, {1, 3}, {1, 1}))) == 3);
  CHECK(hshape_class(H(12)) == 10);
  CHECK(hshape_class(H(10)) == 12);
  for (long n = 11; n <= 16; ++n) CHECK(hshape_class(H(n)) == 10);

  CHECK_THROWS_AS(hshape_class(build_family(FamilySpec::path(6))),
                  std::invalid_argument);
  CHECK_THROWS_AS(hshape_class(build_family(FamilySpec::t_shape(8))),
                  std::invalid_argument);  // single branch vertex
  CHECK_THROWS_AS(hshape_class(build_family(FamilySpec::star(4))),
                  std::invalid_argument);
  CHECK_THROWS_AS(hshape_class(build_family(FamilySpec::cycle(6))),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      hshape_class(build_family(FamilySpec::open_quipu(8, {1, 3, 5}, {1, 1, 1}))),
      std::invalid_argument);  // three branch vertices
}

TEST_CASE("3-matching prediction across every two-branch tree up to order 14") {
  CHECK(m3_predict_hshape(H(12)) == 74);
  CHECK(m3_predict_hshape(H(12)) == m3_closed_form(H(12)));
  // class-1 member on 8 vertices: f(8) + 0 = 4
  CHECK(m3_predict_hshape(two_branch(1, 1, 3, 1, 1)) == 4);
  // class-12 member on 12 vertices: f(12) + 5
  CHECK(m3_predict_hshape(two_branch(2, 3, 1, 2, 3)) == 75);

  long checked = 0;
  for (int a1 = 1; a1 <= 10; ++a1)
    for (int a2 = a1; a2 <= 10; ++a2)
      for (int c1 = 1; c1 <= 10; ++c1)
        for (int c2 = c1; c2 <= 10; ++c2)
          for (int m = 1; m <= 10; ++m) {
            const int nu = a1 + a2 + c1 + c2 + m + 1;
            if (nu > 14) continue;
            const Graph t = two_branch(a1, a2, m, c1, c2);
            const Integer want = m3_closed_form(t);
            CHECK(m3_predict_hshape(t) == want);
            CHECK(want == matchings_brute(t, 3));
            ++checked;
          }
    CHECK(checked > 200);
}

TEST_CASE("cospectral pairs: 2-matchings transfer, 3-matchings shift by the hexagon") {
  // Each pair: a two-branch tree and a forest mate with one six-cycle.
  // Quadrangle-free on both sides, so the 2-matching counts must agree.
  // The mate's hexagon breaks the 3-matching hypothesis: the shared sixth
  // charpoly coefficient counts 3-matchings plus twice the hexagon count,
  // so the tree must hold exactly two more 3-matchings than its mate.
  const std::vector<std::pair<Graph, Graph>> pairs = {
      {H(10), build_family(FamilySpec::union_of(
                  {FamilySpec::path(2),
                   FamilySpec::closed_quipu(6, {0, 3}, {1, 1})}))},
      {H(13), build_family(FamilySpec::union_of(
                  {FamilySpec::open_quipu(4, {1}, {2}),
                   FamilySpec::lollipop(1, 6)}))},
      {H(15), build_family(FamilySpec::union_of(
                  {FamilySpec::open_quipu(6, {1, 3}, {1, 2}),
                   FamilySpec::cycle(6)}))},
  };
  for (const auto& [tree, mate] : pairs) {
    REQUIRE(char_poly(tree) == char_poly(mate));  // genuinely cospectral
    const auto st = structural_stats(tree);
    const auto sm = structural_stats(mate);
    REQUIRE(st.quadrangles == 0);
    REQUIRE(sm.quadrangles == 0);
    REQUIRE(!st.girth.has_value());       // a tree
    REQUIRE(sm.girth.has_value());
    REQUIRE(*sm.girth == 6);              // one hexagon in the mate
    CHECK(m2_closed_form(tree) == m2_closed_form(mate));
    CHECK(m3_closed_form(tree) - m3_closed_form(mate) == 2);
  }
}
