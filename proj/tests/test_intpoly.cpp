#include "quipu/intpoly.hpp"

#include <doctest.h>

#include <random>

using namespace quipu;

namespace {

IntPoly random_poly(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> deg_dist(0, max_deg);
  std::uniform_int_distribution<int> coeff_dist(-9, 9);
  int d = deg_dist(rng);
  std::vector<Integer> c(d + 1);
  for (auto& v : c) v = coeff_dist(rng);
  return IntPoly(std::move(c));
}

IntPoly random_nonzero_poly(std::mt19937& rng, int max_deg) {
  for (;;) {
    IntPoly p = random_poly(rng, max_deg);
    if (!p.is_zero()) return p;
  }
}

// x^2 - k
IntPoly x2_minus(long k) { return IntPoly::of({-k, 0, 1}); }

}  // namespace

TEST_CASE("construction normalizes trailing zeros") {
  IntPoly p(std::vector<Integer>{Integer(1), Integer(2), Integer(0), Integer(0)});
  CHECK(p.degree() == 1);
  CHECK(p == IntPoly::of({1, 2}));
  CHECK(IntPoly::of({0, 0, 0}).is_zero());
  CHECK(IntPoly().degree() == -1);
}

TEST_CASE("basic arithmetic") {
  IntPoly x = IntPoly::variable();
  // x * x - 1 = x^2 - 1
  CHECK(x * x - IntPoly::one() == IntPoly::of({-1, 0, 1}));
  CHECK(IntPoly::of({1, 1}) * IntPoly::of({-1, 1}) == IntPoly::of({-1, 0, 1}));
  CHECK(-IntPoly::of({1, -2}) == IntPoly::of({-1, 2}));
  CHECK(IntPoly::of({1, 2, 3}).derivative() == IntPoly::of({2, 6}));
  CHECK(IntPoly::of({1, 2}).shifted(2) == IntPoly::of({0, 0, 1, 2}));
  CHECK(IntPoly::of({4, -6}).content() == 2);
  CHECK(IntPoly::of({-4, -6}).normalized_primitive() == IntPoly::of({2, 3}));
}

TEST_CASE("evaluation") {
  IntPoly p = IntPoly::of({3, 0, -4, 0, 1});  // x^4 - 4x^2 + 3 = (x^2-1)(x^2-3)
  CHECK(p.eval(Integer(0)) == 3);
  CHECK(p.eval(Integer(2)) == 3);
  CHECK(p.eval(Integer(-1)) == 0);
  CHECK(p.eval(make_rational(1, 2)) == make_rational(33, 16));
  CHECK(p.sign_at(make_rational(1, 2)) == 1);
  CHECK(p.sign_at(make_rational(3, 2)) == -1);
  CHECK(p.sign_at(Rational(1)) == 0);
}

TEST_CASE("pretty printing") {
  CHECK(IntPoly::of({-6, 0, 29, 0, -48, 0, 34, 0, -10, 0, 1}).shifted(1).pretty() ==
        "x^11 - 10x^9 + 34x^7 - 48x^5 + 29x^3 - 6x");
  CHECK(IntPoly::of({-2}).pretty() == "-2");
  CHECK(IntPoly().pretty() == "0");
  CHECK(IntPoly::of({0, -1}).pretty() == "-x");
}

TEST_CASE("json round trip matches the documented shape") {
  IntPoly p = IntPoly::of({-1, 0, 1});  // phi(P2) = x^2 - 1
  nlohmann::json j = p.to_json();
  CHECK(j.dump() == R"(["-1","0","1"])");
  CHECK(IntPoly::from_json(j) == p);
  CHECK(IntPoly::from_json(nlohmann::json::array()).is_zero());
  std::mt19937 rng(12345);
  for (int i = 0; i < 50; ++i) {
    IntPoly q = random_poly(rng, 10);
    CHECK(IntPoly::from_json(q.to_json()) == q);
  }
}

TEST_CASE("exact division: divisor and quotient recover the product") {
  std::mt19937 rng(777);
  for (int i = 0; i < 200; ++i) {
    IntPoly p = random_poly(rng, 8);
    IntPoly q = random_nonzero_poly(rng, 6);
    auto r = divide_exact(p * q, q);
    REQUIRE(r.has_value());
    CHECK(*r == p);
  }
}

TEST_CASE("exact division failures") {
  // no integer quotient
  CHECK_FALSE(divide_exact(IntPoly::variable(), IntPoly::of({0, 2})).has_value());
  // nonzero remainder
  CHECK_FALSE(divide_exact(IntPoly::of({1, 0, 1}), IntPoly::of({-1, 1})).has_value());
  // lower degree
  CHECK_FALSE(divide_exact(IntPoly::of({1, 1}), IntPoly::of({1, 1, 1})).has_value());
  CHECK(divide_exact(IntPoly(), IntPoly::of({1, 1}))->is_zero());
  CHECK_THROWS_AS((void)divide_exact(IntPoly::one(), IntPoly()), std::invalid_argument);
}

TEST_CASE("exact division with non-monic divisor") {
  IntPoly q = IntPoly::of({-4, 0, 8, 0, -4});  // -4(x^2-1)^2
  IntPoly p = q * IntPoly::of({3, 5, 7});
  auto r = divide_exact(p, q);
  REQUIRE(r.has_value());
  CHECK(*r == IntPoly::of({3, 5, 7}));
}

TEST_CASE("gcd basics") {
  IntPoly p5 = IntPoly::of({0, 3, 0, -4, 0, 1});  // phi(P5)
  IntPoly p4 = IntPoly::of({1, 0, -3, 0, 1});     // phi(P4)
  CHECK(gcd(p5, p4) == IntPoly::one());
  CHECK(gcd(p5, p5) == p5);  // already primitive with positive lead
  CHECK(gcd(-p5 * Integer(3), p5) == p5);
  CHECK(gcd(IntPoly(), IntPoly()).is_zero());
  CHECK(gcd(p4, IntPoly()) == p4);

  // shared factor extracted: gcd((x^2-1)(x^2-2), (x^2-1)(x^2-3)) = x^2-1
  CHECK(gcd(x2_minus(1) * x2_minus(2), x2_minus(1) * x2_minus(3)) == x2_minus(1));
}

TEST_CASE("gcd of scaled random products contains the planted factor") {
  std::mt19937 rng(4242);
  for (int i = 0; i < 100; ++i) {
    IntPoly g = random_nonzero_poly(rng, 4);
    if (g.degree() < 1) continue;
    IntPoly a = random_nonzero_poly(rng, 4);
    IntPoly b = random_nonzero_poly(rng, 4);
    IntPoly d = gcd(a * g, b * g);
    auto q = divide_exact(d, g.normalized_primitive());
    CHECK(q.has_value());  // normalized g divides the gcd
  }
}

TEST_CASE("squarefree part and detection") {
  IntPoly sq = IntPoly::of({1, -2, 1});  // (x-1)^2
  CHECK(squarefree_part(sq) == IntPoly::of({-1, 1}));
  CHECK_FALSE(is_squarefree(sq));
  CHECK(is_squarefree(IntPoly::of({-1, 1})));
  CHECK(is_squarefree(IntPoly::of({7})));

  // (x-1)^3 (x+2)^2 (x^2-2)
  IntPoly m = IntPoly::of({-1, 1}) * IntPoly::of({-1, 1}) * IntPoly::of({-1, 1}) *
              IntPoly::of({2, 1}) * IntPoly::of({2, 1}) * x2_minus(2);
  IntPoly sf = squarefree_part(m);
  CHECK(sf == IntPoly::of({-1, 1}) * IntPoly::of({2, 1}) * x2_minus(2));
  CHECK(sf.leading() > 0);
}

TEST_CASE("squarefree decomposition (Yun)") {
  IntPoly f = IntPoly::of({-1, 1}) * IntPoly::of({-1, 1}) * IntPoly::of({-1, 1}) *
              IntPoly::of({2, 1}) * IntPoly::of({2, 1}) * x2_minus(2);
  auto dec = squarefree_decomposition(f);
  REQUIRE(dec.size() == 3);
  // sorted by multiplicity ascending by construction
  CHECK(dec[0].second == 1);
  CHECK(dec[0].first == x2_minus(2));
  CHECK(dec[1].second == 2);
  CHECK(dec[1].first == IntPoly::of({2, 1}));
  CHECK(dec[2].second == 3);
  CHECK(dec[2].first == IntPoly::of({-1, 1}));

  // product reassembles the primitive normalized input
  IntPoly prod = IntPoly::one();
  for (auto& [fac, mult] : dec)
    for (int i = 0; i < mult; ++i) prod *= fac;
  CHECK(prod == f.normalized_primitive());

  auto triv = squarefree_decomposition(IntPoly::of({-3}));
  CHECK(triv.empty());
}

TEST_CASE("squarefree decomposition on randoms with planted multiplicities") {
  std::mt19937 rng(999);
  for (int iter = 0; iter < 60; ++iter) {
    IntPoly a = random_nonzero_poly(rng, 3);
    IntPoly f = a * a * random_nonzero_poly(rng, 3);
    if (f.degree() < 1) continue;
    auto dec = squarefree_decomposition(f);
    IntPoly prod = IntPoly::one();
    for (auto& [fac, mult] : dec) {
      CHECK(is_squarefree(fac));
      CHECK(fac.leading() > 0);
      for (int i = 0; i < mult; ++i) prod *= fac;
    }
    CHECK(prod == f.normalized_primitive());
  }
}

TEST_CASE("sturm counts on half-open intervals") {
  // roots at +-sqrt(2)
  IntPoly p = x2_minus(2);
  CHECK(sturm_count(p, Rational(0), Rational(2)) == 1);
  CHECK(sturm_count(p, Rational(-2), Rational(2)) == 2);
  CHECK(sturm_count(p, Rational(-2), Rational(0)) == 1);

  // exact root at an endpoint: (a, b] includes b, excludes a
  IntPoly q = IntPoly::of({-1, 1}) * IntPoly::of({-2, 1}) * IntPoly::of({-3, 1});
  CHECK(sturm_count(q, Rational(1), Rational(2)) == 1);   // {2}
  CHECK(sturm_count(q, Rational(0), Rational(1)) == 1);   // {1}
  CHECK(sturm_count(q, Rational(1), Rational(3)) == 2);   // {2,3}
  CHECK(sturm_count(q, Rational(3), Rational(9)) == 0);
  SturmChain chain(q);
  CHECK(chain.count_all() == 3);
  CHECK(chain.count_greater(Rational(2)) == 1);
  CHECK(chain.count_at_most(Rational(2)) == 2);
}

TEST_CASE("sturm rejects non-squarefree input and bad intervals") {
  CHECK_THROWS_AS((void)sturm_count(IntPoly::of({1, -2, 1}), Rational(0), Rational(2)),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)sturm_count(x2_minus(2), Rational(1), Rational(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(SturmChain{IntPoly{}}, std::invalid_argument);
}

TEST_CASE("sturm interval additivity on random squarefree polynomials") {
  std::mt19937 rng(31337);
  int done = 0;
  while (done < 80) {
    IntPoly p = random_nonzero_poly(rng, 9);
    if (p.degree() < 1 || !is_squarefree(p)) continue;
    ++done;
    SturmChain chain(p);
    Rational a(-11), b(2), c(11);
    CHECK(chain.count(a, c) == chain.count(a, b) + chain.count(b, c));
    Rational bound = cauchy_root_bound(p);
    CHECK(chain.count(-bound, bound) == chain.count_all());
  }
}

TEST_CASE("fifteen-vertex tree charpoly: squarefree part and root counting") {
  // lambda (lambda^2-4) (lambda^2-1)^3 h with h = x^6 - 7x^4 + 12x^2 - 2
  IntPoly h = IntPoly::of({-2, 0, 12, 0, -7, 0, 1});
  IntPoly lam = IntPoly::variable();
  IntPoly sq1 = x2_minus(1);
  IntPoly phi = lam * x2_minus(4) * sq1 * sq1 * sq1 * h;
  CHECK(phi.degree() == 15);
  IntPoly sf = squarefree_part(phi);
  CHECK(sf == lam * x2_minus(4) * sq1 * h);
  // 2 is a root (right endpoint included); nothing else that close
  CHECK(sturm_count(sf, make_rational(2000000 - 1, 1000000), Rational(2)) == 1);
  // and (2, 2.2] holds exactly one root: the spectral radius
  CHECK(sturm_count(sf, Rational(2), make_rational(22, 10)) == 1);
}

TEST_CASE("lowest term") {
  IntPoly c8 = IntPoly::of({0, 0, -16, 0, 20, 0, -8, 0, 1});  // phi(C8)
  LowestTerm lt = lowest_term(c8);
  CHECK(lt.coeff == -16);
  CHECK(lt.exponent == 2);
  CHECK_THROWS_AS((void)lowest_term(IntPoly()), std::invalid_argument);

  std::mt19937 rng(2024);
  for (int i = 0; i < 100; ++i) {
    IntPoly p = random_nonzero_poly(rng, 7);
    IntPoly q = random_nonzero_poly(rng, 7);
    LowestTerm a = lowest_term(p), b = lowest_term(q), ab = lowest_term(p * q);
    CHECK(ab.coeff == a.coeff * b.coeff);
    CHECK(ab.exponent == a.exponent + b.exponent);
  }
}

TEST_CASE("rational helpers") {
  CHECK(rational_to_string(make_rational(6, -4)) == "-3/2");
  CHECK(rational_from_string("-3/2") == make_rational(-3, 2));
  CHECK(rational_from_string("7") == Rational(7));
  CHECK(rational_to_decimal(make_rational(1, 3), 4) == "0.3333");
  CHECK(rational_to_decimal(make_rational(217009, 100000), 5) == "2.17009");
  CHECK(rational_to_decimal(Rational(-2), 2) == "-2.00");
  CHECK_THROWS_AS((void)make_rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS((void)rational_from_string("abc"), std::invalid_argument);
}

TEST_CASE("cauchy bound dominates all real roots") {
  std::mt19937 rng(555);
  for (int i = 0; i < 60; ++i) {
    IntPoly p = random_nonzero_poly(rng, 8);
    if (p.degree() < 1 || !is_squarefree(p)) continue;
    Rational b = cauchy_root_bound(p);
    SturmChain chain(p);
    CHECK(chain.count(-b, b) == chain.count_all());
  }
}
