#pragma once

// Exact univariate polynomial arithmetic over the integers, with the rational
// evaluation and Sturm-chain machinery needed for certified root location.
//
// Coefficients are arbitrary-precision (GMP).  A polynomial is stored dense,
// low-to-high (coeffs()[i] is the coefficient of x^i), with no trailing zero
// coefficients; the zero polynomial has an empty coefficient vector and
// degree() == -1.

#include <gmpxx.h>

#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace quipu {

using Integer = mpz_class;
using Rational = mpq_class;

// num/den reduced to lowest terms with positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

// "7/3", "-2", ... (lowest terms).  Inverse of rational_from_string.
std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& text);

// Decimal rendering with the stated number of fractional digits (round to
// nearest, for human-readable reports only; certification always uses the
// exact rational endpoints).
std::string rational_to_decimal(const Rational& q, int digits);

class IntPoly {
 public:
  IntPoly() = default;  // zero polynomial
  explicit IntPoly(Integer constant);
  explicit IntPoly(std::vector<Integer> coeffs);  // low-to-high, any trailing zeros are stripped

  static IntPoly zero();
  static IntPoly one();
  static IntPoly variable();                                // x
  static IntPoly monomial(Integer coeff, int exponent);
  static IntPoly of(std::initializer_list<long> coeffs);    // low-to-high, test/CLI convenience

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Integer>& coeffs() const { return c_; }
  Integer coeff(int exponent) const;  // 0 outside the stored range
  const Integer& leading() const;     // requires a nonzero polynomial
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  IntPoly operator-() const;
  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator*(const Integer& k) const;
  IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
  IntPoly& operator-=(const IntPoly& o) { return *this = *this - o; }
  IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

  IntPoly derivative() const;
  IntPoly shifted(int k) const;  // multiply by x^k (k >= 0)

  // gcd of all coefficients, >= 0 (0 only for the zero polynomial).
  Integer content() const;
  // this / content(); sign of the leading coefficient is preserved.
  IntPoly primitive_part() const;
  // primitive part with positive leading coefficient (zero stays zero).
  IntPoly normalized_primitive() const;

  Integer eval(const Integer& x) const;
  Rational eval(const Rational& x) const;
  // Sign of eval(x) (-1, 0, +1) via denominator-cleared integer Horner.
  int sign_at(const Rational& x) const;

  // Human-readable form such as "x^4 - 5x^2 + 2".
  std::string pretty(const std::string& var = "x") const;

  // JSON array of decimal integer strings, index = exponent; zero <-> [].
  nlohmann::json to_json() const;
  static IntPoly from_json(const nlohmann::json& j);

 private:
  void normalize();
  std::vector<Integer> c_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

// Exact quotient r with p = q * r over the integers, or nullopt when no such
// integer-coefficient quotient exists.  Rejects a zero divisor.
std::optional<IntPoly> divide_exact(const IntPoly& p, const IntPoly& q);

// Primitive greatest common divisor with positive leading coefficient
// (integer content of the inputs is discarded).  gcd(p, 0) = |normalize(p)|,
// gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& p, const IntPoly& q);

Integer eval_at(const IntPoly& p, const Integer& x);

// p / gcd(p, p'): the product of the distinct irreducible factors of p,
// primitive with positive leading coefficient.  Requires p nonzero.
IntPoly squarefree_part(const IntPoly& p);

bool is_squarefree(const IntPoly& p);  // requires p nonzero

// Yun decomposition: pairwise-coprime squarefree factors f_i (primitive,
// positive leading coefficient) with multiplicities m_i, such that
// prod f_i^{m_i} equals p up to a positive-content/sign factor.
// Factors of degree 0 are omitted.  Requires p nonzero.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);

// Sturm chain of a squarefree polynomial (primitive-part reduction at each
// step, signs preserved so variation counts are those of the exact chain).
class SturmChain {
 public:
  explicit SturmChain(const IntPoly& p);  // rejects zero or non-squarefree p
  int variations_at(const Rational& x) const;
  int variations_at_minus_inf() const;
  int variations_at_plus_inf() const;
  // Number of real roots in the half-open interval (a, b]; requires a < b.
  int count(const Rational& a, const Rational& b) const;
  int count_all() const;                 // all real roots
  int count_greater(const Rational& a) const;
  int count_at_most(const Rational& a) const;
  const std::vector<IntPoly>& chain() const { return seq_; }

 private:
  std::vector<IntPoly> seq_;
};

// Number of distinct real roots of squarefree p in (a, b] (a < b).
// Rejects non-squarefree input.
int sturm_count(const IntPoly& p, const Rational& a, const Rational& b);

struct LowestTerm {
  Integer coeff;
  int exponent;
  bool operator==(const LowestTerm& o) const {
    return coeff == o.coeff && exponent == o.exponent;
  }
};

// Lowest-order nonzero term of p.  Requires p nonzero.
LowestTerm lowest_term(const IntPoly& p);

// Strict upper bound on the absolute value of every real root:
// 1 + max_i |c_i| / |lead|.  Requires p nonzero.
Rational cauchy_root_bound(const IntPoly& p);

}  // namespace quipu
