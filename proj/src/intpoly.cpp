#include "quipu/intpoly.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace quipu {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) {
  return q.get_str();
}

Rational rational_from_string(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("malformed rational: " + text);
  q.canonicalize();
  return q;
}

std::string rational_to_decimal(const Rational& q, int digits) {
  if (digits < 0) throw std::invalid_argument("negative digit count");
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Integer num = q.get_num() * scale * 2 + q.get_den();  // round half up
  Integer scaled;
  mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), Integer(q.get_den() * 2).get_mpz_t());
  bool neg = scaled < 0;
  Integer mag = abs(scaled);
  std::string s = mag.get_str();
  if (digits == 0) return (neg ? "-" : "") + s;
  if (static_cast<int>(s.size()) <= digits)
    s.insert(0, std::string(digits + 1 - s.size(), '0'));
  s.insert(s.size() - digits, ".");
  return (neg ? "-" : "") + s;
}

IntPoly::IntPoly(Integer constant) {
  if (constant != 0) c_.push_back(std::move(constant));
}

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) {
  normalize();
}

void IntPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::zero() { return IntPoly(); }

IntPoly IntPoly::one() { return IntPoly(Integer(1)); }

IntPoly IntPoly::variable() { return monomial(1, 1); }

IntPoly IntPoly::monomial(Integer coeff, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  if (coeff == 0) return IntPoly();
  std::vector<Integer> c(exponent + 1, Integer(0));
  c.back() = std::move(coeff);
  IntPoly p;
  p.c_ = std::move(c);
  return p;
}

IntPoly IntPoly::of(std::initializer_list<long> coeffs) {
  std::vector<Integer> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return IntPoly(std::move(c));
}

Integer IntPoly::coeff(int exponent) const {
  if (exponent < 0 || exponent >= static_cast<int>(c_.size())) return Integer(0);
  return c_[exponent];
}

const Integer& IntPoly::leading() const {
  if (c_.empty()) throw std::invalid_argument("leading coefficient of zero polynomial");
  return c_.back();
}

IntPoly IntPoly::operator-() const {
  IntPoly r(*this);
  for (auto& v : r.c_) v = -v;
  return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<Integer> c(std::max(c_.size(), o.c_.size()), Integer(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<Integer> c(std::max(c_.size(), o.c_.size()), Integer(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  std::vector<Integer> c(c_.size() + o.c_.size() - 1, Integer(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      c[i + j] += c_[i] * o.c_[j];
    }
  }
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const Integer& k) const {
  if (k == 0) return IntPoly();
  IntPoly r(*this);
  for (auto& v : r.c_) v *= k;
  return r;
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return IntPoly();
  std::vector<Integer> c(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Integer(static_cast<long>(i));
  return IntPoly(std::move(c));
}

IntPoly IntPoly::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("negative shift");
  if (is_zero() || k == 0) return *this;
  std::vector<Integer> c(c_.size() + k, Integer(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
  IntPoly p;
  p.c_ = std::move(c);
  return p;
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& v : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return IntPoly();
  Integer g = content();
  IntPoly r(*this);
  for (auto& v : r.c_) v /= g;
  return r;
}

IntPoly IntPoly::normalized_primitive() const {
  IntPoly r = primitive_part();
  if (!r.is_zero() && r.leading() < 0) r = -r;
  return r;
}

Integer IntPoly::eval(const Integer& x) const {
  Integer acc = 0;
  for (size_t i = c_.size(); i-- > 0;) {
    acc *= x;
    acc += c_[i];
  }
  return acc;
}

Rational IntPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (size_t i = c_.size(); i-- > 0;) {
    acc *= x;
    acc += c_[i];
  }
  return acc;
}

int IntPoly::sign_at(const Rational& x) const {
  // sign(p(a/b)) = sign(sum c_i a^i b^(d-i)) since b > 0 in canonical form.
  if (is_zero()) return 0;
  const Integer& a = x.get_num();
  const Integer& b = x.get_den();
  Integer acc = 0;
  Integer bp = 1;  // b^(d-i), grown as i steps down from d
  for (size_t i = c_.size(); i-- > 0;) {
    acc *= a;
    if (i + 1 < c_.size()) bp *= b;
    acc += c_[i] * bp;
  }
  return sgn(acc);
}

std::string IntPoly::pretty(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& v = c_[i];
    if (v == 0) continue;
    Integer mag = abs(v);
    if (first) {
      if (v < 0) os << "-";
      first = false;
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) {
      os << var;
      if (i >= 2) os << "^" << i;
    }
  }
  return os.str();
}

nlohmann::json IntPoly::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& v : c_) arr.push_back(v.get_str());
  return arr;
}

IntPoly IntPoly::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<Integer> c;
  c.reserve(j.size());
  for (const auto& item : j) {
    if (item.is_string()) {
      c.emplace_back(item.get<std::string>());
    } else if (item.is_number_integer()) {
      c.emplace_back(static_cast<long>(item.get<long long>()));
    } else {
      throw std::invalid_argument("polynomial JSON entries must be integer strings");
    }
  }
  return IntPoly(std::move(c));
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) {
  return os << p.pretty();
}

std::optional<IntPoly> divide_exact(const IntPoly& p, const IntPoly& q) {
  if (q.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (p.is_zero()) return IntPoly();
  if (p.degree() < q.degree()) return std::nullopt;
  const Integer& lq = q.leading();
  std::vector<Integer> rem(p.coeffs());
  std::vector<Integer> quot(p.degree() - q.degree() + 1, Integer(0));
  int dr = p.degree();
  const int dq = q.degree();
  while (dr >= dq) {
    if (rem[dr] != 0) {
      Integer qc, r;
      mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), rem[dr].get_mpz_t(), lq.get_mpz_t());
      if (r != 0) return std::nullopt;  // leading term not divisible over the integers
      quot[dr - dq] = qc;
      for (int i = 0; i <= dq; ++i) rem[dr - dq + i] -= qc * q.coeffs()[i];
    }
    --dr;
  }
  for (const auto& v : rem)
    if (v != 0) return std::nullopt;  // nonzero remainder
  return IntPoly(std::move(quot));
}

namespace {

// Remainder of a by b up to a positive constant multiple (fraction-free;
// the sign of the true remainder is preserved).  Requires b nonzero.
IntPoly positive_scaled_remainder(IntPoly a, const IntPoly& b) {
  const Integer& lb = b.leading();
  const int db = b.degree();
  int negations = 0;
  while (!a.is_zero() && a.degree() >= db) {
    int k = a.degree() - db;
    Integer la = a.leading();
    a = a * lb - (b * la).shifted(k);
    if (lb < 0) ++negations;
    // degree strictly decreased: leading terms cancel
  }
  if (negations % 2 == 1) a = -a;
  return a;
}

}  // namespace

IntPoly gcd(const IntPoly& p, const IntPoly& q) {
  IntPoly a = p.normalized_primitive();
  IntPoly b = q.normalized_primitive();
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = positive_scaled_remainder(a, b).normalized_primitive();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Integer eval_at(const IntPoly& p, const Integer& x) { return p.eval(x); }

IntPoly squarefree_part(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree part of zero polynomial");
  IntPoly g = gcd(p, p.derivative());
  auto q = divide_exact(p, g);
  if (!q) throw std::logic_error("squarefree part division failed");
  return q->normalized_primitive();
}

bool is_squarefree(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree test on zero polynomial");
  if (p.degree() == 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of zero polynomial");
  std::vector<std::pair<IntPoly, int>> out;
  IntPoly f = p.normalized_primitive();
  if (f.degree() == 0) return out;
  // Yun's algorithm over the rationals, with primitive normalization: every
  // division below is exact over the integers by Gauss's lemma.
  auto exact = [](const IntPoly& a, const IntPoly& b) {
    auto r = divide_exact(a, b);
    if (!r) throw std::logic_error("inexact division inside Yun decomposition");
    return *r;
  };
  IntPoly g = gcd(f, f.derivative());
  if (g.degree() == 0) {
    out.emplace_back(f, 1);
    return out;
  }
  // Yun's recurrence.  The gcds below are primitive with positive leading
  // coefficient; every division is exact over the integers (Gauss's lemma),
  // and rescaling w/y by a common constant leaves the extracted factors and
  // the termination condition unchanged.
  IntPoly w = exact(f, g);
  IntPoly y = exact(f.derivative(), g);
  int i = 1;
  while (true) {
    IntPoly z = y - w.derivative();
    if (z.is_zero()) {
      if (w.degree() >= 1) out.emplace_back(w.normalized_primitive(), i);
      break;
    }
    IntPoly a = gcd(w, z);
    if (a.degree() >= 1) out.emplace_back(a, i);
    w = exact(w, a);
    y = exact(z, a);
    ++i;
  }
  return out;
}

SturmChain::SturmChain(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("Sturm chain of zero polynomial");
  if (!is_squarefree(p)) throw std::invalid_argument("Sturm chain requires a squarefree polynomial");
  IntPoly s0 = p.primitive_part();  // sign of p preserved
  seq_.push_back(s0);
  if (s0.degree() == 0) return;
  IntPoly s1 = s0.derivative().primitive_part();
  seq_.push_back(s1);
  while (seq_.back().degree() > 0) {
    const IntPoly& a = seq_[seq_.size() - 2];
    const IntPoly& b = seq_.back();
    IntPoly r = positive_scaled_remainder(a, b);
    if (r.is_zero()) throw std::logic_error("unexpected zero remainder in Sturm chain");
    r = r.primitive_part();  // content is positive: sign preserved
    seq_.push_back(-r);
  }
}

namespace {

int count_variations(const std::vector<int>& signs) {
  int count = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

int SturmChain::variations_at(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(seq_.size());
  for (const auto& p : seq_) signs.push_back(p.sign_at(x));
  return count_variations(signs);
}

int SturmChain::variations_at_minus_inf() const {
  std::vector<int> signs;
  signs.reserve(seq_.size());
  for (const auto& p : seq_) {
    int s = sgn(p.leading());
    if (p.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return count_variations(signs);
}

int SturmChain::variations_at_plus_inf() const {
  std::vector<int> signs;
  signs.reserve(seq_.size());
  for (const auto& p : seq_) signs.push_back(sgn(p.leading()));
  return count_variations(signs);
}

int SturmChain::count(const Rational& a, const Rational& b) const {
  if (!(a < b)) throw std::invalid_argument("sturm count needs a < b");
  return variations_at(a) - variations_at(b);
}

int SturmChain::count_all() const {
  return variations_at_minus_inf() - variations_at_plus_inf();
}

int SturmChain::count_greater(const Rational& a) const {
  return variations_at(a) - variations_at_plus_inf();
}

int SturmChain::count_at_most(const Rational& a) const {
  return variations_at_minus_inf() - variations_at(a);
}

int sturm_count(const IntPoly& p, const Rational& a, const Rational& b) {
  SturmChain chain(p);
  return chain.count(a, b);
}

LowestTerm lowest_term(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("lowest term of zero polynomial");
  for (size_t i = 0; i < p.coeffs().size(); ++i)
    if (p.coeffs()[i] != 0) return {p.coeffs()[i], static_cast<int>(i)};
  throw std::logic_error("unreachable");
}

Rational cauchy_root_bound(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("root bound of zero polynomial");
  Integer lead = abs(p.leading());
  Integer maxc = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Integer a = abs(p.coeff(i));
    if (a > maxc) maxc = a;
  }
  return Rational(1) + make_rational(maxc, lead);
}

}  // namespace quipu
