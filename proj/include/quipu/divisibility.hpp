#pragma once

// Divisibility calculus for the H-shape polynomial family: three-term
// recursive polynomial sequences, the explicit anchor sequence whose terms
// from index 10 on are the H-shape polynomials, path/T-shape/cycle divisor
// classifications, and the closed-form factorizations they rest on.

#include <mutex>
#include <set>
#include <utility>
#include <vector>

#include "quipu/intpoly.hpp"

namespace quipu {

// Polynomials g_h, g_{h+1}, ... obeying g_{n+2} = x g_{n+1} - g_n, generated
// from two explicit seeds.  Terms are cached; term() is thread-safe.
class RecursiveSeq {
 public:
  RecursiveSeq(long base_index, IntPoly seed0, IntPoly seed1);
  long base_index() const { return h_; }
  IntPoly term(long n) const;  // requires n >= base_index

 private:
  long h_;
  mutable std::mutex mutex_;
  mutable std::vector<IntPoly> terms_;
};

// Executable witness of the telescoping identity
//   g_n = phi(P_k) g_{n-k} - phi(P_{k-1}) g_{n-k-1}
// valid for 1 <= k <= n-1-base_index (out-of-range k rejected).
bool telescope_check(const RecursiveSeq& s, long n, long k);

struct PathReduction {
  long reduced_index;
  bool divides;
  bool operator==(const PathReduction& o) const {
    return reduced_index == o.reduced_index && divides == o.divides;
  }
};

// phi(P_m) | g_n iff phi(P_m) | g_i at the residue index
// i = h + (n - h) mod (m+1): the divisibility question telescopes down into
// the seed window [h, h+m].  Reports the residue index and the answer.
PathReduction path_divisibility_reduce(const RecursiveSeq& s, long m, long n);

// The anchor sequence: twelve explicit polynomials at indices 0..11 (the last
// two being the H-shape polynomials of orders 10 and 11), extended upward by
// the recursion, so term n is the order-n H-shape polynomial for all n >= 10.
IntPoly r_sequence(long i);  // i >= 0

// True iff phi(P_m) divides the order-n H-shape polynomial:
//   (m, n) in {(1, odd)} u {(2, any)} u {(5, n = 5 mod 6)},  m >= 1, n >= 10.
bool classify_path_divisor(long m, long n);

struct HOddFactorization {
  IntPoly t_factor;     // phi(T_k)
  IntPoly cofactor;     // phi(T_{k+1}) - phi(T_{k-1});  phi(T_7) - phi(P_5) at k = 6
  bool identity_holds;  // t_factor * cofactor equals the order-(2k+1) H-shape polynomial
};

// The odd-order H-shape factorization phi(H_{2k+1}) = phi(T_k) * cofactor,
// k >= 6.  (At k = 6 the cofactor's lower term is phi(P_5): the T family
// starts at order 6, and the degenerate order-5 shape is the path itself.)
HOddFactorization hshape_odd_factorization(long k);

// All pairs (m, n) with 3 <= m <= m_max, 10 <= n <= n_max such that the cycle
// polynomial phi(C_m) divides the H-shape polynomial of order n.
std::set<std::pair<long, long>> cycle_divisor_scan(long m_max, long n_max);

// 9(n-15); asserted equal to the H-shape polynomial of order n evaluated at
// 2 (throws std::logic_error if that ever failed).  n >= 10.
Integer h_eval_at_two(long n);

struct C01PCheck {
  IntPoly q;  // phi(P_{k-1}) - x phi(P_{k-4}) - phi(P_{k-3}) + x phi(P_{k-6})
  bool both_identities_hold;
};

// Builds q and verifies the two exact identities (k >= 6):
//   phi(cycle of length 2k-6 with one pendant vertex) = phi(P_{k-4}) q
//   phi(H_{2k+1}) = phi(P_2) phi(T_k) q
C01PCheck c01p_check(long k);

// True iff phi(P_{r1})phi(P_{r2}) - phi(P_{s1})phi(P_{s2})
//        = -phi(P_{s1-r1-1})phi(P_{s2-r1-1})
// under 0 <= r1 <= r2, r1 < s1 <= s2, r1+r2 = s1+s2 (violations rejected).
bool path_product_identity_check(long r1, long r2, long s1, long s2);

}  // namespace quipu
