// projcoeff.hpp — exact rational closed forms and recursions for the
// projector coefficients, on the wall and beyond.  All arithmetic is exact
// (GMP rationals); the recursions act as the oracle for the closed forms.

#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "kla2/verify.hpp"

namespace kla2 {

// Exact rational; always reduced, denominator positive.
class Rat {
 public:
  Rat() : q_(0) {}
  Rat(long num, long den) : q_(num, den) { q_.canonicalize(); }
  explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  static Rat integer(long n) { return Rat(n, 1); }

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  bool is_zero() const { return q_ == 0; }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ + b.q_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ - b.q_)); }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.q_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ * b.q_)); }
  // Throws std::domain_error on division by zero.
  friend Rat operator/(const Rat& a, const Rat& b);
  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }

  std::string to_string() const { return q_.get_str(); }  // "p/q" or "p"

 private:
  mpq_class q_;
};

// Wall coefficients: c_1..c_4 = 0, then c_{2k+1} = c_{2k+2} = -(k-1)/k.
Rat wall_c(long n);
// Same values through the recursion 1/c_{n+1} = -2 - c_{n-1} from the zero
// base cases; valid for any n >= 1 (the divisor never vanishes there).
Rat wall_c_rec(long n);

// d_1 = d_3 = d_5 = 0, then d_{2k+1} = (k-2)/(k-1); odd indices only
// (std::invalid_argument otherwise).
Rat wall_d(long n);
// Recursion 1/d_{2k+1} = 2 - d_{2k-1}.
Rat wall_d_rec(long n);

// Beyond the wall: c_m = (m-1)/m for m >= 1, and
// d_{m,n} = -n(m+n)/((n+1)(m+n+1)) for m >= 1, n >= 0.
Rat beyond_c(long m);
Rat beyond_d(long m, long n);

// Checks that the closed forms satisfy the three beyond-wall recursions
//   -1/c_{m+1} = -2 + c_m
//   -1/d_{1,n} = 3 - 2 c_n
//   -1/d_{m+1,n} = 4 - 2 c_n + d_{m,n} (2 - c_n)^2
// for all indices m <= M, n <= N.
VerifyReport beyond_rec_check(long M, long N);

// Closed == recursive on the wall for all indices <= N, plus the sanity
// bounds (wall values in (-1,0], nonincreasing; beyond c in [0,1),
// nondecreasing).
VerifyReport wall_rec_check(long N);

struct CoeffRow {
  std::string index;
  Rat closed;
  Rat recursive;
  bool equal;
};
std::vector<CoeffRow> wall_coeff_table(long max_n);
std::vector<CoeffRow> beyond_coeff_table(long max_m, long max_n);

}  // namespace kla2
