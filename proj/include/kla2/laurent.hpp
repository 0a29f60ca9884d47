// laurent.hpp — exact Laurent polynomials Z[v,v^-1].
//
// Terms are kept as a sorted vector of (exponent, coefficient) with no zero
// coefficients, so equal polynomials have identical representations.
// Coefficients are arbitrary-precision (GMP).

#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kla2 {

class LPoly {
 public:
  LPoly() = default;
  static LPoly monomial(mpz_class c, int k);
  static LPoly constant(long c) { return monomial(mpz_class(c), 0); }
  static LPoly v(int k = 1) { return monomial(1, k); }

  bool is_zero() const { return terms_.empty(); }
  mpz_class coeff(int k) const;
  mpz_class eval_at_one() const;
  std::optional<int> min_deg() const;
  std::optional<int> max_deg() const;
  bool is_nonneg() const;
  // True when the polynomial is a single constant term (or zero).
  bool is_constant() const;

  LPoly bar() const;  // v -> v^-1

  friend LPoly operator+(const LPoly& a, const LPoly& b);
  friend LPoly operator-(const LPoly& a, const LPoly& b);
  friend LPoly operator-(const LPoly& a);
  friend LPoly operator*(const LPoly& a, const LPoly& b);
  LPoly& operator+=(const LPoly& b) { return *this = *this + b; }
  LPoly& operator-=(const LPoly& b) { return *this = *this - b; }
  LPoly& operator*=(const LPoly& b) { return *this = *this * b; }
  friend bool operator==(const LPoly& a, const LPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LPoly& a, const LPoly& b) { return !(a == b); }

  const std::vector<std::pair<int, mpz_class>>& terms() const { return terms_; }

  // "v^-2 + 3 + v^2"; "0" for the zero polynomial.
  std::string to_string() const;
  // Parses the textual form (signs, integer coefficients, v powers).
  static LPoly parse(const std::string& text);

 private:
  std::vector<std::pair<int, mpz_class>> terms_;  // ascending exponents
  void prune();
};

inline LPoly v_plus_vinv() { return LPoly::v(1) + LPoly::v(-1); }

}  // namespace kla2
