// hecke.hpp — the Hecke algebra of (W,S) over Z[v,v^-1].
//
// HeckeElt stores standard-basis coordinates.  The canonical basis element
// kl_basis(x) is computed by the mu-recursion: pick a right descent s of x,
// multiply kl_basis(xs) by the generator and subtract mu(y,xs)-corrections
// over the descending part of the support.  Results are memoized per element
// (thread-safe table, idempotent inserts).

#pragma once

#include <map>

#include "kla2/coxeter.hpp"
#include "kla2/laurent.hpp"

namespace kla2 {

class HeckeElt {
 public:
  HeckeElt() = default;

  static HeckeElt unit(const Elt& x) {
    HeckeElt h;
    h.terms_.emplace(x, LPoly::constant(1));
    return h;
  }

  bool is_zero() const { return terms_.empty(); }
  size_t support_size() const { return terms_.size(); }
  const std::map<Elt, LPoly>& terms() const { return terms_; }
  LPoly coeff_of(const Elt& y) const;

  void add_term(const Elt& x, const LPoly& p);

  friend HeckeElt operator+(const HeckeElt& a, const HeckeElt& b);
  friend HeckeElt operator-(const HeckeElt& a, const HeckeElt& b);
  friend HeckeElt operator-(const HeckeElt& a);
  HeckeElt& operator+=(const HeckeElt& b);
  HeckeElt& operator-=(const HeckeElt& b) { return *this += -b; }
  friend bool operator==(const HeckeElt& a, const HeckeElt& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const HeckeElt& a, const HeckeElt& b) { return !(a == b); }

  friend HeckeElt scale(const LPoly& p, const HeckeElt& h);

  std::string to_string() const;

 private:
  std::map<Elt, LPoly> terms_;  // no zero polynomials stored
};

// KL-basis coordinates (same storage, different basis).
class KLCombination {
 public:
  KLCombination() = default;
  explicit KLCombination(std::map<Elt, LPoly> terms) : terms_(std::move(terms)) {}
  const std::map<Elt, LPoly>& terms() const { return terms_; }
  LPoly coeff_of(const Elt& y) const;
  friend bool operator==(const KLCombination& a, const KLCombination& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::map<Elt, LPoly> terms_;
};

inline HeckeElt unit(const Elt& x) { return HeckeElt::unit(x); }

// X * Hbar_s and Hbar_s * X: standard coordinates pick up v or v^-1
// according to whether the term ascends or descends.
HeckeElt mul_kl_gen_right(const HeckeElt& h, Gen s);
HeckeElt mul_kl_gen_left(Gen s, const HeckeElt& h);

// X * H_s (quadratic relation H_s^2 = 1 + (v^-1 - v)H_s).
HeckeElt mul_std_gen_right(const HeckeElt& h, Gen s);

HeckeElt mul(const HeckeElt& a, const HeckeElt& b);

// The bar involution: v -> v^-1, H_x -> (H_{x^-1})^{-1}.  Kept as a
// verification oracle for bar-invariance of the canonical basis.
HeckeElt bar_involution(const HeckeElt& h);

// Canonical basis element Hbar_x (memoized).
const HeckeElt& kl_basis(const Elt& x);

// h_{y,x} and the mu-coefficient (coefficient of v in h_{y,x}).
LPoly kl_poly(const Elt& y, const Elt& x);
long mu(const Elt& y, const Elt& x);

// N_x = sum_{y<=x} v^{l(x)-l(y)} H_y.
HeckeElt n_elt(const Elt& x);

// Evaluation of all standard coefficients at v=1, summed; a ring map to Z.
mpz_class content(const HeckeElt& h);

// Change of basis by triangular elimination: repeatedly strip a
// maximal-length support element (ties broken canonical-word
// lexicographically).  from_kl expands back; the two are inverse.
KLCombination to_kl(const HeckeElt& h);
HeckeElt from_kl(const KLCombination& k);
bool is_perverse(const KLCombination& k);
// True when h1 - h2 is a Z-combination of canonical basis elements.
bool equal_up_to_perverse(const HeckeElt& h1, const HeckeElt& h2);

// Bilinear pairing with (H_x,H_y) = delta_{x,y}.
LPoly pairing(const HeckeElt& a, const HeckeElt& b);

// Graded rank of Hom(B_x,B_y) as a free module: sum_z h_{z,x} h_{z,y}.
LPoly hom_rank(const Elt& x, const Elt& y);
// Graded rank of Hom_{not<y}(., B_y) for an object of character ch.
LPoly hom_rank_quotient(const HeckeElt& ch, const Elt& y);

}  // namespace kla2
