// klformulas.hpp — closed-form canonical-basis and counting formulas, and
// the suites that verify them against the brute-force recursion.

#pragma once

#include "kla2/hecke.hpp"
#include "kla2/verify.hpp"

namespace kla2 {

// Canonical basis on the wall:
//   n <= 3          N_{x_n}
//   n = 4           N_{x_4} + v N_{x_1}
//   n >= 5, odd     N_{x_n} + v N_{x_{n-3}}
//   n >= 5, even    N_{x_n} + v N_{x_{n-3}} + v H_{z_n} + v^2 H_{z'_n}
HeckeElt kl_wall_closed(long n);

// Canonical basis beyond the wall: sum_{i<=min(m,n)} v^{2i} N_{theta(m-i,n-i)};
// the r/s variants are obtained by canonical-generator multiplication.
HeckeElt kl_beyond_closed(long m, long n);
HeckeElt kl_beyond_variant(long m, long n, bool left_r, bool right_s);

// Closed interval counts and the closed content formula.
long count_wall(long n);                 // |<= x_n|
long count_beyond(long m, long n);       // |<= theta(m,n)|
long content_closed(long m, long n);     // content of the canonical basis element

// Decomposition of Hbar_{x_n} Hbar_{s_{n+1}} into canonical terms
// (x_{n+1} + y_n, plus z_n exactly when n is even); n >= 5.
VerifyReport verify_prop_wall_B(long n);

// A: closed form equals the recursion oracle.  B: the three r/s products
// are single canonical terms.  C: the four-term product decomposition with
// negative-index terms dropped.
VerifyReport verify_prop_out(long m, long n);

// Up-to-perverse identity for Hbar_{x_n} Hbar_{s_{n+2}} Hbar_{s_{n+1}} Hbar_{s_{n+2}};
// the z-term appears exactly for odd n.  n >= 5.
VerifyReport verify_lemma_notperverse(long n);

// support of h_{y,x_n} lies in {v^d, v^{d-2}}, d the length gap.
VerifyReport verify_support_shape_wall(long n);

// (<= theta(m,n)) * (<= suffix) == (<= theta(m+1,n+1)) with the length-4
// suffix computed as theta(m,n)^{-1} theta(m+1,n+1).
VerifyReport verify_hexagon_step(long m, long n);

// closed counts == |lower_interval| on the wall up to x_limit and beyond
// the wall for m+n <= beyond_limit.
VerifyReport verify_counting(long wall_limit, long beyond_limit);

// mu(., x_n) is supported exactly on the coatoms, x_{n-3}, and z_n (n even).
VerifyReport verify_mu_support_wall(long n);

// h_{x,w} - v^{l(y)-l(x)} h_{y,w} has nonnegative coefficients for all
// x <= y <= w with l(w) <= max_len.
VerifyReport verify_monotonicity(long max_len);

// kl_wall_closed(n) == kl_basis(x_n) for n <= max_n.
VerifyReport verify_thm1_wall(long max_n);

// kl_beyond_variant == kl_basis on every (m,n,flags) with element length
// <= max_len, all four flag pairs.
VerifyReport verify_thm1_beyond(long max_len);

// Both Bruhat routes agree: lifting recursion vs interval membership,
// exhaustively on the ball of radius max_len.
VerifyReport verify_bruhat_agreement(long max_len);

// Every element of length <= max_len matches exactly one canonical family.
VerifyReport verify_classification(long max_len);

// All elements of length <= L, sorted by (length, canonical word).
std::vector<Elt> ball(long max_len);

}  // namespace kla2
