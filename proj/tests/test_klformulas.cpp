#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kla2/klformulas.hpp"

using namespace kla2;

TEST_CASE("closed wall formula matches the recursion oracle") {
  CHECK(kl_wall_closed(2) == n_elt(x_elt(2)));
  CHECK(kl_wall_closed(5) == n_elt(x_elt(5)) + scale(LPoly::v(1), n_elt(x_elt(2))));
  for (long n = 0; n <= 12; ++n) CHECK(kl_wall_closed(n) == kl_basis(x_elt(n)));
}

TEST_CASE("wall formula needs the z_n * s_n variant, not the drop-last one") {
  for (long n : {6L, 8L, 10L}) {
    HeckeElt wrong = n_elt(x_elt(n)) + scale(LPoly::v(1), n_elt(x_elt(n - 3)));
    wrong.add_term(z_wall(n), LPoly::v(1));
    wrong.add_term(z_prime_wall_alt(n), LPoly::v(2));
    CHECK(wrong != kl_basis(x_elt(n)));
    CHECK(kl_wall_closed(n) == kl_basis(x_elt(n)));
  }
}

TEST_CASE("closed beyond formula") {
  CHECK(kl_beyond_closed(3, 0) == n_elt(theta_elt(3, 0)));
  for (long m = 0; m <= 4; ++m) CHECK(kl_basis(theta_elt(m, 0)) == n_elt(theta_elt(m, 0)));
  CHECK(kl_beyond_closed(1, 1) ==
        n_elt(theta_elt(1, 1)) + scale(LPoly::v(2), n_elt(theta_elt(0, 0))));
  for (long m = 0; m <= 3; ++m)
    for (long n = 0; m + n <= 3; ++n)
      CHECK(kl_beyond_closed(m, n) == kl_basis(theta_elt(m, n)));
  // variants against the oracle for a sample of flag pairs
  CHECK(kl_beyond_variant(1, 1, true, false) == kl_basis(theta_variant(1, 1, true, false)));
  CHECK(kl_beyond_variant(1, 0, true, true) == kl_basis(theta_variant(1, 0, true, true)));
  CHECK(kl_beyond_variant(2, 1, false, true) == kl_basis(theta_variant(2, 1, false, true)));
}

TEST_CASE("variant products are single canonical terms") {
  for (long m = 0; m <= 2; ++m)
    for (long n = 0; m + n <= 2; ++n)
      for (bool lr : {false, true})
        for (bool rs : {false, true}) {
          if (!lr && !rs) continue;
          KLCombination k = to_kl(kl_beyond_variant(m, n, lr, rs));
          CHECK(k.terms().size() == 1);
          CHECK(k.coeff_of(theta_variant(m, n, lr, rs)) == LPoly::constant(1));
        }
}

TEST_CASE("counting closed forms") {
  CHECK(count_wall(0) == 1);
  CHECK(count_wall(1) == 2);
  CHECK(count_wall(4) == 14);
  CHECK(count_beyond(0, 0) == 6);
  CHECK(count_beyond(1, 0) == 18);
  CHECK(content_closed(0, 0) == 6);
  CHECK(content_closed(1, 1) == 48);
  VerifyReport r = verify_counting(12, 4);
  CHECK(r.pass);
  // content of the closed form equals the closed content and the N-sum
  for (long m = 0; m <= 5; ++m)
    for (long n = 0; m + n <= 5; ++n) {
      CHECK(content(kl_beyond_closed(m, n)) == content_closed(m, n));
      long nsum = 0;
      for (long i = 0; i <= std::min(m, n); ++i) nsum += count_beyond(m - i, n - i);
      CHECK(content_closed(m, n) == nsum);
    }
}

TEST_CASE("wall product decomposition") {
  CHECK(verify_prop_wall_B(5).pass);
  CHECK(verify_prop_wall_B(6).pass);
  CHECK(verify_prop_wall_B(7).pass);
  CHECK(verify_prop_wall_B(8).pass);
  // mutation: dropping the z-term at even n must fail
  HeckeElt prod = mul_kl_gen_right(kl_basis(x_elt(6)), Gen::from_label(7));
  std::map<Elt, LPoly> no_z;
  no_z.emplace(x_elt(7), LPoly::constant(1));
  no_z.emplace(y_wall(6), LPoly::constant(1));
  CHECK_FALSE(to_kl(prod) == KLCombination(std::move(no_z)));
}

TEST_CASE("theta product decomposition") {
  CHECK(verify_prop_out(0, 0).pass);
  CHECK(verify_prop_out(1, 1).pass);
  CHECK(verify_prop_out(2, 1).pass);
  CHECK(verify_prop_out(0, 2).pass);
  // neglect rule: at (0,0) the C product has exactly two canonical terms
  Gen s = theta_s(0, 0), t = Gen::from_label(-1);
  HeckeElt prod = mul_kl_gen_right(mul_kl_gen_right(kl_basis(theta_elt(0, 0)), s), t);
  KLCombination k = to_kl(prod);
  CHECK(k.terms().size() == 2);
  CHECK(k.coeff_of(theta_elt(0, 1)) == LPoly::constant(1));
  CHECK(k.coeff_of(theta_elt(0, 0)) == LPoly::constant(1));
}

TEST_CASE("up-to-perverse products") {
  CHECK(verify_lemma_notperverse(6).pass);
  CHECK(verify_lemma_notperverse(7).pass);
  // mutation: swapping the parity branches must fail
  long n = 6;
  HeckeElt h = kl_basis(x_elt(n));
  h = mul_kl_gen_right(h, Gen::from_label(n + 2));
  h = mul_kl_gen_right(h, Gen::from_label(n + 1));
  h = mul_kl_gen_right(h, Gen::from_label(n + 2));
  HeckeElt swapped = scale(v_plus_vinv(), kl_basis(y_wall(n + 1))) +
                     scale(v_plus_vinv(), kl_basis(z_wall(n + 1)));
  CHECK_FALSE(equal_up_to_perverse(h, swapped));
}

TEST_CASE("support shape on the wall") {
  CHECK(verify_support_shape_wall(4).pass);
  for (long n = 1; n <= 10; ++n) CHECK(verify_support_shape_wall(n).pass);
  CHECK(kl_poly(x_elt(4), x_elt(4)) == LPoly::constant(1));
}

TEST_CASE("mu support on the wall") {
  for (long n = 5; n <= 10; ++n) CHECK(verify_mu_support_wall(n).pass);
  // n = 8: support is x_5, the 4 coatoms, and z_8
  const HeckeElt& k = kl_basis(x_elt(8));
  long nonzero = 0;
  for (const auto& [y, p] : k.terms())
    if (p.coeff(1) != 0) ++nonzero;
  CHECK(nonzero == 6);
  CHECK(k.coeff_of(z_wall(8)).coeff(1) == 1);
}

TEST_CASE("hexagon set identity") {
  CHECK(verify_hexagon_step(0, 0).pass);
  CHECK(verify_hexagon_step(1, 0).pass);
  CHECK(verify_hexagon_step(0, 1).pass);
  CHECK(verify_hexagon_step(1, 1).pass);
}

TEST_CASE("monotonicity of kl polynomials") {
  CHECK(verify_monotonicity(8).pass);
}

TEST_CASE("positivity against the N-floor") {
  // Hbar_w dominates N_w plus the monomial-scaled N_x floors read off h_{x,w}
  for (long n = 4; n <= 10; ++n) {
    HeckeElt diff = kl_basis(x_elt(n)) - n_elt(x_elt(n));
    for (const auto& [y, p] : diff.terms()) CHECK(p.is_nonneg());
  }
}

TEST_CASE("bruhat agreement and classification suites") {
  CHECK(verify_bruhat_agreement(8).pass);
  CHECK(verify_classification(9).pass);
}

TEST_CASE("checker rejects corrupted input") {
  // soundness probe: a wrong closed form must be detected
  HeckeElt bad = kl_wall_closed(7) + scale(LPoly::v(3), unit(identity()));
  CHECK(bad != kl_basis(x_elt(7)));
}
