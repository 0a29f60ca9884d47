#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kla2/io.hpp"
#include "kla2/laurent.hpp"

using namespace kla2;

namespace {
LPoly rand_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 5), exp(-6, 6), coef(-4, 4);
  LPoly p;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) p += LPoly::monomial(coef(rng), exp(rng));
  return p;
}
}  // namespace

TEST_CASE("arithmetic basics") {
  LPoly v = LPoly::v();
  CHECK((v + v.bar()) * v == LPoly::v(2) + LPoly::constant(1));
  CHECK((v + (-v)).is_zero());
  CHECK(LPoly::monomial(1, 2) * LPoly::monomial(3, -2) == LPoly::constant(3));
}

TEST_CASE("ring laws on random triples") {
  std::mt19937 rng(11);
  for (int t = 0; t < 300; ++t) {
    LPoly a = rand_poly(rng), b = rand_poly(rng), c = rand_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == LPoly());
  }
}

TEST_CASE("bar involution is a ring automorphism") {
  CHECK(LPoly::v(1).bar() == LPoly::v(-1));
  CHECK((LPoly::v(2) + LPoly::constant(1)).bar() == LPoly::v(-2) + LPoly::constant(1));
  std::mt19937 rng(12);
  for (int t = 0; t < 200; ++t) {
    LPoly a = rand_poly(rng), b = rand_poly(rng);
    CHECK(a.bar().bar() == a);
    CHECK((a * b).bar() == a.bar() * b.bar());
    CHECK((a + b).bar() == a.bar() + b.bar());
  }
}

TEST_CASE("eval_at_one is a ring homomorphism") {
  CHECK((LPoly::v(2) + LPoly::constant(1)).eval_at_one() == 2);
  std::mt19937 rng(13);
  for (int t = 0; t < 200; ++t) {
    LPoly a = rand_poly(rng), b = rand_poly(rng);
    CHECK((a * b).eval_at_one() == a.eval_at_one() * b.eval_at_one());
    CHECK((a + b).eval_at_one() == a.eval_at_one() + b.eval_at_one());
  }
}

TEST_CASE("coefficients and degrees") {
  LPoly p = LPoly::v(3) + LPoly::v(1);
  CHECK(p.coeff(1) == 1);
  CHECK(p.coeff(2) == 0);
  REQUIRE(p.min_deg().has_value());
  CHECK(*p.min_deg() == 1);
  CHECK(*p.max_deg() == 3);
  CHECK_FALSE(LPoly().min_deg().has_value());
  CHECK_FALSE(LPoly().max_deg().has_value());
  CHECK_FALSE((LPoly::v() - LPoly::constant(1)).is_nonneg());
  CHECK(p.is_nonneg());
}

TEST_CASE("textual form round-trips") {
  LPoly p = LPoly::v(-2) + LPoly::constant(3) + LPoly::v(2);
  CHECK(p.to_string() == "v^-2 + 3 + v^2");
  CHECK(LPoly::parse("v^-2 + 3 + v^2") == p);
  CHECK(LPoly::parse("-2*v + 1") == LPoly::monomial(-2, 1) + LPoly::constant(1));
  CHECK(LPoly::parse("0") == LPoly());
  CHECK_THROWS_AS(LPoly::parse("v^"), std::invalid_argument);
  CHECK_THROWS_AS(LPoly::parse(""), std::invalid_argument);
  std::mt19937 rng(14);
  for (int t = 0; t < 100; ++t) {
    LPoly a = rand_poly(rng);
    CHECK(LPoly::parse(a.to_string()) == a);
  }
}

TEST_CASE("json form") {
  LPoly p = LPoly::v(-2) + LPoly::constant(3) + LPoly::v(2);
  nlohmann::json j = lpoly_to_json(p);
  CHECK(j["-2"] == 1);
  CHECK(j["0"] == 3);
  CHECK(j["2"] == 1);
  CHECK(lpoly_from_json(j) == p);
  // big coefficients survive the string fallback
  LPoly big = LPoly::monomial(mpz_class("123456789012345678901234567890"), 1);
  CHECK(lpoly_from_json(lpoly_to_json(big)) == big);
}
