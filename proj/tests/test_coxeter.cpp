#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "kla2/coxeter.hpp"
#include "kla2/klformulas.hpp"

using namespace kla2;

namespace {
Word rand_word(std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), letter(1, 3);
  Word w;
  int L = len(rng);
  for (int i = 0; i < L; ++i) w.push_back(Gen(letter(rng)));
  return w;
}
}  // namespace

TEST_CASE("gen label resolution") {
  CHECK(Gen::from_label(0) == Gen(3));
  CHECK(Gen::from_label(4) == Gen(1));
  CHECK(Gen::from_label(-2) == Gen(1));
  CHECK(Gen::from_label(6) == Gen(3));
}

TEST_CASE("identity and generator windows") {
  CHECK(identity().window() == std::array<long, 3>{1, 2, 3});
  CHECK(length(identity()) == 0);
  CHECK(gen_elt(Gen(1)).window() == std::array<long, 3>{2, 1, 3});
  CHECK(gen_elt(Gen(2)).window() == std::array<long, 3>{1, 3, 2});
  CHECK(gen_elt(Gen(3)).window() == std::array<long, 3>{0, 2, 4});
  CHECK(length(gen_elt(Gen(3))) == 1);
}

TEST_CASE("window validation") {
  CHECK(Elt::from_window(0, 2, 4) == gen_elt(Gen(3)));
  CHECK_THROWS_AS(Elt::from_window(1, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(Elt::from_window(0, 3, 3), std::invalid_argument);
}

TEST_CASE("gen multiplication is involutive and two-sided") {
  std::mt19937 rng(1);
  for (int t = 0; t < 50; ++t) {
    Elt x = from_word(rand_word(rng, 12));
    for (int i = 1; i <= 3; ++i) {
      Gen s(i);
      CHECK(mul_right_gen(mul_right_gen(x, s), s) == x);
      CHECK(mul_left_gen(s, mul_left_gen(s, x)) == x);
      for (int j = 1; j <= 3; ++j)
        CHECK(mul_right_gen(mul_left_gen(s, x), Gen(j)) ==
              mul_left_gen(s, mul_right_gen(x, Gen(j))));
    }
  }
}

TEST_CASE("mul agrees with word concatenation") {
  CHECK(mul(from_word(word_from_digits("12")), from_word(word_from_digits("1"))) ==
        from_word(word_from_digits("121")));
  std::mt19937 rng(2);
  for (int t = 0; t < 100; ++t) {
    Word u = rand_word(rng, 8), v = rand_word(rng, 8);
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    CHECK(mul(from_word(u), from_word(v)) == from_word(uv));
  }
}

TEST_CASE("inverse") {
  std::mt19937 rng(3);
  for (int t = 0; t < 100; ++t) {
    Elt x = from_word(rand_word(rng, 10));
    CHECK(mul(x, inverse(x)) == identity());
    CHECK(length(inverse(x)) == length(x));
  }
  CHECK(canonical_digits(inverse(from_word(word_from_digits("123")))) == "321");
}

TEST_CASE("descent windows match length drops") {
  std::mt19937 rng(4);
  for (int t = 0; t < 200; ++t) {
    Elt x = from_word(rand_word(rng, 12));
    std::set<int> rd, ld;
    for (int i = 1; i <= 3; ++i) {
      if (length(mul_right_gen(x, Gen(i))) < length(x)) rd.insert(i);
      if (length(mul_left_gen(Gen(i), x)) < length(x)) ld.insert(i);
    }
    std::set<int> rds, lds;
    for (Gen s : right_descents(x)) rds.insert(s.index());
    for (Gen s : left_descents(x)) lds.insert(s.index());
    CHECK(rd == rds);
    CHECK(ld == lds);
  }
  CHECK(right_descents(identity()).empty());
  auto rd12 = right_descents(from_word(word_from_digits("12")));
  REQUIRE(rd12.size() == 1);
  CHECK(rd12[0] == Gen(2));
}

TEST_CASE("canonical word is reduced, minimal and round-trips") {
  std::mt19937 rng(5);
  for (int t = 0; t < 200; ++t) {
    Elt x = from_word(rand_word(rng, 12));
    Word cw = to_canonical_word(x);
    CHECK(is_reduced(cw));
    CHECK(from_word(cw) == x);
    CHECK(static_cast<long>(cw.size()) == length(x));
  }
}

TEST_CASE("is_reduced") {
  CHECK(is_reduced(word_from_digits("1231")));
  CHECK_FALSE(is_reduced(word_from_digits("11")));
  CHECK_FALSE(is_reduced(word_from_digits("1212")));
  std::mt19937 rng(6);
  for (int t = 0; t < 200; ++t) {
    Word w = rand_word(rng, 10);
    CHECK(length(from_word(w)) <= static_cast<long>(w.size()));
    CHECK(is_reduced(w) == (length(from_word(w)) == static_cast<long>(w.size())));
  }
}

TEST_CASE("braid triplet criterion equals is_reduced, exhaustive to length 14") {
  CHECK(braid_reduced_criterion(word_from_digits("123123")));
  CHECK(braid_reduced_criterion(word_from_digits("1213")));
  CHECK_FALSE(braid_reduced_criterion(word_from_digits("1212")));
  CHECK_THROWS_AS(braid_reduced_criterion(word_from_digits("11")), std::invalid_argument);

  // words without adjacent equal letters: first letter free, then 2 choices
  for (long L = 2; L <= 14; ++L) {
    long total = 3;
    for (long i = 1; i < L; ++i) total *= 2;
    for (long code = 0; code < total; ++code) {
      long c = code;
      Word w{Gen(static_cast<int>(c % 3) + 1)};
      c /= 3;
      while (static_cast<long>(w.size()) < L) {
        int prev = w.back().index();
        int pick = static_cast<int>(c % 2);
        c /= 2;
        int next = (prev + pick) % 3 + 1;  // one of the two letters != prev
        w.push_back(Gen(next));
      }
      CHECK(braid_reduced_criterion(w) == is_reduced(w));
    }
  }
}

TEST_CASE("bruhat order basics") {
  Elt e = identity();
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) CHECK(bruhat_leq(e, from_word(rand_word(rng, 12))));
  CHECK(bruhat_leq(x_elt(1), x_elt(4)));
  CHECK_FALSE(bruhat_leq(from_word(word_from_digits("32")), x_elt(4)));
}

TEST_CASE("lower interval sizes") {
  CHECK(lower_interval(identity()).size() == 1);
  CHECK(lower_interval(x_elt(2)).size() == 4);
  CHECK(lower_interval(theta_elt(0, 0)).size() == 6);
  CHECK(lower_interval(x_elt(3)).size() == 8);
}

TEST_CASE("bruhat lifting agrees with subword DP, exhaustive length <= 9") {
  std::vector<Elt> B = ball(9);
  for (const Elt& x : B) {
    std::vector<Elt> iv = lower_interval(x);
    std::set<Elt> in_iv(iv.begin(), iv.end());
    for (const Elt& y : B) CHECK(bruhat_leq(y, x) == (in_iv.count(y) > 0));
  }
}

TEST_CASE("coatoms") {
  auto c1 = coatoms(gen_elt(Gen(1)));
  REQUIRE(c1.size() == 1);
  CHECK(c1[0] == identity());
  CHECK(coatoms(x_elt(6)).size() == 4);
  CHECK(coatoms(x_elt(14)).size() == 4);
  CHECK(coatoms(theta_elt(2, 0)).size() == 3);
  CHECK(coatoms(theta_elt(1, 1)).size() == 4);
  for (const Elt& x : ball(14)) CHECK(coatoms(x).size() <= 6);
}

TEST_CASE("third-generator ascent after mixed tail") {
  // a reduced word ending st (s != t) forces the third generator to ascend
  auto probe = [](const Word& w) {
    if (w.size() < 2 || !is_reduced(w)) return;
    Gen s = w[w.size() - 2], t = w[w.size() - 1];
    if (s == t) return;
    int other = 6 - s.index() - t.index();
    Elt x = from_word(w);
    CHECK(length(mul_right_gen(x, Gen(other))) == length(x) + 1);
  };
  for (const Elt& x : ball(10)) probe(to_canonical_word(x));
  std::mt19937 rng(9);
  for (int trial = 0; trial < 500; ++trial) probe(rand_word(rng, 13));
}

TEST_CASE("set product") {
  std::vector<Elt> B{identity(), gen_elt(Gen(1))};
  CHECK(set_product({identity()}, B) == B);
  CHECK(set_product(B, {identity()}) == B);
  // interval of theta(1,1) factors through the interval of theta(0,0)
  Elt suffix = mul(inverse(theta_elt(0, 0)), theta_elt(1, 1));
  CHECK(length(suffix) == 4);
  CHECK(set_product(lower_interval(theta_elt(0, 0)), lower_interval(suffix)) ==
        lower_interval(theta_elt(1, 1)));
}

TEST_CASE("color action") {
  Perm3 id;
  Perm3 swap12(2, 1, 3);
  CHECK(color_perm(id, x_elt(5)) == x_elt(5));
  CHECK(color_perm(swap12, gen_elt(Gen(1))) == gen_elt(Gen(2)));
  std::mt19937 rng(8);
  for (int t = 0; t < 100; ++t) {
    Elt x = from_word(rand_word(rng, 10));
    Elt y = from_word(rand_word(rng, 6));
    const Perm3& sg = Perm3::all()[rng() % 6];
    CHECK(length(color_perm(sg, x)) == length(x));
    CHECK(color_perm(sg, mul(x, y)) == mul(color_perm(sg, x), color_perm(sg, y)));
    CHECK(bruhat_leq(color_perm(sg, x), color_perm(sg, mul(x, y))) == bruhat_leq(x, mul(x, y)));
  }
  CHECK_THROWS_AS(Perm3(1, 1, 2), std::invalid_argument);
}

TEST_CASE("families") {
  CHECK(x_elt(0) == identity());
  CHECK(x_elt(5) == from_word(word_from_digits("12312")));
  CHECK(theta_elt(1, 1) == from_word(word_from_digits("1231321")));
  CHECK(length(theta_elt(1, 1)) == 7);
  CHECK(length(theta_elt(3, 2)) == 2 * 3 + 2 * 2 + 3);
  CHECK(theta_s(1, 1) == Gen(3));
  CHECK(theta_s(2, 1) == Gen(2));
  CHECK(theta_r(0, 0) == Gen(3));
  for (long m = 0; m <= 4; ++m)
    for (long n = 0; m + n <= 4; ++n) {
      CHECK(is_reduced(theta_word(m, n)));
      auto rd = right_descents(theta_elt(m, n));
      CHECK(rd.size() == 2);
      for (Gen s : rd) CHECK(s != theta_s(m, n));
      auto ld = left_descents(theta_elt(m, n));
      CHECK(ld.size() == 2);
      for (Gen s : ld) CHECK(s != theta_r(m, n));
    }
  CHECK_THROWS_AS(x_elt(-1), std::invalid_argument);
  CHECK_THROWS_AS(z_wall(4), std::invalid_argument);
  CHECK_THROWS_AS(y_wall(3), std::invalid_argument);
}

TEST_CASE("y_wall: both stated expressions agree") {
  for (long n = 6; n <= 14; ++n) {
    Word alt;
    for (long i = 1; i <= n - 4; ++i) alt.push_back(Gen::from_label(i));
    alt.push_back(Gen::from_label(n - 2));
    alt.push_back(Gen::from_label(n - 3));
    alt.push_back(Gen::from_label(n - 2));
    CHECK(from_word(alt) == y_wall(n));
    CHECK(length(y_wall(n)) == n - 1);
  }
}

TEST_CASE("z variants differ and are pinned") {
  CHECK(canonical_digits(z_wall(6)) == "131");
  CHECK(canonical_digits(z_prime_wall(6)) == "31");
  CHECK(canonical_digits(z_prime_wall_alt(6)) == "13");
  CHECK(z_prime_wall(6) != z_prime_wall_alt(6));
  for (long n = 6; n <= 12; n += 2) {
    CHECK(length(z_wall(n)) == n - 3);
    CHECK(length(z_prime_wall(n)) == n - 4);
    CHECK(length(z_prime_wall_alt(n)) == n - 4);
  }
}

TEST_CASE("classify") {
  FamilyTag t0 = classify(identity());
  CHECK(t0.kind == FamilyTag::Kind::Identity);
  FamilyTag t1 = classify(from_word(word_from_digits("12312")));
  CHECK(t1.kind == FamilyTag::Kind::Wall);
  CHECK(t1.n == 5);
  FamilyTag t2 = classify(from_word(word_from_digits("1231321")));
  CHECK(t2.kind == FamilyTag::Kind::Beyond);
  CHECK(t2.m == 1);
  CHECK(t2.n == 1);
  CHECK_FALSE(t2.left_r);
  CHECK_FALSE(t2.right_s);
  // color images classify to the same family
  for (const Perm3& sg : Perm3::all()) {
    FamilyTag t = classify(color_perm(sg, theta_elt(2, 1)));
    CHECK(t.kind == FamilyTag::Kind::Beyond);
    CHECK(t.m == 2);
    CHECK(t.n == 1);
  }
  // theta(0,1) is a color image of theta(1,0): canonical tag has m >= n
  FamilyTag t3 = classify(theta_elt(0, 1));
  CHECK(t3.m == 1);
  CHECK(t3.n == 0);
  for (const Elt& x : ball(9)) {
    FamilyTag t = classify(x);
    CHECK(color_perm(t.sigma, t.representative()) == x);
  }
}
