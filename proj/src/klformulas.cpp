#include "kla2/klformulas.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace kla2 {

namespace {

std::string mismatch(const HeckeElt& expected, const HeckeElt& actual) {
  std::ostringstream os;
  os << "expected " << expected.to_string() << " but got " << actual.to_string();
  return os.str();
}

std::string fmt_params(std::initializer_list<long> xs) {
  std::string s;
  for (long x : xs) {
    if (!s.empty()) s += ",";
    s += std::to_string(x);
  }
  return s;
}

}  // namespace

HeckeElt kl_wall_closed(long n) {
  if (n < 0) throw std::invalid_argument("kl_wall_closed: negative index");
  if (n <= 3) return n_elt(x_elt(n));
  if (n == 4) return n_elt(x_elt(4)) + scale(LPoly::v(1), n_elt(x_elt(1)));
  HeckeElt r = n_elt(x_elt(n)) + scale(LPoly::v(1), n_elt(x_elt(n - 3)));
  if (n % 2 == 0) {
    r.add_term(z_wall(n), LPoly::v(1));
    r.add_term(z_prime_wall(n), LPoly::v(2));
  }
  return r;
}

HeckeElt kl_beyond_closed(long m, long n) {
  HeckeElt r;
  for (long i = 0; i <= std::min(m, n); ++i)
    r += scale(LPoly::v(static_cast<int>(2 * i)), n_elt(theta_elt(m - i, n - i)));
  return r;
}

HeckeElt kl_beyond_variant(long m, long n, bool left_r, bool right_s) {
  HeckeElt h = kl_beyond_closed(m, n);
  if (left_r) h = mul_kl_gen_left(theta_r(m, n), h);
  if (right_s) h = mul_kl_gen_right(h, theta_s(m, n));
  return h;
}

long count_wall(long n) {
  if (n < 0) throw std::invalid_argument("count_wall: negative index");
  if (n == 0) return 1;  // quadratic formulas start at word length 2
  if (n == 1) return 2;
  long k = n / 2;
  return (n % 2 == 0) ? 3 * k * k + k : 3 * k * k + 5 * k;
}

long count_beyond(long m, long n) {
  if (m < 0 || n < 0) throw std::invalid_argument("count_beyond: negative index");
  return 3 * m * m + 3 * n * n + 12 * m * n + 9 * m + 9 * n + 6;
}

long content_closed(long m, long n) {
  if (m < 0 || n < 0) throw std::invalid_argument("content_closed: negative index");
  return 3 * m * n * (m + n) + 3 * (m + n) * (m + n) + 6 * m * n + 9 * (m + n) + 6;
}

VerifyReport verify_prop_wall_B(long n) {
  const std::string suite = "prop-wall-b";
  if (n < 5) return VerifyReport::fail(suite, std::to_string(n), "requires n >= 5");
  HeckeElt prod = mul_kl_gen_right(kl_basis(x_elt(n)), Gen::from_label(n + 1));
  std::map<Elt, LPoly> expect;
  expect.emplace(x_elt(n + 1), LPoly::constant(1));
  expect.emplace(y_wall(n), LPoly::constant(1));
  if (n % 2 == 0) expect.emplace(z_wall(n), LPoly::constant(1));
  if (to_kl(prod) == KLCombination(std::move(expect)))
    return VerifyReport::ok(suite, std::to_string(n));
  return VerifyReport::fail(suite, std::to_string(n),
                            "canonical decomposition differs from x+y(+z) pattern");
}

VerifyReport verify_prop_out(long m, long n) {
  const std::string suite = "prop-out";
  const std::string par = fmt_params({m, n});
  const HeckeElt& th = kl_basis(theta_elt(m, n));
  if (kl_beyond_closed(m, n) != th)
    return VerifyReport::fail(suite, par, "A: " + mismatch(kl_beyond_closed(m, n), th));

  Gen r = theta_r(m, n), s = theta_s(m, n);
  struct Case { const char* name; HeckeElt prod; Elt target; };
  Case cases[] = {
      {"B[ts]", mul_kl_gen_right(th, s), theta_variant(m, n, false, true)},
      {"B[rt]", mul_kl_gen_left(r, th), theta_variant(m, n, true, false)},
      {"B[rts]", mul_kl_gen_right(mul_kl_gen_left(r, th), s), theta_variant(m, n, true, true)},
  };
  for (const Case& c : cases) {
    std::map<Elt, LPoly> one;
    one.emplace(c.target, LPoly::constant(1));
    if (!(to_kl(c.prod) == KLCombination(std::move(one))))
      return VerifyReport::fail(suite, par, std::string(c.name) + ": product is not a single canonical term");
  }

  Gen t = Gen::from_label(2 * m - 2 * n - 1);
  HeckeElt prod = mul_kl_gen_right(mul_kl_gen_right(th, s), t);
  std::map<Elt, LPoly> expect;
  expect.emplace(theta_elt(m, n + 1), LPoly::constant(1));
  expect.emplace(theta_elt(m, n), LPoly::constant(1));
  if (n >= 1) expect.emplace(theta_elt(m + 1, n - 1), LPoly::constant(1));
  if (m >= 1) expect.emplace(theta_elt(m - 1, n), LPoly::constant(1));
  if (!(to_kl(prod) == KLCombination(std::move(expect))))
    return VerifyReport::fail(suite, par, "C: four-term decomposition mismatch");
  return VerifyReport::ok(suite, par);
}

VerifyReport verify_lemma_notperverse(long n) {
  const std::string suite = "notperverse";
  if (n < 5) return VerifyReport::fail(suite, std::to_string(n), "requires n >= 5");
  HeckeElt h = kl_basis(x_elt(n));
  h = mul_kl_gen_right(h, Gen::from_label(n + 2));
  h = mul_kl_gen_right(h, Gen::from_label(n + 1));
  h = mul_kl_gen_right(h, Gen::from_label(n + 2));
  HeckeElt rhs = scale(v_plus_vinv(), kl_basis(y_wall(n + 1)));
  if (n % 2 == 1) rhs += scale(v_plus_vinv(), kl_basis(z_wall(n + 1)));
  if (equal_up_to_perverse(h, rhs)) return VerifyReport::ok(suite, std::to_string(n));
  return VerifyReport::fail(suite, std::to_string(n), "identity fails up to perverse elements");
}

VerifyReport verify_support_shape_wall(long n) {
  const std::string suite = "support-shape";
  const HeckeElt& k = kl_basis(x_elt(n));
  for (const auto& [y, p] : k.terms()) {
    int d = static_cast<int>(n - length(y));
    for (const auto& [e, c] : p.terms()) {
      if (e != d && e != d - 2)
        return VerifyReport::fail(
            suite, std::to_string(n),
            "h_{" + canonical_digits(y) + ",x_n} = " + p.to_string() +
                " has support outside {v^" + std::to_string(d) + ", v^" + std::to_string(d - 2) + "}");
    }
  }
  return VerifyReport::ok(suite, std::to_string(n));
}

VerifyReport verify_hexagon_step(long m, long n) {
  const std::string suite = "hexagon";
  const std::string par = fmt_params({m, n});
  Elt suffix = mul(inverse(theta_elt(m, n)), theta_elt(m + 1, n + 1));
  if (length(suffix) != 4)
    return VerifyReport::fail(suite, par, "suffix is not of length 4");
  std::vector<Elt> prod =
      set_product(lower_interval(theta_elt(m, n)), lower_interval(suffix));
  if (prod == lower_interval(theta_elt(m + 1, n + 1))) return VerifyReport::ok(suite, par);
  return VerifyReport::fail(suite, par, "product set differs from the larger interval");
}

VerifyReport verify_counting(long wall_limit, long beyond_limit) {
  const std::string suite = "counting";
  const std::string par = fmt_params({wall_limit, beyond_limit});
  for (long n = 0; n <= wall_limit; ++n) {
    long got = static_cast<long>(lower_interval(x_elt(n)).size());
    if (got != count_wall(n))
      return VerifyReport::fail(suite, par,
                                "wall n=" + std::to_string(n) + ": interval " + std::to_string(got) +
                                    " != closed " + std::to_string(count_wall(n)));
  }
  for (long m = 0; m <= beyond_limit; ++m)
    for (long n = 0; m + n <= beyond_limit; ++n) {
      long got = static_cast<long>(lower_interval(theta_elt(m, n)).size());
      if (got != count_beyond(m, n))
        return VerifyReport::fail(suite, par,
                                  "beyond (" + fmt_params({m, n}) + "): interval " + std::to_string(got) +
                                      " != closed " + std::to_string(count_beyond(m, n)));
    }
  return VerifyReport::ok(suite, par);
}

VerifyReport verify_mu_support_wall(long n) {
  const std::string suite = "mu-support";
  if (n < 5) return VerifyReport::fail(suite, std::to_string(n), "requires n >= 5");
  const HeckeElt& k = kl_basis(x_elt(n));
  std::vector<Elt> support;
  for (const auto& [y, p] : k.terms())
    if (p.coeff(1) != 0) support.push_back(y);
  std::sort(support.begin(), support.end());
  std::vector<Elt> expect = coatoms(x_elt(n));
  expect.push_back(x_elt(n - 3));
  if (n % 2 == 0) expect.push_back(z_wall(n));
  std::sort(expect.begin(), expect.end());
  expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
  if (support == expect) return VerifyReport::ok(suite, std::to_string(n));
  return VerifyReport::fail(suite, std::to_string(n), "mu-support set differs from expected");
}

std::vector<Elt> ball(long max_len) {
  std::unordered_set<Elt, EltHash> seen{identity()};
  std::vector<Elt> frontier{identity()};
  for (long l = 0; l < max_len; ++l) {
    std::vector<Elt> next;
    for (const Elt& x : frontier)
      for (int i = 1; i <= 3; ++i) {
        Elt y = mul_right_gen(x, Gen(i));
        if (length(y) == l + 1 && seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  std::vector<Elt> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const Elt& a, const Elt& b) {
    long la = length(a), lb = length(b);
    if (la != lb) return la < lb;
    return canonical_digits(a) < canonical_digits(b);
  });
  return out;
}

VerifyReport verify_monotonicity(long max_len) {
  const std::string suite = "monotonicity";
  const std::string par = std::to_string(max_len);
  for (const Elt& w : ball(max_len)) {
    const HeckeElt& kw = kl_basis(w);
    std::vector<Elt> iv = lower_interval(w);
    for (const Elt& y : iv) {
      LPoly hy = kw.coeff_of(y);
      for (const Elt& x : iv) {
        if (length(x) > length(y) || !bruhat_leq(x, y)) continue;
        LPoly d = kw.coeff_of(x) - LPoly::v(static_cast<int>(length(y) - length(x))) * hy;
        if (!d.is_nonneg())
          return VerifyReport::fail(suite, par,
                                    "fails at x=" + canonical_digits(x) + " y=" + canonical_digits(y) +
                                        " w=" + canonical_digits(w) + ": " + d.to_string());
      }
    }
  }
  return VerifyReport::ok(suite, par);
}

VerifyReport verify_thm1_wall(long max_n) {
  const std::string suite = "thm1-wall";
  for (long n = 0; n <= max_n; ++n) {
    HeckeElt closed = kl_wall_closed(n);
    const HeckeElt& oracle = kl_basis(x_elt(n));
    if (closed != oracle)
      return VerifyReport::fail(suite, std::to_string(max_n),
                                "n=" + std::to_string(n) + ": " + mismatch(closed, oracle));
  }
  return VerifyReport::ok(suite, std::to_string(max_n));
}

VerifyReport verify_thm1_beyond(long max_len) {
  const std::string suite = "thm1-beyond";
  const std::string par = std::to_string(max_len);
  for (long m = 0; 2 * m + 3 <= max_len; ++m)
    for (long n = 0; 2 * m + 2 * n + 3 <= max_len; ++n)
      for (bool lr : {false, true})
        for (bool rs : {false, true}) {
          long L = 2 * m + 2 * n + 3 + (lr ? 1 : 0) + (rs ? 1 : 0);
          if (L > max_len) continue;
          Elt target = theta_variant(m, n, lr, rs);
          if (length(target) != L)
            return VerifyReport::fail(suite, par, "length drop at " + fmt_params({m, n}));
          HeckeElt closed = kl_beyond_variant(m, n, lr, rs);
          if (closed != kl_basis(target))
            return VerifyReport::fail(suite, par,
                                      "(" + fmt_params({m, n}) + ",r=" + std::to_string(lr) +
                                          ",s=" + std::to_string(rs) + "): closed form != oracle");
        }
  return VerifyReport::ok(suite, par);
}

VerifyReport verify_bruhat_agreement(long max_len) {
  const std::string suite = "bruhat-agreement";
  std::vector<Elt> B = ball(max_len);
  for (const Elt& x : B) {
    std::vector<Elt> iv = lower_interval(x);
    std::unordered_set<Elt, EltHash> in_iv(iv.begin(), iv.end());
    for (const Elt& y : B) {
      bool lift = bruhat_leq(y, x);
      bool subw = in_iv.count(y) > 0;
      if (lift != subw)
        return VerifyReport::fail(suite, std::to_string(max_len),
                                  "disagree at y=" + canonical_digits(y) + " x=" + canonical_digits(x));
    }
  }
  return VerifyReport::ok(suite, std::to_string(max_len));
}

VerifyReport verify_classification(long max_len) {
  const std::string suite = "classification";
  const std::string par = std::to_string(max_len);
  for (const Elt& x : ball(max_len)) {
    FamilyTag tag;
    try {
      tag = classify(x);
    } catch (const std::exception& e) {
      return VerifyReport::fail(suite, par, e.what());
    }
    if (color_perm(tag.sigma, tag.representative()) != x)
      return VerifyReport::fail(suite, par, "sigma does not map representative to element");
    // uniqueness: no other canonical tag matches
    long L = length(x);
    int matches = 0;
    auto matches_tag = [&x](const FamilyTag& t) {
      for (const Perm3& sg : Perm3::all())
        if (color_perm(sg, t.representative()) == x) return true;
      return false;
    };
    if (L == 0) {
      matches = 1;
    } else {
      FamilyTag w;
      w.kind = FamilyTag::Kind::Wall;
      w.n = L;
      if (matches_tag(w)) ++matches;
      struct Flags { long extra; bool r, s; };
      for (Flags f : {Flags{0, false, false}, Flags{1, true, false},
                      Flags{1, false, true}, Flags{2, true, true}}) {
        long rem = L - 3 - f.extra;
        if (rem < 0 || rem % 2 != 0) continue;
        for (long m = rem / 2; 2 * m >= rem / 2; --m) {
          FamilyTag t;
          t.kind = FamilyTag::Kind::Beyond;
          t.m = m;
          t.n = rem / 2 - m;
          t.left_r = f.r;
          t.right_s = f.s;
          if (matches_tag(t)) ++matches;
        }
      }
    }
    if (matches != 1)
      return VerifyReport::fail(suite, par,
                                canonical_digits(x) + " matches " + std::to_string(matches) +
                                    " canonical families");
  }
  return VerifyReport::ok(suite, par);
}

}  // namespace kla2
