#include "kla2/leaves.hpp"

#include <algorithm>
#include <stdexcept>

namespace kla2 {

const char* decoration_name(Decoration d) {
  switch (d) {
    case Decoration::U0: return "U0";
    case Decoration::U1: return "U1";
    case Decoration::D0: return "D0";
    case Decoration::D1: return "D1";
  }
  return "?";
}

LeafPath stroll(const Word& w, const std::vector<uint8_t>& bits) {
  if (w.size() != bits.size())
    throw std::invalid_argument("stroll: word and bits must have equal length");
  LeafPath p;
  p.word = w;
  p.bits = bits;
  p.decorations.reserve(w.size());
  Elt z;
  long cur_len = 0;
  for (size_t i = 0; i < w.size(); ++i) {
    Elt zs = mul_right_gen(z, w[i]);
    long lz = length(zs);
    bool up = lz > cur_len;
    bool one = bits[i] != 0;
    p.decorations.push_back(up ? (one ? Decoration::U1 : Decoration::U0)
                               : (one ? Decoration::D1 : Decoration::D0));
    if (up && !one) ++p.defect;
    if (!up && !one) --p.defect;
    if (one) { z = zs; cur_len = lz; }
  }
  p.endpoint = z;
  return p;
}

void for_each_leaf(const Word& w, const std::function<void(const LeafPath&)>& fn,
                   size_t bound) {
  if (w.size() > bound)
    throw std::length_error("for_each_leaf: word length exceeds bound " + std::to_string(bound));
  std::vector<uint8_t> bits(w.size(), 0);
  uint64_t total = uint64_t{1} << w.size();
  for (uint64_t mask = 0; mask < total; ++mask) {
    for (size_t i = 0; i < w.size(); ++i)
      bits[i] = static_cast<uint8_t>((mask >> (w.size() - 1 - i)) & 1);  // lex order in bits
    fn(stroll(w, bits));
  }
}

std::vector<LeafPath> enumerate_leaves(const Word& w, size_t bound) {
  std::vector<LeafPath> out;
  out.reserve(w.size() < 24 ? (size_t{1} << w.size()) : 0);
  for_each_leaf(w, [&out](const LeafPath& p) { out.push_back(p); }, bound);
  return out;
}

std::vector<LeafPath> u_leaves(const Word& w, size_t bound) {
  std::vector<LeafPath> out;
  for_each_leaf(w, [&out](const LeafPath& p) {
    for (Decoration d : p.decorations)
      if (d == Decoration::D0 || d == Decoration::D1) return;
    out.push_back(p);
  }, bound);
  return out;
}

HeckeElt leaf_character(const Word& w, size_t bound) {
  HeckeElt r;
  for_each_leaf(w, [&r](const LeafPath& p) {
    r.add_term(p.endpoint, LPoly::v(static_cast<int>(p.defect)));
  }, bound);
  return r;
}

VerifyReport deodhar_check(const Word& w) {
  const std::string suite = "deodhar";
  HeckeElt prod = unit(identity());
  for (Gen s : w) prod = mul_kl_gen_right(prod, s);
  if (leaf_character(w) == prod) return VerifyReport::ok(suite, word_to_digits(w));
  return VerifyReport::fail(suite, word_to_digits(w),
                            "leaf character differs from the canonical-generator product");
}

TreeReport tree_classify(long n) {
  TreeReport tr;
  const std::string suite = "lemma-tree";
  if (n < 4) {
    tr.report = VerifyReport::fail(suite, std::to_string(n), "requires n >= 4");
    return tr;
  }
  Word w = x_word(n);
  size_t N = static_cast<size_t>(n);
  bool ok = true;
  std::string bad;
  for_each_leaf(w, [&](const LeafPath& p) {
    for (size_t i = 0; i + 1 < N; ++i)
      if (p.decorations[i] == Decoration::D0 || p.decorations[i] == Decoration::D1) return;
    Decoration last = p.decorations[N - 1];
    if (last != Decoration::D0 && last != Decoration::D1) return;
    ++tr.qualifying;
    const auto& b = p.bits;
    bool any = false;
    if (N >= 4 && b[N - 4] == 1 && b[N - 3] == 0 && b[N - 2] == 0) {
      ++tr.family_counts[0];
      any = true;
    }
    if (N >= 5 && b[N - 5] == 1 && b[N - 4] == 1 && b[N - 3] == 0 && b[N - 2] == 1) {
      ++tr.family_counts[1];
      any = true;
    }
    for (size_t k = 1; 2 * k + 4 <= N; ++k) {
      size_t start = N - (2 * k + 4);
      bool hit = b[start] == 1 && b[start + 1] == 0 && b[N - 2] == 0;
      for (size_t j = start + 2; hit && j < N - 2; ++j) hit = b[j] == 1;
      if (hit) {
        ++tr.family_counts[2];
        any = true;
        break;
      }
    }
    if (!any && ok) {
      ok = false;
      std::string bs;
      for (uint8_t x : b) bs.push_back(static_cast<char>('0' + x));
      bad = "unclassified ending for bits " + bs;
    }
  }, 20);
  tr.report = ok ? VerifyReport::ok(suite, std::to_string(n))
                 : VerifyReport::fail(suite, std::to_string(n), bad);
  return tr;
}

VerifyReport verify_bounds_beyond(long m, long n) {
  const std::string suite = "hom-dims";
  const std::string par = "bounds(" + std::to_string(m) + "," + std::to_string(n) + ")";
  Elt th = theta_elt(m, n);
  long lth = 2 * m + 2 * n + 3;
  for (const Elt& y : lower_interval(th)) {
    long gap = lth - length(y);
    long a = gap / 4, b = gap % 4;
    LPoly hr = hom_rank(th, y);
    auto md = hr.min_deg();
    if (!md || *md < 2 * a + b)
      return VerifyReport::fail(suite, par,
                                "min degree below 2a+b at y=" + canonical_digits(y) +
                                    ": " + hr.to_string());
  }
  for (long a = 0; a <= std::min(m, n); ++a) {
    LPoly hr = hom_rank(th, theta_elt(m - a, n - a));
    if (hr.coeff(static_cast<int>(2 * a)) != 1)
      return VerifyReport::fail(suite, par,
                                "coefficient at v^{2a} is not 1 for a=" + std::to_string(a) +
                                    ": " + hr.to_string());
  }
  return VerifyReport::ok(suite, par);
}

namespace {
// Character of Hbar_{theta(m,n-1)} Hbar_s Hbar_t with s,t the final two
// letters of the defining expression of theta(m,n).
HeckeElt little_leaves_product(long m, long n) {
  Gen s = Gen::from_label(2 * m - 2 * n + 2);
  Gen t = Gen::from_label(2 * m - 2 * n + 1);
  return mul_kl_gen_right(mul_kl_gen_right(kl_basis(theta_elt(m, n - 1)), s), t);
}
}  // namespace

VerifyReport verify_threelittleleaves(long m, long n) {
  const std::string suite = "hom-dims";
  const std::string par = "three(" + std::to_string(m) + "," + std::to_string(n) + ")";
  if (n < 1 || m < n) return VerifyReport::fail(suite, par, "requires 1 <= n <= m");
  HeckeElt ch = little_leaves_product(m, n);
  mpz_class got = hom_rank_quotient(ch, theta_elt(m - n, 0)).coeff(static_cast<int>(2 * n));
  long expect = (n == 1) ? 2 : 3;
  if (got == expect) return VerifyReport::ok(suite, par);
  return VerifyReport::fail(suite, par,
                            "coefficient " + got.get_str() + " != " + std::to_string(expect));
}

VerifyReport verify_fourlittleleaves(long m, long n, long i) {
  const std::string suite = "hom-dims";
  const std::string par = "four(" + std::to_string(m) + "," + std::to_string(n) + "," +
                          std::to_string(i) + ")";
  if (i < 1 || i >= n || i > m) return VerifyReport::fail(suite, par, "requires 1 <= i < n, i <= m");
  HeckeElt ch = little_leaves_product(m, n);
  mpz_class got = hom_rank_quotient(ch, theta_elt(m - i, n - i)).coeff(static_cast<int>(2 * i));
  long expect = (i == 1) ? 3 : 4;
  if (got == expect) return VerifyReport::ok(suite, par);
  return VerifyReport::fail(suite, par,
                            "coefficient " + got.get_str() + " != " + std::to_string(expect));
}

VerifyReport verify_deg0_wall(long n) {
  const std::string suite = "hom-dims";
  const std::string par = "deg0(" + std::to_string(n) + ")";
  if (n < 5) return VerifyReport::fail(suite, par, "requires n >= 5");
  HeckeElt ch = mul_kl_gen_right(kl_basis(x_elt(n)), Gen::from_label(n + 1));
  mpz_class cy = pairing(kl_basis(y_wall(n)), ch).coeff(0);
  if (cy != 1)
    return VerifyReport::fail(suite, par, "degree-0 rank at y_n is " + cy.get_str());
  if (n % 2 == 0) {
    mpz_class cz = pairing(kl_basis(z_wall(n)), ch).coeff(0);
    if (cz != 1)
      return VerifyReport::fail(suite, par, "degree-0 rank at z_n is " + cz.get_str());
  }
  return VerifyReport::ok(suite, par);
}

}  // namespace kla2
