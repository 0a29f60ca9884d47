#include "kla2/hecke.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

namespace kla2 {

LPoly HeckeElt::coeff_of(const Elt& y) const {
  auto it = terms_.find(y);
  return it == terms_.end() ? LPoly() : it->second;
}

LPoly KLCombination::coeff_of(const Elt& y) const {
  auto it = terms_.find(y);
  return it == terms_.end() ? LPoly() : it->second;
}

void HeckeElt::add_term(const Elt& x, const LPoly& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = terms_.emplace(x, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& b) {
  for (const auto& [x, p] : b.terms_) add_term(x, p);
  return *this;
}

HeckeElt operator+(const HeckeElt& a, const HeckeElt& b) {
  HeckeElt r = a;
  r += b;
  return r;
}

HeckeElt operator-(const HeckeElt& a) {
  HeckeElt r;
  for (const auto& [x, p] : a.terms_) r.terms_.emplace(x, -p);
  return r;
}

HeckeElt operator-(const HeckeElt& a, const HeckeElt& b) { return a + (-b); }

HeckeElt scale(const LPoly& p, const HeckeElt& h) {
  HeckeElt r;
  if (p.is_zero()) return r;
  for (const auto& [x, q] : h.terms_) r.terms_.emplace(x, p * q);
  return r;
}

HeckeElt mul_kl_gen_right(const HeckeElt& h, Gen s) {
  HeckeElt r;
  for (const auto& [x, p] : h.terms()) {
    Elt xs = mul_right_gen(x, s);
    bool up = length(xs) > length(x);
    r.add_term(xs, p);
    r.add_term(x, p * LPoly::v(up ? 1 : -1));
  }
  return r;
}

HeckeElt mul_kl_gen_left(Gen s, const HeckeElt& h) {
  HeckeElt r;
  for (const auto& [x, p] : h.terms()) {
    Elt sx = mul_left_gen(s, x);
    bool up = length(sx) > length(x);
    r.add_term(sx, p);
    r.add_term(x, p * LPoly::v(up ? 1 : -1));
  }
  return r;
}

HeckeElt mul_std_gen_right(const HeckeElt& h, Gen s) {
  HeckeElt r;
  for (const auto& [x, p] : h.terms()) {
    Elt xs = mul_right_gen(x, s);
    if (length(xs) > length(x)) {
      r.add_term(xs, p);
    } else {
      r.add_term(xs, p);
      r.add_term(x, p * (LPoly::v(-1) - LPoly::v(1)));
    }
  }
  return r;
}

HeckeElt mul(const HeckeElt& a, const HeckeElt& b) {
  HeckeElt r;
  for (const auto& [y, q] : b.terms()) {
    HeckeElt t = scale(q, a);
    for (Gen s : to_canonical_word(y)) t = mul_std_gen_right(t, s);
    r += t;
  }
  return r;
}

HeckeElt bar_involution(const HeckeElt& h) {
  HeckeElt r;
  for (const auto& [x, p] : h.terms()) {
    HeckeElt t = unit(identity());
    for (Gen s : to_canonical_word(x)) {
      // bar(H_s) = H_s + (v - v^-1) H_e = H_s^{-1}
      t = mul_std_gen_right(t, s) + scale(LPoly::v(1) - LPoly::v(-1), t);
    }
    r += scale(p.bar(), t);
  }
  return r;
}

namespace {
std::unordered_map<Elt, std::unique_ptr<const HeckeElt>, EltHash> g_kl_memo;
std::shared_mutex g_kl_mutex;
}  // namespace

const HeckeElt& kl_basis(const Elt& x) {
  {
    std::shared_lock lock(g_kl_mutex);
    auto it = g_kl_memo.find(x);
    if (it != g_kl_memo.end()) return *it->second;
  }
  HeckeElt result;
  if (x == identity()) {
    result = unit(identity());
  } else {
    Gen s = right_descents(x).front();
    Elt xp = mul_right_gen(x, s);
    const HeckeElt& base = kl_basis(xp);
    result = mul_kl_gen_right(base, s);
    // corrections: subtract mu(y,xp) Hbar_y over y < xp with ys < y
    std::vector<std::pair<Elt, mpz_class>> corr;
    for (const auto& [y, p] : base.terms()) {
      if (y == xp) continue;
      if (length(mul_right_gen(y, s)) < length(y)) {
        mpz_class m = p.coeff(1);
        if (m != 0) corr.emplace_back(y, m);
      }
    }
    for (const auto& [y, m] : corr)
      result -= scale(LPoly::monomial(m, 0), kl_basis(y));
  }
  std::unique_lock lock(g_kl_mutex);
  auto it = g_kl_memo.find(x);  // another thread may have published meanwhile
  if (it == g_kl_memo.end())
    it = g_kl_memo.emplace(x, std::make_unique<const HeckeElt>(std::move(result))).first;
  return *it->second;
}

LPoly kl_poly(const Elt& y, const Elt& x) { return kl_basis(x).coeff_of(y); }

long mu(const Elt& y, const Elt& x) {
  if (!bruhat_leq(y, x)) return 0;
  return static_cast<long>(kl_poly(y, x).coeff(1).get_si());
}

HeckeElt n_elt(const Elt& x) {
  HeckeElt r;
  long lx = length(x);
  for (const Elt& y : lower_interval(x))
    r.add_term(y, LPoly::v(static_cast<int>(lx - length(y))));
  return r;
}

mpz_class content(const HeckeElt& h) {
  mpz_class s = 0;
  for (const auto& [x, p] : h.terms()) s += p.eval_at_one();
  return s;
}

KLCombination to_kl(const HeckeElt& h) {
  HeckeElt rem = h;
  std::map<Elt, LPoly> out;
  while (!rem.is_zero()) {
    // strip a maximal-length support element; ties broken in canonical-word
    // lexicographic order (the result is order-independent, the order just
    // makes intermediate states deterministic)
    const Elt* top = nullptr;
    long best = -1;
    std::string top_word;
    for (const auto& [x, p] : rem.terms()) {
      long l = length(x);
      if (l < best) continue;
      std::string w = canonical_digits(x);
      if (l > best || w < top_word) {
        best = l;
        top = &x;
        top_word = std::move(w);
      }
    }
    Elt w = *top;
    LPoly c = rem.coeff_of(w);
    out.emplace(w, c);
    rem -= scale(c, kl_basis(w));
  }
  return KLCombination(std::move(out));
}

HeckeElt from_kl(const KLCombination& k) {
  HeckeElt r;
  for (const auto& [x, p] : k.terms()) r += scale(p, kl_basis(x));
  return r;
}

bool is_perverse(const KLCombination& k) {
  for (const auto& [x, p] : k.terms())
    if (!p.is_constant() || p.coeff(0) < 0) return false;
  return true;
}

bool equal_up_to_perverse(const HeckeElt& h1, const HeckeElt& h2) {
  KLCombination d = to_kl(h1 - h2);
  for (const auto& [x, p] : d.terms())
    if (!p.is_constant()) return false;
  return true;
}

LPoly pairing(const HeckeElt& a, const HeckeElt& b) {
  LPoly r;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  auto ia = ta.begin();
  auto ib = tb.begin();
  while (ia != ta.end() && ib != tb.end()) {
    if (ia->first < ib->first) ++ia;
    else if (ib->first < ia->first) ++ib;
    else { r += ia->second * ib->second; ++ia, ++ib; }
  }
  return r;
}

LPoly hom_rank(const Elt& x, const Elt& y) { return pairing(kl_basis(x), kl_basis(y)); }

LPoly hom_rank_quotient(const HeckeElt& ch, const Elt& y) { return ch.coeff_of(y); }

std::string HeckeElt::to_string() const {
  if (terms_.empty()) return "0";
  // order terms by (length, canonical word) for readable, stable output
  std::vector<std::pair<std::pair<long, std::string>, const std::pair<const Elt, LPoly>*>> items;
  items.reserve(terms_.size());
  for (const auto& t : terms_)
    items.push_back({{length(t.first), canonical_digits(t.first)}, &t});
  std::sort(items.begin(), items.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, t] : items) {
    if (!first) os << " + ";
    first = false;
    os << "(" << t->second.to_string() << ")*H[" << key.second << "]";
  }
  return os.str();
}

}  // namespace kla2
