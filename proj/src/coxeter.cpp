#include "kla2/coxeter.hpp"

#include <algorithm>
#include <mutex>
#include <ostream>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace kla2 {

namespace {

long floor_div3(long a) {
  long q = a / 3;
  if (a % 3 != 0 && a < 0) --q;
  return q;
}

int mod3(long a) {
  long r = a % 3;
  if (r < 0) r += 3;
  return static_cast<int>(r);
}

}  // namespace

Word word_from_digits(const std::string& digits) {
  Word w;
  w.reserve(digits.size());
  for (char c : digits) {
    if (c < '1' || c > '3') throw std::invalid_argument("word digit outside {1,2,3}");
    w.push_back(Gen(c - '0'));
  }
  return w;
}

std::string word_to_digits(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (Gen g : w) s.push_back(static_cast<char>('0' + g.index()));
  return s;
}

Elt Elt::from_window(long w1, long w2, long w3) {
  if (w1 + w2 + w3 != 6) throw std::invalid_argument("window entries must sum to 6");
  int r1 = mod3(w1), r2 = mod3(w2), r3 = mod3(w3);
  if (r1 == r2 || r1 == r3 || r2 == r3)
    throw std::invalid_argument("window residues mod 3 must be pairwise distinct");
  return Elt({w1, w2, w3});
}

Elt gen_elt(Gen s) { return mul_right_gen(identity(), s); }

Elt mul_right_gen(const Elt& x, Gen s) {
  auto [a, b, c] = x.w_;
  switch (s.index()) {
    case 1: return Elt({b, a, c});
    case 2: return Elt({a, c, b});
    default: return Elt({c - 3, b, a + 3});
  }
}

Elt mul_left_gen(Gen s, const Elt& x) {
  // s exchanges the two residue classes it connects, applied to each entry.
  int lo = mod3(s.index()), hi = mod3(s.index() + 1);
  std::array<long, 3> w = x.w_;
  for (long& v : w) {
    int r = mod3(v);
    if (r == lo) ++v;
    else if (r == hi) --v;
  }
  return Elt(w);
}

namespace {
long apply_window(const std::array<long, 3>& f, long k) {
  long i = ((k - 1) % 3 + 3) % 3;  // 0-based residue position
  long q = (k - (i + 1)) / 3;
  return f[static_cast<size_t>(i)] + 3 * q;
}
}  // namespace

Elt mul(const Elt& x, const Elt& y) {
  std::array<long, 3> w;
  for (int i = 1; i <= 3; ++i)
    w[i - 1] = apply_window(x.w_, apply_window(y.w_, i));
  return Elt(w);
}

Elt inverse(const Elt& x) {
  std::array<long, 3> g{};
  for (int i = 1; i <= 3; ++i) {
    long a = x.w_[i - 1];
    int j = mod3(a) == 0 ? 3 : mod3(a);
    g[j - 1] = i + (j - a);
  }
  return Elt(g);
}

long length(const Elt& x) {
  long tot = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      tot += std::abs(floor_div3(x.window(j + 1) - x.window(i + 1)));
  return tot;
}

std::vector<Gen> right_descents(const Elt& x) {
  std::vector<Gen> out;
  if (x.window(1) > x.window(2)) out.push_back(Gen(1));
  if (x.window(2) > x.window(3)) out.push_back(Gen(2));
  if (x.window(3) > x.window(1) + 3) out.push_back(Gen(3));
  return out;
}

std::vector<Gen> left_descents(const Elt& x) { return right_descents(inverse(x)); }

Elt from_word(const Word& w) {
  Elt x;
  for (Gen s : w) x = mul_right_gen(x, s);
  return x;
}

Word to_canonical_word(const Elt& x) {
  Word w;
  Elt cur = x;
  while (cur != identity()) {
    Gen s = left_descents(cur).front();  // smallest, descents come out sorted
    w.push_back(s);
    cur = mul_left_gen(s, cur);
  }
  return w;
}

std::string canonical_digits(const Elt& x) { return word_to_digits(to_canonical_word(x)); }

bool is_reduced(const Word& w) {
  return length(from_word(w)) == static_cast<long>(w.size());
}

bool braid_reduced_criterion(const Word& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == w[i + 1])
      throw std::invalid_argument("braid_reduced_criterion: adjacent equal letters");
  std::vector<size_t> pos;
  for (size_t i = 1; i + 1 < w.size(); ++i)
    if (w[i - 1] == w[i + 1] && w[i - 1] != w[i]) pos.push_back(i);
  // odd distance <=> positions of the same parity
  for (size_t a = 1; a < pos.size(); ++a)
    if ((pos[a] - pos[0]) % 2 != 0) return false;
  return true;
}

namespace {
struct PairHash {
  size_t operator()(const std::pair<Elt, Elt>& p) const {
    return EltHash{}(p.first) * 1000003u ^ EltHash{}(p.second);
  }
};
std::unordered_map<std::pair<Elt, Elt>, bool, PairHash> g_bruhat_memo;
std::shared_mutex g_bruhat_mutex;
}  // namespace

bool bruhat_leq(const Elt& y, const Elt& x) {
  if (y == identity()) return true;
  long ly = length(y), lx = length(x);
  if (ly > lx) return false;
  if (ly == lx) return y == x;
  auto key = std::make_pair(y, x);
  {
    std::shared_lock lock(g_bruhat_mutex);
    auto it = g_bruhat_memo.find(key);
    if (it != g_bruhat_memo.end()) return it->second;
  }
  // lifting: pick s with sx < x; recurse on (sy,sx) if sy < y, else (y,sx)
  Gen s = left_descents(x).front();
  Elt sx = mul_left_gen(s, x);
  Elt sy = mul_left_gen(s, y);
  bool r = length(sy) < ly ? bruhat_leq(sy, sx) : bruhat_leq(y, sx);
  {
    std::unique_lock lock(g_bruhat_mutex);
    g_bruhat_memo.emplace(key, r);
  }
  return r;
}

std::vector<Elt> lower_interval(const Elt& x) {
  std::unordered_set<Elt, EltHash> cur{identity()};
  for (Gen s : to_canonical_word(x)) {
    std::vector<Elt> grown;
    grown.reserve(cur.size());
    for (const Elt& y : cur) grown.push_back(mul_right_gen(y, s));
    cur.insert(grown.begin(), grown.end());
  }
  std::vector<Elt> out(cur.begin(), cur.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elt> coatoms(const Elt& x) {
  // strong exchange: every coatom arises by deleting one letter
  Word w = to_canonical_word(x);
  long n = length(x);
  std::unordered_set<Elt, EltHash> seen;
  for (size_t i = 0; i < w.size(); ++i) {
    Word sub;
    sub.reserve(w.size() - 1);
    sub.insert(sub.end(), w.begin(), w.begin() + static_cast<long>(i));
    sub.insert(sub.end(), w.begin() + static_cast<long>(i) + 1, w.end());
    Elt y = from_word(sub);
    if (length(y) == n - 1) seen.insert(y);
  }
  std::vector<Elt> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elt> set_product(const std::vector<Elt>& A, const std::vector<Elt>& B) {
  std::unordered_set<Elt, EltHash> prod;
  prod.reserve(A.size() * B.size());
  for (const Elt& a : A)
    for (const Elt& b : B) prod.insert(mul(a, b));
  std::vector<Elt> out(prod.begin(), prod.end());
  std::sort(out.begin(), out.end());
  return out;
}

Perm3::Perm3(int i1, int i2, int i3) : img_{i1, i2, i3} {
  int mask = 0;
  for (int v : img_) {
    if (v < 1 || v > 3) throw std::invalid_argument("Perm3 image outside {1,2,3}");
    mask |= 1 << v;
  }
  if (mask != 0b1110) throw std::invalid_argument("Perm3 images must be a permutation");
}

const std::array<Perm3, 6>& Perm3::all() {
  static const std::array<Perm3, 6> perms = {
      Perm3(1, 2, 3), Perm3(1, 3, 2), Perm3(2, 1, 3),
      Perm3(2, 3, 1), Perm3(3, 1, 2), Perm3(3, 2, 1)};
  return perms;
}

std::string Perm3::to_string() const {
  std::string s;
  for (int v : img_) s.push_back(static_cast<char>('0' + v));
  return s;
}

Elt color_perm(const Perm3& sigma, const Elt& x) {
  Word w = to_canonical_word(x);
  for (Gen& s : w) s = sigma(s);
  return from_word(w);
}

Elt x_elt(long n) { return from_word(x_word(n)); }

Word x_word(long n) {
  if (n < 0) throw std::invalid_argument("x_elt: negative index");
  Word w;
  w.reserve(static_cast<size_t>(n));
  for (long i = 1; i <= n; ++i) w.push_back(Gen::from_label(i));
  return w;
}

Word theta_word(long m, long n) {
  if (m < 0 || n < 0) throw std::invalid_argument("theta_elt: negative index");
  Word w;
  w.reserve(static_cast<size_t>(2 * m + 2 * n + 3));
  for (long k = 1; k <= 2 * m + 2; ++k) w.push_back(Gen::from_label(k));
  for (long k = 2 * m + 1; k >= 2 * m - 2 * n + 1; --k) w.push_back(Gen::from_label(k));
  return w;
}

Elt theta_elt(long m, long n) { return from_word(theta_word(m, n)); }

Gen theta_r(long, long) { return Gen::from_label(0); }
Gen theta_s(long m, long n) { return Gen::from_label(2 * m - 2 * n); }

Elt y_wall(long n) {
  if (n < 4) throw std::invalid_argument("y_wall: index must be >= 4");
  Word w;
  for (long i = 1; i <= n - 2; ++i) w.push_back(Gen::from_label(i));
  w.push_back(Gen::from_label(n));
  return from_word(w);
}

namespace {
Word z_word(long n) {
  if (n < 5) throw std::invalid_argument("z_wall: index must be >= 5");
  Word w{Gen(1)};
  for (long i = 3; i <= n - 2; ++i) w.push_back(Gen::from_label(i));
  return w;
}
}  // namespace

Elt z_wall(long n) { return from_word(z_word(n)); }

Elt z_prime_wall(long n) {
  return mul_right_gen(z_wall(n), Gen::from_label(n));
}

Elt z_prime_wall_alt(long n) {
  Word w = z_word(n);
  w.pop_back();
  return from_word(w);
}

Elt theta_variant(long m, long n, bool left_r, bool right_s) {
  Elt x = theta_elt(m, n);
  if (left_r) x = mul_left_gen(theta_r(m, n), x);
  if (right_s) x = mul_right_gen(x, theta_s(m, n));
  return x;
}

Elt FamilyTag::representative() const {
  switch (kind) {
    case Kind::Identity: return identity();
    case Kind::Wall: return x_elt(n);
    case Kind::Beyond: return theta_variant(m, n, left_r, right_s);
  }
  throw std::logic_error("bad FamilyTag");
}

std::string FamilyTag::to_string() const {
  switch (kind) {
    case Kind::Identity: return "identity";
    case Kind::Wall: return "x:" + std::to_string(n);
    case Kind::Beyond: {
      std::string s = "theta:" + std::to_string(m) + "," + std::to_string(n);
      if (left_r || right_s) {
        s += ":";
        if (left_r) s += "r";
        if (right_s) s += "s";
      }
      return s + "/perm:" + sigma.to_string();
    }
  }
  return "?";
}

bool operator==(const FamilyTag& a, const FamilyTag& b) {
  return a.kind == b.kind && a.n == b.n && a.m == b.m && a.left_r == b.left_r &&
         a.right_s == b.right_s && a.sigma == b.sigma;
}

FamilyTag classify(const Elt& x) {
  long L = length(x);
  FamilyTag tag;
  if (L == 0) return tag;

  auto try_tag = [&x](FamilyTag t) -> bool {
    Elt rep = t.representative();
    for (const Perm3& sg : Perm3::all())
      if (color_perm(sg, rep) == x) return true;
    return false;
  };
  auto fix_sigma = [&x](FamilyTag& t) {
    Elt rep = t.representative();
    for (const Perm3& sg : Perm3::all())
      if (color_perm(sg, rep) == x) { t.sigma = sg; return; }
  };

  tag.kind = FamilyTag::Kind::Wall;
  tag.n = L;
  if (try_tag(tag)) { fix_sigma(tag); return tag; }

  // Beyond candidates by length; theta(m,n) ~ theta(n,m), so only m >= n.
  struct Flags { long extra; bool r, s; };
  for (Flags f : {Flags{0, false, false}, Flags{1, true, false},
                  Flags{1, false, true}, Flags{2, true, true}}) {
    long rem = L - 3 - f.extra;
    if (rem < 0 || rem % 2 != 0) continue;
    long half = rem / 2;
    for (long m = half; 2 * m >= half; --m) {
      FamilyTag t;
      t.kind = FamilyTag::Kind::Beyond;
      t.m = m;
      t.n = half - m;
      t.left_r = f.r;
      t.right_s = f.s;
      if (try_tag(t)) { fix_sigma(t); return t; }
    }
  }
  throw std::logic_error("classify: element matched no family: " + canonical_digits(x));
}

std::ostream& operator<<(std::ostream& os, const Elt& x) {
  return os << "(" << x.window(1) << "," << x.window(2) << "," << x.window(3) << ")";
}

}  // namespace kla2
