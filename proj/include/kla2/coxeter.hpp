// coxeter.hpp
//
// The Coxeter system (W,S) of affine type A2: three generators s1,s2,s3,
// every braid order 3.  Elements are stored in window notation, i.e. as the
// affine permutation f : Z -> Z with f(i+3) = f(i)+3, normalized so that
// f(1)+f(2)+f(3) = 6; the window is the triple (f(1),f(2),f(3)).  This gives
// O(1) multiplication, canonical equality and cheap hashing.

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace kla2 {

// Simple reflection.  Constructible from any integer label k via
// ((k-1) mod 3)+1, so label 0 resolves to 3 and labels run mod 3.
class Gen {
 public:
  explicit constexpr Gen(int index) : idx_(index) {}
  static constexpr Gen from_label(long k) {
    long r = (k - 1) % 3;
    if (r < 0) r += 3;
    return Gen(static_cast<int>(r) + 1);
  }
  constexpr int index() const { return idx_; }
  friend constexpr bool operator==(Gen a, Gen b) { return a.idx_ == b.idx_; }
  friend constexpr bool operator!=(Gen a, Gen b) { return a.idx_ != b.idx_; }
  friend constexpr bool operator<(Gen a, Gen b) { return a.idx_ < b.idx_; }

 private:
  int idx_;  // 1, 2 or 3
};

using Word = std::vector<Gen>;

Word word_from_digits(const std::string& digits);  // "1231" -> word
std::string word_to_digits(const Word& w);

// Group element in window notation.
class Elt {
 public:
  Elt() : w_{1, 2, 3} {}
  // Validates the window invariants (sum 6, residues pairwise distinct).
  static Elt from_window(long w1, long w2, long w3);
  long window(int i) const { return w_[i - 1]; }  // i in {1,2,3}
  std::array<long, 3> window() const { return w_; }

  friend bool operator==(const Elt& a, const Elt& b) { return a.w_ == b.w_; }
  friend bool operator!=(const Elt& a, const Elt& b) { return a.w_ != b.w_; }
  // Window-lexicographic order; cheap and canonical, used for ordered maps.
  friend bool operator<(const Elt& a, const Elt& b) { return a.w_ < b.w_; }

 private:
  explicit Elt(std::array<long, 3> w) : w_(w) {}
  std::array<long, 3> w_;
  friend Elt mul_right_gen(const Elt&, Gen);
  friend Elt mul_left_gen(Gen, const Elt&);
  friend Elt mul(const Elt&, const Elt&);
  friend Elt inverse(const Elt&);
};

struct EltHash {
  size_t operator()(const Elt& x) const {
    uint64_t a = static_cast<uint64_t>(x.window(1) + (1 << 20));
    uint64_t b = static_cast<uint64_t>(x.window(2) + (1 << 20));
    return std::hash<uint64_t>{}((a << 24) ^ b);
  }
};

inline Elt identity() { return Elt(); }
Elt gen_elt(Gen s);

Elt mul_right_gen(const Elt& x, Gen s);
Elt mul_left_gen(Gen s, const Elt& x);
Elt mul(const Elt& x, const Elt& y);
Elt inverse(const Elt& x);

// Inversion count Sum_{i<j} |floor((w_j - w_i)/3)|.
long length(const Elt& x);

std::vector<Gen> right_descents(const Elt& x);
std::vector<Gen> left_descents(const Elt& x);

Elt from_word(const Word& w);
// Lexicographically smallest reduced word: peel the smallest left descent.
Word to_canonical_word(const Elt& x);
std::string canonical_digits(const Elt& x);
bool is_reduced(const Word& w);

// Reducedness test for words without equal adjacent letters: every pair of
// braid-triplet positions must be at odd distance.  Throws
// std::invalid_argument when two adjacent letters are equal.
bool braid_reduced_criterion(const Word& w);

// Bruhat order via the lifting recursion, memoized (thread-safe table).
bool bruhat_leq(const Elt& y, const Elt& x);

// {y : y <= x}, computed by subword DP over one reduced word.  Result is
// sorted window-lexicographically (canonical, deterministic).
std::vector<Elt> lower_interval(const Elt& x);

// {y : y covered by x}; always at most 6 elements.
std::vector<Elt> coatoms(const Elt& x);

// {ab : a in A, b in B}, sorted-unique.
std::vector<Elt> set_product(const std::vector<Elt>& A, const std::vector<Elt>& B);

// Color action of S3 on W by permuting generator indexes.
class Perm3 {
 public:
  Perm3() : img_{1, 2, 3} {}
  Perm3(int i1, int i2, int i3);  // images of 1,2,3; validated
  int operator()(int i) const { return img_[i - 1]; }
  Gen operator()(Gen s) const { return Gen(img_[s.index() - 1]); }
  static const std::array<Perm3, 6>& all();
  friend bool operator==(const Perm3& a, const Perm3& b) { return a.img_ == b.img_; }
  std::string to_string() const;  // e.g. "231"

 private:
  std::array<int, 3> img_;
};

Elt color_perm(const Perm3& sigma, const Elt& x);

// ---- element families ----
//
// x_n is the alternating word 1234...n (labels mod 3); theta(m,n) is
// 123...(2m+1)(2m+2)(2m+1)...(2m-2n+1), of length 2m+2n+3.  These exhaust W
// up to the color action and the r/s multiplications below.

Elt x_elt(long n);           // n >= 0; x_0 = identity
Word x_word(long n);
Elt theta_elt(long m, long n);  // m,n >= 0
Word theta_word(long m, long n);
Gen theta_r(long m, long n);    // s_0, the generator missing from the left descents
Gen theta_s(long m, long n);    // s_{2m-2n}, missing from the right descents

// y_n = 123...(n-2)n, n >= 4.  (The alternative expression
// 123...(n-4)(n-2)(n-3)(n-2) defines the same element; tests pin this.)
Elt y_wall(long n);
// z_n = 13456...(n-2), n >= 5.
Elt z_wall(long n);
// z'_n: the element z_n * s_n.  This is the variant that actually appears in
// the canonical-basis formula on the wall (decided against the drop-last
// reading by the brute-force check; see z_prime_wall_alt and the README).
Elt z_prime_wall(long n);
// The other reading: z_n with the last letter of its defining word dropped.
Elt z_prime_wall_alt(long n);

// theta(m,n) with optional left r / right s multiplications applied.
Elt theta_variant(long m, long n, bool left_r, bool right_s);

// Family classification up to the color action.
struct FamilyTag {
  enum class Kind { Identity, Wall, Beyond };
  Kind kind = Kind::Identity;
  long n = 0;          // Wall index, or Beyond second index
  long m = 0;          // Beyond first index; canonical tags keep m >= n
  bool left_r = false;
  bool right_s = false;
  Perm3 sigma;         // color_perm(sigma, representative) == element

  Elt representative() const;
  std::string to_string() const;
  friend bool operator==(const FamilyTag& a, const FamilyTag& b);
};

// Matches x against the families; theta(m,n) and theta(n,m) are color
// images of each other, so Beyond tags are canonicalized to m >= n.
// Throws std::logic_error if nothing matches (cannot happen).
FamilyTag classify(const Elt& x);

std::ostream& operator<<(std::ostream& os, const Elt& x);

}  // namespace kla2
