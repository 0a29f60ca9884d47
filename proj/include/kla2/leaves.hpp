// leaves.hpp — light-leaf combinatorics: 01-sequences with forced U/D
// decorations along the Bruhat stroll, defect, and the graded-rank checks
// that shadow the morphism-space dimensions.
//
// Defect convention: U0 -> +1, D0 -> -1, U1/D1 -> 0.  This is the unique
// convention under which leaf_character reproduces products of canonical
// generators with the normalization Hbar_s = H_s + v H_e (deodhar_check
// validates rather than assumes this).

#pragma once

#include <cstdint>
#include <functional>

#include "kla2/hecke.hpp"
#include "kla2/verify.hpp"

namespace kla2 {

enum class Decoration : uint8_t { U0, U1, D0, D1 };

const char* decoration_name(Decoration d);

struct LeafPath {
  Word word;
  std::vector<uint8_t> bits;           // 0/1, same length as word
  std::vector<Decoration> decorations; // forced by (word, bits)
  Elt endpoint;
  long defect = 0;
};

// Walks the stroll; throws std::invalid_argument on length mismatch.
LeafPath stroll(const Word& w, const std::vector<uint8_t>& bits);

inline constexpr size_t kDefaultLeafBound = 20;

// All 2^|w| paths in bits-lexicographic order (0 before 1), streamed.
// Throws std::length_error when |w| exceeds the bound.
void for_each_leaf(const Word& w, const std::function<void(const LeafPath&)>& fn,
                   size_t bound = kDefaultLeafBound);
std::vector<LeafPath> enumerate_leaves(const Word& w, size_t bound = kDefaultLeafBound);

// Paths with no D decorations.
std::vector<LeafPath> u_leaves(const Word& w, size_t bound = kDefaultLeafBound);

// sum over paths of v^defect H_endpoint.
HeckeElt leaf_character(const Word& w, size_t bound = kDefaultLeafBound);

// leaf_character(w) == product of canonical generators of w.
VerifyReport deodhar_check(const Word& w);

// Endings of the 01-sequences for x_n that stay U until a final D:
// family 1 "100*", family 2 "1101*", family 3 "10(11..11)0*" with a
// positive even run of 1s.  Checks every qualifying sequence matches and
// reports counts (a sequence may match several families).
struct TreeReport {
  VerifyReport report;
  long qualifying = 0;
  long family_counts[3] = {0, 0, 0};
};
TreeReport tree_classify(long n);

// Minimum-degree bound and unit leading coefficients for hom_rank between
// theta(m,n) and its interval: gap 4a+b gives min degree >= 2a+b, and the
// coefficient of v^{2a} at theta(m-a,n-a) is exactly 1.
VerifyReport verify_bounds_beyond(long m, long n);

// Coefficient of v^{2n} at theta(m-n,0) in Hbar_{theta(m,n-1)} Hbar_s Hbar_t
// equals 2 for n=1 and 3 for n>1 (s,t the final two letters of the defining
// expression of theta(m,n)).
VerifyReport verify_threelittleleaves(long m, long n);

// Same product; coefficient of v^{2i} at theta(m-i,n-i) equals 3 for i=1
// and 4 for 1 < i < n.
VerifyReport verify_fourlittleleaves(long m, long n, long i);

// Degree-0 unidimensionality: the constant coefficient of the pairing of
// Hbar_{y_n} (and Hbar_{z_n} for even n) with Hbar_{x_n} Hbar_{s_{n+1}} is 1.
VerifyReport verify_deg0_wall(long n);

}  // namespace kla2
