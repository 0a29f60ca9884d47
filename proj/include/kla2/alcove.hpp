// alcove.hpp — exact alcove geometry for the triangular tessellation.
//
// Lattice model: vertices are integer pairs (a,b); the Euclidean position is
// a*(1,0) + b*(1/2, sqrt(3)/2), so all geometry is exact integer arithmetic
// and the shear to equilateral shape is applied only when emitting SVG.
// Each vertex carries the type (a+2b) mod 3; the three vertices of an alcove
// have distinct types, and reflecting the type-t vertex across the opposite
// edge (apex -> B+C-A) preserves types.  Walking the canonical word of an
// element from the fundamental alcove realizes the element's alcove.

#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "kla2/coxeter.hpp"
#include "kla2/verify.hpp"

namespace kla2 {

using LatticePoint = std::pair<long, long>;

class Triangle {
 public:
  Triangle();  // fundamental alcove
  // Vertex of type t in {0,1,2}; generator s corresponds to type s mod 3.
  LatticePoint vertex(int type) const { return v_[static_cast<size_t>(type)]; }
  // Reflect across the wall of color s (replace the vertex of type s mod 3).
  Triangle reflect(Gen s) const;
  bool points_up() const;
  // Sum of the three vertices (3 * barycenter); unique per alcove.
  LatticePoint barycenter3() const;
  // Vertices sorted, for canonical identity.
  std::array<LatticePoint, 3> sorted_vertices() const;
  friend bool operator==(const Triangle& a, const Triangle& b) { return a.v_ == b.v_; }

 private:
  std::array<LatticePoint, 3> v_;  // indexed by vertex type
};

Triangle elt_to_triangle(const Elt& x);

// Shading instruction: the lower interval of each element is drawn with its
// gray level (0 = lightest); later entries paint over earlier ones, so pass
// intervals from outermost to innermost.
struct Shading {
  Elt elt;
  int gray_level = 0;
};

// Deterministic SVG of shaded lower intervals with wall edges colored per
// generator (s1 red, s2 green, s3 blue).
std::string interval_svg(const Elt& x, const std::vector<Shading>& nested = {});

// The interval below theta(m,0) is the equilateral triangle around the
// interval's central vertex: equal to the sublevel set {max_i f_i <= c} of
// the three side-normal forms, with c minimal to contain theta(m,0).
VerifyReport region_is_equilateral_triangle(long m);

// The alcoves added from <=theta(m,n) to <=theta(m+1,n+1) decompose into
// complete 6-alcove stars around vertices of a single type.
VerifyReport verify_hexagon_geometry(long m, long n);

}  // namespace kla2
