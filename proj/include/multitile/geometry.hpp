#pragma once

#include <array>
#include <string>
#include <vector>

#include "multitile/lattice.hpp"
#include "multitile/rational.hpp"
#include "multitile/reports.hpp"

namespace multitile {

struct Vec2q {
  Rat x, y;
};

inline Vec2q operator+(const Vec2q& a, const Vec2q& b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2q operator-(const Vec2q& a, const Vec2q& b) { return {a.x - b.x, a.y - b.y}; }
inline bool operator==(const Vec2q& a, const Vec2q& b) { return a.x == b.x && a.y == b.y; }

// (b - a) x (c - a); >0 left turn, 0 collinear
Rat cross(const Vec2q& a, const Vec2q& b, const Vec2q& c);

using Triangle = std::array<Vec2q, 3>;

// Simple polygon with exact rational vertices, counterclockwise, positive
// area. Construction removes duplicate and collinear vertices, orients
// counterclockwise and rejects self-intersecting input. May be nonconvex.
class RationalPolygon {
 public:
  static RationalPolygon from_vertices(std::vector<Vec2q> vs);

  const std::vector<Vec2q>& vertices() const { return verts_; }
  Rat area() const;  // exact shoelace, positive

  RationalPolygon translated(const Vec2q& t) const;
  RationalPolygon scaled(const Rat& s) const;  // about the origin, s != 0

  Vec2q bbox_lo() const;
  Vec2q bbox_hi() const;

 private:
  std::vector<Vec2q> verts_;
};

// 0 = outside, 1 = on the boundary, 2 = strictly inside
int point_in_polygon(const RationalPolygon& P, const Vec2q& p);

// Ear-clipping triangulation; triangle areas sum exactly to area(P).
std::vector<Triangle> triangulate(const RationalPolygon& P);

// Exact area of P cap Q via pairwise convex clipping of triangulations.
Rat intersection_area(const RationalPolygon& P, const RationalPolygon& Q);

// Closed sets P and Q share at least one point (positive overlap or touch).
bool polygons_touch(const RationalPolygon& P, const RationalPolygon& Q);

bool is_convex(const RationalPolygon& P);
bool is_centrally_symmetric(const RationalPolygon& P);  // about the origin

// sum over n in L (bounding box of bbox(A) - bbox(B)) of vol(A cap (B + n));
// boundary terms of A - B vanish, so this equals the interior-indexed sum.
Rat continuous_covariogram_sum(const RationalPolygon& A, const RationalPolygon& B,
                               const RationalLattice& L);

// per-term breakdown: (n, vol(A cap (B+n))), positive terms only
std::vector<std::pair<VecQ, Rat>> continuous_covariogram_terms(const RationalPolygon& A,
                                                               const RationalPolygon& B,
                                                               const RationalLattice& L);

// Equality test of the covariogram lattice sum against vol^2 Q / det L.
TilingVerdict check_multitile_polygon(const RationalPolygon& Q, const RationalLattice& L);

// Built-in nonconvex 2-tiler of volume 4 checked against the index-2 lattice
// with basis {(1,1),(1,-1)}; lhs_sum must equal 8 with multiplicity 2.
TilingVerdict crown_example_check();

// The lattice used by crown_example_check.
RationalLattice crown_lattice();

// Counting inequalities: part (a) on any polygon, part (b) only when Q is
// convex and centrally symmetric about the origin.
VdcReport van_der_corput_counts(const RationalPolygon& Q, const RationalLattice& L);

// As above but throws NotConvex / NotCentrallySymmetric when part (b)
// does not apply.
VdcReport van_der_corput_counts_strict(const RationalPolygon& Q, const RationalLattice& L);

// Verifies Q - Q = 2Q on a rational sample grid (Q convex, centrally
// symmetric about the origin; throws otherwise). Membership of x in Q - Q is
// tested as Q cap (Q + x) != empty.
bool symmetric_difference_body_check(const RationalPolygon& Q, int grid_n = 12);

// named polygons: unit_square, rect_1x2, standard_triangle, crown, lshape,
// nontiler_5
const RationalPolygon& builtin_polygon(const std::string& name);
std::vector<std::string> builtin_polygon_names();

}  // namespace multitile
