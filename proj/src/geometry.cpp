#include "multitile/geometry.hpp"

#include <algorithm>
#include <map>

#include "multitile/errors.hpp"

namespace multitile {

Rat cross(const Vec2q& a, const Vec2q& b, const Vec2q& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

namespace {

Rat signed_area2(const std::vector<Vec2q>& vs) {
  Rat s(0);
  const std::size_t n = vs.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2q& a = vs[i];
    const Vec2q& b = vs[(i + 1) % n];
    s += a.x * b.y - b.x * a.y;
  }
  return s;
}

bool on_segment(const Vec2q& a, const Vec2q& b, const Vec2q& p) {
  if (cross(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

int sgn(const Rat& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

// closed segments [a,b] and [c,d] share at least one point
bool segments_intersect(const Vec2q& a, const Vec2q& b, const Vec2q& c, const Vec2q& d) {
  const int d1 = sgn(cross(a, b, c));
  const int d2 = sgn(cross(a, b, d));
  const int d3 = sgn(cross(c, d, a));
  const int d4 = sgn(cross(c, d, b));
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  return (d1 == 0 && on_segment(a, b, c)) || (d2 == 0 && on_segment(a, b, d)) ||
         (d3 == 0 && on_segment(c, d, a)) || (d4 == 0 && on_segment(c, d, b));
}

bool point_in_triangle_closed(const Triangle& t, const Vec2q& p) {
  return cross(t[0], t[1], p) >= 0 && cross(t[1], t[2], p) >= 0 && cross(t[2], t[0], p) >= 0;
}

}  // namespace

RationalPolygon RationalPolygon::from_vertices(std::vector<Vec2q> vs) {
  // drop exact duplicates and collinear vertices until stable
  bool changed = true;
  while (changed && vs.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < vs.size() && vs.size() >= 3;) {
      const std::size_t n = vs.size();
      const Vec2q& prev = vs[(i + n - 1) % n];
      const Vec2q& cur = vs[i];
      const Vec2q& next = vs[(i + 1) % n];
      if (cur == next || cross(prev, cur, next) == 0) {
        vs.erase(vs.begin() + static_cast<long>(i));
        changed = true;
      } else {
        ++i;
      }
    }
  }
  if (vs.size() < 3) throw InvalidPolygon("fewer than 3 vertices after canonicalization");

  const Rat area2 = signed_area2(vs);
  if (area2 == 0) throw InvalidPolygon("zero area");
  if (area2 < 0) std::reverse(vs.begin(), vs.end());

  // simple: non-adjacent edges may not meet at all
  const std::size_t n = vs.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j == i + 1 || (i == 0 && j == n - 1)) continue;
      if (segments_intersect(vs[i], vs[(i + 1) % n], vs[j], vs[(j + 1) % n]))
        throw InvalidPolygon("edges intersect away from shared endpoints");
    }
  }

  RationalPolygon P;
  P.verts_ = std::move(vs);
  return P;
}

Rat RationalPolygon::area() const { return signed_area2(verts_) / 2; }

RationalPolygon RationalPolygon::translated(const Vec2q& t) const {
  RationalPolygon P;
  P.verts_.reserve(verts_.size());
  for (const Vec2q& v : verts_) P.verts_.push_back(v + t);
  return P;
}

RationalPolygon RationalPolygon::scaled(const Rat& s) const {
  if (s == 0) throw InvalidPolygon("scale factor must be nonzero");
  std::vector<Vec2q> vs;
  vs.reserve(verts_.size());
  for (const Vec2q& v : verts_) vs.push_back({v.x * s, v.y * s});
  if (s < 0) std::reverse(vs.begin(), vs.end());
  RationalPolygon P;
  P.verts_ = std::move(vs);
  return P;
}

Vec2q RationalPolygon::bbox_lo() const {
  Vec2q lo = verts_.front();
  for (const Vec2q& v : verts_) {
    if (v.x < lo.x) lo.x = v.x;
    if (v.y < lo.y) lo.y = v.y;
  }
  return lo;
}

Vec2q RationalPolygon::bbox_hi() const {
  Vec2q hi = verts_.front();
  for (const Vec2q& v : verts_) {
    if (v.x > hi.x) hi.x = v.x;
    if (v.y > hi.y) hi.y = v.y;
  }
  return hi;
}

int point_in_polygon(const RationalPolygon& P, const Vec2q& p) {
  const auto& vs = P.vertices();
  const std::size_t n = vs.size();
  for (std::size_t i = 0; i < n; ++i)
    if (on_segment(vs[i], vs[(i + 1) % n], p)) return 1;
  // crossing parity against the ray x -> +inf, half-open in y
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2q& a = vs[i];
    const Vec2q& b = vs[(i + 1) % n];
    if ((a.y > p.y) == (b.y > p.y)) continue;
    // x coordinate of the edge at height p.y, compared exactly
    const Rat t = (p.y - a.y) / (b.y - a.y);
    const Rat xint = a.x + t * (b.x - a.x);
    if (xint > p.x) inside = !inside;
  }
  return inside ? 2 : 0;
}

std::vector<Triangle> triangulate(const RationalPolygon& P) {
  std::vector<Vec2q> vs = P.vertices();
  std::vector<Triangle> tris;

  auto blocked = [&](std::size_t ip, std::size_t ic, std::size_t in, bool allow_boundary) {
    const Triangle t{vs[ip], vs[ic], vs[in]};
    for (std::size_t j = 0; j < vs.size(); ++j) {
      if (j == ip || j == ic || j == in) continue;
      if (allow_boundary) {
        if (cross(t[0], t[1], vs[j]) > 0 && cross(t[1], t[2], vs[j]) > 0 &&
            cross(t[2], t[0], vs[j]) > 0)
          return true;
      } else if (point_in_triangle_closed(t, vs[j])) {
        return true;
      }
    }
    return false;
  };

  while (vs.size() > 3) {
    const std::size_t n = vs.size();
    bool clipped = false;
    for (int pass = 0; pass < 2 && !clipped; ++pass) {
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t ip = (i + n - 1) % n, in = (i + 1) % n;
        if (cross(vs[ip], vs[i], vs[in]) <= 0) continue;
        if (blocked(ip, i, in, pass == 1)) continue;
        if (pass == 1) {
          // boundary-touching vertices allowed; make sure the diagonal stays inside
          bool diagonal_ok = true;
          for (std::size_t j = 0; j < n && diagonal_ok; ++j) {
            const std::size_t jn = (j + 1) % n;
            if (j == ip || j == i || jn == ip || jn == i) continue;
            if (segments_intersect(vs[ip], vs[in], vs[j], vs[jn])) diagonal_ok = false;
          }
          if (!diagonal_ok) continue;
          const Vec2q mid{(vs[ip].x + vs[in].x) / 2, (vs[ip].y + vs[in].y) / 2};
          RationalPolygon cur;
          cur = RationalPolygon::from_vertices(vs);
          if (point_in_polygon(cur, mid) == 0) continue;
        }
        tris.push_back(Triangle{vs[ip], vs[i], vs[in]});
        vs.erase(vs.begin() + static_cast<long>(i));
        clipped = true;
        break;
      }
    }
    if (!clipped) throw InvalidPolygon("ear clipping failed");
  }
  tris.push_back(Triangle{vs[0], vs[1], vs[2]});
  return tris;
}

namespace {

// Sutherland-Hodgman clip of a convex subject against a convex CCW clipper.
std::vector<Vec2q> clip_convex(std::vector<Vec2q> subject, const Triangle& clip) {
  for (int e = 0; e < 3 && !subject.empty(); ++e) {
    const Vec2q& a = clip[e];
    const Vec2q& b = clip[(e + 1) % 3];
    std::vector<Vec2q> out;
    const std::size_t n = subject.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Vec2q& cur = subject[i];
      const Vec2q& nxt = subject[(i + 1) % n];
      const Rat sc = cross(a, b, cur);
      const Rat sn = cross(a, b, nxt);
      if (sc >= 0) out.push_back(cur);
      if ((sc > 0 && sn < 0) || (sc < 0 && sn > 0)) {
        const Rat t = sc / (sc - sn);
        out.push_back({cur.x + t * (nxt.x - cur.x), cur.y + t * (nxt.y - cur.y)});
      }
    }
    subject = std::move(out);
  }
  return subject;
}

Rat polygon_area_loose(const std::vector<Vec2q>& vs) {
  if (vs.size() < 3) return Rat(0);
  return signed_area2(vs) / 2;
}

}  // namespace

Rat intersection_area(const RationalPolygon& P, const RationalPolygon& Q) {
  // cheap reject on bounding boxes
  const Vec2q plo = P.bbox_lo(), phi = P.bbox_hi();
  const Vec2q qlo = Q.bbox_lo(), qhi = Q.bbox_hi();
  if (phi.x < qlo.x || qhi.x < plo.x || phi.y < qlo.y || qhi.y < plo.y) return Rat(0);

  Rat total(0);
  for (const Triangle& t : triangulate(P))
    for (const Triangle& s : triangulate(Q))
      total += polygon_area_loose(clip_convex({t[0], t[1], t[2]}, s));
  return total;
}

bool polygons_touch(const RationalPolygon& P, const RationalPolygon& Q) {
  const auto& ps = P.vertices();
  const auto& qs = Q.vertices();
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = 0; j < qs.size(); ++j)
      if (segments_intersect(ps[i], ps[(i + 1) % ps.size()], qs[j], qs[(j + 1) % qs.size()]))
        return true;
  // containment without boundary contact
  if (point_in_polygon(Q, ps[0]) != 0) return true;
  if (point_in_polygon(P, qs[0]) != 0) return true;
  return false;
}

bool is_convex(const RationalPolygon& P) {
  const auto& vs = P.vertices();
  const std::size_t n = vs.size();
  for (std::size_t i = 0; i < n; ++i)
    if (cross(vs[i], vs[(i + 1) % n], vs[(i + 2) % n]) <= 0) return false;
  return true;
}

bool is_centrally_symmetric(const RationalPolygon& P) {
  auto less = [](const Vec2q& a, const Vec2q& b) {
    const int c = cmp(a.x, b.x);
    if (c != 0) return c < 0;
    return cmp(a.y, b.y) < 0;
  };
  std::vector<Vec2q> v = P.vertices(), w;
  w.reserve(v.size());
  for (const Vec2q& p : v) w.push_back({-p.x, -p.y});
  std::sort(v.begin(), v.end(), less);
  std::sort(w.begin(), w.end(), less);
  return v == w;
}

std::vector<std::pair<VecQ, Rat>> continuous_covariogram_terms(const RationalPolygon& A,
                                                               const RationalPolygon& B,
                                                               const RationalLattice& L) {
  if (L.dim != 2) throw DimensionMismatch("continuous engine is 2-d");
  const Vec2q alo = A.bbox_lo(), ahi = A.bbox_hi();
  const Vec2q blo = B.bbox_lo(), bhi = B.bbox_hi();
  const VecQ lo{alo.x - bhi.x, alo.y - bhi.y};
  const VecQ hi{ahi.x - blo.x, ahi.y - blo.y};
  std::vector<std::pair<VecQ, Rat>> terms;
  for (const VecQ& n : L.points_in_box(lo, hi)) {
    const Rat a = intersection_area(A, B.translated({n[0], n[1]}));
    if (a > 0) terms.emplace_back(n, a);
  }
  return terms;
}

Rat continuous_covariogram_sum(const RationalPolygon& A, const RationalPolygon& B,
                               const RationalLattice& L) {
  Rat sum(0);
  for (const auto& [n, a] : continuous_covariogram_terms(A, B, L)) sum += a;
  return sum;
}

TilingVerdict check_multitile_polygon(const RationalPolygon& Q, const RationalLattice& L) {
  const Rat vol = Q.area();
  TilingVerdict v;
  v.lhs_sum = continuous_covariogram_sum(Q, Q, L);
  v.multiplicity = vol / L.det;
  v.rhs_target = vol * vol / L.det;
  v.is_multitiling = v.lhs_sum == v.rhs_target;
  if (v.is_multitiling && !is_integer(v.multiplicity))
    throw Error("covariogram equality with non-integer multiplicity");
  return v;
}

RationalLattice crown_lattice() {
  return RationalLattice::from_columns({{Rat(1), Rat(1)}, {Rat(1), Rat(-1)}});
}

TilingVerdict crown_example_check() {
  return check_multitile_polygon(builtin_polygon("crown"), crown_lattice());
}

namespace {

VdcReport vdc_impl(const RationalPolygon& Q, const RationalLattice& L, bool strict) {
  if (L.dim != 2) throw DimensionMismatch("continuous engine is 2-d");
  VdcReport r;
  const Rat vol = Q.area();
  const Rat ratio = vol / L.det;
  r.diff_count = static_cast<long>(continuous_covariogram_terms(Q, Q, L).size());
  r.bound_a_holds = Rat(r.diff_count) >= ratio;

  r.part_b_applicable = is_convex(Q) && is_centrally_symmetric(Q);
  if (!r.part_b_applicable) {
    if (strict) {
      if (!is_convex(Q)) throw NotConvex();
      throw NotCentrallySymmetric();
    }
    return r;
  }
  const Vec2q lo = Q.bbox_lo(), hi = Q.bbox_hi();
  long count = 0;
  for (const VecQ& n : L.points_in_box({lo.x, lo.y}, {hi.x, hi.y}))
    if (point_in_polygon(Q, {n[0], n[1]}) == 2) ++count;
  r.q_count = count;
  r.bound_b_holds = Rat(r.q_count) >= ratio / 4;  // 2^d = 4 in the plane
  return r;
}

}  // namespace

VdcReport van_der_corput_counts(const RationalPolygon& Q, const RationalLattice& L) {
  return vdc_impl(Q, L, false);
}

VdcReport van_der_corput_counts_strict(const RationalPolygon& Q, const RationalLattice& L) {
  return vdc_impl(Q, L, true);
}

namespace {

// closed convex polygons meet iff no edge normal of either separates them
bool convex_touch(const RationalPolygon& P, const RationalPolygon& Q) {
  for (const auto* poly : {&P, &Q}) {
    const auto& vs = poly->vertices();
    const std::size_t n = vs.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Vec2q e = vs[(i + 1) % n] - vs[i];
      const Vec2q normal{-e.y, e.x};
      Rat pmin, pmax, qmin, qmax;
      bool first = true;
      for (const Vec2q& v : P.vertices()) {
        const Rat d = normal.x * v.x + normal.y * v.y;
        if (first || d < pmin) pmin = d;
        if (first || d > pmax) pmax = d;
        first = false;
      }
      first = true;
      for (const Vec2q& v : Q.vertices()) {
        const Rat d = normal.x * v.x + normal.y * v.y;
        if (first || d < qmin) qmin = d;
        if (first || d > qmax) qmax = d;
        first = false;
      }
      if (pmax < qmin || qmax < pmin) return false;
    }
  }
  return true;
}

}  // namespace

bool symmetric_difference_body_check(const RationalPolygon& Q, int grid_n) {
  if (!is_convex(Q)) throw NotConvex();
  if (!is_centrally_symmetric(Q)) throw NotCentrallySymmetric();

  const RationalPolygon twoQ = Q.scaled(Rat(2));
  const Vec2q lo = twoQ.bbox_lo(), hi = twoQ.bbox_hi();
  const Rat margin(1, 2);
  const Rat x0 = lo.x - margin, x1 = hi.x + margin;
  const Rat y0 = lo.y - margin, y1 = hi.y + margin;
  for (int i = 0; i <= 2 * grid_n; ++i) {
    for (int j = 0; j <= 2 * grid_n; ++j) {
      const Rat fx = make_rat(Int(i), Int(2 * grid_n));
      const Rat fy = make_rat(Int(j), Int(2 * grid_n));
      const Vec2q x{x0 + fx * (x1 - x0), y0 + fy * (y1 - y0)};
      const bool in_2q = point_in_polygon(twoQ, x) != 0;
      const bool in_diff = convex_touch(Q, Q.translated(x));
      if (in_2q != in_diff) return false;
    }
  }
  // vertices of 2Q are extreme points of Q - Q; both memberships must agree there
  for (const Vec2q& v : twoQ.vertices()) {
    if (!convex_touch(Q, Q.translated(v))) return false;
  }
  return true;
}

namespace {

RationalPolygon make_poly(std::vector<std::pair<long, long>> pts) {
  std::vector<Vec2q> vs;
  vs.reserve(pts.size());
  for (auto [x, y] : pts) vs.push_back({Rat(x), Rat(y)});
  return RationalPolygon::from_vertices(std::move(vs));
}

RationalPolygon make_poly_q(std::vector<std::pair<Rat, Rat>> pts) {
  std::vector<Vec2q> vs;
  vs.reserve(pts.size());
  for (auto& [x, y] : pts) vs.push_back({x, y});
  return RationalPolygon::from_vertices(std::move(vs));
}

std::map<std::string, RationalPolygon> make_builtins() {
  std::map<std::string, RationalPolygon> m;
  m.emplace("unit_square", make_poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  m.emplace("rect_1x2", make_poly({{0, 0}, {2, 0}, {2, 1}, {0, 1}}));
  m.emplace("standard_triangle", make_poly({{0, 0}, {1, 0}, {0, 1}}));
  m.emplace("lshape", make_poly({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}));
  const Rat h(1, 2);
  // volume-4 crown: the 2x2 square with two bottom notches moved to the top
  // by the lattice vector (0,2), so it still 2-tiles with {(1,1),(1,-1)}
  m.emplace("crown", make_poly_q({{Rat(0), Rat(0)},
                                  {h, h},
                                  {Rat(1), Rat(0)},
                                  {Rat(1) + h, h},
                                  {Rat(2), Rat(0)},
                                  {Rat(2), Rat(2)},
                                  {Rat(1) + h, Rat(2) + h},
                                  {Rat(1), Rat(2)},
                                  {h, Rat(2) + h},
                                  {Rat(0), Rat(2)}}));
  // volume-5 nonconvex body whose covariogram sum over Z^2 is 26 > 25
  m.emplace("nontiler_5", make_poly_q({{Rat(0), Rat(0)},
                                       {Rat(2), Rat(0)},
                                       {Rat(2), h},
                                       {Rat(4), h},
                                       {Rat(4), Rat(1)},
                                       {Rat(2), Rat(1)},
                                       {Rat(2), Rat(2)},
                                       {Rat(0), Rat(2)}}));
  return m;
}

}  // namespace

const RationalPolygon& builtin_polygon(const std::string& name) {
  static const std::map<std::string, RationalPolygon> builtins = make_builtins();
  const auto it = builtins.find(name);
  if (it == builtins.end()) throw ParseError("unknown builtin polygon: '" + name + "'");
  return it->second;
}

std::vector<std::string> builtin_polygon_names() {
  return {"unit_square", "rect_1x2", "standard_triangle", "crown", "lshape", "nontiler_5"};
}

}  // namespace multitile
