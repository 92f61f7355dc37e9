#include "multitile/spectral.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "multitile/errors.hpp"

namespace multitile {

namespace {

using Cplx = std::complex<double>;
constexpr double kTwoPi = 2.0 * M_PI;

Cplx expc(double t) {  // e^{-2 pi i t}
  return {std::cos(kTwoPi * t), -std::sin(kTwoPi * t)};
}

// (-2 pi i)^k
Cplx neg_two_pi_i_pow(int k) {
  Cplx r{1.0, 0.0};
  const Cplx base{0.0, -kTwoPi};
  for (int i = 0; i < k; ++i) r *= base;
  return r;
}

// Confluent Newton divided difference of f(t) = e^{-2 pi i t}.
// Equal nodes use f^{(k)}(t) / k!; the caller guarantees that distinct
// nodes are separated by at least kConfluenceGap.
Cplx exp_divided_difference(std::vector<double> nodes) {
  std::sort(nodes.begin(), nodes.end());
  const std::size_t m = nodes.size();
  std::vector<Cplx> col(m);
  for (std::size_t i = 0; i < m; ++i) col[i] = expc(nodes[i]);
  Cplx deriv_scale{1.0, 0.0};  // (-2 pi i)^k / k!
  for (std::size_t k = 1; k < m; ++k) {
    deriv_scale *= Cplx{0.0, -kTwoPi} / static_cast<double>(k);
    for (std::size_t i = 0; i + k < m; ++i) {
      const double gap = nodes[i + k] - nodes[i];
      if (gap == 0.0)
        col[i] = deriv_scale * expc(nodes[i]);
      else
        col[i] = (col[i + 1] - col[i]) / gap;
    }
  }
  return col[0];
}

bool near_confluent(const std::vector<double>& nodes) {
  std::vector<double> s = nodes;
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    const double gap = s[i + 1] - s[i];
    if (gap != 0.0 && gap < kConfluenceGap) return true;
  }
  return false;
}

// int_0^1 e^{-2 pi i t s} ds
Cplx segment_ft(double t) {
  if (std::fabs(t) < 1e-6) {
    const Cplx z{0.0, -kTwoPi * t};
    Cplx sum{1.0, 0.0}, term{1.0, 0.0};
    for (int n = 1; n <= 6; ++n) {
      term *= z / static_cast<double>(n + 1);
      sum += term;
    }
    return sum;
  }
  const Cplx num = Cplx{1.0, 0.0} - expc(t);
  return num / Cplx{0.0, kTwoPi * t};
}

// Gauss-Kronrod 7-15 on [a, b]; the irrational nodes avoid the aliasing a
// dyadic rule suffers on e^{2 pi i k s} integrands.
const double kGkNodes[15] = {
    -0.991455371120813, -0.949107912342759, -0.864864423359769, -0.741531185599394,
    -0.586087235467691, -0.405845151377397, -0.207784955007898, 0.0,
    0.207784955007898,  0.405845151377397,  0.586087235467691,  0.741531185599394,
    0.864864423359769,  0.949107912342759,  0.991455371120813};
const double kKronrodW[15] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728,
    0.204432940075298, 0.190350578064785, 0.169004726639267, 0.140653259715525,
    0.104790010322250, 0.063092092629979, 0.022935322010529};
const double kGaussW[7] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                           0.417959183673469, 0.381830050505119, 0.279705391489277,
                           0.129484966168870};

template <typename F>
Cplx gk15(const F& f, double a, double b, double& err) {
  const double h = 0.5 * (b - a), c = 0.5 * (a + b);
  Cplx kron{0.0, 0.0}, gauss{0.0, 0.0};
  for (int i = 0; i < 15; ++i) {
    const Cplx v = f(c + h * kGkNodes[i]);
    kron += kKronrodW[i] * v;
    if (i % 2 == 1) gauss += kGaussW[i / 2] * v;
  }
  kron *= h;
  gauss *= h;
  err = std::abs(kron - gauss);
  return kron;
}

template <typename F>
Cplx adaptive_gk(const F& f, double a, double b, double tol, int depth) {
  double err = 0;
  const Cplx whole = gk15(f, a, b, err);
  if (depth <= 0 || err < tol) return whole;
  const double m = 0.5 * (a + b);
  return adaptive_gk(f, a, m, 0.5 * tol, depth - 1) + adaptive_gk(f, m, b, 0.5 * tol, depth - 1);
}

template <typename F>
Cplx integrate01(const F& f, double tol) {
  return adaptive_gk(f, 0.0, 1.0, tol, 18);
}

Cplx simplex_quad_impl(const std::vector<double>& xi, double tol) {
  const std::size_t d = xi.size();
  if (d == 1) return segment_ft(xi[0]);
  const std::vector<double> rest(xi.begin() + 1, xi.end());
  auto f = [&](double s) {
    std::vector<double> scaled(rest.size());
    for (std::size_t i = 0; i < rest.size(); ++i) scaled[i] = (1.0 - s) * rest[i];
    Cplx inner = simplex_quad_impl(scaled, tol / 8.0);
    double shrink = 1.0;
    for (std::size_t i = 1; i < d; ++i) shrink *= (1.0 - s);
    return expc(xi[0] * s) * shrink * inner;
  };
  return integrate01(f, tol);
}

}  // namespace

FourierValue cube_ft(const std::vector<double>& xi, double eps) {
  if (eps <= 0) throw Error("eps must be positive");
  double v = 1.0;
  for (double x : xi) v *= eps * sinc(eps * x);
  return {v, 0.0};
}

FourierValue thickening_ft(const FinitePointSet& F, const std::vector<double>& xi, double eps) {
  if (static_cast<int>(xi.size()) != F.dim) throw DimensionMismatch();
  const FourierValue box = cube_ft(xi, eps);
  if (box == FourierValue{0.0, 0.0}) return box;
  std::vector<Cplx> parts;
  parts.reserve(F.size());
  for (const VecZ& n : F.points) {
    double ip = 0;
    for (int i = 0; i < F.dim; ++i) ip += xi[i] * n[i].get_d();
    parts.push_back(expc(ip));
  }
  return box * pairwise_sum(std::move(parts));
}

FourierValue simplex_ft(const std::vector<double>& xi) {
  const int d = static_cast<int>(xi.size());
  if (d < 1) throw DimensionMismatch("simplex dimension must be >= 1");
  bool origin = true;
  for (double x : xi)
    if (x != 0.0) {
      origin = false;
      break;
    }
  if (origin) {
    double fact = 1.0;
    for (int i = 2; i <= d; ++i) fact *= i;
    return {1.0 / fact, 0.0};
  }
  std::vector<double> nodes(xi);
  nodes.push_back(0.0);
  const FourierValue v = near_confluent(nodes)
                             ? simplex_ft_quadrature(xi)
                             : exp_divided_difference(std::move(nodes)) / neg_two_pi_i_pow(d);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw Error("simplex transform produced a non-finite value");
  return v;
}

FourierValue simplex_ft_quadrature(const std::vector<double>& xi, double tol) {
  if (xi.empty()) throw DimensionMismatch("simplex dimension must be >= 1");
  return simplex_quad_impl(xi, tol);
}

PolygonTransform::PolygonTransform(const RationalPolygon& P) {
  for (const Triangle& t : triangulate(P)) {
    Tri c;
    c.v0[0] = to_double(t[0].x);
    c.v0[1] = to_double(t[0].y);
    c.col1[0] = to_double(Rat(t[1].x - t[0].x));
    c.col1[1] = to_double(Rat(t[1].y - t[0].y));
    c.col2[0] = to_double(Rat(t[2].x - t[0].x));
    c.col2[1] = to_double(Rat(t[2].y - t[0].y));
    c.absdet = std::fabs(c.col1[0] * c.col2[1] - c.col1[1] * c.col2[0]);
    tris_.push_back(c);
  }
}

FourierValue PolygonTransform::eval(double xi0, double xi1) const {
  Cplx total{0.0, 0.0};
  for (const Tri& t : tris_) {
    const double phase = xi0 * t.v0[0] + xi1 * t.v0[1];
    const std::vector<double> mapped{xi0 * t.col1[0] + xi1 * t.col1[1],
                                     xi0 * t.col2[0] + xi1 * t.col2[1]};
    total += t.absdet * expc(phase) * simplex_ft(mapped);
  }
  return total;
}

FourierValue polygon_ft(const RationalPolygon& P, const std::vector<double>& xi) {
  if (xi.size() != 2) throw DimensionMismatch("polygon transforms are 2-d");
  return PolygonTransform(P).eval(xi[0], xi[1]);
}

namespace {

// shared tail of the truncated dual-sum reports
SpectralReport truncated_dual_report(const Rat& lhs, std::vector<std::pair<Rat, Cplx>> terms,
                                     double scale, double radius, int trend_halvings) {
  SpectralReport rep;
  rep.lhs_exact = lhs;
  rep.lhs = to_double(lhs);
  rep.radius = radius;

  std::vector<double> radii;
  for (int k = std::max(trend_halvings, 0); k >= 0; --k)
    radii.push_back(radius / static_cast<double>(1 << k));
  for (double r : radii) {
    const Rat r2 = Rat(mpq_class(r)) * Rat(mpq_class(r));
    std::vector<Cplx> slice;
    for (const auto& [n2, t] : terms) {
      if (n2 > r2) break;
      slice.push_back(t);
    }
    SpectralTrendRow row;
    row.radius = r;
    row.terms = slice.size();
    const Cplx s = scale * pairwise_sum(std::move(slice));
    row.rhs = s.real();
    row.residual = rep.lhs - row.rhs;
    rep.max_imag = std::max(rep.max_imag, std::fabs(s.imag()));
    rep.trend.push_back(row);
  }
  for (std::size_t i = 1; i < rep.trend.size(); ++i)
    if (rep.trend[i].residual > rep.trend[i - 1].residual + 1e-9)
      rep.nonconvergence_warning = true;
  rep.converged = !rep.nonconvergence_warning;
  rep.rhs = rep.trend.back().rhs;
  rep.residual = rep.trend.back().residual;
  rep.term_count = rep.trend.back().terms;
  return rep;
}

}  // namespace

SpectralReport bombieri_siegel_verify(const RationalPolygon& A, const RationalPolygon& B,
                                      const RationalLattice& L, const Vec2q& x, double radius,
                                      int trend_halvings) {
  if (L.dim != 2) throw DimensionMismatch("continuous engine is 2-d");
  if (radius <= 0) throw Error("radius must be positive");

  const Rat lhs = continuous_covariogram_sum(A, B.translated(x), L);

  const PolygonTransform fta(A), ftb(B);
  const std::vector<VecQ> duals = enumerate_dual_in_ball(L, Rat(mpq_class(radius)));
  std::vector<std::pair<Rat, Cplx>> terms;
  terms.reserve(duals.size());
  for (const VecQ& xi : duals) {
    const Rat n2 = xi[0] * xi[0] + xi[1] * xi[1];
    const double x0 = to_double(xi[0]), x1 = to_double(xi[1]);
    const Rat ip = xi[0] * x.x + xi[1] * x.y;
    const Cplx term =
        fta.eval(x0, x1) * std::conj(ftb.eval(x0, x1)) * unit_phase(to_double(q_frac(ip)));
    terms.emplace_back(n2, term);
  }
  return truncated_dual_report(lhs, std::move(terms), 1.0 / to_double(L.det), radius,
                               trend_halvings);
}

KolReport kolountzakis_check(const RationalPolygon& Q, const RationalLattice& L, double radius,
                             double tol) {
  if (L.dim != 2) throw DimensionMismatch("continuous engine is 2-d");
  if (radius <= 0 || tol <= 0) throw Error("radius and tol must be positive");
  const PolygonTransform ft(Q);
  KolReport r;
  for (const VecQ& xi : enumerate_dual_in_ball(L, Rat(mpq_class(radius)))) {
    if (xi[0] == 0 && xi[1] == 0) continue;
    const double v = std::abs(ft.eval(to_double(xi[0]), to_double(xi[1])));
    r.worst = std::max(r.worst, v);
    ++r.checked;
  }
  r.vanishes = r.worst < tol;
  return r;
}

SpectralReport spectral_volume(const RationalPolygon& A, const RationalPolygon& B,
                               const RationalLattice& L, const Vec2q& x, double radius,
                               int trend_halvings) {
  if (L.dim != 2) throw DimensionMismatch("continuous engine is 2-d");
  if (radius <= 0) throw Error("radius must be positive");

  // hypotheses, exactly: A misses every nonzero lattice translate of B,
  // and every lattice translate of B + x
  for (const auto& [n, a] : continuous_covariogram_terms(A, B, L)) {
    if (n[0] == 0 && n[1] == 0) continue;
    throw HypothesisViolated("A overlaps B + (" + rational_str(n[0]) + "," + rational_str(n[1]) +
                             ")");
  }
  for (const auto& [n, a] : continuous_covariogram_terms(A, B.translated(x), L))
    throw HypothesisViolated("A overlaps B + x + (" + rational_str(n[0]) + "," +
                             rational_str(n[1]) + ")");

  const Rat lhs = A.area() * B.area();
  const PolygonTransform fta(A), ftb(B);
  const std::vector<VecQ> duals = enumerate_dual_in_ball(L, Rat(mpq_class(radius)));
  std::vector<std::pair<Rat, Cplx>> terms;
  for (const VecQ& xi : duals) {
    if (xi[0] == 0 && xi[1] == 0) continue;
    const Rat n2 = xi[0] * xi[0] + xi[1] * xi[1];
    const double x0 = to_double(xi[0]), x1 = to_double(xi[1]);
    const Rat ip = xi[0] * x.x + xi[1] * x.y;
    const double c = std::cos(kTwoPi * to_double(q_frac(ip)));
    terms.emplace_back(n2, -fta.eval(x0, x1) * std::conj(ftb.eval(x0, x1)) * c);
  }
  return truncated_dual_report(lhs, std::move(terms), 1.0, radius, trend_halvings);
}

// ---------------------------------------------------------------------------
// zeta demos

ZetaReport zeta2_demo(long K) {
  if (K < 1) throw Error("K must be >= 1");
  std::vector<double> parts;
  parts.reserve(static_cast<std::size_t>(6 * K));
  for (long k = -K; k <= K; ++k) {
    if (k == 0) continue;
    const double kd = static_cast<double>(k);
    parts.push_back(std::norm(simplex_ft({0.0, kd})));
    parts.push_back(std::norm(simplex_ft({kd, 0.0})));
    parts.push_back(std::norm(simplex_ft({kd, kd})));
  }
  const double family_sum = pairwise_sum(std::move(parts));
  ZetaReport z;
  z.terms = K;
  z.partial = 2.0 * M_PI * M_PI / 3.0 * family_sum;
  z.target = M_PI * M_PI / 6.0;
  z.err = std::fabs(z.partial - z.target);
  return z;
}

ZetaReport zeta4_demo(long K) {
  if (K < 1) throw Error("K must be >= 1");
  const double pi2 = M_PI * M_PI;
  const double pi4 = pi2 * pi2;

  std::vector<double> parts;
  for (long k = -K; k <= K; ++k) {
    if (k == 0) continue;
    const double kd = static_cast<double>(k);
    // double-index families, truncated in their own indices k and m = k - l
    for (long l = -K; l <= K; ++l) {
      if (l == 0 || l == k) continue;
      const double ld = static_cast<double>(l);
      parts.push_back(3.0 * std::norm(simplex_ft({0.0, kd, ld})));
      parts.push_back(3.0 * std::norm(simplex_ft({kd, kd, kd - ld})));
    }
    parts.push_back(3.0 * std::norm(simplex_ft({0.0, 0.0, kd})));
    parts.push_back(std::norm(simplex_ft({kd, kd, kd})));
    parts.push_back(3.0 * std::norm(simplex_ft({0.0, kd, kd})));
  }
  const double family_sum = pairwise_sum(std::move(parts));
  const double c_partial = zeta2_demo(K).partial;

  ZetaReport z;
  z.terms = K;
  z.partial = (16.0 * pi4 * family_sum - 24.0 * c_partial * c_partial - 8.0 * pi2 * c_partial) / 20.0;
  z.target = pi4 / 90.0;
  z.err = std::fabs(z.partial - z.target);
  return z;
}

// ---------------------------------------------------------------------------
// 50-digit cross-check

namespace {

using Hp = boost::multiprecision::cpp_bin_float_50;

Hp exp_sum_abs_hp(const FinitePointSet& F, const DualCosetRep& r) {
  if (static_cast<int>(r.vec.size()) != F.dim) throw DimensionMismatch();
  const Hp two_pi = 2 * boost::math::constants::pi<Hp>();
  Hp re = 0, im = 0;
  for (const VecZ& n : F.points) {
    Rat ip(0);
    for (int i = 0; i < F.dim; ++i) ip += r.vec[i] * Rat(n[i]);
    const Rat f = q_frac(ip);
    const Hp angle = two_pi * Hp(f.get_num().get_str()) / Hp(f.get_den().get_str());
    re += cos(angle);
    im += sin(angle);
  }
  return sqrt(re * re + im * im);
}

}  // namespace

std::string exp_sum_abs_hp50(const FinitePointSet& F, const DualCosetRep& r) {
  return exp_sum_abs_hp(F, r).str(50);
}

bool exp_sum_vanishes_hp50(const FinitePointSet& F, const DualCosetRep& r) {
  return exp_sum_abs_hp(F, r) < Hp("1e-30");
}

}  // namespace multitile
