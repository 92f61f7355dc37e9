#pragma once

#include <complex>
#include <string>
#include <vector>

#include "multitile/discrete.hpp"
#include "multitile/geometry.hpp"
#include "multitile/lattice.hpp"
#include "multitile/numeric.hpp"
#include "multitile/reports.hpp"

namespace multitile {

using FourierValue = std::complex<double>;

// Transform of the centered cube of side eps: eps^d prod_k sinc(eps xi_k).
// Real; vanishes iff some eps * xi_k is a nonzero integer.
FourierValue cube_ft(const std::vector<double>& xi, double eps);

// Transform of the eps-thickening of F:
// cube_ft(xi, eps) * sum_{a in F} e^{-2 pi i <xi, a>}.
FourierValue thickening_ft(const FinitePointSet& F, const std::vector<double>& xi, double eps);

// Transform of the standard simplex {x >= 0, sum x_i <= 1} via confluent
// divided differences of e^{-2 pi i t} over the nodes {0, xi_1, ..., xi_d};
// exact coordinate ties are handled with derivatives, near-ties (gap below
// kConfluenceGap) fall back to quadrature. simplex_ft({0,...,0}) = 1/d!.
FourierValue simplex_ft(const std::vector<double>& xi);

inline constexpr double kConfluenceGap = 1e-6;

// Dimension-reducing adaptive quadrature for the same transform;
// independent of the divided-difference path.
FourierValue simplex_ft_quadrature(const std::vector<double>& xi, double tol = 1e-10);

// Transform of a polygon indicator as a sum over its triangulation.
FourierValue polygon_ft(const RationalPolygon& P, const std::vector<double>& xi);

// Triangulation compiled to doubles for repeated evaluation.
class PolygonTransform {
 public:
  explicit PolygonTransform(const RationalPolygon& P);
  FourierValue eval(double xi0, double xi1) const;

 private:
  struct Tri {
    double v0[2];
    double col1[2], col2[2];  // edge vectors
    double absdet;
  };
  std::vector<Tri> tris_;
};

// Exact covariogram lattice sum of A against B + x versus the truncated
// dual sum (1/det) sum_{|xi| <= r} ft_A(xi) conj(ft_B(xi)) e^{2 pi i <xi,x>}.
// The trend holds rows at radius / 2^k for k = trend_halvings .. 0.
SpectralReport bombieri_siegel_verify(const RationalPolygon& A, const RationalPolygon& B,
                                      const RationalLattice& L, const Vec2q& x, double radius,
                                      int trend_halvings = 2);

struct KolReport {
  bool vanishes = false;
  double worst = 0;
  std::size_t checked = 0;
};

// max |polygon_ft(Q, xi)| over nonzero xi in L* with |xi| <= radius;
// vanishes iff the max stays below tol. Numeric companion of the exact
// covariogram equality verdict.
KolReport kolountzakis_check(const RationalPolygon& Q, const RationalLattice& L, double radius,
                             double tol);

// vol A * vol B = - sum_{xi != 0} ft_A(xi) conj(ft_B(xi)) cos(2 pi <xi, x>),
// valid when every A cap (B + n), n != 0, and every A cap (B + x + n) has
// zero area (checked exactly; HypothesisViolated otherwise).
SpectralReport spectral_volume(const RationalPolygon& A, const RationalPolygon& B,
                               const RationalLattice& L, const Vec2q& x, double radius,
                               int trend_halvings = 2);

// Truncated spectral sums over the nonvanishing dual families of the
// standard triangle / tetrahedron, solved for the implied zeta value.
ZetaReport zeta2_demo(long K);
ZetaReport zeta4_demo(long K);

// 50-digit evaluation of |sum_{n in F} e^{2 pi i <r, n>}| for cross-checking
// the cyclotomic verdict.
std::string exp_sum_abs_hp50(const FinitePointSet& F, const DualCosetRep& r);
bool exp_sum_vanishes_hp50(const FinitePointSet& F, const DualCosetRep& r);  // |sum| < 1e-30

}  // namespace multitile
