#include <doctest.h>

#include <cmath>
#include <random>

#include "multitile/errors.hpp"
#include "multitile/spectral.hpp"
#include "oracles.hpp"

using namespace multitile;

namespace {

const double pi = M_PI;

RationalLattice qlat(std::vector<std::vector<std::string>> cols) {
  std::vector<VecQ> qc;
  for (auto& c : cols) {
    VecQ v;
    for (auto& e : c) v.push_back(parse_rational(e));
    qc.push_back(std::move(v));
  }
  return RationalLattice::from_columns(std::move(qc));
}

const RationalLattice z2 = qlat({{"1", "0"}, {"0", "1"}});

FinitePointSet set1d(std::vector<long> pts) {
  std::vector<VecZ> v;
  for (long p : pts) v.push_back({Int(p)});
  return FinitePointSet::from_points(1, std::move(v));
}

Vec2q pt(const std::string& x, const std::string& y) {
  return {parse_rational(x), parse_rational(y)};
}

// independent of the divided-difference path: triangulation + quadrature
FourierValue oracle_polygon_ft(const RationalPolygon& P, double x0, double x1) {
  FourierValue total{0.0, 0.0};
  for (const Triangle& t : triangulate(P)) {
    const double v0x = to_double(t[0].x), v0y = to_double(t[0].y);
    const double c1x = to_double(Rat(t[1].x - t[0].x)), c1y = to_double(Rat(t[1].y - t[0].y));
    const double c2x = to_double(Rat(t[2].x - t[0].x)), c2y = to_double(Rat(t[2].y - t[0].y));
    const double det = std::fabs(c1x * c2y - c1y * c2x);
    const double phase = -2.0 * pi * (x0 * v0x + x1 * v0y);
    total += det * FourierValue{std::cos(phase), std::sin(phase)} *
             simplex_ft_quadrature({x0 * c1x + x1 * c1y, x0 * c2x + x1 * c2y}, 1e-11);
  }
  return total;
}

}  // namespace

TEST_CASE("sinc") {
  CHECK(sinc(0.0) == 1.0);
  CHECK(sinc(1.0) == 0.0);
  CHECK(sinc(-7.0) == 0.0);
  CHECK(sinc(0.5) == doctest::Approx(2.0 / pi).epsilon(1e-14));
  CHECK(sinc(1e-6) == doctest::Approx(1.0 - pi * pi * 1e-12 / 6.0).epsilon(1e-15));
}

TEST_CASE("cube transform") {
  CHECK(cube_ft({0.0, 0.0}, 1.0).real() == 1.0);
  CHECK(cube_ft({1.0, 0.0}, 1.0) == FourierValue{0.0, 0.0});
  CHECK(cube_ft({0.5, 0.0}, 1.0).real() == doctest::Approx(2.0 / pi).epsilon(1e-14));
  CHECK(cube_ft({0.0}, 0.5).real() == doctest::Approx(0.5).epsilon(1e-14));
  // vanishes iff some eps*xi_k is a nonzero integer
  CHECK(cube_ft({4.0, 0.3}, 0.5) == FourierValue{0.0, 0.0});
  CHECK(std::abs(cube_ft({3.0, 0.3}, 0.5)) > 0.0);
}

TEST_CASE("thickening transform") {
  const FinitePointSet single = set1d({0});
  for (double xi : {0.0, 0.3, 1.0, 2.7})
    CHECK(std::abs(thickening_ft(single, {xi}, 1.0) - cube_ft({xi}, 1.0)) < 1e-15);

  const FinitePointSet F = set1d({1, 3, 4, 6});
  CHECK(thickening_ft(F, {0.0}, 1.0).real() == doctest::Approx(4.0));
  CHECK(std::abs(thickening_ft(F, {0.25}, 1.0)) < 1e-12);  // the dual condition kills it

  // all-integer nonzero frequencies are killed by the cube factor, exactly
  const FinitePointSet F2 = FinitePointSet::from_points(
      2, {{Int(0), Int(0)}, {Int(2), Int(1)}, {Int(1), Int(2)}, {Int(1), Int(3)}});
  CHECK(thickening_ft(F2, {3.0, -2.0}, 1.0) == FourierValue{0.0, 0.0});
  CHECK(thickening_ft(F2, {0.0, 0.0}, 1.0).real() == doctest::Approx(4.0));
}

TEST_CASE("simplex transform closed forms match the known families") {
  CHECK(simplex_ft({0.0, 0.0}).real() == 0.5);
  CHECK(simplex_ft({0.0, 0.0}).imag() == 0.0);
  CHECK(simplex_ft({0.0, 0.0, 0.0}).real() == doctest::Approx(1.0 / 6.0).epsilon(1e-15));

  for (int k = 1; k <= 20; ++k) {
    const double kd = k;
    // |ft(0,k)|^2 = 1/(4 pi^2 k^2), also at (k,0) and (k,k)
    const double expected2 = 1.0 / (4.0 * pi * pi * kd * kd);
    CHECK(std::norm(simplex_ft({0.0, kd})) == doctest::Approx(expected2).epsilon(1e-10));
    CHECK(std::norm(simplex_ft({kd, 0.0})) == doctest::Approx(expected2).epsilon(1e-10));
    CHECK(std::norm(simplex_ft({kd, kd})) == doctest::Approx(expected2).epsilon(1e-10));
    CHECK(std::norm(simplex_ft({0.0, -kd})) == doctest::Approx(expected2).epsilon(1e-10));

    // |ft(0,0,k)|^2 = |ft(k,k,k)|^2 = (1/16pi^4)(1/k^4 + pi^2/k^2)
    const double expected3 =
        (1.0 / (16.0 * std::pow(pi, 4))) * (1.0 / std::pow(kd, 4) + pi * pi / (kd * kd));
    CHECK(std::norm(simplex_ft({0.0, 0.0, kd})) == doctest::Approx(expected3).epsilon(1e-10));
    CHECK(std::norm(simplex_ft({kd, kd, kd})) == doctest::Approx(expected3).epsilon(1e-10));

    // |ft(0,k,k)|^2 = (1/16pi^4) * 4/k^4
    CHECK(std::norm(simplex_ft({0.0, kd, kd})) ==
          doctest::Approx(4.0 / (16.0 * std::pow(pi, 4) * std::pow(kd, 4))).epsilon(1e-10));
  }

  // |ft(0,k,l)|^2 = 1/(16pi^4 k^2 l^2); |ft(k,k,l)|^2 = 1/(16pi^4 k^2 (k-l)^2)
  for (long k = 1; k <= 5; ++k)
    for (long l = -5; l <= 5; ++l) {
      if (l == 0 || l == k) continue;
      const double kd = k, ld = l;
      CHECK(std::norm(simplex_ft({0.0, kd, ld})) ==
            doctest::Approx(1.0 / (16.0 * std::pow(pi, 4) * kd * kd * ld * ld)).epsilon(1e-10));
      CHECK(std::norm(simplex_ft({kd, kd, ld})) ==
            doctest::Approx(1.0 / (16.0 * std::pow(pi, 4) * kd * kd * (kd - ld) * (kd - ld)))
                .epsilon(1e-10));
    }
}

TEST_CASE("simplex transform vanishes at distinct nonzero integer coordinates") {
  std::mt19937_64 rng(321);
  std::uniform_int_distribution<long> coord(-25, 25);
  int done = 0;
  while (done < 100) {
    const int d = 2 + static_cast<int>(rng() % 2);
    std::vector<double> xi(d);
    bool ok = true;
    for (int i = 0; i < d; ++i) {
      xi[i] = static_cast<double>(coord(rng));
      if (xi[i] == 0.0) ok = false;
      for (int j = 0; j < i; ++j)
        if (xi[i] == xi[j]) ok = false;
    }
    if (!ok) continue;
    ++done;
    CHECK(std::abs(simplex_ft(xi)) < 1e-10);
  }
}

TEST_CASE("divided differences agree with adaptive quadrature off the diagonal") {
  std::mt19937_64 rng(654);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  int done = 0;
  while (done < 100) {
    const int d = 2 + static_cast<int>(rng() % 2);
    std::vector<double> xi(d);
    bool ok = true;
    for (int i = 0; i < d; ++i) {
      xi[i] = u(rng);
      if (std::fabs(xi[i]) < 0.05) ok = false;
      for (int j = 0; j < i; ++j)
        if (std::fabs(xi[i] - xi[j]) < 0.05) ok = false;
    }
    if (!ok) continue;
    ++done;
    const FourierValue dd = simplex_ft(xi);
    const FourierValue quad = simplex_ft_quadrature(xi, 1e-10);
    CHECK(std::abs(dd - quad) < 1e-8);
  }
}

TEST_CASE("near-confluent inputs fall back smoothly") {
  const FourierValue limit = simplex_ft({1.0, 1.0});  // exact tie, derivative path
  const FourierValue nearby = simplex_ft({1.0 + 5e-7, 1.0});  // quadrature path
  CHECK(std::abs(limit - nearby) < 1e-4);
  const FourierValue outside = simplex_ft({1.0 + 2e-6, 1.0});  // divided differences again
  CHECK(std::abs(nearby - outside) < 1e-4);
}

TEST_CASE("polygon transform") {
  const RationalPolygon sq = builtin_polygon("unit_square");
  CHECK(std::abs(polygon_ft(sq, {1.0, 0.0})) < 1e-10);
  CHECK(std::abs(polygon_ft(sq, {0.0, -3.0})) < 1e-10);
  CHECK(polygon_ft(sq, {0.0, 0.0}).real() == doctest::Approx(1.0).epsilon(1e-12));

  const RationalPolygon tri = builtin_polygon("standard_triangle");
  CHECK(std::abs(polygon_ft(tri, {0.0, 3.0}) - simplex_ft({0.0, 3.0})) < 1e-14);
  CHECK(std::abs(polygon_ft(tri, {2.0, -1.0}) - simplex_ft({2.0, -1.0})) < 1e-13);

  for (const std::string& name : builtin_polygon_names()) {
    const RationalPolygon& P = builtin_polygon(name);
    CHECK(std::abs(polygon_ft(P, {0.0, 0.0}) - FourierValue{to_double(P.area()), 0.0}) < 1e-12);
  }
}

TEST_CASE("polygon transform against the quadrature oracle") {
  const RationalPolygon rect = builtin_polygon("rect_1x2");
  CHECK(std::abs(polygon_ft(rect, {0.5, 0.0}) - oracle_polygon_ft(rect, 0.5, 0.0)) < 1e-8);
  CHECK(std::abs(polygon_ft(rect, {0.5, 0.0})) < 1e-10);  // the 2-cycle cancels

  std::mt19937_64 rng(888);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 8; ++i) {
    const RationalPolygon P = oracles::random_simple_polygon(rng, 6);
    const double a = u(rng), b = u(rng);
    CHECK(std::abs(polygon_ft(P, {a, b}) - oracle_polygon_ft(P, a, b)) < 1e-8);
  }
}

TEST_CASE("conjugate symmetry of real-indicator transforms") {
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (int i = 0; i < 10; ++i) {
    const RationalPolygon P = oracles::random_simple_polygon(rng, 7);
    for (int s = 0; s < 5; ++s) {
      const double a = u(rng), b = u(rng);
      const FourierValue plus = polygon_ft(P, {a, b});
      const FourierValue minus = polygon_ft(P, {-a, -b});
      CHECK(std::abs(minus - std::conj(plus)) < 1e-13);
    }
  }
  for (int k = 1; k <= 5; ++k) {
    const double kd = k;
    CHECK(std::abs(simplex_ft({-kd, 0.5}) - std::conj(simplex_ft({kd, -0.5}))) < 1e-13);
  }
}

TEST_CASE("covariogram identity: exact side vs truncated dual side") {
  SUBCASE("unit square with Z^2 is exact at every radius") {
    const SpectralReport r =
        bombieri_siegel_verify(builtin_polygon("unit_square"), builtin_polygon("unit_square"),
                               z2, pt("0", "0"), 8.0);
    CHECK(r.lhs_exact == 1);
    CHECK(std::fabs(r.rhs - 1.0) < 1e-12);
    CHECK(std::fabs(r.residual) < 1e-12);
    CHECK(r.max_imag < 1e-12);
    CHECK(r.converged);
  }
  SUBCASE("standard triangle: residual is the zeta(2) tail") {
    const SpectralReport r =
        bombieri_siegel_verify(builtin_polygon("standard_triangle"),
                               builtin_polygon("standard_triangle"), z2, pt("0", "0"), 100.0);
    CHECK(r.lhs_exact == parse_rational("1/2"));
    for (const SpectralTrendRow& row : r.trend) {
      const double target = 3.0 / (2.0 * pi * pi * row.radius);
      CHECK(row.residual > 0.5 * target);
      CHECK(row.residual < 2.0 * target);
    }
    CHECK(r.max_imag < 1e-10);
    CHECK(r.converged);
  }
  SUBCASE("2-tiling rectangle shifted by x = (1/2, 0): both sides are k vol Q") {
    const SpectralReport r = bombieri_siegel_verify(
        builtin_polygon("rect_1x2"), builtin_polygon("rect_1x2"), z2, pt("1/2", "0"), 12.0);
    CHECK(r.lhs_exact == 4);  // k vol Q = 2 * 2
    CHECK(std::fabs(r.rhs - 4.0) < 1e-10);
    CHECK(r.max_imag < 1e-10);
  }
  SUBCASE("imaginary part stays numerically zero at generic x") {
    const SpectralReport r = bombieri_siegel_verify(
        builtin_polygon("rect_1x2"), builtin_polygon("rect_1x2"), z2, pt("1/3", "2/7"), 40.0);
    CHECK(r.max_imag < 1e-10);
  }
  SUBCASE("residuals are nonnegative and non-increasing for A = B, x = 0") {
    std::mt19937_64 rng(246);
    for (int i = 0; i < 20; ++i) {
      const RationalPolygon P = oracles::random_simple_polygon(rng, 7);
      const SpectralReport r = bombieri_siegel_verify(P, P, z2, pt("0", "0"), 24.0, 3);
      for (std::size_t j = 0; j < r.trend.size(); ++j) {
        CHECK(r.trend[j].residual >= -1e-10);
        if (j > 0) CHECK(r.trend[j].residual <= r.trend[j - 1].residual + 1e-9);
      }
      CHECK(r.max_imag < 1e-10);
      CHECK(r.converged);
    }
  }
}

TEST_CASE("a tiler makes the cross covariogram sum split for every second body") {
  // rect_1x2 2-tiles with Z^2, so against any compact B the lattice sum of
  // vol(A cap (B+n)) collapses to vol A vol B / det L, and every nonzero
  // dual term dies with the tiler's transform
  for (const std::string other : {"unit_square", "standard_triangle", "crown"}) {
    const RationalPolygon& B = builtin_polygon(other);
    const SpectralReport r = bombieri_siegel_verify(builtin_polygon("rect_1x2"), B, z2,
                                                    pt("0", "0"), 6.0);
    CHECK(r.lhs_exact == Rat(2) * B.area());
    CHECK(std::fabs(r.rhs - to_double(Rat(Rat(2) * B.area()))) < 1e-10);
  }
}

TEST_CASE("centrally symmetric identity with the half-body transform") {
  // sum over int(P) of vol(P cap (P+2n)) = vol^2 P / (4 det) + (4/det) sum |ft_{P/2}|^2
  auto check_symmetric_identity = [](const RationalPolygon& P, double radius, double tol) {
    const RationalPolygon half = P.scaled(parse_rational("1/2"));
    const Vec2q lo = P.bbox_lo(), hi = P.bbox_hi();
    Rat lhs(0);
    for (const VecQ& n : z2.points_in_box({lo.x, lo.y}, {hi.x, hi.y})) {
      if (point_in_polygon(P, {n[0], n[1]}) != 2) continue;
      lhs += intersection_area(P, P.translated({n[0] * 2, n[1] * 2}));
    }
    const PolygonTransform ft(half);
    double spectral = 0;
    for (const VecQ& xi : enumerate_dual_in_ball(z2, Rat(mpq_class(radius)))) {
      if (xi[0] == 0 && xi[1] == 0) continue;
      spectral += std::norm(ft.eval(to_double(xi[0]), to_double(xi[1])));
    }
    const Rat vol = P.area();
    const double rhs = to_double(Rat(vol * vol / 4)) + 4.0 * spectral;
    CHECK(std::fabs(to_double(lhs) - rhs) < tol);
  };
  check_symmetric_identity(
      RationalPolygon::from_vertices({pt("-1", "-1"), pt("1", "-1"), pt("1", "1"), pt("-1", "1")}),
      6.0, 1e-10);
  // diamond: the spectral side genuinely contributes
  check_symmetric_identity(
      RationalPolygon::from_vertices({pt("1", "0"), pt("0", "1"), pt("-1", "0"), pt("0", "-1")}),
      120.0, 2e-2);
}

TEST_CASE("dual-transform vanishing agrees with the exact verdict") {
  SUBCASE("builtins") {
    const double tol = 1e-8, radius = 10.0;
    const RationalLattice d2 = qlat({{"1", "1"}, {"1", "-1"}});
    for (const std::string& name : builtin_polygon_names()) {
      const RationalPolygon& P = builtin_polygon(name);
      for (const RationalLattice* L : {&z2, &d2}) {
        const bool exact = check_multitile_polygon(P, *L).is_multitiling;
        const KolReport k = kolountzakis_check(P, *L, radius, tol);
        CHECK(exact == k.vanishes);
      }
    }
  }
  SUBCASE("the triangle's worst dual value sits at the first nonvanishing frequency") {
    const KolReport k = kolountzakis_check(builtin_polygon("standard_triangle"), z2, 5.0, 1e-8);
    CHECK_FALSE(k.vanishes);
    CHECK(k.worst == doctest::Approx(1.0 / (2.0 * pi)).epsilon(1e-10));
  }
  SUBCASE("random polygons and lattices") {
    std::mt19937_64 rng(10101);
    for (int i = 0; i < 50; ++i) {
      const RationalPolygon P = (i % 2 == 0) ? oracles::random_simple_polygon(rng, 7)
                                             : oracles::random_convex_polygon(rng);
      const RationalLattice L = (i % 3 == 0) ? oracles::random_rational_lattice(rng)
                                             : oracles::random_integer_lattice_2d(rng);
      const bool exact = check_multitile_polygon(P, L).is_multitiling;
      const KolReport k = kolountzakis_check(P, L, 10.0, 1e-8);
      CHECK(exact == k.vanishes);
    }
  }
}

TEST_CASE("spectral volume formula") {
  SUBCASE("unit squares on a sparse lattice") {
    const RationalLattice sparse = qlat({{"3", "0"}, {"0", "3"}});
    const SpectralReport r =
        spectral_volume(builtin_polygon("unit_square"), builtin_polygon("unit_square"), sparse,
                        pt("3/2", "0"), 60.0);
    CHECK(r.lhs_exact == 1);
    CHECK(std::fabs(r.rhs - 1.0) < 0.05);
  }
  SUBCASE("violated hypotheses are rejected") {
    CHECK_THROWS_AS(spectral_volume(builtin_polygon("unit_square"),
                                    builtin_polygon("unit_square"), z2, pt("1", "0"), 10.0),
                    HypothesisViolated);
  }
  SUBCASE("different bodies: unit square against its half-scale copy") {
    const RationalLattice sparse = qlat({{"4", "0"}, {"0", "4"}});
    const SpectralReport r =
        spectral_volume(builtin_polygon("unit_square"),
                        builtin_polygon("unit_square").scaled(parse_rational("1/2")), sparse,
                        pt("2", "0"), 60.0);
    CHECK(r.lhs_exact == parse_rational("1/4"));
    CHECK(std::fabs(r.rhs - 0.25) < 0.05);
  }
}

TEST_CASE("zeta(2) demo") {
  const ZetaReport k1 = zeta2_demo(1);
  CHECK(k1.partial == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(k1.target == doctest::Approx(pi * pi / 6.0));

  const ZetaReport k10 = zeta2_demo(10);
  CHECK(k10.partial == doctest::Approx(1.5497677311665408).epsilon(1e-12));
  CHECK(k10.err == doctest::Approx(0.0951).epsilon(1e-3));

  for (long K : {10L, 100L, 1000L}) {
    const ZetaReport z = zeta2_demo(K);
    CHECK(z.err < 1.1 / static_cast<double>(K));
    CHECK(z.err > 0.9 / static_cast<double>(K + 1));
  }
}

TEST_CASE("zeta(4) demo") {
  const ZetaReport k1 = zeta4_demo(1);
  CHECK(k1.partial == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(k1.err == doctest::Approx(std::pow(pi, 4) / 90.0 - 1.0).epsilon(1e-6));

  const ZetaReport k100 = zeta4_demo(100);
  CHECK(k100.err < 1e-6);

  // the identity rearranged: (1/6 - 11/72) * (4 pi^4 / 5) = pi^4 / 90
  const double implied = (1.0 / 6.0 - 11.0 / 72.0) * (4.0 * std::pow(pi, 4) / 5.0);
  CHECK(implied == doctest::Approx(std::pow(pi, 4) / 90.0).epsilon(1e-15));
}
