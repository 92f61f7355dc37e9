#include <doctest.h>

#include <random>

#include "multitile/errors.hpp"
#include "multitile/lattice.hpp"

using namespace multitile;

namespace {

IntegerLattice make_lattice(std::vector<std::vector<long>> cols) {
  std::vector<VecZ> zc;
  for (auto& c : cols) {
    VecZ v;
    for (long e : c) v.emplace_back(e);
    zc.push_back(std::move(v));
  }
  return IntegerLattice::from_columns(std::move(zc));
}

VecZ zvec(std::vector<long> v) {
  VecZ out;
  for (long e : v) out.emplace_back(e);
  return out;
}

VecQ qvec(std::vector<std::string> v) {
  VecQ out;
  for (const auto& s : v) out.push_back(parse_rational(s));
  return out;
}

}  // namespace

TEST_CASE("integer lattice construction and determinants") {
  CHECK(make_lattice({{3, 0}, {1, 1}}).det == 3);
  CHECK(make_lattice({{1, 0}, {0, 1}}).det == 1);
  CHECK(make_lattice({{1, 1}, {1, -1}}).det == 2);
  CHECK(make_lattice({{4}}).det == 4);
  CHECK_THROWS_AS(make_lattice({{1, 2}, {2, 4}}), SingularBasis);
  CHECK_THROWS_AS(make_lattice({{1, 2, 3}, {2, 4}}), DimensionMismatch);
}

TEST_CASE("membership via HNF back-substitution") {
  const IntegerLattice four_z = make_lattice({{4}});
  CHECK(four_z.contains(zvec({0})));
  CHECK(four_z.contains(zvec({-8})));
  CHECK_FALSE(four_z.contains(zvec({2})));

  const IntegerLattice L = make_lattice({{3, 0}, {1, 1}});
  CHECK(L.contains(zvec({1, 1})));
  CHECK(L.contains(zvec({3, 0})));
  CHECK(L.contains(zvec({0, 6})));  // 6*(1,1) - 2*(3,0)
  CHECK_FALSE(L.contains(zvec({1, 0})));
  CHECK_THROWS_AS(L.contains(zvec({1})), DimensionMismatch);
}

TEST_CASE("dual basis is the inverse transpose") {
  const RationalLattice id = RationalLattice::from_columns({qvec({"1", "0"}), qvec({"0", "1"})});
  const RationalLattice id_dual = id.dual();
  CHECK(id_dual.basis_cols[0] == qvec({"1", "0"}));
  CHECK(id_dual.basis_cols[1] == qvec({"0", "1"}));

  const RationalLattice L =
      RationalLattice::from_columns({qvec({"3", "0"}), qvec({"1", "1"})});
  const RationalLattice dual = L.dual();
  CHECK(dual.basis_cols[0] == qvec({"1/3", "-1/3"}));
  CHECK(dual.basis_cols[1] == qvec({"0", "1"}));

  const RationalLattice d2 =
      RationalLattice::from_columns({qvec({"1", "1"}), qvec({"1", "-1"})});
  CHECK(d2.dual().det == Rat(1) / 2);
}

TEST_CASE("dual coset representatives") {
  SUBCASE("Z^2 has only the zero coset") {
    const auto reps = dual_coset_reps(make_lattice({{1, 0}, {0, 1}}));
    REQUIRE(reps.size() == 1);
    CHECK(reps[0].vec == qvec({"0", "0"}));
    CHECK_FALSE(reps[0].all_coords_noninteger);
  }
  SUBCASE("index-3 planar lattice") {
    const auto reps = dual_coset_reps(make_lattice({{3, 0}, {1, 1}}));
    REQUIRE(reps.size() == 3);
    CHECK(reps[0].vec == qvec({"0", "0"}));
    CHECK(reps[1].vec == qvec({"1/3", "2/3"}));
    CHECK(reps[2].vec == qvec({"2/3", "1/3"}));
    CHECK(reps[1].all_coords_noninteger);
    CHECK(reps[2].all_coords_noninteger);
    for (const auto& r : reps) CHECK(r.denominator == 3);
  }
  SUBCASE("4Z in one dimension") {
    const auto reps = dual_coset_reps(make_lattice({{4}}));
    REQUIRE(reps.size() == 4);
    CHECK(reps[0].vec == qvec({"0"}));
    CHECK(reps[1].vec == qvec({"1/4"}));
    CHECK(reps[2].vec == qvec({"1/2"}));
    CHECK(reps[3].vec == qvec({"3/4"}));
  }
}

TEST_CASE("lattice points in a box") {
  const RationalLattice z2 = RationalLattice::from_columns({qvec({"1", "0"}), qvec({"0", "1"})});
  CHECK(z2.points_in_box(qvec({"-1", "-1"}), qvec({"1", "1"})).size() == 9);

  const RationalLattice d2 =
      RationalLattice::from_columns({qvec({"1", "1"}), qvec({"1", "-1"})});
  const auto pts = d2.points_in_box(qvec({"-1", "-1"}), qvec({"1", "1"}));
  REQUIRE(pts.size() == 5);
  CHECK(pts[0] == qvec({"-1", "-1"}));
  CHECK(pts[1] == qvec({"-1", "1"}));
  CHECK(pts[2] == qvec({"0", "0"}));
  CHECK(pts[3] == qvec({"1", "-1"}));
  CHECK(pts[4] == qvec({"1", "1"}));

  const RationalLattice four_z = RationalLattice::from_columns({qvec({"4"})});
  const auto line = four_z.points_in_box(qvec({"-5"}), qvec({"5"}));
  REQUIRE(line.size() == 3);
  CHECK(line[0] == qvec({"-4"}));
  CHECK(line[1] == qvec({"0"}));
  CHECK(line[2] == qvec({"4"}));

  CHECK_THROWS_AS(z2.points_in_box(qvec({"0", "0"}), qvec({"100000", "100000"}), 1000),
                  BoxTooLarge);
}

TEST_CASE("dual points in a ball") {
  const RationalLattice z1 = RationalLattice::from_columns({qvec({"1"})});
  const auto pts = enumerate_dual_in_ball(z1, parse_rational("5/2"));
  REQUIRE(pts.size() == 5);
  CHECK(pts[0] == qvec({"0"}));  // sorted by norm first

  const RationalLattice four_z = RationalLattice::from_columns({qvec({"4"})});
  const auto quarters = enumerate_dual_in_ball(four_z, Rat(1));
  REQUIRE(quarters.size() == 9);  // 0, +-1/4, +-1/2, +-3/4, +-1

  const RationalLattice z2 = RationalLattice::from_columns({qvec({"1", "0"}), qvec({"0", "1"})});
  CHECK(enumerate_dual_in_ball(z2, Rat(1)).size() == 5);
}

TEST_CASE("coset representative invariants") {
  // denominator clears every coordinate
  for (const auto& cols : {std::vector<std::vector<long>>{{3, 0}, {1, 1}},
                           std::vector<std::vector<long>>{{2, 0}, {1, 3}}}) {
    for (const DualCosetRep& r : dual_coset_reps(make_lattice(cols)))
      for (const Rat& c : r.vec) {
        CHECK(is_integer(Rat(c * Rat(r.denominator))));
        CHECK(c >= 0);
        CHECK(c < 1);
      }
  }
}

TEST_CASE("dual ball enumeration respects the cap") {
  const RationalLattice z2 = RationalLattice::from_columns({qvec({"1", "0"}), qvec({"0", "1"})});
  CHECK_THROWS_AS(enumerate_dual_in_ball(z2, Rat(10000), 100), BoxTooLarge);
}

TEST_CASE("random bases: hnf and basis generate the same lattice") {
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<long> entry(-5, 5);
  int built = 0;
  while (built < 40) {
    const int d = 1 + static_cast<int>(rng() % 3);
    std::vector<VecZ> cols(d, VecZ(d));
    for (int j = 0; j < d; ++j)
      for (int i = 0; i < d; ++i) cols[j][i] = Int(entry(rng));
    IntegerLattice L;
    try {
      L = IntegerLattice::from_columns(cols);
    } catch (const SingularBasis&) {
      continue;
    }
    ++built;
    const IntegerLattice from_hnf = IntegerLattice::from_columns(L.hnf_cols);
    CHECK(from_hnf.det == L.det);
    for (const VecZ& c : L.basis_cols) CHECK(from_hnf.contains(c));
    for (const VecZ& c : L.hnf_cols) CHECK(L.contains(c));

    // exact reciprocal determinants
    const RationalLattice R = L.to_rational();
    CHECK(R.dual().det * R.det == 1);

    // coset count and distinctness modulo Z^d
    const auto reps = dual_coset_reps(L);
    CHECK(Int(static_cast<unsigned long>(reps.size())) == L.det);
    for (std::size_t a = 0; a < reps.size(); ++a)
      for (std::size_t b = a + 1; b < reps.size(); ++b) {
        bool integral = true;
        for (int i = 0; i < d; ++i)
          if (!is_integer(Rat(reps[a].vec[i] - reps[b].vec[i]))) integral = false;
        CHECK_FALSE(integral);
      }
  }
}

TEST_CASE("box enumeration output is closed under membership") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> entry(-4, 4);
  int built = 0;
  while (built < 20) {
    std::vector<VecZ> cols(2, VecZ(2));
    for (int j = 0; j < 2; ++j)
      for (int i = 0; i < 2; ++i) cols[j][i] = Int(entry(rng));
    IntegerLattice L;
    try {
      L = IntegerLattice::from_columns(cols);
    } catch (const SingularBasis&) {
      continue;
    }
    ++built;
    const RationalLattice R = L.to_rational();
    for (const VecQ& p : R.points_in_box(qvec({"-6", "-6"}), qvec({"6", "6"}))) {
      CHECK(R.contains(p));
      VecZ zp;
      for (const Rat& c : p) {
        REQUIRE(is_integer(c));
        zp.push_back(c.get_num());
      }
      CHECK(L.contains(zp));
    }
  }
}
