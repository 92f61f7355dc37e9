#pragma once

#include <cstddef>
#include <vector>

#include "multitile/rational.hpp"

namespace multitile {

// Candidate points per enumeration before BoxTooLarge is raised.
inline constexpr std::size_t kDefaultEnumCap = 10'000'000;

struct RationalLattice;

// Full-rank sublattice of Z^d. Basis vectors are stored as columns;
// the cached Hermite normal form is column-style lower triangular,
// so membership reduces to forward substitution and
// det = product of the HNF diagonal.
struct IntegerLattice {
  int dim = 0;
  std::vector<VecZ> basis_cols;  // basis_cols[j] = j-th basis vector
  std::vector<VecZ> hnf_cols;    // lower triangular, positive diagonal
  Int det;                       // |det(basis)| > 0

  static IntegerLattice from_columns(std::vector<VecZ> cols);

  bool contains(const VecZ& n) const;
  RationalLattice to_rational() const;
};

// Full-rank lattice in R^d with exact rational basis.
struct RationalLattice {
  int dim = 0;
  std::vector<VecQ> basis_cols;
  Rat det;  // |det(basis)| > 0

  static RationalLattice from_columns(std::vector<VecQ> cols);

  // dual basis = inverse transpose; det(dual) * det = 1 (asserted)
  RationalLattice dual() const;

  bool contains(const VecQ& x) const;

  // All lattice points x with lo <= x <= hi componentwise,
  // ascending lexicographic order.
  std::vector<VecQ> points_in_box(const VecQ& lo, const VecQ& hi,
                                  std::size_t cap = kDefaultEnumCap) const;
};

// Representative of a coset of L*/Z^d, reduced into [0,1)^d.
// denominator * vec is integral; all_coords_noninteger is true iff
// every coordinate lies strictly inside (0,1).
struct DualCosetRep {
  VecQ vec;
  Int denominator;
  bool all_coords_noninteger = false;
};

// Exactly det(L) coset representatives of L*/Z^d, zero coset included,
// sorted lexicographically.
std::vector<DualCosetRep> dual_coset_reps(const IntegerLattice& L);

// All xi in L* with |xi| <= radius (norms compared exactly),
// sorted by norm^2 then lexicographically; includes 0.
std::vector<VecQ> enumerate_dual_in_ball(const RationalLattice& L, const Rat& radius,
                                         std::size_t cap = kDefaultEnumCap);

// Exact d x d rational linear algebra used by the lattice types.
using MatQ = std::vector<VecQ>;  // row-major

MatQ matq_from_columns(const std::vector<VecQ>& cols);
std::vector<VecQ> matq_to_columns(const MatQ& m);
MatQ matq_transpose(const MatQ& m);
Rat matq_det(MatQ m);
MatQ matq_inverse(const MatQ& m);  // throws SingularBasis
VecQ matq_apply(const MatQ& m, const VecQ& v);

// Column-style HNF of an integer column set; returns columns and |det|.
// Throws SingularBasis when the columns are linearly dependent.
std::pair<std::vector<VecZ>, Int> hnf_columns(std::vector<VecZ> cols);

}  // namespace multitile
