#pragma once

#include <map>
#include <vector>

#include "multitile/lattice.hpp"
#include "multitile/rational.hpp"
#include "multitile/reports.hpp"

namespace multitile {

// Deduplicated finite set of integer points, sorted lexicographically.
struct FinitePointSet {
  int dim = 0;
  std::vector<VecZ> points;

  static FinitePointSet from_points(int dim, std::vector<VecZ> pts);

  std::size_t size() const { return points.size(); }
  bool contains(const VecZ& p) const;
};

// {a - b : a, b in F}; contains 0 and is symmetric under negation.
FinitePointSet difference_set(const FinitePointSet& F);

// |F cap (F + n)|
Int covariogram_count(const FinitePointSet& F, const VecZ& n);

// Per-term breakdown of the lattice covariogram sum:
// (n, |F cap (F+n)|) for n in (F-F) cap L, ascending lexicographic in n.
std::vector<std::pair<VecZ, Int>> lattice_covariogram_terms(const FinitePointSet& F,
                                                            const IntegerLattice& L);

// sum over n in (F-F) cap L of |F cap (F+n)|; >= |F|^2 / det L
Int lattice_covariogram_sum(const FinitePointSet& F, const IntegerLattice& L);

// Exact tiling test: sum == |F|^2 / det L together with det L | |F|.
// with_witnesses additionally records the per-coset exponential-sum
// diagnostics of the dual condition.
TilingVerdict check_multitile_b(const FinitePointSet& F, const IntegerLattice& L,
                                bool with_witnesses = false);

// Exact vanishing of sum_{n in F} e^{2 pi i <r, n>}, decided by reducing
// sum x^{c_n} modulo the M-th cyclotomic polynomial, M = r.denominator.
bool exp_sum_is_zero(const FinitePointSet& F, const DualCosetRep& r);

// True iff the exponential sum vanishes on every nonzero coset of L*/Z^d.
// Each reduced representative is the one member of its coset with no
// nonzero-integer coordinate, hence not killed by the sinc factors of the
// discretized identity. Pair with the integrality of |F| / det L (the (b)
// check) for the authoritative verdict.
bool check_multitile_c(const FinitePointSet& F, const IntegerLattice& L);

// Independent cover-count oracle: for every residue of Z^d / L, the number
// of pairs (f, l), l in L within the window, with f + l equal to that
// residue representative. Uniform counts <=> multi-tiling.
// window_scale w enumerates l = B c over c in [-w, w]^d and must reach every
// translate that can touch the residue box, else WindowTooSmall.
std::map<VecZ, long> brute_force_multiplicity(const FinitePointSet& F, const IntegerLattice& L,
                                              int window_scale = 3);

// Smallest window scale brute_force_multiplicity accepts for this input.
int brute_force_min_window_scale(const FinitePointSet& F, const IntegerLattice& L);

// If (F-F) cap L = {0} then det L >= |F|; equality iff F tiles with k = 1.
MinkowskiReport discrete_minkowski_check(const FinitePointSet& F, const IntegerLattice& L);

// Exact lhs vs truncated sinc-product dual sum of the discretized identity,
// with the trend evaluated at radius/4, radius/2, radius.
SpectralReport discretized_bs_sides(const FinitePointSet& F, const IntegerLattice& L,
                                    const Rat& eps, double radius);

// Integer polynomial reduced modulo the M-th cyclotomic polynomial.
struct CyclotomicPoly {
  unsigned long modulus = 1;
  std::vector<Int> coefficients;  // degree < deg Phi_M after reduction

  bool is_zero() const;
};

// Coefficients of Phi_M via the recursive division x^M - 1 = prod Phi_e.
std::vector<Int> cyclotomic_polynomial(unsigned long M);

// sum x^{c mod M} for the exponents of F against r, reduced mod Phi_M.
CyclotomicPoly exp_sum_cyclotomic(const FinitePointSet& F, const DualCosetRep& r);

}  // namespace multitile
