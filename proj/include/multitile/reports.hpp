#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "multitile/lattice.hpp"
#include "multitile/rational.hpp"

namespace multitile {

// Outcome of an exact multi-tiling decision (discrete or continuous).
struct TilingVerdict {
  bool is_multitiling = false;
  Rat multiplicity;  // |F|/det L, resp. vol Q / det L
  Rat lhs_sum;       // covariogram lattice sum
  Rat rhs_target;    // multiplicity * |F|, resp. vol^2 / det
  // condition-(c) diagnostics: (coset representative, exponential sum vanishes)
  std::vector<std::pair<DualCosetRep, bool>> witnesses;
};

struct SpectralTrendRow {
  double radius = 0;
  double rhs = 0;
  double residual = 0;
  std::size_t terms = 0;
};

// Paired exact/truncated evaluation of a Bombieri-Siegel-type identity.
struct SpectralReport {
  Rat lhs_exact;
  double lhs = 0;
  double rhs = 0;  // real part of the truncated dual sum at final radius
  double radius = 0;
  std::size_t term_count = 0;
  double residual = 0;  // lhs - rhs
  double max_imag = 0;  // largest |Im| seen across truncations
  bool converged = true;
  bool nonconvergence_warning = false;
  std::vector<SpectralTrendRow> trend;
};

struct MinkowskiReport {
  bool applicable = false;  // (F-F) cap L == {0}
  bool holds = false;       // det L >= |F|, when applicable
  bool equality = false;    // det L == |F|  <=>  F tiles with k = 1
  Int det;
  Int cardinality;
};

struct VdcReport {
  long diff_count = 0;  // lattice points with positive covariogram, 0 included
  long q_count = -1;    // #(int Q cap L); -1 when part (b) skipped
  bool bound_a_holds = false;
  bool bound_b_holds = false;
  bool part_b_applicable = false;  // Q convex and centrally symmetric
};

struct ZetaReport {
  long terms = 0;
  double partial = 0;  // implied zeta estimate from the truncated families
  double target = 0;
  double err = 0;
};

}  // namespace multitile
