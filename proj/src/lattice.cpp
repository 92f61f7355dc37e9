#include "multitile/lattice.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "multitile/errors.hpp"

namespace multitile {

namespace {

void check_square(std::size_t d, const auto& cols) {
  if (d == 0) throw DimensionMismatch("empty basis");
  for (const auto& c : cols)
    if (c.size() != d) throw DimensionMismatch("basis is not square");
}

}  // namespace

std::pair<std::vector<VecZ>, Int> hnf_columns(std::vector<VecZ> cols) {
  const int d = static_cast<int>(cols.size());
  check_square(cols.size(), cols);

  for (int i = 0; i < d; ++i) {
    // fold columns j > i into column i until row i is zero right of the pivot
    for (int j = i + 1; j < d; ++j) {
      if (cols[j][i] == 0) continue;
      Int g, u, v;
      mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(),
                 cols[i][i].get_mpz_t(), cols[j][i].get_mpz_t());
      const Int a_over_g = cols[i][i] / g;
      const Int b_over_g = cols[j][i] / g;
      VecZ ci(d), cj(d);
      for (int r = 0; r < d; ++r) {
        ci[r] = u * cols[i][r] + v * cols[j][r];
        cj[r] = a_over_g * cols[j][r] - b_over_g * cols[i][r];
      }
      cols[i] = std::move(ci);
      cols[j] = std::move(cj);
    }
    if (cols[i][i] == 0) throw SingularBasis();
    if (cols[i][i] < 0)
      for (int r = 0; r < d; ++r) cols[i][r] = -cols[i][r];
    // reduce row i of earlier columns into [0, pivot)
    for (int j = 0; j < i; ++j) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), cols[j][i].get_mpz_t(), cols[i][i].get_mpz_t());
      if (q == 0) continue;
      for (int r = 0; r < d; ++r) cols[j][r] -= q * cols[i][r];
    }
  }

  Int det = 1;
  for (int i = 0; i < d; ++i) det *= cols[i][i];
  return {std::move(cols), det};
}

IntegerLattice IntegerLattice::from_columns(std::vector<VecZ> cols) {
  IntegerLattice L;
  L.dim = static_cast<int>(cols.size());
  check_square(cols.size(), cols);
  auto [hnf, det] = hnf_columns(cols);
  L.basis_cols = std::move(cols);
  L.hnf_cols = std::move(hnf);
  L.det = std::move(det);
  return L;
}

bool IntegerLattice::contains(const VecZ& n) const {
  if (static_cast<int>(n.size()) != dim) throw DimensionMismatch();
  VecZ y(dim);
  for (int i = 0; i < dim; ++i) {
    Int r = n[i];
    for (int j = 0; j < i; ++j) r -= hnf_cols[j][i] * y[j];
    if (!mpz_divisible_p(r.get_mpz_t(), hnf_cols[i][i].get_mpz_t())) return false;
    y[i] = r / hnf_cols[i][i];
  }
  return true;
}

RationalLattice IntegerLattice::to_rational() const {
  std::vector<VecQ> cols;
  cols.reserve(basis_cols.size());
  for (const VecZ& c : basis_cols) cols.push_back(multitile::to_rational(c));
  return RationalLattice::from_columns(std::move(cols));
}

// ---------------------------------------------------------------------------
// exact rational linear algebra

MatQ matq_from_columns(const std::vector<VecQ>& cols) {
  const std::size_t d = cols.size();
  MatQ m(d, VecQ(d));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) m[i][j] = cols[j][i];
  return m;
}

std::vector<VecQ> matq_to_columns(const MatQ& m) {
  const std::size_t d = m.size();
  std::vector<VecQ> cols(d, VecQ(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) cols[j][i] = m[i][j];
  return cols;
}

MatQ matq_transpose(const MatQ& m) {
  const std::size_t d = m.size();
  MatQ t(d, VecQ(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) t[j][i] = m[i][j];
  return t;
}

Rat matq_det(MatQ m) {
  const std::size_t d = m.size();
  Rat det = 1;
  for (std::size_t i = 0; i < d; ++i) {
    std::size_t piv = i;
    while (piv < d && m[piv][i] == 0) ++piv;
    if (piv == d) return Rat(0);
    if (piv != i) {
      std::swap(m[piv], m[i]);
      det = -det;
    }
    det *= m[i][i];
    for (std::size_t r = i + 1; r < d; ++r) {
      if (m[r][i] == 0) continue;
      const Rat f = m[r][i] / m[i][i];
      for (std::size_t c = i; c < d; ++c) m[r][c] -= f * m[i][c];
    }
  }
  return det;
}

MatQ matq_inverse(const MatQ& m) {
  const std::size_t d = m.size();
  MatQ a = m;
  MatQ inv(d, VecQ(d));
  for (std::size_t i = 0; i < d; ++i) inv[i][i] = 1;
  for (std::size_t i = 0; i < d; ++i) {
    std::size_t piv = i;
    while (piv < d && a[piv][i] == 0) ++piv;
    if (piv == d) throw SingularBasis();
    std::swap(a[piv], a[i]);
    std::swap(inv[piv], inv[i]);
    const Rat p = a[i][i];
    for (std::size_t c = 0; c < d; ++c) {
      a[i][c] /= p;
      inv[i][c] /= p;
    }
    for (std::size_t r = 0; r < d; ++r) {
      if (r == i || a[r][i] == 0) continue;
      const Rat f = a[r][i];
      for (std::size_t c = 0; c < d; ++c) {
        a[r][c] -= f * a[i][c];
        inv[r][c] -= f * inv[i][c];
      }
    }
  }
  return inv;
}

VecQ matq_apply(const MatQ& m, const VecQ& v) {
  const std::size_t d = m.size();
  if (v.size() != d) throw DimensionMismatch();
  VecQ out(d, Rat(0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out[i] += m[i][j] * v[j];
  return out;
}

// ---------------------------------------------------------------------------

RationalLattice RationalLattice::from_columns(std::vector<VecQ> cols) {
  RationalLattice L;
  L.dim = static_cast<int>(cols.size());
  check_square(cols.size(), cols);
  Rat det = matq_det(matq_from_columns(cols));
  if (det == 0) throw SingularBasis();
  L.basis_cols = std::move(cols);
  L.det = det < 0 ? Rat(-det) : det;
  return L;
}

RationalLattice RationalLattice::dual() const {
  const MatQ inv_t = matq_transpose(matq_inverse(matq_from_columns(basis_cols)));
  RationalLattice d = from_columns(matq_to_columns(inv_t));
  if (d.det * det != 1) throw Error("dual determinant identity failed");
  return d;
}

bool RationalLattice::contains(const VecQ& x) const {
  if (static_cast<int>(x.size()) != dim) throw DimensionMismatch();
  const VecQ c = matq_apply(matq_inverse(matq_from_columns(basis_cols)), x);
  for (const Rat& v : c)
    if (!is_integer(v)) return false;
  return true;
}

std::vector<VecQ> RationalLattice::points_in_box(const VecQ& lo, const VecQ& hi,
                                                 std::size_t cap) const {
  if (static_cast<int>(lo.size()) != dim || static_cast<int>(hi.size()) != dim)
    throw DimensionMismatch();
  for (int i = 0; i < dim; ++i)
    if (lo[i] > hi[i]) throw Error("box has lo > hi");

  // bound the coefficient vector by mapping the box corners through B^{-1}
  const MatQ binv = matq_inverse(matq_from_columns(basis_cols));
  std::vector<Int> clo(dim), chi(dim);
  bool first = true;
  VecQ corner(dim);
  for (std::size_t mask = 0; mask < (std::size_t(1) << dim); ++mask) {
    for (int i = 0; i < dim; ++i) corner[i] = (mask >> i) & 1 ? hi[i] : lo[i];
    const VecQ c = matq_apply(binv, corner);
    for (int i = 0; i < dim; ++i) {
      const Int f = q_floor(c[i]), g = q_ceil(c[i]);
      if (first || f < clo[i]) clo[i] = f;
      if (first || g > chi[i]) chi[i] = g;
    }
    first = false;
  }

  Int count = 1;
  for (int i = 0; i < dim; ++i) count *= chi[i] - clo[i] + 1;
  if (count > Int(static_cast<unsigned long>(cap)))
    throw BoxTooLarge("lattice-in-box enumeration would visit " + count.get_str() + " candidates");

  std::vector<VecQ> out;
  VecZ c(dim);
  for (int i = 0; i < dim; ++i) c[i] = clo[i];
  while (true) {
    VecQ x(dim, Rat(0));
    for (int j = 0; j < dim; ++j) {
      const Rat cj(c[j]);
      for (int i = 0; i < dim; ++i) x[i] += basis_cols[j][i] * cj;
    }
    bool in = true;
    for (int i = 0; i < dim && in; ++i) in = lo[i] <= x[i] && x[i] <= hi[i];
    if (in) out.push_back(std::move(x));
    int k = dim - 1;
    while (k >= 0) {
      ++c[k];
      if (c[k] <= chi[k]) break;
      c[k] = clo[k];
      --k;
    }
    if (k < 0) break;
  }
  std::sort(out.begin(), out.end(), [](const VecQ& a, const VecQ& b) { return lex_less(a, b); });
  return out;
}

std::vector<DualCosetRep> dual_coset_reps(const IntegerLattice& L) {
  const int d = L.dim;
  // representatives of Z^d mod B^T Z^d from the HNF diagonal of B^T
  std::vector<VecZ> bt_cols(d, VecZ(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) bt_cols[j][i] = L.basis_cols[i][j];
  auto [tcols, tdet] = hnf_columns(std::move(bt_cols));
  if (tdet != L.det) throw Error("transpose determinant mismatch");

  std::vector<VecQ> rat_cols;
  for (const VecZ& c : L.basis_cols) rat_cols.push_back(to_rational(c));
  const MatQ binv_t = matq_transpose(matq_inverse(matq_from_columns(rat_cols)));

  std::vector<DualCosetRep> reps;
  VecZ m(d, Int(0));
  while (true) {
    VecQ mm = to_rational(m);
    VecQ rep = matq_apply(binv_t, mm);
    bool noninteger = true;
    for (Rat& v : rep) {
      v = q_frac(v);
      if (v == 0) noninteger = false;
    }
    reps.push_back(DualCosetRep{std::move(rep), L.det, noninteger});
    int k = d - 1;
    while (k >= 0) {
      ++m[k];
      if (m[k] < tcols[k][k]) break;
      m[k] = 0;
      --k;
    }
    if (k < 0) break;
  }

  std::sort(reps.begin(), reps.end(),
            [](const DualCosetRep& a, const DualCosetRep& b) { return lex_less(a.vec, b.vec); });
  std::set<VecQ, bool (*)(const VecQ&, const VecQ&)> distinct(lex_less);
  for (const auto& r : reps) distinct.insert(r.vec);
  if (Int(static_cast<unsigned long>(distinct.size())) != L.det)
    throw Error("coset representative count differs from det");
  return reps;
}

std::vector<VecQ> enumerate_dual_in_ball(const RationalLattice& L, const Rat& radius,
                                         std::size_t cap) {
  if (radius <= 0) throw Error("radius must be positive");
  const RationalLattice dual = L.dual();
  VecQ lo(L.dim, Rat(-radius)), hi(L.dim, radius);
  std::vector<VecQ> pts = dual.points_in_box(lo, hi, cap);
  const Rat r2 = radius * radius;
  std::vector<std::pair<Rat, VecQ>> keep;
  for (VecQ& p : pts) {
    Rat n2(0);
    for (const Rat& x : p) n2 += x * x;
    if (n2 <= r2) keep.emplace_back(std::move(n2), std::move(p));
  }
  std::sort(keep.begin(), keep.end(), [](const auto& a, const auto& b) {
    const int c = cmp(a.first, b.first);
    if (c != 0) return c < 0;
    return lex_less(a.second, b.second);
  });
  std::vector<VecQ> out;
  out.reserve(keep.size());
  for (auto& kv : keep) out.push_back(std::move(kv.second));
  return out;
}

}  // namespace multitile
