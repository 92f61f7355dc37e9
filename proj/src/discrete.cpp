#include "multitile/discrete.hpp"

#include <algorithm>
#include <complex>
#include <set>

#include "multitile/errors.hpp"
#include "multitile/numeric.hpp"

namespace multitile {

FinitePointSet FinitePointSet::from_points(int dim, std::vector<VecZ> pts) {
  if (dim < 1) throw DimensionMismatch("dimension must be >= 1");
  if (pts.empty()) throw Error("point set must be nonempty");
  for (const VecZ& p : pts)
    if (static_cast<int>(p.size()) != dim) throw DimensionMismatch();
  std::sort(pts.begin(), pts.end(), [](const VecZ& a, const VecZ& b) { return lex_less(a, b); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return FinitePointSet{dim, std::move(pts)};
}

bool FinitePointSet::contains(const VecZ& p) const {
  return std::binary_search(points.begin(), points.end(), p,
                            [](const VecZ& a, const VecZ& b) { return lex_less(a, b); });
}

FinitePointSet difference_set(const FinitePointSet& F) {
  std::vector<VecZ> diffs;
  diffs.reserve(F.size() * F.size());
  for (const VecZ& a : F.points)
    for (const VecZ& b : F.points) {
      VecZ d(F.dim);
      for (int i = 0; i < F.dim; ++i) d[i] = a[i] - b[i];
      diffs.push_back(std::move(d));
    }
  return FinitePointSet::from_points(F.dim, std::move(diffs));
}

Int covariogram_count(const FinitePointSet& F, const VecZ& n) {
  if (static_cast<int>(n.size()) != F.dim) throw DimensionMismatch();
  Int count = 0;
  VecZ shifted(F.dim);
  for (const VecZ& a : F.points) {
    for (int i = 0; i < F.dim; ++i) shifted[i] = a[i] - n[i];
    if (F.contains(shifted)) ++count;
  }
  return count;
}

std::vector<std::pair<VecZ, Int>> lattice_covariogram_terms(const FinitePointSet& F,
                                                            const IntegerLattice& L) {
  if (F.dim != L.dim) throw DimensionMismatch();
  std::vector<std::pair<VecZ, Int>> terms;
  for (const VecZ& n : difference_set(F).points)
    if (L.contains(n)) terms.emplace_back(n, covariogram_count(F, n));
  return terms;
}

Int lattice_covariogram_sum(const FinitePointSet& F, const IntegerLattice& L) {
  Int sum = 0;
  for (const auto& [n, c] : lattice_covariogram_terms(F, L)) sum += c;
  const Int card(static_cast<unsigned long>(F.size()));
  if (sum * L.det < card * card) throw Error("covariogram lower bound violated");
  return sum;
}

TilingVerdict check_multitile_b(const FinitePointSet& F, const IntegerLattice& L,
                                bool with_witnesses) {
  const Int sum = lattice_covariogram_sum(F, L);
  const Int card(static_cast<unsigned long>(F.size()));
  TilingVerdict v;
  v.lhs_sum = Rat(sum);
  v.multiplicity = make_rat(card, L.det);
  v.rhs_target = make_rat(card * card, L.det);
  v.is_multitiling = is_integer(v.multiplicity) && v.lhs_sum == v.rhs_target;
  if (with_witnesses)
    for (const DualCosetRep& r : dual_coset_reps(L))
      v.witnesses.emplace_back(r, exp_sum_is_zero(F, r));
  return v;
}

// ---------------------------------------------------------------------------
// cyclotomic machinery

namespace {

using Poly = std::vector<Int>;  // ascending coefficients

// exact division by a monic divisor; remainder must vanish
Poly poly_div_exact(const Poly& num, const Poly& den) {
  Poly rem = num;
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) throw Error("cyclotomic division underflow");
  Poly quot(num.size() - dd, Int(0));
  for (std::size_t i = rem.size(); i-- > dd;) {
    const Int c = rem[i];
    if (c == 0) continue;
    quot[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= c * den[j];
  }
  for (const Int& c : rem)
    if (c != 0) throw Error("cyclotomic division left a remainder");
  return quot;
}

Poly poly_mod_monic(Poly p, const Poly& den) {
  const std::size_t dd = den.size() - 1;
  for (std::size_t i = p.size(); i-- > dd;) {
    const Int c = p[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) p[i - dd + j] -= c * den[j];
  }
  p.resize(std::min(p.size(), dd));
  return p;
}

constexpr unsigned long kMaxCyclotomicModulus = 100000;

}  // namespace

std::vector<Int> cyclotomic_polynomial(unsigned long M) {
  if (M == 0 || M > kMaxCyclotomicModulus)
    throw Error("cyclotomic modulus out of range: " + std::to_string(M));
  if (M == 1) return Poly{Int(-1), Int(1)};
  Poly num(M + 1, Int(0));
  num[0] = -1;
  num[M] = 1;
  for (unsigned long e = 1; e < M; ++e)
    if (M % e == 0) num = poly_div_exact(num, cyclotomic_polynomial(e));
  return num;
}

CyclotomicPoly exp_sum_cyclotomic(const FinitePointSet& F, const DualCosetRep& r) {
  if (static_cast<int>(r.vec.size()) != F.dim) throw DimensionMismatch();
  if (r.denominator > Int(kMaxCyclotomicModulus))
    throw Error("coset denominator too large for cyclotomic reduction");
  const unsigned long M = r.denominator.get_ui();
  const Int mz = r.denominator;

  Poly p(M, Int(0));
  for (const VecZ& n : F.points) {
    Rat ip(0);
    for (int i = 0; i < F.dim; ++i) ip += r.vec[i] * Rat(n[i]);
    const Rat scaled = ip * Rat(mz);
    if (!is_integer(scaled)) throw Error("coset denominator does not clear the inner product");
    Int c;
    mpz_fdiv_r(c.get_mpz_t(), scaled.get_num_mpz_t(), mz.get_mpz_t());
    p[c.get_ui()] += 1;
  }
  return CyclotomicPoly{M, poly_mod_monic(std::move(p), cyclotomic_polynomial(M))};
}

bool CyclotomicPoly::is_zero() const {
  for (const Int& c : coefficients)
    if (c != 0) return false;
  return true;
}

bool exp_sum_is_zero(const FinitePointSet& F, const DualCosetRep& r) {
  return exp_sum_cyclotomic(F, r).is_zero();
}

bool check_multitile_c(const FinitePointSet& F, const IntegerLattice& L) {
  if (F.dim != L.dim) throw DimensionMismatch();
  for (const DualCosetRep& r : dual_coset_reps(L)) {
    // The reduced representative is the one member of its coset with no
    // nonzero-integer coordinate, so the sinc factors cannot kill it; the
    // exponential sum must vanish on every coset except Z^d itself.
    bool zero = true;
    for (const Rat& c : r.vec)
      if (c != 0) {
        zero = false;
        break;
      }
    if (zero) continue;
    if (!exp_sum_is_zero(F, r)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// brute-force cover oracle

namespace {

struct OracleGeometry {
  std::vector<Int> residue_hi;  // residue box is [0, residue_hi_i] per axis
  VecZ req_lo, req_hi;          // translates that can land inside the box
};

OracleGeometry oracle_geometry(const FinitePointSet& F, const IntegerLattice& L) {
  const int d = L.dim;
  OracleGeometry g;
  g.residue_hi.resize(d);
  for (int i = 0; i < d; ++i) g.residue_hi[i] = L.hnf_cols[i][i] - 1;
  VecZ fmin = F.points.front(), fmax = F.points.front();
  for (const VecZ& p : F.points)
    for (int i = 0; i < d; ++i) {
      if (p[i] < fmin[i]) fmin[i] = p[i];
      if (p[i] > fmax[i]) fmax[i] = p[i];
    }
  g.req_lo.resize(d);
  g.req_hi.resize(d);
  for (int i = 0; i < d; ++i) {
    g.req_lo[i] = -fmax[i];
    g.req_hi[i] = g.residue_hi[i] - fmin[i];
  }
  return g;
}

int needed_window_scale(const IntegerLattice& L, const OracleGeometry& g) {
  // coefficient-space bound of the needed translate box
  std::vector<VecQ> cols;
  for (const VecZ& c : L.basis_cols) cols.push_back(to_rational(c));
  const MatQ binv = matq_inverse(matq_from_columns(cols));
  const int d = L.dim;
  Int scale = 0;
  VecQ corner(d);
  for (std::size_t mask = 0; mask < (std::size_t(1) << d); ++mask) {
    for (int i = 0; i < d; ++i)
      corner[i] = Rat((mask >> i) & 1 ? g.req_hi[i] : g.req_lo[i]);
    for (const Rat& c : matq_apply(binv, corner)) {
      Int bound = c >= 0 ? q_ceil(c) : q_ceil(Rat(-c));
      if (bound > scale) scale = bound;
    }
  }
  return static_cast<int>(scale.get_si());
}

}  // namespace

int brute_force_min_window_scale(const FinitePointSet& F, const IntegerLattice& L) {
  if (F.dim != L.dim) throw DimensionMismatch();
  return needed_window_scale(L, oracle_geometry(F, L));
}

std::map<VecZ, long> brute_force_multiplicity(const FinitePointSet& F, const IntegerLattice& L,
                                              int window_scale) {
  if (F.dim != L.dim) throw DimensionMismatch();
  if (L.det > 1'000'000) throw Error("det L too large for the brute-force oracle");
  const int d = L.dim;
  const OracleGeometry g = oracle_geometry(F, L);
  const int needed = needed_window_scale(L, g);
  if (window_scale < needed)
    throw WindowTooSmall("window scale " + std::to_string(window_scale) +
                         " does not reach every covering translate; need >= " +
                         std::to_string(needed));

  std::map<VecZ, long> counts;
  {
    VecZ x(d, Int(0));
    while (true) {
      counts.emplace(x, 0);
      int k = d - 1;
      while (k >= 0) {
        ++x[k];
        if (x[k] <= g.residue_hi[k]) break;
        x[k] = 0;
        --k;
      }
      if (k < 0) break;
    }
  }

  std::vector<long> c(d, -window_scale);
  while (true) {
    VecZ ell(d, Int(0));
    for (int j = 0; j < d; ++j)
      for (int i = 0; i < d; ++i) ell[i] += Int(c[j]) * L.basis_cols[j][i];
    VecZ x(d);
    for (const VecZ& f : F.points) {
      bool inside = true;
      for (int i = 0; i < d; ++i) {
        x[i] = f[i] + ell[i];
        if (x[i] < 0 || x[i] > g.residue_hi[i]) {
          inside = false;
          break;
        }
      }
      if (inside) ++counts.at(x);
    }
    int k = d - 1;
    while (k >= 0) {
      ++c[k];
      if (c[k] <= window_scale) break;
      c[k] = -window_scale;
      --k;
    }
    if (k < 0) break;
  }
  return counts;
}

MinkowskiReport discrete_minkowski_check(const FinitePointSet& F, const IntegerLattice& L) {
  if (F.dim != L.dim) throw DimensionMismatch();
  MinkowskiReport r;
  r.det = L.det;
  r.cardinality = Int(static_cast<unsigned long>(F.size()));
  r.applicable = true;
  for (const VecZ& n : difference_set(F).points) {
    bool zero = true;
    for (const Int& x : n)
      if (x != 0) {
        zero = false;
        break;
      }
    if (!zero && L.contains(n)) {
      r.applicable = false;
      break;
    }
  }
  if (r.applicable) {
    r.holds = r.det >= r.cardinality;
    r.equality = r.det == r.cardinality;
  }
  return r;
}

SpectralReport discretized_bs_sides(const FinitePointSet& F, const IntegerLattice& L,
                                    const Rat& eps, double radius) {
  if (F.dim != L.dim) throw DimensionMismatch();
  if (eps <= 0 || eps > 1) throw Error("eps must lie in (0, 1]");
  if (radius <= 0) throw Error("radius must be positive");

  SpectralReport rep;
  rep.lhs_exact = Rat(lattice_covariogram_sum(F, L));
  rep.lhs = to_double(rep.lhs_exact);
  rep.radius = radius;

  Rat epsd(1);
  for (int i = 0; i < F.dim; ++i) epsd *= eps;
  const Rat card(Int(static_cast<unsigned long>(F.size())));

  const Rat rad = Rat(mpq_class(radius));
  const std::vector<VecQ> duals = enumerate_dual_in_ball(L.to_rational(), rad);

  // nonzero dual terms with their exact squared norms, already norm-sorted
  std::vector<std::pair<Rat, double>> terms;
  terms.reserve(duals.size());
  for (const VecQ& xi : duals) {
    Rat n2(0);
    bool zero = true;
    for (const Rat& x : xi) {
      n2 += x * x;
      if (x != 0) zero = false;
    }
    if (zero) continue;
    double sincprod = 1.0;
    for (const Rat& x : xi) sincprod *= sinc(to_double(Rat(eps * x)));
    std::complex<double> s{0.0, 0.0};
    if (sincprod != 0.0) {
      std::vector<std::complex<double>> parts;
      parts.reserve(F.size());
      for (const VecZ& n : F.points) {
        Rat ip(0);
        for (int i = 0; i < F.dim; ++i) ip += xi[i] * Rat(n[i]);
        parts.push_back(unit_phase(to_double(q_frac(ip))));
      }
      s = pairwise_sum(std::move(parts));
    }
    terms.emplace_back(std::move(n2), sincprod * sincprod * std::norm(s));
  }

  const double det = to_double(Rat(L.det));
  const double base = to_double(Rat(epsd * card * card));
  const double epsd_d = to_double(epsd);

  const double radii[3] = {radius / 4.0, radius / 2.0, radius};
  for (double r : radii) {
    const Rat r2 = Rat(mpq_class(r)) * Rat(mpq_class(r));
    std::vector<double> slice;
    for (const auto& [n2, t] : terms) {
      if (n2 > r2) break;
      slice.push_back(t);
    }
    SpectralTrendRow row;
    row.radius = r;
    row.terms = slice.size();
    row.rhs = (base + epsd_d * pairwise_sum(std::move(slice))) / det;
    row.residual = rep.lhs - row.rhs;
    rep.trend.push_back(row);
  }

  for (std::size_t i = 1; i < rep.trend.size(); ++i)
    if (rep.trend[i].residual > rep.trend[i - 1].residual + 1e-9)
      rep.nonconvergence_warning = true;
  rep.converged = !rep.nonconvergence_warning;
  rep.rhs = rep.trend.back().rhs;
  rep.term_count = rep.trend.back().terms;
  rep.residual = rep.trend.back().residual;
  return rep;
}

}  // namespace multitile
