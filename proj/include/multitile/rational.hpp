#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace multitile {

// Exact arithmetic backbone. All tiling verdicts are decided over Z / Q;
// doubles appear only on the spectral side.
using Int = mpz_class;
using Rat = mpq_class;

using VecZ = std::vector<Int>;
using VecQ = std::vector<Rat>;

inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Int q_floor(const Rat& q) {
  Int out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

inline Int q_ceil(const Rat& q) {
  Int out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

// q - floor(q), in [0, 1)
inline Rat q_frac(const Rat& q) { return q - Rat(q_floor(q)); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline double to_double(const Rat& q) { return q.get_d(); }

// "p/q" when the denominator is nontrivial, plain integer otherwise
std::string rational_str(const Rat& q);

// Accepts "p", "-p", "p/q"; throws ParseError on anything else.
Rat parse_rational(const std::string& s);

bool lex_less(const VecQ& a, const VecQ& b);
bool lex_less(const VecZ& a, const VecZ& b);

VecQ to_rational(const VecZ& v);

}  // namespace multitile
