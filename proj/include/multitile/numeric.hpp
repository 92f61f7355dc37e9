#pragma once

#include <cmath>
#include <complex>
#include <vector>

namespace multitile {

// sin(pi t) / (pi t), 1 at t = 0, exactly 0 at nonzero integers.
inline double sinc(double t) {
  if (t == 0.0) return 1.0;
  if (t == std::nearbyint(t)) return 0.0;
  const double x = M_PI * t;
  if (std::fabs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0);
  }
  return std::sin(x) / x;
}

// Deterministic order-independent accumulation (tree reduction).
template <typename T>
T pairwise_sum(std::vector<T> v) {
  if (v.empty()) return T{};
  std::size_t n = v.size();
  while (n > 1) {
    const std::size_t half = n / 2;
    for (std::size_t i = 0; i < half; ++i) v[i] = v[2 * i] + v[2 * i + 1];
    if (n % 2) {
      v[half] = v[n - 1];
      n = half + 1;
    } else {
      n = half;
    }
  }
  return v[0];
}

inline std::complex<double> unit_phase(double turns) {
  // e^{2 pi i turns}
  const double a = 2.0 * M_PI * turns;
  return {std::cos(a), std::sin(a)};
}

}  // namespace multitile
