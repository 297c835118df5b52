#pragma once

// Reference implementations for the tests. Nothing here calls into the
// library beyond the container types; characters, shifts and weights are
// rebuilt from digits.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <random>
#include <vector>

#include "vilenkin/field.hpp"

namespace oracle {

using vilenkin::Complex;
using vilenkin::Index;

inline std::vector<int> digits(Index n, const std::vector<int>& radices) {
  std::vector<int> d(radices.size());
  for (std::size_t k = 0; k < radices.size(); ++k) {
    d[k] = static_cast<int>(n % radices[k]);
    n /= radices[k];
  }
  return d;
}

inline Index number(const std::vector<int>& d, const std::vector<int>& radices) {
  Index n = 0;
  for (std::size_t k = radices.size(); k-- > 0;) n = n * radices[k] + d[k];
  return n;
}

inline std::vector<int> radices_of(const vilenkin::VilenkinBase& base) {
  return {base.radices().begin(), base.radices().end()};
}

// psi_n(x) = exp(2 pi i sum_k n_k x_k / m_k), summed as a real phase.
inline Complex psi(Index n, Index x, const std::vector<int>& radices) {
  const auto dn = digits(n, radices);
  const auto dx = digits(x, radices);
  long double phase = 0.0L;
  for (std::size_t k = 0; k < radices.size(); ++k) {
    phase += static_cast<long double>(dn[k] * dx[k] % radices[k]) / radices[k];
  }
  phase -= std::floor(phase);
  const long double angle = 2.0L * std::numbers::pi_v<long double> * phase;
  return {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
}

inline Index sub(Index x, Index u, const std::vector<int>& radices) {
  auto dx = digits(x, radices);
  const auto du = digits(u, radices);
  for (std::size_t k = 0; k < radices.size(); ++k) dx[k] = (dx[k] - du[k] + radices[k]) % radices[k];
  return number(dx, radices);
}

inline Index add(Index x, Index u, const std::vector<int>& radices) {
  auto dx = digits(x, radices);
  const auto du = digits(u, radices);
  for (std::size_t k = 0; k < radices.size(); ++k) dx[k] = (dx[k] + du[k]) % radices[k];
  return number(dx, radices);
}

// Coefficient (1/M) sum_x f(x) conj psi_n(x), long double accumulation.
inline std::vector<Complex> dft(const std::vector<Complex>& f, const std::vector<int>& radices) {
  const Index size = f.size();
  std::vector<Complex> out(size);
  for (Index n = 0; n < size; ++n) {
    std::complex<long double> acc = 0.0L;
    for (Index x = 0; x < size; ++x) {
      const Complex p = std::conj(psi(n, x, radices));
      acc += std::complex<long double>(f[x]) * std::complex<long double>(p);
    }
    out[n] = Complex(acc / static_cast<long double>(size));
  }
  return out;
}

// Pointwise synthesis sum_{i,j} c(i,j) psi_i(x) psi_j(y), row-major.
inline std::vector<Complex> synthesize_2d(const std::vector<Complex>& coeff,
                                          const std::vector<int>& radices, Index side) {
  std::vector<Complex> table(side * side);
  for (Index n = 0; n < side; ++n) {
    for (Index x = 0; x < side; ++x) table[n * side + x] = psi(n, x, radices);
  }
  std::vector<Complex> out(side * side);
  for (Index x = 0; x < side; ++x) {
    for (Index y = 0; y < side; ++y) {
      Complex acc = 0.0;
      for (Index i = 0; i < side; ++i) {
        for (Index j = 0; j < side; ++j) {
          const Complex c = coeff[i * side + j];
          if (c != 0.0) acc += c * table[i * side + x] * table[j * side + y];
        }
      }
      out[x * side + y] = acc;
    }
  }
  return out;
}

// A_k^a = Gamma(a + k + 1) / (Gamma(a + 1) Gamma(k + 1)) through lgamma with signs.
inline double cesaro(double a, std::size_t k) {
  if (k == 0) return 1.0;
  const double kd = static_cast<double>(k);
  const double num = std::lgamma(a + kd + 1.0);
  const double den = std::lgamma(a + 1.0) + std::lgamma(kd + 1.0);
  double sign = 1.0;
  if (std::tgamma(a + kd + 1.0) < 0) sign = -sign;
  if (std::tgamma(a + 1.0) < 0) sign = -sign;
  return sign * std::exp(num - den);
}

inline double norm(const std::vector<Complex>& v, double p) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (auto z : v) m = std::max(m, std::abs(z));
    return m;
  }
  long double s = 0.0L;
  for (auto z : v) s += std::pow(static_cast<long double>(std::abs(z)), static_cast<long double>(p));
  return static_cast<double>(std::pow(s / v.size(), 1.0L / p));
}

// Straight from the definitions: sup over every u in I_k (all M_N/M_k shifts).
inline double omega1(const vilenkin::GridFunction2D& f, std::size_t k, double p) {
  const auto r = radices_of(f.base());
  const Index side = f.side();
  double best = 0.0;
  for (Index u = 0; u < side; u += f.base().scale(k)) {
    std::vector<Complex> d(side * side);
    for (Index x = 0; x < side; ++x) {
      for (Index y = 0; y < side; ++y) d[x * side + y] = f(sub(x, u, r), y) - f(x, y);
    }
    best = std::max(best, norm(d, p));
  }
  return best;
}

inline double omega2(const vilenkin::GridFunction2D& f, std::size_t l, double p) {
  const auto r = radices_of(f.base());
  const Index side = f.side();
  double best = 0.0;
  for (Index v = 0; v < side; v += f.base().scale(l)) {
    std::vector<Complex> d(side * side);
    for (Index x = 0; x < side; ++x) {
      for (Index y = 0; y < side; ++y) d[x * side + y] = f(x, sub(y, v, r)) - f(x, y);
    }
    best = std::max(best, norm(d, p));
  }
  return best;
}

inline double omega12(const vilenkin::GridFunction2D& f, std::size_t k, std::size_t l, double p) {
  const auto r = radices_of(f.base());
  const Index side = f.side();
  double best = 0.0;
  for (Index u = 0; u < side; u += f.base().scale(k)) {
    for (Index v = 0; v < side; v += f.base().scale(l)) {
      std::vector<Complex> d(side * side);
      for (Index x = 0; x < side; ++x) {
        for (Index y = 0; y < side; ++y) {
          const Index xu = sub(x, u, r);
          const Index yv = sub(y, v, r);
          d[x * side + y] = f(xu, yv) - f(xu, y) - f(x, yv) + f(x, y);
        }
      }
      best = std::max(best, norm(d, p));
    }
  }
  return best;
}

inline double omega_total(const vilenkin::GridFunction2D& f, std::size_t k, double p) {
  const auto r = radices_of(f.base());
  const Index side = f.side();
  double best = 0.0;
  for (Index u = 0; u < side; u += f.base().scale(k)) {
    for (Index v = 0; v < side; v += f.base().scale(k)) {
      std::vector<Complex> d(side * side);
      for (Index x = 0; x < side; ++x) {
        for (Index y = 0; y < side; ++y) d[x * side + y] = f(sub(x, u, r), sub(y, v, r)) - f(x, y);
      }
      best = std::max(best, norm(d, p));
    }
  }
  return best;
}

inline std::vector<Complex> random_values(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<Complex> v(n);
  for (auto& z : v) z = {g(rng), g(rng)};
  return v;
}

inline double max_abs(std::span<const Complex> a, std::span<const Complex> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace oracle
