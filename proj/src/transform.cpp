#include "vilenkin/transform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace vilenkin {

namespace {

enum class Direction { analysis, synthesis };

// Applies the m_k-point DFT along every digit level, least significant first.
// Element i of the 1D transform occupies data[i*width .. (i+1)*width), so a
// width of M_N runs the column pass of a 2D grid with contiguous inner loops.
void apply_stages(Complex* data, const VilenkinBase& base, std::size_t width, Direction dir) {
  std::vector<Complex> twiddle;
  std::vector<Complex> fiber;
  for (std::size_t k = 0; k < base.resolution(); ++k) {
    const auto m = static_cast<Index>(base.radix(k));
    const Index block = base.scale(k);
    const Index span = base.scale(k + 1);
    const Index total = base.size();

    if (m == 2) {
      for (Index start = 0; start < total; start += span) {
        for (Index o = 0; o < block; ++o) {
          Complex* a = data + (start + o) * width;
          Complex* b = data + (start + o + block) * width;
          for (std::size_t w = 0; w < width; ++w) {
            const Complex s = a[w];
            const Complex t = b[w];
            a[w] = s + t;
            b[w] = s - t;
          }
        }
      }
      continue;
    }

    twiddle.resize(m * m);
    for (Index t = 0; t < m; ++t) {
      for (Index j = 0; j < m; ++j) {
        const Index e = (t * j) % m;
        twiddle[t * m + j] = unit_root(dir == Direction::analysis ? (m - e) % m : e, m);
      }
    }
    fiber.resize(m * width);
    for (Index start = 0; start < total; start += span) {
      for (Index o = 0; o < block; ++o) {
        for (Index j = 0; j < m; ++j) {
          const Complex* src = data + (start + o + j * block) * width;
          std::copy(src, src + width, fiber.begin() + static_cast<std::ptrdiff_t>(j * width));
        }
        for (Index t = 0; t < m; ++t) {
          Complex* dst = data + (start + o + t * block) * width;
          for (std::size_t w = 0; w < width; ++w) dst[w] = Complex{};
          for (Index j = 0; j < m; ++j) {
            const Complex c = twiddle[t * m + j];
            const Complex* src = fiber.data() + j * width;
            for (std::size_t w = 0; w < width; ++w) dst[w] += c * src[w];
          }
        }
      }
    }
  }
}

void scale_all(std::span<Complex> values, double factor) {
  for (auto& v : values) v *= factor;
}

// Exponent t with psi_n(x) = exp(2 pi i t / M_N).
Index phase_index(Index n, Index x, const VilenkinBase& base) {
  const Index size = base.size();
  Index t = 0;
  for (std::size_t k = 0; k < base.resolution(); ++k) {
    const auto m = static_cast<Index>(base.radix(k));
    const Index product = ((n % m) * (x % m)) % m;
    t = (t + product * (size / m)) % size;
    n /= m;
    x /= m;
  }
  return t;
}

std::vector<Complex> root_table(Index size) {
  std::vector<Complex> roots(size);
  for (Index j = 0; j < size; ++j) roots[j] = unit_root(j, size);
  return roots;
}

void require_degree(Index n, Index limit, const char* what) {
  if (n > limit) {
    throw std::out_of_range(std::string(what) + " " + std::to_string(n) + " exceeds M_N = " +
                            std::to_string(limit));
  }
}

}  // namespace

Complex unit_root(Index j, Index m) {
  j %= m;
  if ((4 * j) % m == 0) {
    switch ((4 * j) / m) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m);
  return {std::cos(angle), std::sin(angle)};
}

Complex rademacher(std::size_t k, const GroupPoint& x, const VilenkinBase& base) {
  if (k >= base.resolution()) throw std::out_of_range("Rademacher level beyond resolution");
  if (x.digits.size() != base.resolution()) throw std::invalid_argument("point/base mismatch");
  return unit_root(static_cast<Index>(x.digits[k]), static_cast<Index>(base.radix(k)));
}

Complex vilenkin_psi(Index n, const GroupPoint& x, const VilenkinBase& base) {
  const auto freq = index_to_digits(n, base);
  if (x.digits.size() != base.resolution()) throw std::invalid_argument("point/base mismatch");
  Complex value{1.0, 0.0};
  for (std::size_t k = 0; k < base.resolution(); ++k) {
    const auto m = static_cast<Index>(base.radix(k));
    const auto e = static_cast<Index>(freq.digits[k]) * static_cast<Index>(x.digits[k]);
    value *= unit_root(e % m, m);
  }
  return value;
}

Complex vilenkin_psi(Index n, Index x, const VilenkinBase& base) {
  if (n >= base.size() || x >= base.size()) throw std::out_of_range("index beyond M_N");
  return unit_root(phase_index(n, x, base), base.size());
}

GridFunction1D character(Index n, const VilenkinBase& base) {
  if (n >= base.size()) throw std::out_of_range("character index beyond M_N");
  Spectrum1D delta(base);
  delta(n) = 1.0;
  return inverse_1d(delta);
}

GridFunction1D dirichlet_kernel(Index n, const VilenkinBase& base) {
  if (n < 1 || n > base.size()) {
    throw std::out_of_range("Dirichlet kernel D_n needs 1 <= n <= M_N, got n = " + std::to_string(n));
  }
  Spectrum1D ones(base);
  for (Index k = 0; k < n; ++k) ones(k) = 1.0;
  return inverse_1d(ones);
}

Spectrum1D forward_1d(const GridFunction1D& f) {
  auto values = std::vector<Complex>(f.values().begin(), f.values().end());
  apply_stages(values.data(), f.base(), 1, Direction::analysis);
  scale_all(values, 1.0 / static_cast<double>(f.side()));
  return Spectrum1D(f.base(), std::move(values));
}

GridFunction1D inverse_1d(const Spectrum1D& spectrum) {
  auto values = std::vector<Complex>(spectrum.values().begin(), spectrum.values().end());
  apply_stages(values.data(), spectrum.base(), 1, Direction::synthesis);
  return GridFunction1D(spectrum.base(), std::move(values));
}

namespace {

std::vector<Complex> transform_2d(std::span<const Complex> input, const VilenkinBase& base,
                                  Direction dir) {
  std::vector<Complex> values(input.begin(), input.end());
  const Index side = base.size();
  for (Index row = 0; row < side; ++row) apply_stages(values.data() + row * side, base, 1, dir);
  apply_stages(values.data(), base, side, dir);
  return values;
}

}  // namespace

Spectrum2D forward_2d(const GridFunction2D& f) {
  auto values = transform_2d(f.values(), f.base(), Direction::analysis);
  const double side = static_cast<double>(f.side());
  scale_all(values, 1.0 / (side * side));
  return Spectrum2D(f.base(), std::move(values));
}

GridFunction2D inverse_2d(const Spectrum2D& spectrum) {
  return GridFunction2D(spectrum.base(),
                        transform_2d(spectrum.values(), spectrum.base(), Direction::synthesis));
}

Spectrum1D naive_1d(const GridFunction1D& f) {
  const auto& base = f.base();
  const Index size = base.size();
  const auto roots = root_table(size);
  Spectrum1D out(base);
  for (Index n = 0; n < size; ++n) {
    Complex sum{};
    for (Index x = 0; x < size; ++x) {
      const Index t = phase_index(n, x, base);
      sum += f(x) * roots[(size - t) % size];
    }
    out(n) = sum / static_cast<double>(size);
  }
  return out;
}

Spectrum2D naive_2d(const GridFunction2D& f) {
  const auto& base = f.base();
  const Index size = base.size();
  const auto roots = root_table(size);
  std::vector<Complex> kernel(size * size);
  for (Index n = 0; n < size; ++n) {
    for (Index x = 0; x < size; ++x) {
      kernel[n * size + x] = roots[(size - phase_index(n, x, base)) % size] / static_cast<double>(size);
    }
  }
  std::vector<Complex> rows(size * size);
  for (Index x = 0; x < size; ++x) {
    for (Index n2 = 0; n2 < size; ++n2) {
      Complex sum{};
      for (Index y = 0; y < size; ++y) sum += f(x, y) * kernel[n2 * size + y];
      rows[x * size + n2] = sum;
    }
  }
  Spectrum2D out(base);
  for (Index n1 = 0; n1 < size; ++n1) {
    for (Index n2 = 0; n2 < size; ++n2) {
      Complex sum{};
      for (Index x = 0; x < size; ++x) sum += kernel[n1 * size + x] * rows[x * size + n2];
      out(n1, n2) = sum;
    }
  }
  return out;
}

GridFunction2D partial_sum_2d(const Spectrum2D& spectrum, Index n1, Index n2) {
  const Index side = spectrum.side();
  require_degree(n1, side, "partial sum degree n1");
  require_degree(n2, side, "partial sum degree n2");
  Spectrum2D truncated(spectrum.base());
  for (Index i = 0; i < n1; ++i) {
    for (Index j = 0; j < n2; ++j) truncated(i, j) = spectrum(i, j);
  }
  return inverse_2d(truncated);
}

GridFunction2D partial_sum_marginal(const Spectrum2D& spectrum, Axis axis, Index n) {
  const Index side = spectrum.side();
  return axis == Axis::x ? partial_sum_2d(spectrum, n, side) : partial_sum_2d(spectrum, side, n);
}

GridFunction2D partial_sum_marginal(const GridFunction2D& f, Axis axis, Index n) {
  return partial_sum_marginal(forward_2d(f), axis, n);
}

GridFunction2D outer(const GridFunction1D& g, const GridFunction1D& h) {
  if (!(g.base() == h.base())) throw std::invalid_argument("outer product of different bases");
  GridFunction2D out(g.base());
  for (Index x = 0; x < g.side(); ++x) {
    for (Index y = 0; y < h.side(); ++y) out(x, y) = g(x) * h(y);
  }
  return out;
}

}  // namespace vilenkin
