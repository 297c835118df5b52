#include "vilenkin/cesaro.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "vilenkin/transform.hpp"

namespace vilenkin {

namespace {

void require_mean_order(double order) {
  if (!(order > -1.0 && order <= 1.0)) {
    throw std::domain_error("Cesaro mean order " + std::to_string(order) + " outside (-1, 1]");
  }
}

void require_negative_order(double alpha, const char* name) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::domain_error(std::string(name) + " = " + std::to_string(alpha) +
                            " outside (0, 1)");
  }
}

void require_degree(Index n, Index side, const char* name) {
  if (n >= side) {
    throw std::out_of_range(std::string("mean degree ") + name + " = " + std::to_string(n) +
                            " must be below M_N = " + std::to_string(side));
  }
}

// w[i] = A_{n-i}^order / A_n^order for i <= n, zero above; w[0] is exactly 1.
std::vector<double> mean_weights(double order, Index n, Index side) {
  const auto table = cesaro_weights(order, n);
  std::vector<double> w(side, 0.0);
  for (Index i = 0; i <= n; ++i) w[i] = table[n - i] / table[n];
  return w;
}

// Neumaier compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

}  // namespace

CesaroWeightTable cesaro_weights(double order, std::size_t n) {
  if (!std::isfinite(order)) throw std::domain_error("Cesaro order must be finite");
  if (order <= -2.0 && order == std::floor(order)) {
    throw std::domain_error("Cesaro order " + std::to_string(order) +
                            " is a negative integer below -1");
  }
  std::vector<double> values(n + 1);
  long double running = 1.0L;
  values[0] = 1.0;
  for (std::size_t k = 1; k <= n; ++k) {
    const long double kd = static_cast<long double>(k);
    running *= (order + kd) / kd;
    values[k] = static_cast<double>(running);
  }
  return CesaroWeightTable(order, std::move(values));
}

WeightIdentityReport verify_weight_identities(const CesaroWeightTable& table,
                                              std::size_t asymptotic_from) {
  const std::size_t n = table.degree();
  const auto lower = cesaro_weights(table.order() - 1.0, n);

  WeightIdentityReport report;
  report.order = table.order();
  report.degree = n;
  report.asymptotic_from = asymptotic_from;

  CompensatedSum prefix;
  CompensatedSum magnitude;
  for (std::size_t k = 0; k <= n; ++k) {
    prefix.add(lower[k]);
    magnitude.add(std::abs(lower[k]));
    const double gap = std::abs(table[k] - prefix.value());
    report.max_sum_deviation =
        std::max(report.max_sum_deviation, gap / (std::abs(table[k]) + magnitude.value()));
    if (table[k] != 0.0) {
      report.max_sum_relative = std::max(report.max_sum_relative, gap / std::abs(table[k]));
    }
    if (k >= 1) {
      const double diff = table[k] - table[k - 1];
      const double dgap = std::abs(diff - lower[k]);
      const double scale = std::abs(table[k]) + std::abs(table[k - 1]) + std::abs(lower[k]);
      report.max_difference_deviation = std::max(report.max_difference_deviation, dgap / scale);
      if (lower[k] != 0.0) {
        report.max_difference_relative =
            std::max(report.max_difference_relative, dgap / std::abs(lower[k]));
      }
    }
  }

  report.min_growth_ratio = std::numeric_limits<double>::infinity();
  report.max_growth_ratio = -std::numeric_limits<double>::infinity();
  std::size_t next_dyadic = asymptotic_from;
  for (std::size_t k = std::max<std::size_t>(asymptotic_from, 1); k <= n; ++k) {
    const double ratio = table[k] / std::pow(static_cast<double>(k), table.order());
    report.min_growth_ratio = std::min(report.min_growth_ratio, ratio);
    report.max_growth_ratio = std::max(report.max_growth_ratio, ratio);
    if (k == next_dyadic) {
      report.dyadic_ratios.emplace_back(k, ratio);
      next_dyadic *= 2;
    }
  }
  return report;
}

GridFunction2D cesaro_mean_2d(const Spectrum2D& spectrum, Index n, Index m, double order_x,
                              double order_y) {
  require_mean_order(order_x);
  require_mean_order(order_y);
  const Index side = spectrum.side();
  require_degree(n, side, "n");
  require_degree(m, side, "m");

  const auto wx = mean_weights(order_x, n, side);
  const auto wy = mean_weights(order_y, m, side);
  Spectrum2D weighted(spectrum.base());
  for (Index i = 0; i <= n; ++i) {
    for (Index j = 0; j <= m; ++j) weighted(i, j) = spectrum(i, j) * (wx[i] * wy[j]);
  }
  return inverse_2d(weighted);
}

GridFunction2D cesaro_mean_2d(const Spectrum2D& spectrum, const CesaroMeanParams& params) {
  require_negative_order(params.alpha, "alpha");
  require_negative_order(params.beta, "beta");
  return cesaro_mean_2d(spectrum, params.n, params.m, -params.alpha, -params.beta);
}

GridFunction1D cesaro_mean_1d_order(const Spectrum1D& spectrum, Index n, double order) {
  require_mean_order(order);
  const Index side = spectrum.side();
  require_degree(n, side, "n");
  const auto w = mean_weights(order, n, side);
  Spectrum1D weighted(spectrum.base());
  for (Index i = 0; i <= n; ++i) weighted(i) = spectrum(i) * w[i];
  return inverse_1d(weighted);
}

GridFunction1D cesaro_mean_1d(const Spectrum1D& spectrum, Index n, double alpha) {
  require_negative_order(alpha, "alpha");
  return cesaro_mean_1d_order(spectrum, n, -alpha);
}

}  // namespace vilenkin
