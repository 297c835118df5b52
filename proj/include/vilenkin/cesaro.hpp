#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "vilenkin/field.hpp"

namespace vilenkin {

/// A_0^a .. A_n^a for a fixed real order a, where
/// A_0^a = 1 and A_k^a = A_{k-1}^a (a + k) / k.
class CesaroWeightTable {
 public:
  CesaroWeightTable(double order, std::vector<double> values)
      : order_(order), values_(std::move(values)) {}

  double order() const noexcept { return order_; }
  /// Largest index n stored.
  std::size_t degree() const noexcept { return values_.size() - 1; }
  double operator[](std::size_t k) const { return values_[k]; }
  std::span<const double> values() const noexcept { return values_; }

 private:
  double order_;
  std::vector<double> values_;
};

/// Throws std::domain_error for orders that are integers <= -2 or not finite.
CesaroWeightTable cesaro_weights(double order, std::size_t n);

struct WeightIdentityReport {
  double order = 0.0;
  std::size_t degree = 0;
  /// Worst deviation of A_n^a = sum_{k<=n} A_k^{a-1}, scaled by the magnitude
  /// of the operands (|A_n^a| + sum |A_k^{a-1}|).
  double max_sum_deviation = 0.0;
  /// Worst deviation of A_n^a - A_{n-1}^a = A_n^{a-1}, scaled by
  /// |A_n^a| + |A_{n-1}^a| + |A_n^{a-1}|.
  double max_difference_deviation = 0.0;
  /// Plain relative deviations |lhs - rhs| / |rhs|, for information.
  double max_sum_relative = 0.0;
  double max_difference_relative = 0.0;
  /// Extremes of A_n^a / n^a over asymptotic_from <= n <= degree.
  std::size_t asymptotic_from = 16;
  double min_growth_ratio = 0.0;
  double max_growth_ratio = 0.0;
  /// (n, A_n^a / n^a) at n = asymptotic_from * 2^j.
  std::vector<std::pair<std::size_t, double>> dyadic_ratios;
};

/// Checks the summation, difference and growth identities of `table`
/// against a companion table of order a - 1.
WeightIdentityReport verify_weight_identities(const CesaroWeightTable& table,
                                              std::size_t asymptotic_from = 16);

/// Parameters of the (C, -alpha, -beta) means; alpha, beta in (0, 1).
struct CesaroMeanParams {
  double alpha = 0.0;
  double beta = 0.0;
  Index n = 0;
  Index m = 0;
};

/// sigma_{n,m}^{-alpha,-beta}: coefficient (i, j) with i <= n, j <= m is
/// weighted by A_{n-i}^{-alpha} A_{m-j}^{-beta} / (A_n^{-alpha} A_m^{-beta}).
GridFunction2D cesaro_mean_2d(const Spectrum2D& spectrum, const CesaroMeanParams& params);

/// Same synthesis for arbitrary Cesaro orders in (-1, 1] along x and y;
/// order_x = -alpha gives the negative-order mean.
GridFunction2D cesaro_mean_2d(const Spectrum2D& spectrum, Index n, Index m, double order_x,
                              double order_y);

/// sigma_n^{-alpha} in one variable, alpha in (0, 1).
GridFunction1D cesaro_mean_1d(const Spectrum1D& spectrum, Index n, double alpha);
GridFunction1D cesaro_mean_1d_order(const Spectrum1D& spectrum, Index n, double order);

}  // namespace vilenkin
