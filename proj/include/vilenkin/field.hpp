#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vilenkin/group.hpp"

namespace vilenkin {

using Complex = std::complex<double>;

struct SampleDomain {};
struct FrequencyDomain {};

/// Complex values on the level-N grid of G_m (Dims = 1) or G_m x G_m
/// (Dims = 2), both axes sharing one base. 2D data is row-major with the
/// first variable selecting the row. The Domain tag separates step-function
/// samples from Vilenkin-Fourier coefficients.
template <class Domain, std::size_t Dims>
class Field {
  static_assert(Dims == 1 || Dims == 2);

 public:
  explicit Field(VilenkinBase base)
      : base_(std::move(base)), values_(expected_size(base_), Complex{}) {}

  Field(VilenkinBase base, std::vector<Complex> values)
      : base_(std::move(base)), values_(std::move(values)) {
    if (values_.size() != expected_size(base_)) {
      throw std::invalid_argument("field needs " + std::to_string(expected_size(base_)) +
                                  " values, got " + std::to_string(values_.size()));
    }
  }

  const VilenkinBase& base() const noexcept { return base_; }

  /// M_N, the extent along each axis.
  Index side() const noexcept { return base_.size(); }
  std::size_t size() const noexcept { return values_.size(); }

  std::span<const Complex> values() const noexcept { return values_; }
  std::span<Complex> values() noexcept { return values_; }

  /// Moves the storage out, leaving the field empty.
  std::vector<Complex> release() && { return std::move(values_); }

  Complex operator()(Index i) const
    requires(Dims == 1)
  {
    return values_[i];
  }
  Complex& operator()(Index i)
    requires(Dims == 1)
  {
    return values_[i];
  }
  Complex operator()(Index i, Index j) const
    requires(Dims == 2)
  {
    return values_[i * side() + j];
  }
  Complex& operator()(Index i, Index j)
    requires(Dims == 2)
  {
    return values_[i * side() + j];
  }

 private:
  static std::size_t expected_size(const VilenkinBase& base) {
    return Dims == 1 ? base.size() : base.size() * base.size();
  }

  VilenkinBase base_;
  std::vector<Complex> values_;
};

using GridFunction1D = Field<SampleDomain, 1>;
using GridFunction2D = Field<SampleDomain, 2>;
using Spectrum1D = Field<FrequencyDomain, 1>;
using Spectrum2D = Field<FrequencyDomain, 2>;

}  // namespace vilenkin
