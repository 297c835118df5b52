#pragma once

// Characters of G_m, Dirichlet kernels and the Vilenkin-Fourier transform.
//
// Normalization: forward transforms carry the Haar weight 1/M_N (1/M_N^2 in
// 2D) and use conj(psi_n), so coefficient n equals the integral of f against
// conj(psi_n). Synthesis sums coefficients against psi_n with no weight.

#include <cstddef>

#include "vilenkin/field.hpp"
#include "vilenkin/group.hpp"

namespace vilenkin {

/// exp(2 pi i j / m), exact for j/m a multiple of 1/4.
Complex unit_root(Index j, Index m);

/// r_k(x) = exp(2 pi i x_k / m_k).
Complex rademacher(std::size_t k, const GroupPoint& x, const VilenkinBase& base);

/// psi_n(x) = prod_k r_k(x)^{n_k}.
Complex vilenkin_psi(Index n, const GroupPoint& x, const VilenkinBase& base);
Complex vilenkin_psi(Index n, Index x, const VilenkinBase& base);

/// psi_n sampled on the level-N grid.
GridFunction1D character(Index n, const VilenkinBase& base);

/// D_n = psi_0 + ... + psi_{n-1} for 1 <= n <= M_N.
GridFunction1D dirichlet_kernel(Index n, const VilenkinBase& base);

Spectrum1D forward_1d(const GridFunction1D& f);
GridFunction1D inverse_1d(const Spectrum1D& spectrum);
Spectrum2D forward_2d(const GridFunction2D& f);
GridFunction2D inverse_2d(const Spectrum2D& spectrum);

/// Direct O(M_N^2) summation of the defining integral. Test oracle.
Spectrum1D naive_1d(const GridFunction1D& f);
/// Direct summation applied along each axis, O(M_N^3). Test oracle.
Spectrum2D naive_2d(const GridFunction2D& f);

enum class Axis { x, y };

/// S_{n1,n2}: coefficients with k1 < n1 and k2 < n2 synthesized on the grid.
GridFunction2D partial_sum_2d(const Spectrum2D& spectrum, Index n1, Index n2);

/// S_n^{(1)} (axis x) or S_n^{(2)} (axis y): truncation along one variable only.
GridFunction2D partial_sum_marginal(const Spectrum2D& spectrum, Axis axis, Index n);
GridFunction2D partial_sum_marginal(const GridFunction2D& f, Axis axis, Index n);

/// (g tensor h)(x, y) = g(x) h(y).
GridFunction2D outer(const GridFunction1D& g, const GridFunction1D& h);

}  // namespace vilenkin
