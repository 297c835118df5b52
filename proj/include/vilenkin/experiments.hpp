#pragma once

// Numerical reproduction harness: the five-term approximation bound as a
// measured ratio, convergence scans for the modulus hypotheses, the
// divergence counterexample f0, and the Dirichlet-kernel L^1 scaling.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "vilenkin/analysis.hpp"
#include "vilenkin/field.hpp"

namespace vilenkin {

// ---- test functions ------------------------------------------------------

/// sum_{j=1}^{N-1} M_j^{-exponent} r_j(x) r_j(y): the representable part of
/// the infinite diagonal series at resolution N.
GridFunction2D diagonal_series(double exponent, const VilenkinBase& base);

/// 2 sum_{j>=N} M_j^{-exponent}, with radices past N continued periodically.
/// Bounds the sup-norm of the part of the series missing at resolution N.
double diagonal_series_tail(double exponent, const VilenkinBase& base);

/// The counterexample f0 = diagonal_series(alpha + beta); requires alpha + beta < 1.
GridFunction2D build_f0(double alpha, double beta, const VilenkinBase& base);

/// Random Vilenkin polynomial with spectrum supported on [0, M_level)^2.
GridFunction2D random_polynomial(const VilenkinBase& base, std::size_t level, std::uint64_t seed);

/// Random step function with i.i.d. real and imaginary parts in [-1, 1].
GridFunction2D random_step_function(const VilenkinBase& base, std::uint64_t seed);

// ---- approximation bound -------------------------------------------------

struct Theorem3Row {
  Index n = 0;
  Index m = 0;
  std::size_t k = 0;  // M_k <= n < M_{k+1}
  std::size_t l = 0;  // M_l <= m < M_{l+1}
  double lhs = 0.0;   // ||sigma_{n,m}^{-alpha,-beta}(f) - f||_p
  /// omega_1(1/M_{k-1}) M_k^alpha, omega_2(1/M_{l-1}) M_l^beta,
  /// omega_12(1/M_{k-1}, 1/M_{l-1}) M_k^alpha M_l^beta,
  /// sum_{r<=k-2} (M_r/M_k) omega_1(1/M_r), sum_{s<=l-2} (M_s/M_l) omega_2(1/M_s).
  std::array<double, 5> rhs_terms{};
  double rhs_sum = 0.0;
  double ratio = 0.0;  // lhs / rhs_sum, 0 when both vanish
};

struct Theorem3Report {
  std::string base;
  double alpha = 0.0;
  double beta = 0.0;
  double p = 1.0;
  std::vector<Theorem3Row> rows;
  double sup_ratio = 0.0;
};

/// {M_k, M_k + M_{k-1}} for 1 <= k < N; every degree lies in bucket k >= 1.
std::vector<Index> default_degree_sweep(const VilenkinBase& base);

/// One row per (n, m) in degrees x degrees. Degrees must satisfy M_1 <= n < M_N.
Theorem3Report run_theorem3(const GridFunction2D& f, double alpha, double beta, double p,
                            std::span<const Index> degrees, const ModulusOptions& options = {});

// ---- convergence scan ----------------------------------------------------

struct CorollaryRow {
  std::size_t k = 0;
  Index degree = 0;         // n = m = M_k
  double hyp_x = 0.0;       // M_k^alpha omega_1(1/M_k)
  double hyp_y = 0.0;       // M_k^beta omega_2(1/M_k)
  double hyp_y_literal = 0.0;  // M_k^beta omega_1(1/M_k), first-variable modulus with the y order
  double hyp_mixed = 0.0;   // M_k^{alpha+beta} omega_12(1/M_k, 1/M_k)
  double hyp_total = 0.0;   // M_k^{alpha+beta} omega(1/M_k)
  double error = 0.0;       // ||sigma_{M_k,M_k}^{-alpha,-beta}(f) - f||_p
};

struct CorollaryReport {
  std::string base;
  double alpha = 0.0;
  double beta = 0.0;
  double p = 1.0;
  std::vector<CorollaryRow> rows;
  bool hypotheses_decay = false;
  bool error_decays = false;
};

/// True when each step grows by at most `tolerance` (relative) and the last
/// value is below half the first.
bool decays(std::span<const double> values, double tolerance = 0.10);

CorollaryReport run_corollary_scan(const GridFunction2D& f, double alpha, double beta, double p,
                                   const ModulusOptions& options = {});

// ---- counterexample ------------------------------------------------------

struct Theorem4Row {
  std::size_t n = 0;
  Index degree = 0;            // M_n
  double error1 = 0.0;         // ||sigma_{M_n,M_n}^{-alpha,-beta}(f0) - f0||_1
  double coefficient = 0.0;    // |f0^(M_n, M_n)|
  double lower_bound = 0.0;    // (1/(A_{M_n}^{-alpha} A_{M_n}^{-beta}) - 1) M_n^{-(alpha+beta)}
  double modulus = 0.0;        // omega(f0, 1/M_n)_inf
  double modulus_product = 0.0;  // modulus * M_n^{alpha+beta}
  bool holds = false;          // error1 >= lower_bound - tail_bound
};

struct Theorem4Report {
  std::string base;
  double alpha = 0.0;
  double beta = 0.0;
  std::size_t truncation_level = 0;  // f0 keeps j = 1..truncation_level
  double tail_bound = 0.0;
  std::vector<Theorem4Row> rows;
  bool inequality_holds = false;
  double min_error1 = 0.0;
  double modulus_spread = 0.0;  // max / min of modulus_product
};

/// Builds f0 on `base` (resolution N) and evaluates n_min <= n <= n_max, n < N.
Theorem4Report run_theorem4(double alpha, double beta, const VilenkinBase& base, std::size_t n_min,
                            std::size_t n_max);

// ---- Dirichlet kernel scaling --------------------------------------------

struct Lemma1Row {
  std::size_t level = 0;
  Index n = 0;
  double mean_ratio = 0.0;
  double max_ratio = 0.0;
};

struct Lemma1Report {
  std::string base;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<Lemma1Row> rows;
  double max_ratio = 0.0;
  double log_slope = 0.0;  // least-squares slope of log(mean_ratio) against log(n)
};

/// (1/n) ||sum_{k=1}^n a_k D_k||_1 / (n^{-1/2} ||a||_2) for Gaussian a, n = M_level.
double kernel_sum_ratio(std::span<const double> coefficients, const VilenkinBase& base);

Lemma1Report run_lemma1(const VilenkinBase& base, std::size_t level_min, std::size_t level_max,
                        std::size_t trials, std::uint64_t seed);

// ---- serialization -------------------------------------------------------

enum class ReportFormat { csv, json };

void write_report(std::ostream& out, const Theorem3Report& report, ReportFormat format);
void write_report(std::ostream& out, const CorollaryReport& report, ReportFormat format);
void write_report(std::ostream& out, const Theorem4Report& report, ReportFormat format);
void write_report(std::ostream& out, const Lemma1Report& report, ReportFormat format);

/// Two-column `x y` series files, one per series, into `directory`.
void write_plot_data(const std::string& directory, const Theorem3Report& report);
void write_plot_data(const std::string& directory, const CorollaryReport& report);
void write_plot_data(const std::string& directory, const Theorem4Report& report);
void write_plot_data(const std::string& directory, const Lemma1Report& report);

}  // namespace vilenkin
