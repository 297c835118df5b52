#include "vilenkin/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "vilenkin/cesaro.hpp"
#include "vilenkin/transform.hpp"

namespace vilenkin {

namespace {

void require_orders(double alpha, double beta) {
  if (!(alpha > 0.0 && alpha < 1.0) || !(beta > 0.0 && beta < 1.0)) {
    throw std::domain_error("alpha and beta must lie in (0, 1)");
  }
}

double power(Index base, double exponent) { return std::pow(static_cast<double>(base), exponent); }

double difference_norm(const GridFunction2D& a, const GridFunction2D& b, double p) {
  std::vector<Complex> diff(a.size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = a.values()[i] - b.values()[i];
  return lp_norm(diff, p);
}

double json_number(double x) {
  // JSON has no infinity; the CSV writer prints "inf".
  return std::isfinite(x) ? x : std::numeric_limits<double>::max();
}

std::ofstream open_series(const std::string& directory, const std::string& name) {
  std::filesystem::create_directories(directory);
  std::ofstream out(std::filesystem::path(directory) / (name + ".dat"));
  if (!out) throw std::runtime_error("cannot write plot data to " + directory);
  out.precision(17);
  return out;
}

}  // namespace

GridFunction2D diagonal_series(double exponent, const VilenkinBase& base) {
  const std::size_t levels = base.resolution();
  std::vector<std::vector<Complex>> rademacher_values(levels);
  for (std::size_t j = 1; j < levels; ++j) {
    rademacher_values[j].resize(base.size());
    const auto m = static_cast<Index>(base.radix(j));
    for (Index x = 0; x < base.size(); ++x) {
      rademacher_values[j][x] = unit_root((x / base.scale(j)) % m, m);
    }
  }
  GridFunction2D f(base);
  for (std::size_t j = 1; j < levels; ++j) {
    const double c = 1.0 / power(base.scale(j), exponent);
    const auto& r = rademacher_values[j];
    for (Index x = 0; x < base.size(); ++x) {
      for (Index y = 0; y < base.size(); ++y) f(x, y) += c * r[x] * r[y];
    }
  }
  return f;
}

double diagonal_series_tail(double exponent, const VilenkinBase& base) {
  if (base.resolution() == 0) throw std::invalid_argument("tail needs a non-empty base");
  double scale = static_cast<double>(base.size());
  double sum = 0.0;
  for (std::size_t j = base.resolution();; ++j) {
    const double term = std::pow(scale, -exponent);
    sum += term;
    if (term <= sum * 1e-18 || j > base.resolution() + 100000) break;
    scale *= base.periodic_radix(j);
  }
  return 2.0 * sum;
}

GridFunction2D build_f0(double alpha, double beta, const VilenkinBase& base) {
  require_orders(alpha, beta);
  if (!(alpha + beta < 1.0)) throw std::domain_error("f0 requires alpha + beta < 1");
  if (base.resolution() < 2) throw std::invalid_argument("f0 requires resolution N >= 2");
  return diagonal_series(alpha + beta, base);
}

GridFunction2D random_polynomial(const VilenkinBase& base, std::size_t level, std::uint64_t seed) {
  if (level > base.resolution()) throw std::out_of_range("polynomial level above resolution");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  Spectrum2D spectrum(base);
  const Index degree = base.scale(level);
  for (Index i = 0; i < degree; ++i) {
    for (Index j = 0; j < degree; ++j) spectrum(i, j) = {coeff(rng), coeff(rng)};
  }
  return inverse_2d(spectrum);
}

GridFunction2D random_step_function(const VilenkinBase& base, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> value(-1.0, 1.0);
  GridFunction2D f(base);
  for (auto& v : f.values()) v = {value(rng), value(rng)};
  return f;
}

std::vector<Index> default_degree_sweep(const VilenkinBase& base) {
  std::vector<Index> degrees;
  for (std::size_t k = 1; k < base.resolution(); ++k) {
    degrees.push_back(base.scale(k));
    degrees.push_back(base.scale(k) + base.scale(k - 1));
  }
  return degrees;
}

Theorem3Report run_theorem3(const GridFunction2D& f, double alpha, double beta, double p,
                            std::span<const Index> degrees, const ModulusOptions& options) {
  require_orders(alpha, beta);
  const auto& base = f.base();
  for (Index n : degrees) {
    if (n < base.scale(std::min<std::size_t>(1, base.resolution())) || n >= base.size() ||
        base.resolution() < 2) {
      throw std::out_of_range("theorem3 degree " + std::to_string(n) + " outside [M_1, M_N)");
    }
  }

  const auto spectrum = forward_2d(f);
  ModulusEngine engine(f, p, options);
  std::vector<double> w1(base.resolution() + 1);
  std::vector<double> w2(base.resolution() + 1);
  for (std::size_t r = 0; r <= base.resolution(); ++r) {
    w1[r] = engine.omega1(r).value;
    w2[r] = engine.omega2(r).value;
  }

  Theorem3Report report;
  report.base = base.to_string();
  report.alpha = alpha;
  report.beta = beta;
  report.p = p;
  for (Index n : degrees) {
    for (Index m : degrees) {
      Theorem3Row row;
      row.n = n;
      row.m = m;
      row.k = base.level_of(n);
      row.l = base.level_of(m);
      const auto sigma = cesaro_mean_2d(spectrum, CesaroMeanParams{alpha, beta, n, m});
      row.lhs = difference_norm(sigma, f, p);

      const double mk = power(base.scale(row.k), alpha);
      const double ml = power(base.scale(row.l), beta);
      row.rhs_terms[0] = w1[row.k - 1] * mk;
      row.rhs_terms[1] = w2[row.l - 1] * ml;
      row.rhs_terms[2] = engine.omega12(row.k - 1, row.l - 1).value * mk * ml;
      for (std::size_t r = 0; r + 2 <= row.k; ++r) {
        row.rhs_terms[3] += static_cast<double>(base.scale(r)) / static_cast<double>(base.scale(row.k)) * w1[r];
      }
      for (std::size_t s = 0; s + 2 <= row.l; ++s) {
        row.rhs_terms[4] += static_cast<double>(base.scale(s)) / static_cast<double>(base.scale(row.l)) * w2[s];
      }
      for (double t : row.rhs_terms) row.rhs_sum += t;
      if (row.rhs_sum > 0.0) {
        row.ratio = row.lhs / row.rhs_sum;
      } else {
        row.ratio = row.lhs == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
      }
      report.sup_ratio = std::max(report.sup_ratio, row.ratio);
      report.rows.push_back(row);
    }
  }
  return report;
}

bool decays(std::span<const double> values, double tolerance) {
  if (values.size() < 2) return false;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[i - 1] * (1.0 + tolerance)) return false;
  }
  return values.back() < 0.5 * values.front();
}

CorollaryReport run_corollary_scan(const GridFunction2D& f, double alpha, double beta, double p,
                                   const ModulusOptions& options) {
  require_orders(alpha, beta);
  const auto& base = f.base();
  const auto spectrum = forward_2d(f);
  ModulusEngine engine(f, p, options);

  CorollaryReport report;
  report.base = base.to_string();
  report.alpha = alpha;
  report.beta = beta;
  report.p = p;
  std::vector<double> hyp_x, hyp_y, hyp_mixed, errors;
  for (std::size_t k = 1; k < base.resolution(); ++k) {
    CorollaryRow row;
    row.k = k;
    row.degree = base.scale(k);
    const double ma = power(row.degree, alpha);
    const double mb = power(row.degree, beta);
    const double w1 = engine.omega1(k).value;
    row.hyp_x = ma * w1;
    row.hyp_y = mb * engine.omega2(k).value;
    row.hyp_y_literal = mb * w1;
    row.hyp_mixed = ma * mb * engine.omega12(k, k).value;
    row.hyp_total = ma * mb * engine.omega_total(k).value;
    const auto sigma = cesaro_mean_2d(spectrum, CesaroMeanParams{alpha, beta, row.degree, row.degree});
    row.error = difference_norm(sigma, f, p);
    hyp_x.push_back(row.hyp_x);
    hyp_y.push_back(row.hyp_y);
    hyp_mixed.push_back(row.hyp_mixed);
    errors.push_back(row.error);
    report.rows.push_back(row);
  }
  auto vanishing = [](std::span<const double> v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
  };
  auto decays_or_zero = [&](std::span<const double> v) { return vanishing(v) || decays(v); };
  report.hypotheses_decay = decays_or_zero(hyp_x) && decays_or_zero(hyp_y) && decays_or_zero(hyp_mixed);
  report.error_decays = decays_or_zero(errors);
  return report;
}

Theorem4Report run_theorem4(double alpha, double beta, const VilenkinBase& base, std::size_t n_min,
                            std::size_t n_max) {
  const auto f0 = build_f0(alpha, beta, base);
  if (n_min < 1 || n_min > n_max || n_max >= base.resolution()) {
    throw std::out_of_range("theorem4 needs 1 <= n_min <= n_max < N");
  }
  const double s = alpha + beta;
  const auto spectrum = forward_2d(f0);
  ModulusEngine engine(f0, kInfinity);

  Theorem4Report report;
  report.base = base.to_string();
  report.alpha = alpha;
  report.beta = beta;
  report.truncation_level = base.resolution() - 1;
  report.tail_bound = diagonal_series_tail(s, base);
  report.inequality_holds = true;
  report.min_error1 = std::numeric_limits<double>::infinity();
  double min_product = std::numeric_limits<double>::infinity();
  double max_product = 0.0;
  for (std::size_t n = n_min; n <= n_max; ++n) {
    Theorem4Row row;
    row.n = n;
    row.degree = base.scale(n);
    const auto sigma = cesaro_mean_2d(spectrum, CesaroMeanParams{alpha, beta, row.degree, row.degree});
    row.error1 = difference_norm(sigma, f0, 1.0);
    row.coefficient = std::abs(spectrum(row.degree, row.degree));
    const double a = cesaro_weights(-alpha, row.degree)[row.degree];
    const double b = cesaro_weights(-beta, row.degree)[row.degree];
    row.lower_bound = (1.0 / (a * b) - 1.0) * power(row.degree, -s);
    row.modulus = engine.omega_total(n).value;
    row.modulus_product = row.modulus * power(row.degree, s);
    row.holds = row.error1 >= row.lower_bound - report.tail_bound;
    report.inequality_holds = report.inequality_holds && row.holds;
    report.min_error1 = std::min(report.min_error1, row.error1);
    min_product = std::min(min_product, row.modulus_product);
    max_product = std::max(max_product, row.modulus_product);
    report.rows.push_back(row);
  }
  report.modulus_spread = max_product / min_product;
  return report;
}

double kernel_sum_ratio(std::span<const double> coefficients, const VilenkinBase& base) {
  const Index n = coefficients.size();
  if (n < 1 || n > base.size()) throw std::out_of_range("kernel sum needs 1 <= n <= M_N");
  // sum_{k=1}^n a_k D_k = sum_{j<n} (a_{j+1} + ... + a_n) psi_j
  Spectrum1D spectrum(base);
  double tail = 0.0;
  double energy = 0.0;
  for (Index j = n; j-- > 0;) {
    tail += coefficients[j];
    spectrum(j) = tail;
    energy += coefficients[j] * coefficients[j];
  }
  const double l1 = lp_norm(inverse_1d(spectrum), 1.0);
  const double nd = static_cast<double>(n);
  return (l1 / nd) / (std::sqrt(energy) / std::sqrt(nd));
}

Lemma1Report run_lemma1(const VilenkinBase& base, std::size_t level_min, std::size_t level_max,
                        std::size_t trials, std::uint64_t seed) {
  if (level_min > level_max || level_max > base.resolution() || trials == 0) {
    throw std::out_of_range("lemma1 needs level_min <= level_max <= N and trials >= 1");
  }
  Lemma1Report report;
  report.base = base.to_string();
  report.trials = trials;
  report.seed = seed;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> xs, ys;
  for (std::size_t level = level_min; level <= level_max; ++level) {
    Lemma1Row row;
    row.level = level;
    row.n = base.scale(level);
    std::vector<double> a(row.n);
    for (std::size_t t = 0; t < trials; ++t) {
      for (auto& v : a) v = gauss(rng);
      const double ratio = kernel_sum_ratio(a, base);
      row.mean_ratio += ratio / static_cast<double>(trials);
      row.max_ratio = std::max(row.max_ratio, ratio);
    }
    report.max_ratio = std::max(report.max_ratio, row.max_ratio);
    xs.push_back(std::log(static_cast<double>(row.n)));
    ys.push_back(std::log(row.mean_ratio));
    report.rows.push_back(row);
  }
  if (xs.size() >= 2) {
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / static_cast<double>(ys.size());
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sxy += (xs[i] - mx) * (ys[i] - my);
      sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    report.log_slope = sxy / sxx;
  }
  return report;
}

// ---- serialization -------------------------------------------------------

void write_report(std::ostream& out, const Theorem3Report& report, ReportFormat format) {
  if (format == ReportFormat::json) {
    nlohmann::json j;
    j["base"] = report.base;
    j["alpha"] = report.alpha;
    j["beta"] = report.beta;
    j["p"] = format_exponent(report.p);
    j["sup_ratio"] = json_number(report.sup_ratio);
    auto& rows = j["rows"] = nlohmann::json::array();
    for (const auto& r : report.rows) {
      rows.push_back({{"n", r.n}, {"m", r.m}, {"k", r.k}, {"l", r.l}, {"lhs", r.lhs},
                      {"rhs_terms", r.rhs_terms}, {"rhs_sum", r.rhs_sum},
                      {"ratio", json_number(r.ratio)}});
    }
    out << j.dump(2) << '\n';
    return;
  }
  out.precision(17);
  out << "# base=" << report.base << " alpha=" << report.alpha << " beta=" << report.beta
      << " p=" << format_exponent(report.p) << " sup_ratio=" << report.sup_ratio << '\n';
  out << "n,m,k,l,lhs,rhs_omega1,rhs_omega2,rhs_omega12,rhs_sum_omega1,rhs_sum_omega2,rhs_total,ratio\n";
  for (const auto& r : report.rows) {
    out << r.n << ',' << r.m << ',' << r.k << ',' << r.l << ',' << r.lhs;
    for (double t : r.rhs_terms) out << ',' << t;
    out << ',' << r.rhs_sum << ',' << r.ratio << '\n';
  }
}

void write_report(std::ostream& out, const CorollaryReport& report, ReportFormat format) {
  if (format == ReportFormat::json) {
    nlohmann::json j;
    j["base"] = report.base;
    j["alpha"] = report.alpha;
    j["beta"] = report.beta;
    j["p"] = format_exponent(report.p);
    j["hypotheses_decay"] = report.hypotheses_decay;
    j["error_decays"] = report.error_decays;
    auto& rows = j["rows"] = nlohmann::json::array();
    for (const auto& r : report.rows) {
      rows.push_back({{"k", r.k}, {"n", r.degree}, {"hyp_omega1", r.hyp_x}, {"hyp_omega2", r.hyp_y},
                      {"hyp_omega1_literal", r.hyp_y_literal}, {"hyp_omega12", r.hyp_mixed},
                      {"hyp_omega", r.hyp_total}, {"error", r.error}});
    }
    out << j.dump(2) << '\n';
    return;
  }
  out.precision(17);
  out << "# base=" << report.base << " alpha=" << report.alpha << " beta=" << report.beta
      << " p=" << format_exponent(report.p) << " hypotheses_decay=" << report.hypotheses_decay
      << " error_decays=" << report.error_decays << '\n';
  out << "k,n,hyp_omega1,hyp_omega2,hyp_omega1_literal,hyp_omega12,hyp_omega,error\n";
  for (const auto& r : report.rows) {
    out << r.k << ',' << r.degree << ',' << r.hyp_x << ',' << r.hyp_y << ',' << r.hyp_y_literal
        << ',' << r.hyp_mixed << ',' << r.hyp_total << ',' << r.error << '\n';
  }
}

namespace {
constexpr const char* kTheorem4Note =
    "mean degree M_n with the coefficient probed at (M_n, M_n); the lower-bound index l_k is taken "
    "as l_k = n";
}

void write_report(std::ostream& out, const Theorem4Report& report, ReportFormat format) {
  if (format == ReportFormat::json) {
    nlohmann::json j;
    j["base"] = report.base;
    j["alpha"] = report.alpha;
    j["beta"] = report.beta;
    j["truncation_level"] = report.truncation_level;
    j["tail_bound"] = report.tail_bound;
    j["inequality_holds"] = report.inequality_holds;
    j["min_error1"] = report.min_error1;
    j["modulus_spread"] = report.modulus_spread;
    j["note"] = kTheorem4Note;
    auto& rows = j["rows"] = nlohmann::json::array();
    for (const auto& r : report.rows) {
      rows.push_back({{"n", r.n}, {"M_n", r.degree}, {"error1", r.error1},
                      {"coefficient", r.coefficient}, {"lower_bound", r.lower_bound},
                      {"tail_bound", report.tail_bound}, {"modulus", r.modulus},
                      {"modulus_product", r.modulus_product}, {"holds", r.holds}});
    }
    out << j.dump(2) << '\n';
    return;
  }
  out.precision(17);
  out << "# base=" << report.base << " alpha=" << report.alpha << " beta=" << report.beta
      << " truncation_level=" << report.truncation_level << " tail_bound=" << report.tail_bound
      << " inequality_holds=" << report.inequality_holds << " min_error1=" << report.min_error1
      << " modulus_spread=" << report.modulus_spread << '\n';
  out << "# " << kTheorem4Note << '\n';
  out << "n,M_n,error1,coefficient,lower_bound,tail_bound,modulus,modulus_product,holds\n";
  for (const auto& r : report.rows) {
    out << r.n << ',' << r.degree << ',' << r.error1 << ',' << r.coefficient << ','
        << r.lower_bound << ',' << report.tail_bound << ',' << r.modulus << ','
        << r.modulus_product << ',' << (r.holds ? 1 : 0) << '\n';
  }
}

void write_report(std::ostream& out, const Lemma1Report& report, ReportFormat format) {
  if (format == ReportFormat::json) {
    nlohmann::json j;
    j["base"] = report.base;
    j["trials"] = report.trials;
    j["seed"] = report.seed;
    j["max_ratio"] = report.max_ratio;
    j["log_slope"] = report.log_slope;
    auto& rows = j["rows"] = nlohmann::json::array();
    for (const auto& r : report.rows) {
      rows.push_back({{"level", r.level}, {"n", r.n}, {"mean_ratio", r.mean_ratio},
                      {"max_ratio", r.max_ratio}});
    }
    out << j.dump(2) << '\n';
    return;
  }
  out.precision(17);
  out << "# base=" << report.base << " trials=" << report.trials << " seed=" << report.seed
      << " max_ratio=" << report.max_ratio << " log_slope=" << report.log_slope << '\n';
  out << "level,n,mean_ratio,max_ratio\n";
  for (const auto& r : report.rows) {
    out << r.level << ',' << r.n << ',' << r.mean_ratio << ',' << r.max_ratio << '\n';
  }
}

void write_plot_data(const std::string& directory, const Theorem3Report& report) {
  auto diag = open_series(directory, "theorem3_diagonal_ratio");
  auto lhs = open_series(directory, "theorem3_diagonal_lhs");
  auto rhs = open_series(directory, "theorem3_diagonal_rhs");
  for (const auto& r : report.rows) {
    if (r.n != r.m) continue;
    diag << r.n << ' ' << r.ratio << '\n';
    lhs << r.n << ' ' << r.lhs << '\n';
    rhs << r.n << ' ' << r.rhs_sum << '\n';
  }
}

void write_plot_data(const std::string& directory, const CorollaryReport& report) {
  auto error = open_series(directory, "corollary_error");
  auto hx = open_series(directory, "corollary_hyp_omega1");
  auto hy = open_series(directory, "corollary_hyp_omega2");
  auto hm = open_series(directory, "corollary_hyp_omega12");
  auto ht = open_series(directory, "corollary_hyp_omega");
  for (const auto& r : report.rows) {
    error << r.degree << ' ' << r.error << '\n';
    hx << r.degree << ' ' << r.hyp_x << '\n';
    hy << r.degree << ' ' << r.hyp_y << '\n';
    hm << r.degree << ' ' << r.hyp_mixed << '\n';
    ht << r.degree << ' ' << r.hyp_total << '\n';
  }
}

void write_plot_data(const std::string& directory, const Theorem4Report& report) {
  auto error = open_series(directory, "theorem4_error1");
  auto lower = open_series(directory, "theorem4_lower_bound");
  auto modulus = open_series(directory, "theorem4_modulus_product");
  for (const auto& r : report.rows) {
    error << r.degree << ' ' << r.error1 << '\n';
    lower << r.degree << ' ' << r.lower_bound << '\n';
    modulus << r.degree << ' ' << r.modulus_product << '\n';
  }
}

void write_plot_data(const std::string& directory, const Lemma1Report& report) {
  auto mean = open_series(directory, "lemma1_mean_ratio");
  auto max = open_series(directory, "lemma1_max_ratio");
  for (const auto& r : report.rows) {
    mean << r.n << ' ' << r.mean_ratio << '\n';
    max << r.n << ' ' << r.max_ratio << '\n';
  }
}

}  // namespace vilenkin
