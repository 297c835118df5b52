#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <type_traits>
#include <variant>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vilenkin/analysis.hpp"
#include "vilenkin/cesaro.hpp"
#include "vilenkin/experiments.hpp"
#include "vilenkin/grid_io.hpp"
#include "vilenkin/transform.hpp"

using namespace vilenkin;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerify = 2;

struct Common {
  std::string base = "2x8";
  std::optional<std::size_t> resolution;
  double alpha = 0.3;
  double beta = 0.3;
  std::string p = "1";
  std::string out;
  std::string format = "csv";
  std::uint64_t seed = 0;
  bool approximate = false;
  std::size_t budget = std::size_t{1} << 20;
  std::string plot_dir;
};

struct Source {
  std::string in;
  std::string function = "poly";
  double exponent = 0.9;
  std::size_t level = 2;
};

VilenkinBase make_base(const Common& c) {
  return c.resolution ? VilenkinBase::parse(c.base, *c.resolution) : VilenkinBase::parse(c.base);
}

ReportFormat make_format(const Common& c) {
  return c.format == "json" ? ReportFormat::json : ReportFormat::csv;
}

ModulusOptions make_options(const Common& c) {
  ModulusOptions options;
  options.approximate = c.approximate;
  options.pair_budget = c.budget;
  options.seed = c.seed;
  return options;
}

// Writes to --out when given, stdout otherwise.
template <class Fn>
void emit(const Common& c, Fn&& fn) {
  if (c.out.empty()) {
    fn(std::cout);
    return;
  }
  std::ofstream file(c.out);
  if (!file) throw std::runtime_error("cannot write " + c.out);
  fn(file);
}

void add_common(CLI::App* app, Common& c, bool with_orders = true) {
  app->add_option("--base", c.base, "radix list, e.g. 2x8 or 2,3,4,5")->capture_default_str();
  app->add_option("--resolution", c.resolution, "number of levels N (repeats or truncates --base)");
  if (with_orders) {
    app->add_option("--alpha", c.alpha, "order alpha")->capture_default_str();
    app->add_option("--beta", c.beta, "order beta")->capture_default_str();
  }
  app->add_option("--p", c.p, "norm exponent: a number >= 1 or inf")->capture_default_str();
  app->add_option("--out", c.out, "output file (default stdout)");
  app->add_option("--format", c.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app->add_option("--seed", c.seed, "seed for randomized inputs")->capture_default_str();
  app->add_flag("--approximate", c.approximate, "sample shifts when a modulus exceeds the budget");
  app->add_option("--budget", c.budget, "largest exact shift-pair enumeration")->capture_default_str();
  app->add_option("--plot-dir", c.plot_dir, "write x y series files here");
}

void add_source(CLI::App* app, Source& s) {
  app->add_option("--in", s.in, "2D grid file (overrides --function)");
  app->add_option("--function", s.function, "generated input")
      ->check(CLI::IsMember({"f0", "holder", "poly", "constant", "random"}))
      ->capture_default_str();
  app->add_option("--exponent", s.exponent, "decay exponent of the holder series")->capture_default_str();
  app->add_option("--level", s.level, "spectral support level of poly")->capture_default_str();
}

GridFunction2D load_2d(const Common& c, const Source& s) {
  if (!s.in.empty()) {
    auto data = read_grid_file(s.in);
    if (auto* f = std::get_if<GridFunction2D>(&data)) return std::move(*f);
    if (auto* spec = std::get_if<Spectrum2D>(&data)) return inverse_2d(*spec);
    throw std::invalid_argument(s.in + " is not a 2D grid");
  }
  const auto base = make_base(c);
  if (s.function == "f0") return build_f0(c.alpha, c.beta, base);
  if (s.function == "holder") return diagonal_series(s.exponent, base);
  if (s.function == "poly") return random_polynomial(base, s.level, c.seed);
  if (s.function == "random") return random_step_function(base, c.seed);
  GridFunction2D f(base);
  for (auto& v : f.values()) v = 1.0;
  return f;
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

int run_transform(const Common& c, const Source& s, bool inverse, bool check) {
  GridData data = s.in.empty() ? GridData(load_2d(c, s)) : read_grid_file(s.in);
  int status = kExitOk;
  std::visit(
      [&](auto& f) {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, GridFunction1D>) {
          if (inverse) throw std::invalid_argument("--inverse needs a spectrum file");
          auto spec = forward_1d(f);
          if (check && max_abs_diff(spec.values(), naive_1d(f).values()) > 1e-12) status = kExitVerify;
          emit(c, [&](std::ostream& o) { write_grid(o, spec); });
        } else if constexpr (std::is_same_v<F, GridFunction2D>) {
          if (inverse) throw std::invalid_argument("--inverse needs a spectrum file");
          auto spec = forward_2d(f);
          if (check && max_abs_diff(spec.values(), naive_2d(f).values()) > 1e-12) status = kExitVerify;
          emit(c, [&](std::ostream& o) { write_grid(o, spec); });
        } else if constexpr (std::is_same_v<F, Spectrum1D>) {
          auto g = inverse_1d(f);
          if (check && max_abs_diff(forward_1d(g).values(), f.values()) > 1e-12) status = kExitVerify;
          emit(c, [&](std::ostream& o) { write_grid(o, g); });
        } else {
          auto g = inverse_2d(f);
          if (check && max_abs_diff(forward_2d(g).values(), f.values()) > 1e-12) status = kExitVerify;
          emit(c, [&](std::ostream& o) { write_grid(o, g); });
        }
      },
      data);
  if (status != kExitOk) std::cerr << "transform check failed against the direct sum\n";
  return status;
}

int run_kernel(const Common& c, Index n, bool check_eq1) {
  const auto base = make_base(c);
  if (!check_eq1) {
    const auto d = dirichlet_kernel(n, base);
    emit(c, [&](std::ostream& o) { write_grid(o, d); });
    return kExitOk;
  }
  // D_{M_k} = M_k on I_k and 0 elsewhere, for every level.
  bool ok = true;
  emit(c, [&](std::ostream& o) {
    o << "k,M_k,max_abs_error\n";
    for (std::size_t k = 0; k <= base.resolution(); ++k) {
      const Index mk = base.scale(k);
      const auto d = dirichlet_kernel(mk, base);
      double err = 0.0;
      for (Index x = 0; x < base.size(); ++x) {
        const double expected = index_in_coset(x, 0, k, base) ? static_cast<double>(mk) : 0.0;
        err = std::max(err, std::abs(d(x) - expected));
      }
      ok = ok && err <= 1e-10;
      o << k << ',' << mk << ',' << err << '\n';
    }
  });
  dirichlet_kernel(n, base);
  std::cerr << "identity " << (ok ? "holds" : "FAILS") << " on " << base.to_string() << '\n';
  return ok ? kExitOk : kExitVerify;
}

int run_weights(const Common& c, double order, std::size_t n, bool check) {
  const auto table = cesaro_weights(order, n);
  emit(c, [&](std::ostream& o) {
    o.precision(17);
    if (c.format == "json") {
      o << "{\"order\": " << order << ", \"values\": [";
      for (std::size_t k = 0; k <= n; ++k) o << (k ? ", " : "") << table[k];
      o << "]}\n";
    } else {
      o << "k,A_k\n";
      for (std::size_t k = 0; k <= n; ++k) o << k << ',' << table[k] << '\n';
    }
  });
  if (!check) return kExitOk;
  const auto report = verify_weight_identities(table);
  std::cerr << "sum identity deviation " << report.max_sum_deviation << ", difference identity deviation "
            << report.max_difference_deviation << '\n';
  return report.max_sum_deviation <= 1e-12 && report.max_difference_deviation <= 1e-12 ? kExitOk
                                                                                        : kExitVerify;
}

int run_mean(const Common& c, const Source& s, Index n, Index m) {
  const auto f = load_2d(c, s);
  const auto sigma = cesaro_mean_2d(forward_2d(f), CesaroMeanParams{c.alpha, c.beta, n, m});
  std::vector<Complex> diff(f.size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = sigma.values()[i] - f.values()[i];
  const double p = parse_exponent(c.p);
  std::cerr << "||sigma - f||_" << format_exponent(p) << " = " << lp_norm(diff, p) << '\n';
  emit(c, [&](std::ostream& o) { write_grid(o, sigma); });
  return kExitOk;
}

int run_moduli(const Common& c, const Source& s, const std::string& kind, std::optional<std::size_t> k,
               std::optional<std::size_t> l) {
  const auto f = load_2d(c, s);
  const double p = parse_exponent(c.p);
  const auto n_levels = f.base().resolution();
  ModulusEngine engine(f, p, make_options(c));
  std::vector<ModulusReport> rows;
  std::vector<std::size_t> ks, ls;
  for (std::size_t i = 0; i <= n_levels; ++i) ks.push_back(i);
  if (k) ks = {*k};
  ls = l ? std::vector<std::size_t>{*l} : ks;
  const bool all = kind == "all";
  for (std::size_t a : ks) {
    if (all || kind == "omega1") rows.push_back(engine.omega1(a));
    if (all || kind == "omega2") rows.push_back(engine.omega2(l ? *l : a));
    if (all || kind == "omega12") {
      if (l) {
        rows.push_back(engine.omega12(a, *l));
      } else {
        rows.push_back(engine.omega12(a, a));
      }
    }
    if (all || kind == "omega") rows.push_back(engine.omega_total(a));
  }
  emit(c, [&](std::ostream& o) {
    o << modulus_csv_header() << '\n';
    for (const auto& r : rows) {
      o << to_csv_row(r, f.side()) << '\n';
      if (r.samples) std::cerr << "note: " << to_string(r.kind) << " sampled " << r.samples << " pairs\n";
    }
  });
  return kExitOk;
}

template <class Report>
void finish_report(const Common& c, const Report& report) {
  emit(c, [&](std::ostream& o) { write_report(o, report, make_format(c)); });
  if (!c.plot_dir.empty()) write_plot_data(c.plot_dir, report);
}

std::vector<Index> parse_degrees(const std::vector<std::string>& items) {
  std::vector<Index> out;
  for (const auto& item : items) out.push_back(std::stoull(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vilenkin-Fourier transforms, negative-order Cesaro means and dyadic moduli"};
  app.require_subcommand(1);

  Common c;
  Source s;
  bool inverse = false, check = false, check_eq1 = false;
  Index n = 0;
  std::optional<Index> m_opt;
  std::optional<std::size_t> k_opt, l_opt;
  std::string kind = "all";
  std::vector<std::string> degrees;
  std::size_t n_min = 1;
  std::optional<std::size_t> n_max;
  std::size_t level_min = 3, level_max = 9, trials = 16;

  auto* transform = app.add_subcommand("transform", "forward (or --inverse) Vilenkin transform of a grid");
  add_common(transform, c, false);
  add_source(transform, s);
  transform->add_flag("--inverse", inverse, "synthesize a grid from a spectrum file");
  transform->add_flag("--check", check, "compare against the direct sum / roundtrip");

  auto* kernel = app.add_subcommand("kernel", "Dirichlet kernel D_n");
  add_common(kernel, c, false);
  kernel->add_option("-n", n, "kernel index")->required();
  kernel->add_flag("--check-eq1", check_eq1, "verify D_{M_k} = M_k 1_{I_k} for every level");

  auto* weights = app.add_subcommand("weights", "Cesaro numbers A_0..A_n of order --alpha");
  add_common(weights, c);
  weights->add_option("-n", n, "largest index")->required();
  weights->add_flag("--check", check, "verify the summation and difference identities");

  auto* mean = app.add_subcommand("mean", "sigma_{n,m}^{-alpha,-beta} of a 2D grid");
  add_common(mean, c);
  add_source(mean, s);
  mean->add_option("-n", n, "degree in x")->required();
  mean->add_option("-m", m_opt, "degree in y (default n)");

  auto* moduli = app.add_subcommand("moduli", "dyadic moduli of continuity as CSV");
  add_common(moduli, c, false);
  add_source(moduli, s);
  moduli->add_option("--kind", kind, "omega1, omega2, omega12, omega or all")
      ->check(CLI::IsMember({"omega1", "omega2", "omega12", "omega", "all"}))
      ->capture_default_str();
  moduli->add_option("-k", k_opt, "level (default every level)");
  moduli->add_option("-l", l_opt, "second level for omega2/omega12");

  auto* theorem3 = app.add_subcommand("theorem3", "ratio of the mean error to the five-term bound");
  add_common(theorem3, c);
  add_source(theorem3, s);
  theorem3->add_option("--degrees", degrees, "degree list (default M_k and M_k + M_{k-1})")->delimiter(',');

  auto* corollary = app.add_subcommand("corollary", "convergence scan at n = m = M_k");
  add_common(corollary, c);
  add_source(corollary, s);

  auto* theorem4 = app.add_subcommand("theorem4", "L1 error of the means of the counterexample f0");
  add_common(theorem4, c);
  theorem4->add_option("--n-min", n_min, "first level")->capture_default_str();
  theorem4->add_option("--n-max", n_max, "last level (default N-1)");

  auto* lemma1 = app.add_subcommand("lemma1", "L1 scaling of random Dirichlet-kernel sums");
  add_common(lemma1, c, false);
  lemma1->add_option("--level-min", level_min)->capture_default_str();
  lemma1->add_option("--level-max", level_max)->capture_default_str();
  lemma1->add_option("--trials", trials)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*transform) return run_transform(c, s, inverse, check);
    if (*kernel) return run_kernel(c, n, check_eq1);
    if (*weights) return run_weights(c, c.alpha, n, check);
    if (*mean) return run_mean(c, s, n, m_opt.value_or(n));
    if (*moduli) return run_moduli(c, s, kind, k_opt, l_opt);
    if (*theorem3) {
      const auto f = load_2d(c, s);
      const auto list = degrees.empty() ? default_degree_sweep(f.base()) : parse_degrees(degrees);
      finish_report(c, run_theorem3(f, c.alpha, c.beta, parse_exponent(c.p), list, make_options(c)));
      return kExitOk;
    }
    if (*corollary) {
      const auto f = load_2d(c, s);
      finish_report(c, run_corollary_scan(f, c.alpha, c.beta, parse_exponent(c.p), make_options(c)));
      return kExitOk;
    }
    if (*theorem4) {
      const auto base = make_base(c);
      const std::size_t last = n_max.value_or(base.resolution() == 0 ? 0 : base.resolution() - 1);
      const auto report = run_theorem4(c.alpha, c.beta, base, n_min, last);
      finish_report(c, report);
      if (!report.inequality_holds) {
        std::cerr << "error1 >= lower_bound - tail_bound FAILS\n";
        return kExitVerify;
      }
      return kExitOk;
    }
    if (*lemma1) {
      const auto report = run_lemma1(make_base(c), level_min, level_max, trials, c.seed);
      finish_report(c, report);
      return report.max_ratio <= 10.0 ? kExitOk : kExitVerify;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
