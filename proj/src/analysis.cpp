#include "vilenkin/analysis.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "vilenkin/transform.hpp"

namespace vilenkin {

namespace {

constexpr double kUnset = -1.0;

class NormAccumulator {
 public:
  explicit NormAccumulator(double p) : p_(p) {}

  void add(Complex d) {
    if (p_ == 1.0) {
      acc_ += std::abs(d);
    } else if (p_ == 2.0) {
      acc_ += std::norm(d);
    } else if (p_ == kInfinity) {
      acc_ = std::max(acc_, std::abs(d));
    } else {
      acc_ += std::pow(std::abs(d), p_);
    }
  }

  double finish(std::size_t count) const {
    if (p_ == kInfinity) return acc_;
    const double mean = acc_ / static_cast<double>(count);
    if (p_ == 1.0) return mean;
    if (p_ == 2.0) return std::sqrt(mean);
    return std::pow(mean, 1.0 / p_);
  }

 private:
  double p_;
  double acc_ = 0.0;
};

void require_exponent(double p) {
  if (!(p >= 1.0)) throw std::domain_error("norm exponent p must be >= 1");
}

double cross(Complex o, Complex a, Complex b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) - (a.imag() - o.imag()) * (b.real() - o.real());
}

}  // namespace

double parse_exponent(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "Inf") return kInfinity;
  double p = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("malformed norm exponent '" + std::string(text) + "'");
  }
  require_exponent(p);
  return p;
}

std::string format_exponent(double p) {
  if (p == kInfinity) return "inf";
  std::ostringstream out;
  out << p;
  return out.str();
}

double lp_norm(std::span<const Complex> values, double p) {
  require_exponent(p);
  NormAccumulator acc(p);
  for (const auto& v : values) acc.add(v);
  return acc.finish(values.size());
}

double lp_norm(const GridFunction1D& f, double p) { return lp_norm(f.values(), p); }
double lp_norm(const GridFunction2D& f, double p) { return lp_norm(f.values(), p); }

GridFunction1D translate(const GridFunction1D& f, const GroupPoint& u) {
  const auto table = subtraction_table(digits_to_index(u, f.base()), f.base());
  GridFunction1D out(f.base());
  for (Index x = 0; x < f.side(); ++x) out(x) = f(table[x]);
  return out;
}

GridFunction2D translate(const GridFunction2D& f, Index u, Index v) {
  const auto tx = subtraction_table(u, f.base());
  const auto ty = subtraction_table(v, f.base());
  GridFunction2D out(f.base());
  for (Index x = 0; x < f.side(); ++x) {
    for (Index y = 0; y < f.side(); ++y) out(x, y) = f(tx[x], ty[y]);
  }
  return out;
}

GridFunction2D translate(const GridFunction2D& f, const GroupPoint& u, const GroupPoint& v) {
  return translate(f, digits_to_index(u, f.base()), digits_to_index(v, f.base()));
}

GridFunction2D refine(const GridFunction2D& f, int radix) {
  GridFunction2D out(f.base().refined(radix));
  const Index side = f.side();
  for (Index x = 0; x < out.side(); ++x) {
    for (Index y = 0; y < out.side(); ++y) out(x, y) = f(x % side, y % side);
  }
  return out;
}

std::string_view to_string(ModulusKind kind) {
  switch (kind) {
    case ModulusKind::omega1: return "omega1";
    case ModulusKind::omega2: return "omega2";
    case ModulusKind::omega12: return "omega12";
    case ModulusKind::omega_total: return "omega_total";
  }
  return "unknown";
}

Index ModulusReport::shift_index(Index side) const {
  switch (kind) {
    case ModulusKind::omega1: return shift_u;
    case ModulusKind::omega2: return shift_v;
    default: return shift_u * side + shift_v;
  }
}

std::string modulus_csv_header() { return "kind,k,l,p,value,shift_index"; }

std::string to_csv_row(const ModulusReport& report, Index side) {
  std::ostringstream out;
  out.precision(17);
  out << to_string(report.kind) << ',' << report.k << ',' << report.l << ','
      << format_exponent(report.p) << ',' << report.value << ',' << report.shift_index(side);
  return out.str();
}

Diameter diameter(std::span<const Complex> points) {
  Diameter best;
  if (points.size() < 2) return best;
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto pa = points[a];
    const auto pb = points[b];
    return pa.real() < pb.real() || (pa.real() == pb.real() && pa.imag() < pb.imag());
  });
  // Andrew's monotone chain; the diameter is attained between hull vertices.
  std::vector<std::size_t> hull(2 * order.size());
  std::size_t h = 0;
  for (std::size_t i : order) {
    while (h >= 2 && cross(points[hull[h - 2]], points[hull[h - 1]], points[i]) <= 0.0) --h;
    hull[h++] = i;
  }
  for (std::size_t idx = order.size() - 1, lower = h + 1; idx-- > 0;) {
    const std::size_t i = order[idx];
    while (h >= lower && cross(points[hull[h - 2]], points[hull[h - 1]], points[i]) <= 0.0) --h;
    hull[h++] = i;
  }
  hull.resize(h > 1 ? h - 1 : h);
  best.first = best.second = hull.front();
  for (std::size_t a = 0; a < hull.size(); ++a) {
    for (std::size_t b = a + 1; b < hull.size(); ++b) {
      const double d = std::abs(points[hull[a]] - points[hull[b]]);
      if (d > best.value) best = {d, hull[a], hull[b]};
    }
  }
  return best;
}

struct ModulusEngine::State {
  GridFunction2D f;
  double p;
  ModulusOptions options;
  Index side;

  std::vector<std::vector<Index>> subtraction;  // per shift, built on demand
  std::vector<double> partial_x;                 // per shift u
  std::vector<double> partial_y;                 // per shift v
  std::vector<double> total_pairs;               // u * side + v
  std::vector<double> mixed_pairs;

  std::vector<Complex> autocorrelation;  // spectral method
  double energy = 0.0;

  State(GridFunction2D fn, double exponent, ModulusOptions opts)
      : f(std::move(fn)), p(exponent), options(opts), side(f.side()) {
    require_exponent(p);
  }

  ModulusMethod method_for(ModulusKind kind) const {
    switch (options.method) {
      case ModulusMethod::automatic:
        if (p == 2.0) return ModulusMethod::spectral;
        if (p == kInfinity && kind != ModulusKind::omega12) return ModulusMethod::diameter;
        return ModulusMethod::brute_force;
      case ModulusMethod::spectral:
        if (p != 2.0) throw std::invalid_argument("spectral moduli require p = 2");
        return ModulusMethod::spectral;
      case ModulusMethod::diameter:
        if (p != kInfinity || kind == ModulusKind::omega12) {
          throw std::invalid_argument("diameter moduli require p = inf and a single-difference kind");
        }
        return ModulusMethod::diameter;
      case ModulusMethod::brute_force:
        return ModulusMethod::brute_force;
    }
    return ModulusMethod::brute_force;
  }

  void require_level(std::size_t level) const {
    if (level > f.base().resolution()) {
      throw std::out_of_range("modulus level " + std::to_string(level) + " exceeds resolution " +
                              std::to_string(f.base().resolution()));
    }
  }

  Index representatives(std::size_t level) const { return side / f.base().scale(level); }

  const std::vector<Index>& table(Index shift) {
    if (subtraction.empty()) subtraction.resize(side);
    auto& t = subtraction[shift];
    if (t.empty()) t = subtraction_table(shift, f.base());
    return t;
  }

  // ---- brute force -------------------------------------------------------

  double shift_x_norm(Index u) {
    if (partial_x.empty()) partial_x.assign(side, kUnset);
    if (partial_x[u] != kUnset) return partial_x[u];
    const auto& tx = table(u);
    NormAccumulator acc(p);
    for (Index x = 0; x < side; ++x) {
      const Complex* shifted = &f.values()[tx[x] * side];
      const Complex* base_row = &f.values()[x * side];
      for (Index y = 0; y < side; ++y) acc.add(shifted[y] - base_row[y]);
    }
    return partial_x[u] = acc.finish(f.size());
  }

  double shift_y_norm(Index v) {
    if (partial_y.empty()) partial_y.assign(side, kUnset);
    if (partial_y[v] != kUnset) return partial_y[v];
    const auto& ty = table(v);
    NormAccumulator acc(p);
    for (Index x = 0; x < side; ++x) {
      const Complex* row = &f.values()[x * side];
      for (Index y = 0; y < side; ++y) acc.add(row[ty[y]] - row[y]);
    }
    return partial_y[v] = acc.finish(f.size());
  }

  double pair_norm(ModulusKind kind, Index u, Index v) {
    auto& cache = kind == ModulusKind::omega12 ? mixed_pairs : total_pairs;
    if (cache.empty()) cache.assign(side * side, kUnset);
    double& slot = cache[u * side + v];
    if (slot != kUnset) return slot;
    const auto& tx = table(u);
    const auto& ty = table(v);
    NormAccumulator acc(p);
    const auto values = f.values();
    for (Index x = 0; x < side; ++x) {
      const Complex* shifted = &values[tx[x] * side];
      const Complex* row = &values[x * side];
      if (kind == ModulusKind::omega12) {
        for (Index y = 0; y < side; ++y) {
          acc.add(shifted[ty[y]] - shifted[y] - row[ty[y]] + row[y]);
        }
      } else {
        for (Index y = 0; y < side; ++y) acc.add(shifted[ty[y]] - row[y]);
      }
    }
    return slot = acc.finish(f.size());
  }

  // ---- spectral (p = 2) --------------------------------------------------

  void ensure_autocorrelation() {
    if (!autocorrelation.empty()) return;
    auto power = forward_2d(f);
    for (auto& c : power.values()) c = std::norm(c);
    autocorrelation = inverse_2d(power).release();
    energy = autocorrelation[0].real();
  }

  double corr(Index u, Index v) const { return autocorrelation[u * side + v].real(); }

  static double root(double squared) { return std::sqrt(std::max(0.0, squared)); }

  double spectral_value(ModulusKind kind, Index u, Index v) {
    ensure_autocorrelation();
    const double s = energy;
    switch (kind) {
      case ModulusKind::omega1: return root(2.0 * s - 2.0 * corr(u, 0));
      case ModulusKind::omega2: return root(2.0 * s - 2.0 * corr(0, v));
      case ModulusKind::omega_total: return root(2.0 * s - 2.0 * corr(u, v));
      case ModulusKind::omega12: {
        const Index neg_v = index_neg(v, f.base());
        return root(4.0 * s - 4.0 * corr(u, 0) - 4.0 * corr(0, v) + 2.0 * corr(u, v) +
                    2.0 * corr(u, neg_v));
      }
    }
    return 0.0;
  }

  // ---- diameter (p = inf) ------------------------------------------------

  ModulusReport diameter_value(ModulusKind kind, std::size_t level) {
    ModulusReport report;
    const Index step = f.base().scale(level);
    const Index count = representatives(level);
    std::vector<Complex> block;
    std::vector<std::pair<Index, Index>> coords;
    auto scan = [&]() {
      const auto d = diameter(block);
      if (d.value > report.value) {
        report.value = d.value;
        // |f(a) - f(b)| = |f(x - u, y - v) - f(x, y)| with (x, y) = b, (x - u, y - v) = a.
        const auto [ax, ay] = coords[d.first];
        const auto [bx, by] = coords[d.second];
        report.shift_u = index_sub(bx, ax, f.base());
        report.shift_v = index_sub(by, ay, f.base());
      }
    };
    if (kind == ModulusKind::omega_total) {
      for (Index r1 = 0; r1 < step; ++r1) {
        for (Index r2 = 0; r2 < step; ++r2) {
          block.clear();
          coords.clear();
          for (Index t1 = 0; t1 < count; ++t1) {
            for (Index t2 = 0; t2 < count; ++t2) {
              const Index x = r1 + t1 * step;
              const Index y = r2 + t2 * step;
              block.push_back(f(x, y));
              coords.emplace_back(x, y);
            }
          }
          scan();
        }
      }
    } else {
      const bool along_x = kind == ModulusKind::omega1;
      for (Index fixed = 0; fixed < side; ++fixed) {
        for (Index r = 0; r < step; ++r) {
          block.clear();
          coords.clear();
          for (Index t = 0; t < count; ++t) {
            const Index moving = r + t * step;
            const Index x = along_x ? moving : fixed;
            const Index y = along_x ? fixed : moving;
            block.push_back(f(x, y));
            coords.emplace_back(x, y);
          }
          scan();
        }
      }
    }
    return report;
  }

  // ---- dispatch ----------------------------------------------------------

  ModulusReport single(ModulusKind kind, std::size_t level) {
    require_level(level);
    const auto method = method_for(kind);
    ModulusReport report;
    if (method == ModulusMethod::diameter) {
      report = diameter_value(kind, level);
    } else {
      const Index step = f.base().scale(level);
      for (Index t = 0; t < representatives(level); ++t) {
        const Index shift = t * step;
        double value = 0.0;
        if (method == ModulusMethod::spectral) {
          value = kind == ModulusKind::omega1 ? spectral_value(kind, shift, 0)
                                              : spectral_value(kind, 0, shift);
        } else {
          value = kind == ModulusKind::omega1 ? shift_x_norm(shift) : shift_y_norm(shift);
        }
        if (value > report.value) {
          report.value = value;
          (kind == ModulusKind::omega1 ? report.shift_u : report.shift_v) = shift;
        }
      }
    }
    report.kind = kind;
    report.k = kind == ModulusKind::omega2 ? 0 : level;
    report.l = kind == ModulusKind::omega2 ? level : 0;
    report.p = p;
    return report;
  }

  ModulusReport pair(ModulusKind kind, std::size_t k, std::size_t l) {
    require_level(k);
    require_level(l);
    const auto method = method_for(kind);
    if (method == ModulusMethod::diameter) {
      auto report = diameter_value(kind, k);
      report.kind = kind;
      report.k = report.l = k;
      report.p = p;
      return report;
    }

    ModulusReport report;
    report.kind = kind;
    report.k = k;
    report.l = l;
    report.p = p;
    const Index step_u = f.base().scale(k);
    const Index step_v = f.base().scale(l);
    const Index count_u = representatives(k);
    const Index count_v = representatives(l);
    auto consider = [&](Index u, Index v) {
      const double value = method == ModulusMethod::spectral ? spectral_value(kind, u, v)
                                                             : pair_norm(kind, u, v);
      if (value > report.value) {
        report.value = value;
        report.shift_u = u;
        report.shift_v = v;
      }
    };

    const bool enumerate_all = method == ModulusMethod::spectral ||
                               count_u * count_v <= options.pair_budget;
    if (enumerate_all) {
      for (Index t1 = 0; t1 < count_u; ++t1) {
        for (Index t2 = 0; t2 < count_v; ++t2) consider(t1 * step_u, t2 * step_v);
      }
      return report;
    }
    if (!options.approximate) {
      throw BudgetExceeded(std::string(to_string(kind)) + " at levels (" + std::to_string(k) +
                           ", " + std::to_string(l) + ") needs " +
                           std::to_string(count_u * count_v) + " shift pairs, budget is " +
                           std::to_string(options.pair_budget) +
                           "; use a smaller grid or enable approximation");
    }
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<Index> pick_u(0, count_u - 1);
    std::uniform_int_distribution<Index> pick_v(0, count_v - 1);
    for (std::size_t s = 0; s < options.samples; ++s) consider(pick_u(rng) * step_u, pick_v(rng) * step_v);
    report.samples = options.samples;
    return report;
  }
};

ModulusEngine::ModulusEngine(GridFunction2D f, double p, ModulusOptions options)
    : state_(std::make_unique<State>(std::move(f), p, options)) {}
ModulusEngine::~ModulusEngine() = default;
ModulusEngine::ModulusEngine(ModulusEngine&&) noexcept = default;
ModulusEngine& ModulusEngine::operator=(ModulusEngine&&) noexcept = default;

const GridFunction2D& ModulusEngine::function() const noexcept { return state_->f; }
double ModulusEngine::exponent() const noexcept { return state_->p; }

ModulusReport ModulusEngine::omega1(std::size_t k) { return state_->single(ModulusKind::omega1, k); }
ModulusReport ModulusEngine::omega2(std::size_t l) { return state_->single(ModulusKind::omega2, l); }
ModulusReport ModulusEngine::omega12(std::size_t k, std::size_t l) {
  return state_->pair(ModulusKind::omega12, k, l);
}
ModulusReport ModulusEngine::omega_total(std::size_t k) {
  return state_->pair(ModulusKind::omega_total, k, k);
}

ModulusReport omega1(const GridFunction2D& f, std::size_t k, double p, const ModulusOptions& options) {
  return ModulusEngine(f, p, options).omega1(k);
}
ModulusReport omega2(const GridFunction2D& f, std::size_t l, double p, const ModulusOptions& options) {
  return ModulusEngine(f, p, options).omega2(l);
}
ModulusReport omega12(const GridFunction2D& f, std::size_t k, std::size_t l, double p,
                      const ModulusOptions& options) {
  return ModulusEngine(f, p, options).omega12(k, l);
}
ModulusReport omega_total(const GridFunction2D& f, std::size_t k, double p,
                          const ModulusOptions& options) {
  return ModulusEngine(f, p, options).omega_total(k);
}

}  // namespace vilenkin
