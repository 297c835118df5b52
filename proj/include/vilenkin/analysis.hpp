#pragma once

// L^p norms, group translations and dyadic moduli of continuity of step
// functions on G_m x G_m.
//
// For a function constant on level-N cells, a shift whose digits below level
// N vanish acts trivially, so the supremum over I_k reduces to the finite set
// of representatives {t * M_k : 0 <= t < M_N / M_k}. Every modulus below is
// that finite supremum and therefore exact.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vilenkin/field.hpp"

namespace vilenkin {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Parses "1", "2.5", "inf" into a norm exponent; throws std::domain_error for p < 1.
double parse_exponent(std::string_view text);
std::string format_exponent(double p);

/// (mean |v|^p)^{1/p}, or max |v| for p = infinity.
double lp_norm(std::span<const Complex> values, double p);
double lp_norm(const GridFunction1D& f, double p);
double lp_norm(const GridFunction2D& f, double p);

/// Output at x is f(x - u).
GridFunction1D translate(const GridFunction1D& f, const GroupPoint& u);
/// Output at (x, y) is f(x - u, y - v).
GridFunction2D translate(const GridFunction2D& f, const GroupPoint& u, const GroupPoint& v);
GridFunction2D translate(const GridFunction2D& f, Index u, Index v);

/// Embeds a level-N step function into the grid with one extra level of
/// radix `radix`; the function itself is unchanged.
GridFunction2D refine(const GridFunction2D& f, int radix);

enum class ModulusKind { omega1, omega2, omega12, omega_total };
std::string_view to_string(ModulusKind kind);

enum class ModulusMethod {
  automatic,    // spectral for p = 2, diameter for p = inf (not omega12), else brute force
  brute_force,  // direct enumeration of every representative shift
  spectral,     // p = 2 only: all shifts at once from the autocorrelation of |f^|^2
  diameter,     // p = inf only, omega1/omega2/omega_total: max spread within cosets
};

struct ModulusOptions {
  /// Largest number of (u, v) pairs brute force may enumerate for omega12 or
  /// omega_total before refusing.
  std::size_t pair_budget = std::size_t{1} << 20;
  /// Above the budget, sample `samples` random pairs instead of refusing.
  bool approximate = false;
  std::size_t samples = 4096;
  std::uint64_t seed = 0;
  ModulusMethod method = ModulusMethod::automatic;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ModulusReport {
  ModulusKind kind = ModulusKind::omega1;
  std::size_t k = 0;
  std::size_t l = 0;
  double p = 1.0;
  double value = 0.0;
  /// Shift attaining the supremum (cell indices).
  Index shift_u = 0;
  Index shift_v = 0;
  /// Number of sampled pairs when approximated; 0 means exact.
  std::size_t samples = 0;

  /// u for omega1, v for omega2, u * M_N + v for the pair kinds.
  Index shift_index(Index side) const;
};

/// Evaluates moduli of one function at one exponent, caching per-shift norms
/// so that sweeps over levels reuse work.
class ModulusEngine {
 public:
  ModulusEngine(GridFunction2D f, double p, ModulusOptions options = {});
  ~ModulusEngine();
  ModulusEngine(ModulusEngine&&) noexcept;
  ModulusEngine& operator=(ModulusEngine&&) noexcept;

  const GridFunction2D& function() const noexcept;
  double exponent() const noexcept;

  /// omega_1(f, 1/M_k)_p: sup over u in I_k of ||f(. - u, .) - f||_p.
  ModulusReport omega1(std::size_t k);
  /// omega_2(f, 1/M_l)_p: shifts in the second variable.
  ModulusReport omega2(std::size_t l);
  /// omega_{1,2}(f, 1/M_k, 1/M_l)_p: sup of the mixed second difference.
  ModulusReport omega12(std::size_t k, std::size_t l);
  /// omega(f, 1/M_k)_p: sup over joint shifts (u, v) in I_k x I_k.
  ModulusReport omega_total(std::size_t k);

 private:
  struct State;
  std::unique_ptr<State> state_;
};

ModulusReport omega1(const GridFunction2D& f, std::size_t k, double p, const ModulusOptions& options = {});
ModulusReport omega2(const GridFunction2D& f, std::size_t l, double p, const ModulusOptions& options = {});
ModulusReport omega12(const GridFunction2D& f, std::size_t k, std::size_t l, double p,
                      const ModulusOptions& options = {});
ModulusReport omega_total(const GridFunction2D& f, std::size_t k, double p,
                          const ModulusOptions& options = {});

/// `kind,k,l,p,value,shift_index`
std::string modulus_csv_header();
std::string to_csv_row(const ModulusReport& report, Index side);

/// Largest |a - b| over a point set, with the attaining indices.
struct Diameter {
  double value = 0.0;
  std::size_t first = 0;
  std::size_t second = 0;
};
Diameter diameter(std::span<const Complex> points);

}  // namespace vilenkin
