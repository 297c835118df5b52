#pragma once

// Mixed-radix arithmetic on a bounded Vilenkin group truncated to N digit
// levels. Digits are little-endian: digit k carries weight M_k.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vilenkin {

using Index = std::size_t;

inline constexpr int kMaxRadix = 64;
inline constexpr Index kMaxGridSize = Index{1} << 40;

/// The radix sequence m_0..m_{N-1} together with the scales
/// M_0 = 1, M_{k+1} = m_k M_k. Validated on construction.
class VilenkinBase {
 public:
  VilenkinBase() : VilenkinBase(std::vector<int>{}) {}
  explicit VilenkinBase(std::vector<int> radices);

  /// Parses `(<int>['x'<count>])(',' ...)*`, e.g. "2x8" or "2,3,4,5".
  static VilenkinBase parse(std::string_view spec);

  /// Parses `spec` and fits it to `resolution` levels: longer lists are
  /// truncated, shorter ones are repeated periodically ("2,3" -> 2,3,2,3,...).
  static VilenkinBase parse(std::string_view spec, std::size_t resolution);

  std::size_t resolution() const noexcept { return radices_.size(); }
  int radix(std::size_t k) const { return radices_.at(k); }
  std::span<const int> radices() const noexcept { return radices_; }

  /// M_k for 0 <= k <= N.
  Index scale(std::size_t k) const { return scales_.at(k); }
  std::span<const Index> scales() const noexcept { return scales_; }

  /// Number of level-N cells, M_N.
  Index size() const noexcept { return scales_.back(); }

  /// Radix m_k for any k >= 0, continuing the stored sequence periodically
  /// past the resolution. Used only for tail estimates of infinite series.
  int periodic_radix(std::size_t k) const;

  /// |n| = max{k : M_k <= n}. Requires 1 <= n.
  std::size_t level_of(Index n) const;

  /// Same radices with one more level appended.
  VilenkinBase refined(int radix) const;
  VilenkinBase truncated(std::size_t levels) const;

  /// Canonical spec string; runs collapse to `<m>x<count>`.
  std::string to_string() const;

  bool operator==(const VilenkinBase& other) const { return radices_ == other.radices_; }

 private:
  std::vector<int> radices_;
  std::vector<Index> scales_;
};

/// A group element restricted to the first N digits.
struct GroupPoint {
  std::vector<int> digits;

  bool operator==(const GroupPoint&) const = default;
};

GroupPoint index_to_digits(Index n, const VilenkinBase& base);
Index digits_to_index(const GroupPoint& x, const VilenkinBase& base);

/// e_k: a single 1 at level k.
GroupPoint unit_point(std::size_t k, const VilenkinBase& base);
GroupPoint zero_point(const VilenkinBase& base);

GroupPoint group_add(const GroupPoint& x, const GroupPoint& y, const VilenkinBase& base);
GroupPoint group_sub(const GroupPoint& x, const GroupPoint& y, const VilenkinBase& base);
GroupPoint group_neg(const GroupPoint& x, const VilenkinBase& base);

/// True iff y lies in I_level(center), i.e. the first `level` digits agree.
bool in_coset(const GroupPoint& y, const GroupPoint& center, std::size_t level,
              const VilenkinBase& base);

/// Haar measure of one level-N cell, 1/M_N.
double cell_measure(const VilenkinBase& base);

// Index-level versions for inner loops. Arguments are assumed in range.
Index index_add(Index a, Index b, const VilenkinBase& base);
Index index_sub(Index a, Index b, const VilenkinBase& base);
Index index_neg(Index a, const VilenkinBase& base);

inline bool index_in_coset(Index y, Index center, std::size_t level, const VilenkinBase& base) {
  return y % base.scale(level) == center % base.scale(level);
}

/// table[x] = x - u for every cell index x, built in O(M_N).
std::vector<Index> subtraction_table(Index u, const VilenkinBase& base);

/// Digits of every index, level-major: digits[k * M_N + n] = n_k.
std::vector<std::uint8_t> digit_table(const VilenkinBase& base);

}  // namespace vilenkin
