#include "vilenkin/group.hpp"

#include <charconv>
#include <stdexcept>

namespace vilenkin {

namespace {

void require_same_length(const GroupPoint& x, const VilenkinBase& base) {
  if (x.digits.size() != base.resolution()) {
    throw std::invalid_argument("group point has " + std::to_string(x.digits.size()) +
                                " digits, base has resolution " +
                                std::to_string(base.resolution()));
  }
}

void require_valid(const GroupPoint& x, const VilenkinBase& base) {
  require_same_length(x, base);
  for (std::size_t k = 0; k < x.digits.size(); ++k) {
    if (x.digits[k] < 0 || x.digits[k] >= base.radix(k)) {
      throw std::invalid_argument("digit " + std::to_string(k) + " = " +
                                  std::to_string(x.digits[k]) + " outside [0, " +
                                  std::to_string(base.radix(k)) + ")");
    }
  }
}

int parse_int(std::string_view token, std::string_view spec) {
  int value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last) {
    throw std::invalid_argument("malformed base spec '" + std::string(spec) + "'");
  }
  return value;
}

}  // namespace

VilenkinBase::VilenkinBase(std::vector<int> radices) : radices_(std::move(radices)) {
  scales_.reserve(radices_.size() + 1);
  scales_.push_back(1);
  for (std::size_t k = 0; k < radices_.size(); ++k) {
    const int m = radices_[k];
    if (m < 2 || m > kMaxRadix) {
      throw std::invalid_argument("radix m_" + std::to_string(k) + " = " + std::to_string(m) +
                                  " outside [2, " + std::to_string(kMaxRadix) + "]");
    }
    if (scales_.back() > kMaxGridSize / static_cast<Index>(m)) {
      throw std::invalid_argument("grid size M_N exceeds 2^40");
    }
    scales_.push_back(scales_.back() * static_cast<Index>(m));
  }
}

VilenkinBase VilenkinBase::parse(std::string_view spec) {
  std::vector<int> radices;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    const auto comma = spec.find(',', pos);
    const auto item = spec.substr(pos, comma == std::string_view::npos ? spec.npos : comma - pos);
    const auto x = item.find('x');
    const int radix = parse_int(item.substr(0, x), spec);
    int count = 1;
    if (x != std::string_view::npos) {
      count = parse_int(item.substr(x + 1), spec);
      if (count < 1) throw std::invalid_argument("repeat count must be positive in '" + std::string(spec) + "'");
    }
    radices.insert(radices.end(), static_cast<std::size_t>(count), radix);
    if (radices.size() > 64) throw std::invalid_argument("base spec has more than 64 levels");
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return VilenkinBase(std::move(radices));
}

VilenkinBase VilenkinBase::parse(std::string_view spec, std::size_t resolution) {
  const auto pattern = parse(spec);
  if (pattern.resolution() == 0) throw std::invalid_argument("empty base spec");
  std::vector<int> radices(resolution);
  for (std::size_t k = 0; k < resolution; ++k) radices[k] = pattern.periodic_radix(k);
  return VilenkinBase(std::move(radices));
}

int VilenkinBase::periodic_radix(std::size_t k) const {
  if (radices_.empty()) throw std::logic_error("periodic_radix on empty base");
  return radices_[k % radices_.size()];
}

std::size_t VilenkinBase::level_of(Index n) const {
  if (n == 0) throw std::out_of_range("|n| is undefined for n = 0");
  std::size_t k = 0;
  while (k + 1 < scales_.size() && scales_[k + 1] <= n) ++k;
  return k;
}

VilenkinBase VilenkinBase::refined(int radix) const {
  auto radices = radices_;
  radices.push_back(radix);
  return VilenkinBase(std::move(radices));
}

VilenkinBase VilenkinBase::truncated(std::size_t levels) const {
  if (levels > radices_.size()) throw std::out_of_range("truncation above resolution");
  return VilenkinBase(std::vector<int>(radices_.begin(), radices_.begin() + static_cast<std::ptrdiff_t>(levels)));
}

std::string VilenkinBase::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < radices_.size();) {
    std::size_t run = 1;
    while (k + run < radices_.size() && radices_[k + run] == radices_[k]) ++run;
    if (!out.empty()) out += ',';
    out += std::to_string(radices_[k]);
    if (run > 1) out += 'x' + std::to_string(run);
    k += run;
  }
  return out;
}

GroupPoint index_to_digits(Index n, const VilenkinBase& base) {
  if (n >= base.size()) {
    throw std::out_of_range("index " + std::to_string(n) + " outside [0, " +
                            std::to_string(base.size()) + ")");
  }
  GroupPoint x;
  x.digits.resize(base.resolution());
  for (std::size_t k = 0; k < base.resolution(); ++k) {
    x.digits[k] = static_cast<int>(n % static_cast<Index>(base.radix(k)));
    n /= static_cast<Index>(base.radix(k));
  }
  return x;
}

Index digits_to_index(const GroupPoint& x, const VilenkinBase& base) {
  require_valid(x, base);
  Index n = 0;
  for (std::size_t k = 0; k < x.digits.size(); ++k) {
    n += static_cast<Index>(x.digits[k]) * base.scale(k);
  }
  return n;
}

GroupPoint unit_point(std::size_t k, const VilenkinBase& base) {
  if (k >= base.resolution()) throw std::out_of_range("e_k needs k < N");
  auto x = zero_point(base);
  x.digits[k] = 1;
  return x;
}

GroupPoint zero_point(const VilenkinBase& base) {
  return GroupPoint{std::vector<int>(base.resolution(), 0)};
}

GroupPoint group_add(const GroupPoint& x, const GroupPoint& y, const VilenkinBase& base) {
  require_valid(x, base);
  require_valid(y, base);
  GroupPoint z;
  z.digits.resize(base.resolution());
  for (std::size_t k = 0; k < z.digits.size(); ++k) {
    z.digits[k] = (x.digits[k] + y.digits[k]) % base.radix(k);
  }
  return z;
}

GroupPoint group_sub(const GroupPoint& x, const GroupPoint& y, const VilenkinBase& base) {
  require_valid(x, base);
  require_valid(y, base);
  GroupPoint z;
  z.digits.resize(base.resolution());
  for (std::size_t k = 0; k < z.digits.size(); ++k) {
    const int m = base.radix(k);
    z.digits[k] = (x.digits[k] - y.digits[k] + m) % m;
  }
  return z;
}

GroupPoint group_neg(const GroupPoint& x, const VilenkinBase& base) {
  return group_sub(zero_point(base), x, base);
}

bool in_coset(const GroupPoint& y, const GroupPoint& center, std::size_t level,
              const VilenkinBase& base) {
  if (level > base.resolution()) {
    throw std::out_of_range("coset level " + std::to_string(level) + " exceeds resolution");
  }
  require_valid(y, base);
  require_valid(center, base);
  for (std::size_t k = 0; k < level; ++k) {
    if (y.digits[k] != center.digits[k]) return false;
  }
  return true;
}

double cell_measure(const VilenkinBase& base) { return 1.0 / static_cast<double>(base.size()); }

Index index_add(Index a, Index b, const VilenkinBase& base) {
  Index out = 0;
  for (std::size_t k = 0; k < base.resolution(); ++k) {
    const auto m = static_cast<Index>(base.radix(k));
    out += ((a % m + b % m) % m) * base.scale(k);
    a /= m;
    b /= m;
  }
  return out;
}

Index index_sub(Index a, Index b, const VilenkinBase& base) {
  Index out = 0;
  for (std::size_t k = 0; k < base.resolution(); ++k) {
    const auto m = static_cast<Index>(base.radix(k));
    out += ((a % m + m - b % m) % m) * base.scale(k);
    a /= m;
    b /= m;
  }
  return out;
}

Index index_neg(Index a, const VilenkinBase& base) { return index_sub(0, a, base); }

std::vector<Index> subtraction_table(Index u, const VilenkinBase& base) {
  const auto shift = index_to_digits(u, base);
  std::vector<Index> table(base.size());
  table[0] = 0;
  for (std::size_t k = 0; k < base.resolution(); ++k) {
    const Index block = base.scale(k);
    const int m = base.radix(k);
    // Fill blocks d = m-1..0 so block 0 (the previous level) is read last.
    for (int d = m - 1; d >= 0; --d) {
      const Index digit = static_cast<Index>((d - shift.digits[k] + m) % m);
      const Index offset = static_cast<Index>(d) * block;
      for (Index i = 0; i < block; ++i) table[offset + i] = table[i] + digit * block;
    }
  }
  return table;
}

std::vector<std::uint8_t> digit_table(const VilenkinBase& base) {
  const Index size = base.size();
  std::vector<std::uint8_t> digits(base.resolution() * size);
  for (std::size_t k = 0; k < base.resolution(); ++k) {
    const Index scale = base.scale(k);
    const auto m = static_cast<Index>(base.radix(k));
    for (Index n = 0; n < size; ++n) {
      digits[k * size + n] = static_cast<std::uint8_t>((n / scale) % m);
    }
  }
  return digits;
}

}  // namespace vilenkin
