// Copyright 2026 The spinsym Authors.
// SPDX-License-Identifier: Apache-2.0

#include "spinsym/sectors.hpp"

#include "spinsym/errors.hpp"

#include <charconv>
#include <limits>
#include <numeric>

namespace spinsym {

namespace {

int parse_int(std::string_view text) {
  int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last)
    throw InvalidInput("not an integer: '" + std::string(text) + "'");
  return value;
}

}  // namespace

SpinQuantum::SpinQuantum(int two_s) : two_s_(two_s) {
  if (two_s < 1) throw InvalidInput("spin must be positive (2s >= 1), got 2s=" + std::to_string(two_s));
}

SpinQuantum SpinQuantum::parse(std::string_view text) { return SpinQuantum(parse_half(text)); }

std::string SpinQuantum::str() const { return format_half(two_s_); }

std::string format_half(int twice) {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

int parse_half(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return 2 * parse_int(text);
  const int num = parse_int(text.substr(0, slash));
  const int den = parse_int(text.substr(slash + 1));
  if (den == 2) return num;
  if (den == 1) return 2 * num;
  throw InvalidInput("expected an integer or half-integer, got '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------

SpinConfiguration::SpinConfiguration(std::vector<int> digits, SpinQuantum spin)
    : digits_(std::move(digits)), spin_(spin) {
  for (int d : digits_)
    if (d < 0 || d > spin.two_s())
      throw InvalidInput("digit " + std::to_string(d) + " outside [0, 2s]");
}

SpinConfiguration SpinConfiguration::parse(std::string_view text, SpinQuantum spin) {
  std::vector<int> digits;
  if (spin.two_s() == 1 && text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c == '+')
        digits.push_back(1);
      else if (c == '-')
        digits.push_back(0);
      else
        throw InvalidInput(std::string("invalid spin-1/2 character '") + c + "'");
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      const auto comma = text.find(',', start);
      const auto end = comma == std::string_view::npos ? text.size() : comma;
      digits.push_back(parse_int(text.substr(start, end - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  if (digits.empty()) throw InvalidInput("empty configuration");
  return SpinConfiguration(std::move(digits), spin);
}

std::string SpinConfiguration::str() const {
  std::string out;
  if (spin_.two_s() == 1) {
    for (int d : digits_) out.push_back(d ? '+' : '-');
    return out;
  }
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(digits_[i]);
  }
  return out;
}

int SpinConfiguration::two_m() const noexcept {
  int sum = 0;
  for (int d : digits_) sum += 2 * d - spin_.two_s();
  return sum;
}

// ---------------------------------------------------------------------------

ConfigCodec::ConfigCodec(int n_sites, SpinQuantum spin)
    : n_sites_(n_sites), base_(spin.local_dim()), spin_(spin), place_(n_sites) {
  if (n_sites < 1) throw InvalidInput("need at least one site");
  // the largest code is base^N - 1
  unsigned __int128 p = 1;
  for (int site = n_sites - 1; site >= 0; --site) {
    place_[site] = static_cast<Code>(p);
    p *= base_;
    if (p - 1 > std::numeric_limits<Code>::max())
      throw ResourceLimit("(2s+1)^N does not fit into a 64-bit configuration code");
  }
}

Code ConfigCodec::encode(const SpinConfiguration& config) const {
  if (static_cast<int>(config.size()) != n_sites_)
    throw InvalidInput("configuration length " + std::to_string(config.size()) +
                       " does not match " + std::to_string(n_sites_) + " sites");
  if (config.spin() != spin_) throw InvalidInput("configuration spin mismatch");
  return pack(config.digits());
}

SpinConfiguration ConfigCodec::decode(Code code) const {
  std::vector<int> digits(n_sites_);
  unpack(code, digits);
  return SpinConfiguration(std::move(digits), spin_);
}

void ConfigCodec::unpack(Code code, std::span<int> digits) const {
  for (int site = n_sites_ - 1; site >= 0; --site) {
    digits[site] = static_cast<int>(code % base_);
    code /= base_;
  }
}

Code ConfigCodec::pack(std::span<const int> digits) const {
  Code code = 0;
  for (int d : digits) code = code * base_ + static_cast<Code>(d);
  return code;
}

int ConfigCodec::two_m(Code code) const noexcept {
  int digit_sum = 0;
  for (int site = 0; site < n_sites_; ++site) {
    digit_sum += static_cast<int>(code % base_);
    code /= base_;
  }
  return 2 * digit_sum - n_sites_ * spin_.two_s();
}

// ---------------------------------------------------------------------------

BigInt multinomial(int n, std::span<const int> counts) {
  int total = 0;
  for (int c : counts) {
    if (c < 0) throw InvalidInput("negative multinomial count");
    total += c;
  }
  if (total != n) throw InvalidInput("multinomial counts sum to " + std::to_string(total) +
                                     ", expected " + std::to_string(n));
  // product of binomials C(remaining, c), each built incrementally and exactly
  BigInt result = 1;
  int remaining = n;
  for (int c : counts) {
    BigInt binom = 1;
    for (int k = 1; k <= c; ++k) {
      binom *= remaining - c + k;
      binom /= k;
    }
    result *= binom;
    remaining -= c;
  }
  return result;
}

namespace {

/// Digit sum T = M + N s that a sector's configurations must reach, or -1.
int target_digit_sum(int n_sites, SpinQuantum spin, int two_m) {
  const int shifted = two_m + n_sites * spin.two_s();
  if (shifted < 0 || shifted % 2 != 0) return -1;
  const int target = shifted / 2;
  if (target > n_sites * spin.two_s()) return -1;
  return target;
}

void compositions_from(int level, int sites_left, int sum_left, int two_s, std::vector<int>& counts,
                       const std::function<void(std::span<const int>)>& f) {
  if (level == two_s) {
    // the last count is forced
    if (sites_left * level == sum_left) {
      counts[level] = sites_left;
      f(counts);
    }
    return;
  }
  for (int c = 0; c <= sites_left; ++c) {
    const int rest_sites = sites_left - c;
    const int rest_sum = sum_left - c * level;
    if (rest_sum < 0) break;
    // remaining spins occupy levels level+1..2s
    if (rest_sum < rest_sites * (level + 1) || rest_sum > rest_sites * two_s) continue;
    counts[level] = c;
    compositions_from(level + 1, rest_sites, rest_sum, two_s, counts, f);
  }
}

}  // namespace

void for_each_composition(int n_sites, SpinQuantum spin, int two_m,
                          const std::function<void(std::span<const int>)>& f) {
  const int target = target_digit_sum(n_sites, spin, two_m);
  if (target < 0) return;
  std::vector<int> counts(spin.local_dim(), 0);
  compositions_from(0, n_sites, target, spin.two_s(), counts, f);
}

BigInt sector_dimension(int n_sites, SpinQuantum spin, int two_m) {
  if (n_sites < 1) throw InvalidInput("need at least one site");
  BigInt total = 0;
  for_each_composition(n_sites, spin, two_m,
                       [&](std::span<const int> counts) { total += multinomial(n_sites, counts); });
  return total;
}

std::vector<int> magnetization_values(int n_sites, SpinQuantum spin) {
  std::vector<int> values;
  const int top = n_sites * spin.two_s();
  for (int two_m = -top; two_m <= top; two_m += 2) values.push_back(two_m);
  return values;
}

// ---------------------------------------------------------------------------

MagnetizationSector::MagnetizationSector(int n_sites, SpinQuantum spin, int two_m)
    : codec_(n_sites, spin), two_m_(two_m), digit_sum_(target_digit_sum(n_sites, spin, two_m)) {
  dimension_ = sector_dimension(n_sites, spin, two_m);
  const int max_sum = n_sites * spin.two_s();
  completions_.assign(n_sites + 1, std::vector<std::uint64_t>(max_sum + 1, 0));
  completions_[0][0] = 1;
  for (int k = 1; k <= n_sites; ++k)
    for (int t = 0; t <= k * spin.two_s(); ++t) {
      std::uint64_t ways = 0;
      for (int d = 0; d <= spin.two_s() && d <= t; ++d) ways += completions_[k - 1][t - d];
      completions_[k][t] = ways;
    }
}

std::size_t MagnetizationSector::size() const {
  if (dimension_ > BigInt(std::numeric_limits<std::size_t>::max()))
    throw ResourceLimit("sector dimension exceeds machine word");
  return static_cast<std::size_t>(dimension_);
}

bool MagnetizationSector::contains(Code code) const noexcept {
  if (digit_sum_ < 0) return false;
  int sum = 0;
  for (int site = n_sites() - 1; site >= 0; --site) {
    sum += static_cast<int>(code % codec_.base());
    code /= codec_.base();
  }
  return code == 0 && sum == digit_sum_;
}

std::size_t MagnetizationSector::rank(const SpinConfiguration& config) const {
  const Code code = codec_.encode(config);
  if (!contains(code))
    throw InvalidInput("configuration " + config.str() + " has 2M=" + std::to_string(config.two_m()) +
                       ", sector has 2M=" + std::to_string(two_m_));
  return rank_code(code);
}

std::size_t MagnetizationSector::rank_code(Code code) const noexcept {
  const int n = n_sites();
  std::size_t index = 0;
  int remaining = digit_sum_;
  for (int site = 0; site < n; ++site) {
    const int d = codec_.digit(code, site);
    const int tail = n - 1 - site;
    for (int smaller = 0; smaller < d; ++smaller) {
      const int rest = remaining - smaller;
      if (rest >= 0 && rest < static_cast<int>(completions_[tail].size())) index += completions_[tail][rest];
    }
    remaining -= d;
  }
  return index;
}

Code MagnetizationSector::unrank_code(std::size_t index) const {
  if (!feasible() || BigInt(index) >= dimension_)
    throw InvalidInput("index " + std::to_string(index) + " out of range for sector of dimension " +
                       dimension_.str());
  const int n = n_sites();
  Code code = 0;
  int remaining = digit_sum_;
  for (int site = 0; site < n; ++site) {
    const int tail = n - 1 - site;
    for (int d = 0; d <= spin().two_s(); ++d) {
      const int rest = remaining - d;
      const std::uint64_t block =
          (rest >= 0 && rest < static_cast<int>(completions_[tail].size())) ? completions_[tail][rest] : 0;
      if (index < block) {
        code += static_cast<Code>(d) * codec_.place(site);
        remaining = rest;
        break;
      }
      index -= block;
    }
  }
  return code;
}

SpinConfiguration MagnetizationSector::unrank(std::size_t index) const {
  return codec_.decode(unrank_code(index));
}

std::vector<Code> enumerate_codes(const MagnetizationSector& sector, std::size_t cap) {
  if (sector.dimension() > BigInt(cap))
    throw ResourceLimit("sector dimension " + sector.dimension().str() + " exceeds cap " +
                        std::to_string(cap));
  std::vector<Code> out;
  if (!sector.feasible()) return out;
  const int n = sector.n_sites();
  const int two_s = sector.spin().two_s();
  const int target = (sector.two_m() + n * two_s) / 2;
  const ConfigCodec& codec = sector.codec();
  out.reserve(sector.size());

  // depth-first over sites, digits ascending; prune when the remaining sites
  // cannot absorb the remaining digit sum
  std::vector<int> digit(n, -1);
  std::vector<int> left(n + 1, 0);
  left[0] = target;
  int site = 0;
  Code code = 0;
  while (site >= 0) {
    if (site == n) {
      out.push_back(code);
      --site;
      continue;
    }
    int d = digit[site] + 1;
    const int tail = n - 1 - site;
    if (digit[site] >= 0) code -= static_cast<Code>(digit[site]) * codec.place(site);
    while (d <= two_s && left[site] - d > tail * two_s) ++d;
    if (d > two_s || d > left[site]) {
      digit[site] = -1;
      --site;
      continue;
    }
    digit[site] = d;
    code += static_cast<Code>(d) * codec.place(site);
    left[site + 1] = left[site] - d;
    ++site;
  }
  return out;
}

std::vector<SpinConfiguration> enumerate_sector(int n_sites, SpinQuantum spin, int two_m, std::size_t cap) {
  const MagnetizationSector sector(n_sites, spin, two_m);
  std::vector<SpinConfiguration> out;
  for (Code code : enumerate_codes(sector, cap)) out.push_back(sector.codec().decode(code));
  return out;
}

}  // namespace spinsym
