// Copyright 2026 The spinsym Authors.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file sectors.hpp
 * @brief Fixed-magnetization configuration sectors: counting, enumeration,
 *        ranking and unranking.
 *
 * Spin and magnetization are carried doubled (2s, 2M) so that half-integer
 * values stay exact. A configuration of N sites is a digit string over
 * {0, ..., 2s}; digit n at a site means projection m = n - s. Packed codes
 * use base 2s+1 with site 0 as the most significant digit, so numeric order
 * of codes equals lexicographic order of digit strings.
 */

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace spinsym {

using BigInt = boost::multiprecision::cpp_int;
using Code = std::uint64_t;

inline constexpr std::size_t kDefaultSectorCap = 20'000'000;

/// Single-site spin quantum number, stored as 2s.
class SpinQuantum {
 public:
  explicit SpinQuantum(int two_s);

  /// Parses "1/2", "1", "3/2", ...
  static SpinQuantum parse(std::string_view text);

  int two_s() const noexcept { return two_s_; }
  int local_dim() const noexcept { return two_s_ + 1; }
  double value() const noexcept { return 0.5 * two_s_; }
  /// s(s+1)
  double casimir() const noexcept { return 0.25 * two_s_ * (two_s_ + 2); }
  std::string str() const;

  friend bool operator==(SpinQuantum, SpinQuantum) = default;

 private:
  int two_s_;
};

/// Formats a doubled quantity 2x as "x" or "x/2" (e.g. 3 -> "3/2", -2 -> "-1").
std::string format_half(int twice);

/// Parses "3/2", "-1", "0" into the doubled integer.
int parse_half(std::string_view text);

/// Ising product state |m_1 ... m_N>.
class SpinConfiguration {
 public:
  SpinConfiguration() = default;
  SpinConfiguration(std::vector<int> digits, SpinQuantum spin);

  /// "+-+-" for s=1/2 ('+' is digit 1), comma-separated digits otherwise.
  static SpinConfiguration parse(std::string_view text, SpinQuantum spin);

  std::string str() const;
  std::size_t size() const noexcept { return digits_.size(); }
  int digit(std::size_t site) const { return digits_.at(site); }
  const std::vector<int>& digits() const noexcept { return digits_; }
  SpinQuantum spin() const noexcept { return spin_; }
  /// 2M = sum over sites of (2 n_i - 2s).
  int two_m() const noexcept;

  friend bool operator==(const SpinConfiguration&, const SpinConfiguration&) = default;
  friend auto operator<=>(const SpinConfiguration& a, const SpinConfiguration& b) {
    return a.digits_ <=> b.digits_;
  }

 private:
  std::vector<int> digits_;
  SpinQuantum spin_{1};
};

/// Packs configurations of a fixed site count into base-(2s+1) integers.
class ConfigCodec {
 public:
  ConfigCodec(int n_sites, SpinQuantum spin);

  int n_sites() const noexcept { return n_sites_; }
  int base() const noexcept { return base_; }
  SpinQuantum spin() const noexcept { return spin_; }

  int digit(Code code, int site) const noexcept {
    return static_cast<int>((code / place_[site]) % base_);
  }
  /// Weight of a unit change in the digit at `site`.
  Code place(int site) const noexcept { return place_[site]; }
  /// Doubled local projection 2m at `site`.
  int two_m_at(Code code, int site) const noexcept { return 2 * digit(code, site) - spin_.two_s(); }

  Code encode(const SpinConfiguration& config) const;
  SpinConfiguration decode(Code code) const;
  void unpack(Code code, std::span<int> digits) const;
  Code pack(std::span<const int> digits) const;
  int two_m(Code code) const noexcept;

 private:
  int n_sites_;
  int base_;
  SpinQuantum spin_;
  std::vector<Code> place_;
};

/// Exact N! / prod(counts_i!). Throws InvalidInput when sum(counts) != n.
BigInt multinomial(int n, std::span<const int> counts);

/// dim L_M summed over all compositions (n_0..n_2s) with sum n_i (i - s) = M.
/// Zero when 2M is out of range or has the wrong parity.
BigInt sector_dimension(int n_sites, SpinQuantum spin, int two_m);

/// Calls f(counts) for every composition of n_sites into 2s+1 parts with the
/// prescribed magnetization, in lexicographic order of (n_0, ..., n_2s).
void for_each_composition(int n_sites, SpinQuantum spin, int two_m,
                          const std::function<void(std::span<const int>)>& f);

/// The subspace L_M: all configurations with sum m_i = M.
class MagnetizationSector {
 public:
  MagnetizationSector(int n_sites, SpinQuantum spin, int two_m);

  int n_sites() const noexcept { return codec_.n_sites(); }
  SpinQuantum spin() const noexcept { return codec_.spin(); }
  int two_m() const noexcept { return two_m_; }
  const BigInt& dimension() const noexcept { return dimension_; }
  /// Dimension as a machine integer; throws ResourceLimit when it does not fit.
  std::size_t size() const;
  bool feasible() const noexcept { return dimension_ > 0; }
  const ConfigCodec& codec() const noexcept { return codec_; }
  bool contains(Code code) const noexcept;

  /// Lexicographic index of a configuration. Throws InvalidInput if the
  /// configuration does not belong to the sector.
  std::size_t rank(const SpinConfiguration& config) const;
  std::size_t rank_code(Code code) const noexcept;  // unchecked
  SpinConfiguration unrank(std::size_t index) const;
  Code unrank_code(std::size_t index) const;

 private:
  ConfigCodec codec_;
  int two_m_;
  int digit_sum_;
  BigInt dimension_;
  // completions_[k][t]: digit strings of length k with digit sum t
  std::vector<std::vector<std::uint64_t>> completions_;
};

/// All configurations of the sector as packed codes, strictly increasing.
/// Throws ResourceLimit when the dimension exceeds `cap`.
std::vector<Code> enumerate_codes(const MagnetizationSector& sector,
                                  std::size_t cap = kDefaultSectorCap);

std::vector<SpinConfiguration> enumerate_sector(int n_sites, SpinQuantum spin, int two_m,
                                                std::size_t cap = kDefaultSectorCap);

/// Every admissible 2M for N sites, ascending: -2sN, -2sN+2, ..., 2sN.
std::vector<int> magnetization_values(int n_sites, SpinQuantum spin);

}  // namespace spinsym
