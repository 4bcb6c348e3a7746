// Copyright 2026 The spinsym Authors.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file operators.hpp
 * @brief Heisenberg Hamiltonian and total-spin-square operators in a raw
 *        magnetization sector or in its fully symmetric orbit-sum basis.
 *
 *     H = -J sum_<ij> s_i . s_j - h sum_i s^z_i
 *
 * Matrices store the full symmetric pattern, each row sorted by column.
 */

#pragma once

#include "spinsym/linalg.hpp"
#include "spinsym/sectors.hpp"
#include "spinsym/spacegroup.hpp"

#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace spinsym {

struct ModelParams {
  double exchange = -1.0;  // J > 0 ferromagnet, J < 0 antiferromagnet
  double field = 0.0;      // h along z
};

struct CouplingTerm {
  Code target;
  double coefficient;
};

/// Terms of s_i . s_j acting on a packed product state: the diagonal
/// m_i m_j first, then the raised/lowered states (omitted when blocked).
/// Returns the number of terms written into `out` (at most 3).
int pair_coupling_terms(Code code, int i, int j, const ConfigCodec& codec, std::span<CouplingTerm, 3> out);

std::vector<std::pair<SpinConfiguration, double>> apply_pair_coupling(const SpinConfiguration& config, int i, int j);

class SparseSymmetricMatrix {
 public:
  struct Entry {
    std::size_t col;
    double value;
  };

  SparseSymmetricMatrix() = default;
  explicit SparseSymmetricMatrix(std::vector<std::vector<Entry>> rows);

  std::size_t dim() const noexcept { return rows_.size(); }
  const std::vector<Entry>& row(std::size_t i) const { return rows_[i]; }
  std::size_t nonzeros() const noexcept;
  double at(std::size_t i, std::size_t j) const;

  void multiply(std::span<const double> x, std::span<double> y) const;
  DenseMatrix to_dense() const;
  double trace() const noexcept;
  /// Max absolute row sum, an upper bound on the spectral norm.
  double norm_bound() const noexcept;
  /// max |A_ij - A_ji|
  double asymmetry() const;

  /// "row col value" per stored entry, values with 17 significant digits.
  void write_coordinates(std::ostream& out) const;

 private:
  std::vector<std::vector<Entry>> rows_;
};

/// Orthonormal basis of a fixed-M sector: either the raw configurations or
/// the orbit sums of a space group.
class BasisView {
 public:
  static BasisView raw(const MagnetizationSector& sector, std::vector<Code> codes);
  /// Throws InvalidInput when an orbit representative lies outside the sector.
  static BasisView symmetric(const MagnetizationSector& sector, std::vector<Code> codes,
                             OrbitDecomposition orbits);

  bool is_symmetric() const noexcept { return symmetric_; }
  const MagnetizationSector& sector() const noexcept { return sector_; }
  std::span<const Code> codes() const noexcept { return codes_; }
  const OrbitDecomposition& orbits() const noexcept { return orbits_; }
  int two_m() const noexcept { return sector_.two_m(); }

  std::size_t size() const noexcept { return symmetric_ ? orbits_.orbits.size() : codes_.size(); }
  Code representative(std::size_t a) const noexcept {
    return symmetric_ ? orbits_.orbits[a].representative : codes_[a];
  }
  /// Orbit size (1 in the raw basis).
  double weight(std::size_t a) const noexcept {
    return symmetric_ ? static_cast<double>(orbits_.orbits[a].size()) : 1.0;
  }
  /// Basis index whose support contains `code`.
  std::size_t locate(Code code) const noexcept {
    const std::size_t index = sector_.rank_code(code);
    return symmetric_ ? orbits_.orbit_of[index] : index;
  }

  /// Amplitudes on the raw configurations of a vector given in this basis.
  std::vector<double> expand(std::span<const double> coefficients) const;

 private:
  BasisView(MagnetizationSector sector, std::vector<Code> codes, OrbitDecomposition orbits, bool symmetric);

  MagnetizationSector sector_;
  std::vector<Code> codes_;
  OrbitDecomposition orbits_;
  bool symmetric_;
};

using SitePair = std::pair<int, int>;

/// Matrix of (sum over pairs of coupling * s_i . s_j) + diagonal shift.
SparseSymmetricMatrix build_pair_operator(std::span<const SitePair> pairs, double coupling, double diagonal,
                                          const BasisView& basis, int threads = 1);

SparseSymmetricMatrix build_hamiltonian(const FiniteLattice& lattice, const ModelParams& params,
                                        const BasisView& basis, int threads = 1);

/// S^2 = N s(s+1) + 2 sum_{i<j} s_i . s_j over all pairs.
SparseSymmetricMatrix build_s2(int n_sites, SpinQuantum spin, const BasisView& basis, int threads = 1);

}  // namespace spinsym
