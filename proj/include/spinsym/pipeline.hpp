// Copyright 2026 The spinsym Authors.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file pipeline.hpp
 * @brief Ground states, small-chain state classification, field sweeps and
 *        ground-state observables.
 *
 * The symmetry-reduced ground-state path works in the M = 0 sector: it splits
 * the configurations into space-group orbits, keeps the fully symmetric orbit
 * sums, restricts to their S = 0 subspace and diagonalizes H there. It is
 * used for antiferromagnets (J < 0) at h = 0 with N s even, where the ground
 * state is a fully symmetric singlet. Every other case goes through the raw
 * path that minimizes over all magnetization sectors.
 */

#pragma once

#include "spinsym/eigensolve.hpp"
#include "spinsym/irreps.hpp"
#include "spinsym/operators.hpp"
#include "spinsym/sectors.hpp"
#include "spinsym/spacegroup.hpp"

#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace spinsym {

/// Energy per spin of the infinite antiferromagnetic chain, 1/4 - ln 2.
inline const double kInfiniteChainEnergy = 0.25 - std::log(2.0);

struct SolverConfig {
  std::size_t sector_cap = kDefaultSectorCap;
  std::size_t dense_cap = kDefaultDenseCap;
  /// Raw sectors up to this dimension are solved densely, larger ones by Lanczos.
  std::size_t dense_switch = 1024;
  double degeneracy_tol = 1e-9;
  LanczosOptions lanczos{};
  int threads = 1;
};

struct GroundStateResult {
  FiniteLattice lattice{1, 2};
  SpinQuantum spin{1};
  ModelParams params{};
  std::string path;  // "symmetric" or "raw"

  double energy_total = 0.0;
  double energy_per_spin = 0.0;
  int two_s_total = 0;  // 2S
  int two_m = 0;        // 2M
  double s2_expectation = 0.0;

  std::vector<Code> codes;          // the 2M sector, ascending
  std::vector<double> amplitudes;   // aligned with codes, unit norm

  std::size_t sector_dim = 0;
  std::size_t orbit_count = 0;      // symmetric path only
  std::size_t symmetric_dim = 0;    // symmetric path only
  std::size_t s0_dim = 0;           // symmetric path only
  int degeneracy = 1;
  bool degeneracy_exact = true;
  std::vector<std::string> warnings;
};

/// True when the symmetry-reduced path applies to these parameters.
bool symmetric_path_applies(const FiniteLattice& lattice, SpinQuantum spin, const ModelParams& params);

GroundStateResult ground_state(const FiniteLattice& lattice, SpinQuantum spin, const ModelParams& params,
                               const SolverConfig& config = {});

/// The symmetry-reduced path; throws InvalidInput when it does not apply.
GroundStateResult symmetric_ground_state(const FiniteLattice& lattice, SpinQuantum spin, const ModelParams& params,
                                         const SolverConfig& config = {});

enum class SectorMethod { Auto, Dense, Lanczos };

struct SectorSolve {
  int two_m = 0;
  double energy = 0.0;           // lowest eigenvalue of H (field included)
  std::vector<double> vector;    // its eigenvector, definite S
  int multiplicity = 1;
  bool multiplicity_exact = true;
  int two_s_total = 0;
  double s2_expectation = 0.0;
};

/// Lowest state of H in one raw magnetization sector.
SectorSolve solve_sector(const FiniteLattice& lattice, SpinQuantum spin, const ModelParams& params, int two_m,
                         const SolverConfig& config = {}, SectorMethod method = SectorMethod::Auto);

/// 2S from an S^2 eigenvalue S(S+1).
int two_s_from_s2(double s2);

// ---------------------------------------------------------------------------

struct ClassificationRow {
  std::string theta;  // C_N content, e.g. "Θ-1⊕Θ1"
  std::string gamma;  // D_N irrep
  std::string xi;     // C_s content
  int two_s_total = 0;
  int two_m_abs = 0;            // the row covers +M and -M when nonzero
  double energy_per_spin = 0.0; // at h = 0
  double field_slope = 0.0;     // d(E/N)/dh for the +M member: -M/N
  int degeneracy_h0 = 0;        // total over +-M
  int degeneracy_per_m = 0;     // each of +M, -M once the field splits them
};

struct ClassificationReport {
  int n_sites = 0;
  SpinQuantum spin{1};
  ModelParams params{};
  std::vector<ClassificationRow> rows;
  int total_states() const noexcept;
};

/// Full-space classification of a periodic chain by energy, S, M and the
/// irreps of C_N, D_N and C_s.
ClassificationReport classify_small_chain(int n_sites, SpinQuantum spin, const ModelParams& params,
                                          const SolverConfig& config = {});

// ---------------------------------------------------------------------------

struct Level {
  double energy = 0.0;  // total energy at h = 0
  int two_s_total = 0;
  int two_m = 0;
  int multiplicity = 1;
};

struct SweepPoint {
  double field = 0.0;
  int two_s_total = 0;
  int two_m = 0;
  double energy_per_spin = 0.0;
  double gap_per_spin = 0.0;  // second-lowest minus lowest eigenvalue, counting multiplicity
};

struct SweepResult {
  std::vector<Level> levels;
  std::vector<SweepPoint> points;
};

/// Levels of every sector at h = 0, shifted by -hM for each field value.
SweepResult field_sweep(const FiniteLattice& lattice, SpinQuantum spin, double exchange,
                        std::span<const double> fields, const SolverConfig& config = {});

/// "start:stop:step" (stop inclusive) or a single value.
std::vector<double> parse_field_grid(std::string_view text);

// ---------------------------------------------------------------------------

struct ObservableReport {
  std::vector<int> distances;          // r = 0, 1, ...
  std::vector<int> pair_counts;        // site pairs at distance r (i < j; N for r = 0)
  std::vector<double> spin_correlation;  // <s_i . s_j> averaged at distance r
  std::vector<double> zz_correlation;    // <s^z_i s^z_j>
  std::optional<double> staggered_m_sq;  // absent on non-bipartite lattices
  double sum_rule = 0.0;  // N s(s+1) + 2 sum_{i<j} <s_i . s_j>
  std::vector<std::pair<double, double>> gap_curve;  // (h, gap per spin) when supplied
};

ObservableReport observables(const GroundStateResult& ground, const FiniteLattice& lattice, int threads = 1);

ObservableReport observables(const GroundStateResult& ground, const FiniteLattice& lattice, const SweepResult& sweep,
                             int threads = 1);

}  // namespace spinsym
