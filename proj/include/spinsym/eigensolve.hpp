// Copyright 2026 The spinsym Authors.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file eigensolve.hpp
 * @brief Real symmetric eigenproblems.
 *
 * Dense path: Householder tridiagonalization followed by implicit-shift QL.
 * Iterative path: Lanczos with full reorthogonalization for the lowest
 * eigenpairs of a matrix-free symmetric operator.
 */

#pragma once

#include "spinsym/linalg.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace spinsym {

inline constexpr std::size_t kDefaultDenseCap = 4000;

struct SpectrumEntry {
  double eigenvalue = 0.0;
  std::vector<std::vector<double>> eigenvectors;  // orthonormal
  std::optional<int> two_s_total;                 // 2S
  std::optional<int> two_m;                       // 2M

  std::size_t multiplicity() const noexcept { return eigenvectors.size(); }
};

/// All eigenpairs in ascending order, one entry per pair. Throws
/// ResourceLimit when the dimension exceeds `dense_cap`.
std::vector<SpectrumEntry> dense_symmetric_eig(const DenseMatrix& matrix, std::size_t dense_cap = kDefaultDenseCap);

/// Eigenvalues only, ascending.
std::vector<double> dense_symmetric_eigenvalues(const DenseMatrix& matrix, std::size_t dense_cap = kDefaultDenseCap);

/// Eigen-decomposition of a symmetric tridiagonal matrix given by its
/// diagonal and off-diagonal (off.size() == diag.size() - 1). Vectors are
/// returned as rows of `vectors` when requested.
std::vector<double> tridiagonal_eig(std::span<const double> diag, std::span<const double> off,
                                    std::vector<std::vector<double>>* vectors);

using LinearOperator = std::function<void(std::span<const double>, std::span<double>)>;

struct LanczosOptions {
  double tolerance = 1e-8;  // residual bound relative to the operator norm estimate
  int max_iterations = 500;
  std::uint64_t seed = 0;
};

struct LanczosResult {
  double eigenvalue = 0.0;
  std::vector<double> eigenvector;
  double residual = 0.0;  // ||A v - lambda v||
  int iterations = 0;
};

/// Deterministic start vector: entry i is a hash of (seed, i) in [-1, 1).
std::vector<double> lanczos_start_vector(std::size_t dim, std::uint64_t seed);

/// Smallest eigenpair. Throws NonConvergence after max_iterations.
LanczosResult lanczos_ground(const LinearOperator& op, std::size_t dim, const LanczosOptions& options = {});

/// The `count` lowest Ritz pairs of the Krylov space, all converged. Copies
/// of a degenerate eigenvalue are not resolved (single start vector).
std::vector<LanczosResult> lanczos_lowest(const LinearOperator& op, std::size_t dim, std::size_t count,
                                          const LanczosOptions& options = {});

/// Merges consecutive eigenvalues closer than `tolerance`; the merged entry
/// carries the mean eigenvalue and re-orthonormalized vectors.
std::vector<SpectrumEntry> group_degeneracies(const std::vector<SpectrumEntry>& eigenpairs, double tolerance = 1e-9);

}  // namespace spinsym
