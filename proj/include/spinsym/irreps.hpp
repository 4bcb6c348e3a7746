// Copyright 2026 The spinsym Authors.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file irreps.hpp
 * @brief Character tables of C_N, C_s and D_N, the fully symmetric orbit-sum
 *        basis, and irrep multiplicities of invariant subspaces.
 *
 * Abstract element indexing. Cyclic: index n is the translation x -> x + n.
 * Reflection group C_s: 0 is the identity, 1 is the site-through reflection
 * x -> -x. Dihedral: index r*N + t is x -> t + (-1)^r x.
 */

#pragma once

#include "spinsym/sectors.hpp"
#include "spinsym/spacegroup.hpp"

#include <complex>
#include <string>
#include <vector>

namespace spinsym {

enum class GroupKind { Cyclic, Reflection, Dihedral };

enum class IrrepFamily { Translation, Space, Point };  // Theta, Gamma, Xi

struct IrrepLabel {
  IrrepFamily family;
  std::string name;  // "Θ-1", "B2", "Ξ0", ...
  int dimension;
  friend bool operator==(const IrrepLabel&, const IrrepLabel&) = default;
};

struct CharacterTable {
  GroupKind kind;
  int n;  // N for C_N and D_N; 2 for C_s
  std::vector<std::vector<int>> classes;  // conjugacy classes of element indices
  std::vector<int> class_of;              // element index -> class
  std::vector<IrrepLabel> irreps;
  std::vector<std::vector<std::complex<double>>> characters;  // [irrep][class]

  int order() const noexcept { return static_cast<int>(class_of.size()); }
  std::complex<double> character(std::size_t irrep, int element) const {
    return characters[irrep][class_of[element]];
  }
  std::size_t irrep_index(const std::string& name) const;
};

/// N one-dimensional irreps Θ_k, k = -floor((N-1)/2) .. floor(N/2).
CharacterTable cyclic_characters(int n);
/// C_s = {e, σ} with irreps Ξ0 (trivial) and Ξ1 (sign).
CharacterTable reflection_characters();
/// Real character table of D_N, N >= 3. B1 is +1 on site-through reflections.
CharacterTable dihedral_characters(int n);

/// Site permutation of every abstract element of a chain group table on a
/// ring of table.n sites (lattice must be a chain of matching length).
std::vector<std::vector<int>> realize(const CharacterTable& table, const FiniteLattice& lattice);

/// Fully symmetric orbit sums: 1/sqrt|O| on every member of O.
struct SymmetricBasis {
  struct Vector {
    std::vector<std::size_t> support;  // sector indices
    double amplitude;                  // common value on the support
  };
  std::vector<Vector> vectors;

  std::size_t size() const noexcept { return vectors.size(); }
  /// Dense representation over a sector of the given dimension.
  std::vector<double> dense(std::size_t which, std::size_t sector_dim) const;
};

SymmetricBasis symmetric_basis(const OrbitDecomposition& orbits);

struct IrrepMultiplicity {
  IrrepLabel label;
  int multiplicity;
  double raw;  // unrounded projector-trace value
};

/// Characters Tr(rho(g) P) of the subspace spanned by `vectors` (orthonormal,
/// each of length codes.size()) for every element in `perms`.
std::vector<double> subspace_characters(const std::vector<std::vector<int>>& perms, const MagnetizationSector& sector,
                                        std::span<const Code> codes, const std::vector<std::vector<double>>& vectors);

/// m_Γ = (1/|G|) sum_g conj(χ_Γ(g)) Tr(rho(g) P). Throws Error when a value is
/// further than `tolerance` from an integer or the dimensions do not add up.
std::vector<IrrepMultiplicity> eigenspace_irrep_multiplicities(const CharacterTable& table,
                                                               const std::vector<std::vector<int>>& perms,
                                                               const MagnetizationSector& sector,
                                                               std::span<const Code> codes,
                                                               const std::vector<std::vector<double>>& vectors,
                                                               double tolerance = 1e-6);

/// Orthonormal basis of the Γ-isotypic part of an invariant subspace.
std::vector<std::vector<double>> isotypic_component(const CharacterTable& table, std::size_t irrep,
                                                    const std::vector<std::vector<int>>& perms,
                                                    const MagnetizationSector& sector, std::span<const Code> codes,
                                                    const std::vector<std::vector<double>>& vectors);

/// Joins nonzero multiplicities as "Θ-1⊕Θ1" (repeated names for m > 1).
std::string direct_sum_label(const std::vector<IrrepMultiplicity>& multiplicities);

}  // namespace spinsym
