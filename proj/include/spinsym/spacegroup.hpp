// Copyright 2026 The spinsym Authors.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file spacegroup.hpp
 * @brief Periodic hypercubic lattices, their finite space groups, and the
 *        orbit decomposition of configuration sectors.
 *
 * For a chain the space group is the dihedral group D_L. For a d-dimensional
 * hypercube of linear size L it is the wreath product of D_L with the axis
 * permutations S_d: an element is a tuple (t, r, pi) acting on coordinates as
 *     y_i = t_i + (-1)^{r_i} x_{pi^{-1}(i)}  (mod L).
 * Only the permutation image on sites is kept; for L = 2 several tuples act
 * identically and are merged.
 */

#pragma once

#include "spinsym/sectors.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spinsym {

struct Bond {
  int a;
  int b;  // a < b
  friend auto operator<=>(const Bond&, const Bond&) = default;
};

/// Periodic hypercube with L sites along each of d axes. Site index is the
/// mixed-radix number sum_k x_k L^k.
class FiniteLattice {
 public:
  FiniteLattice(int dims, int linear_size);

  int dims() const noexcept { return dims_; }
  int linear_size() const noexcept { return linear_size_; }
  int n_sites() const noexcept { return n_sites_; }
  const std::vector<Bond>& bonds() const noexcept { return bonds_; }
  int n_bonds() const noexcept { return static_cast<int>(bonds_.size()); }

  std::vector<int> coordinates(int site) const;
  int site(std::span<const int> coords) const;
  bool has_bond(int a, int b) const noexcept;

  /// Every bond connects sites of opposite coordinate-sum parity.
  bool is_bipartite() const noexcept;
  /// (-1)^{sum of coordinates}
  int sublattice_sign(int site) const;
  /// Shortest-path distance on the bond graph, n_sites x n_sites row-major.
  std::vector<int> graph_distances() const;

  /// "chain:N", "square:LxL", "cube:LxLxL".
  std::string spec() const;

 private:
  int dims_;
  int linear_size_;
  int n_sites_;
  std::vector<Bond> bonds_;
};

FiniteLattice build_lattice(int dims, int linear_size);

/// Parses "chain:N", "square:LxL" or "cube:LxLxL" (equal sizes enforced).
FiniteLattice parse_lattice(std::string_view spec);

/// Abstract wreath-product coordinates of a symmetry operation.
struct WreathFactors {
  std::vector<int> translation;  // t_i in [0, L)
  std::vector<int> reflection;   // r_i in {0, 1}
  std::vector<int> axis_perm;    // pi: axis j is sent to axis axis_perm[j]
};

struct SpaceGroupElement {
  std::vector<int> perm;  // site i is sent to perm[i]
  WreathFactors factors;
};

class SpaceGroup {
 public:
  SpaceGroup(FiniteLattice lattice, std::vector<SpaceGroupElement> elements, std::uint64_t abstract_order);

  const FiniteLattice& lattice() const noexcept { return lattice_; }
  const std::vector<SpaceGroupElement>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  /// (2L)^d d!, before merging coincident permutations.
  std::uint64_t abstract_order() const noexcept { return abstract_order_; }

 private:
  FiniteLattice lattice_;
  std::vector<SpaceGroupElement> elements_;
  std::uint64_t abstract_order_;
};

/// (2L)^d d!
std::uint64_t wreath_order(int dims, int linear_size);

/// Site permutation of the tuple (t, r, pi) on the given lattice.
std::vector<int> wreath_permutation(const FiniteLattice& lattice, const WreathFactors& factors);

/// Throws Error if any generated permutation fails to map bonds onto bonds.
SpaceGroup build_space_group(const FiniteLattice& lattice);

/// Result digit at perm[i] equals the input digit at i.
SpinConfiguration act(const SpaceGroupElement& element, const SpinConfiguration& config);
Code act(std::span<const int> perm, Code code, const ConfigCodec& codec);

struct Orbit {
  Code representative;               // lexicographic minimum
  std::vector<std::size_t> members;  // sorted sector indices
  std::size_t size() const noexcept { return members.size(); }
};

struct OrbitDecomposition {
  std::vector<Orbit> orbits;             // ordered by representative
  std::vector<std::uint32_t> orbit_of;   // sector index -> orbit index
};

/// Partitions the enumerated sector `codes` into orbits of `group`.
OrbitDecomposition orbit_decomposition(const SpaceGroup& group, const MagnetizationSector& sector,
                                       std::span<const Code> codes);

}  // namespace spinsym
