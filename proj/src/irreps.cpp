// Copyright 2026 The spinsym Authors.
// SPDX-License-Identifier: Apache-2.0

#include "spinsym/irreps.hpp"

#include "spinsym/errors.hpp"
#include "spinsym/linalg.hpp"

#include <cmath>
#include <numbers>

namespace spinsym {

namespace {

using cplx = std::complex<double>;

// x -> t + (-1)^r x on Z_n
struct DihedralElement {
  int t;
  int r;
};

DihedralElement dihedral_element(int n, int index) { return {index % n, index / n}; }

int n_two_dim_irreps(int n) { return (n - 1) / 2; }

cplx dihedral_character(int n, std::size_t irrep, DihedralElement g) {
  const bool even = n % 2 == 0;
  const std::size_t n_one_dim = even ? 4 : 2;
  const int parity = g.t % 2 == 0 ? 1 : -1;
  if (irrep < n_one_dim) {
    switch (irrep) {
      case 0:  // A1
        return 1.0;
      case 1:  // A2
        return g.r ? -1.0 : 1.0;
      case 2:  // B1: -1 on the generating rotation, +1 on site-through reflections
        return parity;
      default:  // B2
        return g.r ? -parity : parity;
    }
  }
  const int k = static_cast<int>(irrep - n_one_dim) + 1;
  if (g.r) return 0.0;
  return 2.0 * std::cos(2.0 * std::numbers::pi * k * g.t / n);
}

void fill_class_of(CharacterTable& table) {
  int order = 0;
  for (const auto& c : table.classes) order += static_cast<int>(c.size());
  table.class_of.assign(order, -1);
  for (std::size_t c = 0; c < table.classes.size(); ++c)
    for (int e : table.classes[c]) table.class_of[e] = static_cast<int>(c);
}

int wrap(int x, int n) { return ((x % n) + n) % n; }

}  // namespace

std::size_t CharacterTable::irrep_index(const std::string& name) const {
  for (std::size_t i = 0; i < irreps.size(); ++i)
    if (irreps[i].name == name) return i;
  throw InvalidInput("no irrep named '" + name + "'");
}

CharacterTable cyclic_characters(int n) {
  if (n < 2) throw InvalidInput("cyclic group needs N >= 2");
  CharacterTable table{GroupKind::Cyclic, n, {}, {}, {}, {}};
  for (int e = 0; e < n; ++e) table.classes.push_back({e});
  fill_class_of(table);
  for (int k = -((n - 1) / 2); k <= n / 2; ++k) {
    table.irreps.push_back({IrrepFamily::Translation, "Θ" + std::to_string(k), 1});
    std::vector<cplx> row;
    for (int e = 0; e < n; ++e) {
      // exact values at quarter turns keep the small tables free of rounding
      const int q = wrap(k * e, n);
      if (4 * q % n == 0) {
        static constexpr cplx quarter[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        row.push_back(quarter[4 * q / n]);
      } else {
        row.push_back(std::polar(1.0, 2.0 * std::numbers::pi * q / n));
      }
    }
    table.characters.push_back(std::move(row));
  }
  return table;
}

CharacterTable reflection_characters() {
  CharacterTable table{GroupKind::Reflection, 2, {{0}, {1}}, {}, {}, {}};
  fill_class_of(table);
  table.irreps = {{IrrepFamily::Point, "Ξ0", 1}, {IrrepFamily::Point, "Ξ1", 1}};
  table.characters = {{1.0, 1.0}, {1.0, -1.0}};
  return table;
}

CharacterTable dihedral_characters(int n) {
  if (n < 3) throw InvalidInput("dihedral character table needs N >= 3");
  CharacterTable table{GroupKind::Dihedral, n, {}, {}, {}, {}};
  table.classes.push_back({0});
  for (int t = 1; t < n - t; ++t) table.classes.push_back({t, n - t});
  if (n % 2 == 0) {
    table.classes.push_back({n / 2});
    std::vector<int> site_through, bond_through;
    for (int t = 0; t < n; ++t) (t % 2 == 0 ? site_through : bond_through).push_back(n + t);
    table.classes.push_back(site_through);
    table.classes.push_back(bond_through);
  } else {
    std::vector<int> reflections;
    for (int t = 0; t < n; ++t) reflections.push_back(n + t);
    table.classes.push_back(reflections);
  }
  fill_class_of(table);

  table.irreps = {{IrrepFamily::Space, "A1", 1}, {IrrepFamily::Space, "A2", 1}};
  if (n % 2 == 0) {
    table.irreps.push_back({IrrepFamily::Space, "B1", 1});
    table.irreps.push_back({IrrepFamily::Space, "B2", 1});
  }
  const int count_e = n_two_dim_irreps(n);
  for (int k = 1; k <= count_e; ++k)
    table.irreps.push_back({IrrepFamily::Space, count_e == 1 ? "E" : "E" + std::to_string(k), 2});

  for (std::size_t irrep = 0; irrep < table.irreps.size(); ++irrep) {
    std::vector<cplx> row;
    for (const auto& cls : table.classes) row.push_back(dihedral_character(n, irrep, dihedral_element(n, cls.front())));
    table.characters.push_back(std::move(row));
  }
  return table;
}

std::vector<std::vector<int>> realize(const CharacterTable& table, const FiniteLattice& lattice) {
  if (lattice.dims() != 1) throw InvalidInput("chain character tables act on chains only");
  const int n = lattice.n_sites();
  if (table.kind != GroupKind::Reflection && table.n != n)
    throw InvalidInput("table order does not match the chain length");
  std::vector<std::vector<int>> perms;
  for (int index = 0; index < table.order(); ++index) {
    DihedralElement g{0, 0};
    switch (table.kind) {
      case GroupKind::Cyclic:
        g = {index, 0};
        break;
      case GroupKind::Reflection:
        g = {0, index};
        break;
      case GroupKind::Dihedral:
        g = dihedral_element(n, index);
        break;
    }
    std::vector<int> perm(n);
    for (int x = 0; x < n; ++x) perm[x] = wrap(g.t + (g.r ? -x : x), n);
    perms.push_back(std::move(perm));
  }
  return perms;
}

// ---------------------------------------------------------------------------

std::vector<double> SymmetricBasis::dense(std::size_t which, std::size_t sector_dim) const {
  std::vector<double> v(sector_dim, 0.0);
  for (std::size_t index : vectors.at(which).support) v[index] = vectors[which].amplitude;
  return v;
}

SymmetricBasis symmetric_basis(const OrbitDecomposition& orbits) {
  SymmetricBasis basis;
  basis.vectors.reserve(orbits.orbits.size());
  for (const Orbit& orbit : orbits.orbits)
    basis.vectors.push_back({orbit.members, 1.0 / std::sqrt(static_cast<double>(orbit.size()))});
  return basis;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::size_t> image_indices(std::span<const int> perm, const MagnetizationSector& sector,
                                       std::span<const Code> codes) {
  std::vector<std::size_t> image(codes.size());
  for (std::size_t x = 0; x < codes.size(); ++x) image[x] = sector.rank_code(act(perm, codes[x], sector.codec()));
  return image;
}

}  // namespace

std::vector<double> subspace_characters(const std::vector<std::vector<int>>& perms, const MagnetizationSector& sector,
                                        std::span<const Code> codes, const std::vector<std::vector<double>>& vectors) {
  std::vector<double> traces;
  traces.reserve(perms.size());
  for (const auto& perm : perms) {
    const auto image = image_indices(perm, sector, codes);
    double trace = 0.0;
    for (const auto& v : vectors)
      for (std::size_t x = 0; x < codes.size(); ++x) trace += v[x] * v[image[x]];
    traces.push_back(trace);
  }
  return traces;
}

std::vector<IrrepMultiplicity> eigenspace_irrep_multiplicities(const CharacterTable& table,
                                                               const std::vector<std::vector<int>>& perms,
                                                               const MagnetizationSector& sector,
                                                               std::span<const Code> codes,
                                                               const std::vector<std::vector<double>>& vectors,
                                                               double tolerance) {
  if (static_cast<int>(perms.size()) != table.order())
    throw InvalidInput("permutation list does not match the character table");
  const auto traces = subspace_characters(perms, sector, codes, vectors);
  std::vector<IrrepMultiplicity> out;
  int covered = 0;
  for (std::size_t irrep = 0; irrep < table.irreps.size(); ++irrep) {
    cplx sum = 0.0;
    for (int g = 0; g < table.order(); ++g) sum += std::conj(table.character(irrep, g)) * traces[g];
    sum /= static_cast<double>(table.order());
    const int m = static_cast<int>(std::lround(sum.real()));
    if (std::abs(sum.real() - m) > tolerance || std::abs(sum.imag()) > tolerance)
      throw Error("subspace is not invariant: multiplicity of " + table.irreps[irrep].name + " is " +
                  std::to_string(sum.real()));
    out.push_back({table.irreps[irrep], m, sum.real()});
    covered += m * table.irreps[irrep].dimension;
  }
  if (covered != static_cast<int>(vectors.size()))
    throw Error("irrep multiplicities cover " + std::to_string(covered) + " of " + std::to_string(vectors.size()) +
                " dimensions");
  return out;
}

std::vector<std::vector<double>> isotypic_component(const CharacterTable& table, std::size_t irrep,
                                                    const std::vector<std::vector<int>>& perms,
                                                    const MagnetizationSector& sector, std::span<const Code> codes,
                                                    const std::vector<std::vector<double>>& vectors) {
  for (const auto& c : table.characters[irrep])
    if (std::abs(c.imag()) > 1e-12) throw InvalidInput("isotypic projection needs a real character");
  std::vector<std::vector<double>> projected(vectors.size(), std::vector<double>(codes.size(), 0.0));
  const double weight = static_cast<double>(table.irreps[irrep].dimension) / table.order();
  for (int g = 0; g < table.order(); ++g) {
    const double chi = table.character(irrep, g).real();
    if (chi == 0.0) continue;
    const auto image = image_indices(perms[g], sector, codes);
    for (std::size_t k = 0; k < vectors.size(); ++k)
      for (std::size_t x = 0; x < codes.size(); ++x) projected[k][image[x]] += weight * chi * vectors[k][x];
  }
  // inputs have unit norm, so a short image lies outside the component
  std::erase_if(projected, [](const std::vector<double>& v) { return norm(v) < 1e-6; });
  return orthonormalize(std::move(projected), 1e-6);
}

std::string direct_sum_label(const std::vector<IrrepMultiplicity>& multiplicities) {
  std::string out;
  for (const auto& entry : multiplicities)
    for (int copy = 0; copy < entry.multiplicity; ++copy) {
      if (!out.empty()) out += "⊕";
      out += entry.label.name;
    }
  return out.empty() ? "-" : out;
}

}  // namespace spinsym
