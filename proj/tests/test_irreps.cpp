// Copyright 2026 The spinsym Authors.
// SPDX-License-Identifier: Apache-2.0

#include "spinsym/errors.hpp"
#include "spinsym/irreps.hpp"
#include "spinsym/linalg.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <vector>

namespace spinsym {
namespace {

using cd = std::complex<double>;
using Perm = std::vector<int>;

// Realized permutation of every abstract element, used to multiply elements.
Perm compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

int element_of(const std::vector<Perm>& perms, const Perm& p) {
  for (std::size_t g = 0; g < perms.size(); ++g)
    if (perms[g] == p) return static_cast<int>(g);
  return -1;
}

std::vector<CharacterTable> desk_tables() {
  std::vector<CharacterTable> tables{reflection_characters()};
  for (int n = 2; n <= 10; ++n) tables.push_back(cyclic_characters(n));
  for (int n = 3; n <= 10; ++n) tables.push_back(dihedral_characters(n));
  return tables;
}

TEST(CharacterTable, Orthogonality) {
  for (const auto& table : desk_tables()) {
    const int order = table.order();
    const std::size_t n_irreps = table.irreps.size();
    EXPECT_EQ(n_irreps, table.classes.size());
    int dim_sq = 0;
    for (std::size_t a = 0; a < n_irreps; ++a) {
      dim_sq += table.irreps[a].dimension * table.irreps[a].dimension;
      EXPECT_NEAR(table.character(a, 0).real(), table.irreps[a].dimension, 1e-12);
      for (std::size_t b = 0; b < n_irreps; ++b) {
        cd sum = 0;
        for (int g = 0; g < order; ++g) sum += std::conj(table.character(a, g)) * table.character(b, g);
        EXPECT_NEAR(std::abs(sum / double(order) - cd(a == b ? 1.0 : 0.0)), 0.0, 1e-12) << table.n;
      }
    }
    EXPECT_EQ(dim_sq, order);
    // column orthogonality
    for (std::size_t c1 = 0; c1 < table.classes.size(); ++c1)
      for (std::size_t c2 = 0; c2 < table.classes.size(); ++c2) {
        cd sum = 0;
        for (std::size_t a = 0; a < n_irreps; ++a) sum += std::conj(table.characters[a][c1]) * table.characters[a][c2];
        const double expected = c1 == c2 ? double(order) / table.classes[c1].size() : 0.0;
        EXPECT_NEAR(std::abs(sum - expected), 0.0, 1e-10);
      }
  }
}

TEST(CharacterTable, ClassesAreConjugacyClasses) {
  for (int n = 3; n <= 10; ++n) {
    const auto table = dihedral_characters(n);
    const auto perms = realize(table, build_lattice(1, n));
    ASSERT_EQ(static_cast<int>(perms.size()), 2 * n);
    for (int g = 0; g < 2 * n; ++g)
      for (int h = 0; h < 2 * n; ++h) {
        Perm h_inv(n);
        for (int i = 0; i < n; ++i) h_inv[perms[h][i]] = i;
        const int conj = element_of(perms, compose(perms[h], compose(perms[g], h_inv)));
        ASSERT_GE(conj, 0);
        EXPECT_EQ(table.class_of[conj], table.class_of[g]);
      }
    // a class is a single orbit under conjugation
    for (const auto& cls : table.classes)
      for (int g : cls) EXPECT_EQ(table.class_of[g], table.class_of[cls.front()]);
  }
}

TEST(CharacterTable, OneDimensionalIrrepsAreHomomorphisms) {
  std::vector<std::pair<CharacterTable, int>> cases;
  for (int n = 2; n <= 9; ++n) cases.emplace_back(cyclic_characters(n), n);
  for (int n = 3; n <= 9; ++n) cases.emplace_back(dihedral_characters(n), n);
  for (const auto& [table, n] : cases) {
    const auto perms = realize(table, build_lattice(1, n));
    for (std::size_t a = 0; a < table.irreps.size(); ++a) {
      if (table.irreps[a].dimension != 1) continue;
      for (int g = 0; g < table.order(); ++g)
        for (int h = 0; h < table.order(); ++h) {
          const int gh = element_of(perms, compose(perms[g], perms[h]));
          ASSERT_GE(gh, 0);
          EXPECT_NEAR(std::abs(table.character(a, gh) - table.character(a, g) * table.character(a, h)), 0.0, 1e-12);
        }
    }
  }
}

TEST(CharacterTable, LabelsOfTheFourRing) {
  const auto cyclic = cyclic_characters(4);
  std::vector<std::string> names;
  for (const auto& irrep : cyclic.irreps) names.push_back(irrep.name);
  EXPECT_EQ(names, (std::vector<std::string>{"Θ-1", "Θ0", "Θ1", "Θ2"}));
  const auto dihedral = dihedral_characters(4);
  names.clear();
  for (const auto& irrep : dihedral.irreps) names.push_back(irrep.name);
  EXPECT_EQ(names, (std::vector<std::string>{"A1", "A2", "B1", "B2", "E"}));
  const auto d5 = dihedral_characters(5);
  EXPECT_NO_THROW(d5.irrep_index("E1"));
  EXPECT_NO_THROW(d5.irrep_index("E2"));
  EXPECT_THROW(d5.irrep_index("B1"), InvalidInput);
  EXPECT_EQ(cyclic_characters(5).irreps.front().name, "Θ-2");
  EXPECT_EQ(cyclic_characters(5).irreps.back().name, "Θ2");
  // B1 is +1 on the site-through reflection x -> -x
  EXPECT_NEAR(dihedral.character(dihedral.irrep_index("B1"), 4).real(), 1.0, 1e-15);
  EXPECT_NEAR(dihedral.character(dihedral.irrep_index("B2"), 4).real(), -1.0, 1e-15);
}

TEST(CharacterTable, DecompositionIdentities) {
  // E of D_4 restricted to C_4 is Θ-1 + Θ1, restricted to C_s is Ξ0 + Ξ1
  const auto d4 = dihedral_characters(4);
  const auto c4 = cyclic_characters(4);
  const auto cs = reflection_characters();
  const std::size_t e = d4.irrep_index("E");
  for (int t = 0; t < 4; ++t) {
    const cd sum = c4.character(c4.irrep_index("Θ-1"), t) + c4.character(c4.irrep_index("Θ1"), t);
    EXPECT_NEAR(std::abs(d4.character(e, t) - sum), 0.0, 1e-12);
  }
  // C_s sits in D_4 as {x -> x, x -> -x} = abstract indices 0 and 4
  for (int g = 0; g < 2; ++g) {
    const cd sum = cs.character(cs.irrep_index("Ξ0"), g) + cs.character(cs.irrep_index("Ξ1"), g);
    EXPECT_NEAR(std::abs(d4.character(e, g == 0 ? 0 : 4) - sum), 0.0, 1e-12);
  }
  EXPECT_NEAR(c4.character(c4.irrep_index("Θ1"), 1).imag(), 1.0, 1e-15);
}

TEST(Realize, MatchesAffineMaps) {
  const int n = 6;
  const auto lattice = build_lattice(1, n);
  const auto perms = realize(dihedral_characters(n), lattice);
  for (int r = 0; r < 2; ++r)
    for (int t = 0; t < n; ++t)
      for (int x = 0; x < n; ++x) EXPECT_EQ(perms[r * n + t][x], ((t + (r ? -x : x)) % n + n) % n);
  const auto sigma = realize(reflection_characters(), lattice);
  ASSERT_EQ(sigma.size(), 2u);
  EXPECT_EQ(sigma[1], (Perm{0, 5, 4, 3, 2, 1}));
  EXPECT_THROW(realize(dihedral_characters(5), lattice), InvalidInput);
}

TEST(SymmetricBasis, OrthonormalAndInvariant) {
  const SpinQuantum half(1);
  const auto lattice = build_lattice(1, 8);
  const auto group = build_space_group(lattice);
  const MagnetizationSector sector(8, half, 0);
  const auto codes = enumerate_codes(sector);
  const auto orbits = orbit_decomposition(group, sector, codes);
  const auto basis = symmetric_basis(orbits);
  ASSERT_EQ(basis.size(), orbits.orbits.size());
  for (std::size_t a = 0; a < basis.size(); ++a) {
    const auto va = basis.dense(a, codes.size());
    for (std::size_t b = 0; b < basis.size(); ++b)
      EXPECT_NEAR(dot(va, basis.dense(b, codes.size())), a == b ? 1.0 : 0.0, 1e-14);
    for (const auto& g : group.elements())
      for (std::size_t i = 0; i < codes.size(); ++i)
        EXPECT_EQ(va[sector.rank_code(act(g.perm, codes[i], sector.codec()))], va[i]);
  }
}

TEST(Multiplicities, PermutationRepresentationOfSectors) {
  // the span of all configurations: m_Γ from the permutation character
  const SpinQuantum half(1);
  for (int n = 3; n <= 8; ++n) {
    const auto table = dihedral_characters(n);
    const auto perms = realize(table, build_lattice(1, n));
    for (int two_m : magnetization_values(n, half)) {
      const MagnetizationSector sector(n, half, two_m);
      const auto codes = enumerate_codes(sector);
      std::vector<std::vector<double>> identity(codes.size(), std::vector<double>(codes.size(), 0.0));
      for (std::size_t i = 0; i < codes.size(); ++i) identity[i][i] = 1.0;
      const auto m = eigenspace_irrep_multiplicities(table, perms, sector, codes, identity);
      int covered = 0;
      for (const auto& entry : m) covered += entry.multiplicity * entry.label.dimension;
      EXPECT_EQ(covered, static_cast<int>(codes.size()));
      // trivial multiplicity equals the orbit count
      const auto orbits = orbit_decomposition(build_space_group(build_lattice(1, n)), sector, codes);
      for (const auto& entry : m)
        if (entry.label.name == "A1") EXPECT_EQ(entry.multiplicity, static_cast<int>(orbits.orbits.size()));
      // isotypic parts have dimension m dimΓ
      for (std::size_t a = 0; a < table.irreps.size(); ++a) {
        const auto part = isotypic_component(table, a, perms, sector, codes, identity);
        int expected = 0;
        for (const auto& entry : m)
          if (entry.label == table.irreps[a]) expected = entry.multiplicity * entry.label.dimension;
        EXPECT_EQ(static_cast<int>(part.size()), expected);
      }
    }
  }
}

TEST(Multiplicities, RejectsNonInvariantSubspace) {
  const SpinQuantum half(1);
  const auto table = cyclic_characters(4);
  const auto perms = realize(table, build_lattice(1, 4));
  const MagnetizationSector sector(4, half, 0);
  const auto codes = enumerate_codes(sector);
  std::vector<std::vector<double>> one(1, std::vector<double>(codes.size(), 0.0));
  one[0][0] = 1.0;
  EXPECT_THROW(eigenspace_irrep_multiplicities(table, perms, sector, codes, one), Error);
}

TEST(Labels, DirectSum) {
  const IrrepLabel a{IrrepFamily::Translation, "Θ-1", 1};
  const IrrepLabel b{IrrepFamily::Translation, "Θ1", 1};
  EXPECT_EQ(direct_sum_label({{a, 1, 1.0}, {b, 1, 1.0}}), "Θ-1⊕Θ1");
  EXPECT_EQ(direct_sum_label({{a, 2, 2.0}, {b, 0, 0.0}}), "Θ-1⊕Θ-1");
  EXPECT_EQ(direct_sum_label({}), "-");
}

}  // namespace
}  // namespace spinsym
