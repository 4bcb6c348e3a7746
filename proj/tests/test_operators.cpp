// Copyright 2026 The spinsym Authors.
// SPDX-License-Identifier: Apache-2.0

#include "spinsym/eigensolve.hpp"
#include "spinsym/errors.hpp"
#include "spinsym/irreps.hpp"
#include "spinsym/operators.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>
#include <vector>

namespace spinsym {
namespace {

// Dense full-space oracle assembled from Kronecker products of local matrices.
using Mat = std::vector<std::vector<double>>;

Mat zeros(std::size_t n) { return Mat(n, std::vector<double>(n, 0.0)); }

Mat identity(std::size_t n) {
  Mat m = zeros(n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1.0;
  return m;
}

Mat kron(const Mat& a, const Mat& b) {
  const std::size_t na = a.size(), nb = b.size();
  Mat c = zeros(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) c[i * nb + k][j * nb + l] = a[i][j] * b[k][l];
  return c;
}

Mat mul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat c = zeros(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0.0)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

void add(Mat& a, const Mat& b, double f) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) a[i][j] += f * b[i][j];
}

struct LocalOps {
  Mat sz, sp, sm;
};

// Basis index k holds m = -s + k.
LocalOps local_ops(double s) {
  const auto d = static_cast<std::size_t>(std::lround(2 * s + 1));
  LocalOps ops{zeros(d), zeros(d), zeros(d)};
  for (std::size_t k = 0; k < d; ++k) {
    const double m = -s + static_cast<double>(k);
    ops.sz[k][k] = m;
    if (k + 1 < d) {
      ops.sp[k + 1][k] = std::sqrt(s * (s + 1) - m * (m + 1));
      ops.sm[k][k + 1] = ops.sp[k + 1][k];
    }
  }
  return ops;
}

Mat embed(const Mat& op, int site, int n) {
  const std::size_t d = op.size();
  Mat out = identity(1);
  for (int i = 0; i < n; ++i) out = kron(out, i == site ? op : identity(d));
  return out;
}

Mat full_hamiltonian(const FiniteLattice& lattice, double s, const ModelParams& params) {
  const int n = lattice.n_sites();
  const auto ops = local_ops(s);
  std::vector<Mat> z, p, m;
  for (int i = 0; i < n; ++i) {
    z.push_back(embed(ops.sz, i, n));
    p.push_back(embed(ops.sp, i, n));
    m.push_back(embed(ops.sm, i, n));
  }
  Mat h = zeros(z[0].size());
  for (const auto& b : lattice.bonds()) {
    add(h, mul(z[b.a], z[b.b]), -params.exchange);
    add(h, mul(p[b.a], m[b.b]), -0.5 * params.exchange);
    add(h, mul(m[b.a], p[b.b]), -0.5 * params.exchange);
  }
  for (int i = 0; i < n; ++i) add(h, z[i], -params.field);
  return h;
}

// 2S from S(S+1) = value
int two_s_from_s2_oracle(double value) { return static_cast<int>(std::lround(std::sqrt(1.0 + 4.0 * value) - 1.0)); }

BasisView raw_basis(int n, SpinQuantum spin, int two_m) {
  const MagnetizationSector sector(n, spin, two_m);
  return BasisView::raw(sector, enumerate_codes(sector));
}

BasisView symmetric_basis_view(const FiniteLattice& lattice, SpinQuantum spin, int two_m) {
  const MagnetizationSector sector(lattice.n_sites(), spin, two_m);
  auto codes = enumerate_codes(sector);
  auto orbits = orbit_decomposition(build_space_group(lattice), sector, codes);
  return BasisView::symmetric(sector, std::move(codes), std::move(orbits));
}

TEST(PairCoupling, SpinHalfTerms) {
  const SpinQuantum half(1);
  const auto terms = apply_pair_coupling(SpinConfiguration::parse("+-", half), 0, 1);
  ASSERT_EQ(terms.size(), 2u);
  EXPECT_EQ(terms[0].first.str(), "+-");
  EXPECT_DOUBLE_EQ(terms[0].second, -0.25);
  EXPECT_EQ(terms[1].first.str(), "-+");
  EXPECT_DOUBLE_EQ(terms[1].second, 0.5);
  const auto aligned = apply_pair_coupling(SpinConfiguration::parse("++", half), 0, 1);
  ASSERT_EQ(aligned.size(), 1u);
  EXPECT_DOUBLE_EQ(aligned[0].second, 0.25);
  EXPECT_THROW(apply_pair_coupling(SpinConfiguration::parse("++", half), 0, 0), InvalidInput);
}

TEST(PairCoupling, TwoSpinOnesAgainstKroneckerOracle) {
  // s_0 . s_1 for s = 1 on the full 9-dimensional space
  const SpinQuantum one(2);
  const auto ops = local_ops(1.0);
  Mat oracle = kron(ops.sz, ops.sz);
  add(oracle, kron(ops.sp, ops.sm), 0.5);
  add(oracle, kron(ops.sm, ops.sp), 0.5);
  const ConfigCodec codec(2, one);
  for (Code col = 0; col < 9; ++col) {
    std::vector<double> column(9, 0.0);
    for (const auto& [config, value] : apply_pair_coupling(codec.decode(col), 0, 1)) column[codec.encode(config)] += value;
    for (Code row = 0; row < 9; ++row) EXPECT_NEAR(column[row], oracle[row][col], 1e-15) << row << "," << col;
  }
}

TEST(Hamiltonian, RawSectorsMatchKroneckerOracle) {
  struct Case {
    const char* lattice;
    int two_s;
    ModelParams params;
  };
  for (const Case& c : {Case{"chain:2", 2, {-1.0, 0.3}}, Case{"chain:4", 1, {-1.0, 0.0}},
                        Case{"chain:5", 1, {0.7, 0.2}}, Case{"chain:6", 1, {-1.3, 0.1}},
                        Case{"chain:4", 2, {-1.0, 0.5}}, Case{"chain:3", 3, {1.0, -0.4}},
                        Case{"square:2x2", 1, {-1.0, 0.0}}, Case{"cube:2x2x2", 1, {-1.0, 0.25}}}) {
    const auto lattice = parse_lattice(c.lattice);
    const SpinQuantum spin(c.two_s);
    const Mat oracle = full_hamiltonian(lattice, spin.value(), c.params);
    for (int two_m : magnetization_values(lattice.n_sites(), spin)) {
      const auto basis = raw_basis(lattice.n_sites(), spin, two_m);
      for (int threads : {1, 3}) {
        const auto h = build_hamiltonian(lattice, c.params, basis, threads);
        ASSERT_EQ(h.dim(), basis.size());
        EXPECT_EQ(h.asymmetry(), 0.0);
        const auto codes = basis.codes();
        for (std::size_t i = 0; i < codes.size(); ++i)
          for (std::size_t j = 0; j < codes.size(); ++j)
            EXPECT_NEAR(h.at(i, j), oracle[codes[i]][codes[j]], 1e-13) << c.lattice;
      }
    }
  }
}

TEST(Hamiltonian, SectorsCloseUnderH) {
  // the oracle has no entries between distinct magnetizations
  const auto lattice = parse_lattice("chain:4");
  const SpinQuantum spin(2);
  const Mat oracle = full_hamiltonian(lattice, 1.0, {-1.0, 0.2});
  const ConfigCodec codec(4, spin);
  for (std::size_t i = 0; i < oracle.size(); ++i)
    for (std::size_t j = 0; j < oracle.size(); ++j)
      if (codec.two_m(i) != codec.two_m(j)) EXPECT_EQ(oracle[i][j], 0.0);
}

TEST(Hamiltonian, TracesOverTheFullSpace) {
  // Tr(s_i . s_j) = 0 and Tr(S^z) = 0 over the full space
  for (int two_s : {1, 2}) {
    const SpinQuantum spin(two_s);
    const auto lattice = parse_lattice("chain:5");
    double total = 0.0;
    for (int two_m : magnetization_values(5, spin))
      total += build_hamiltonian(lattice, {-1.0, 0.37}, raw_basis(5, spin, two_m)).trace();
    EXPECT_NEAR(total, 0.0, 1e-10);
  }
}

TEST(TotalSpin, EigenvaluesAndCommutators) {
  for (int two_s : {1, 2}) {
    const SpinQuantum spin(two_s);
    const int n = two_s == 1 ? 6 : 4;
    const auto lattice = build_lattice(1, n);
    for (int two_m : magnetization_values(n, spin)) {
      const auto basis = raw_basis(n, spin, two_m);
      const auto h = build_hamiltonian(lattice, {-1.0, 0.3}, basis).to_dense();
      const auto s2 = build_s2(n, spin, basis).to_dense();
      const std::size_t d = basis.size();
      double worst = 0.0;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          double c = 0.0;
          for (std::size_t k = 0; k < d; ++k) c += h(i, k) * s2(k, j) - s2(i, k) * h(k, j);
          worst = std::max(worst, std::abs(c));
        }
      EXPECT_LT(worst, 1e-12);
      // S(S+1) with S >= |M|
      for (double value : dense_symmetric_eigenvalues(s2)) {
        const int two_total = two_s_from_s2_oracle(value);
        EXPECT_NEAR(0.25 * two_total * (two_total + 2), value, 1e-10);
        EXPECT_GE(two_total, std::abs(two_m));
        EXPECT_EQ((two_total - two_m) % 2, 0);
      }
    }
  }
}

TEST(SymmetricBasis, CompressionEqualsProjectedRawMatrix) {
  for (const char* spec : {"chain:4", "chain:6", "chain:8", "square:2x2", "square:3x3", "cube:2x2x2"}) {
    const auto lattice = parse_lattice(spec);
    for (int two_s : {1, 2}) {
      const SpinQuantum spin(two_s);
      if (two_s == 2 && lattice.n_sites() > 6) continue;
      for (int two_m : {0, 2}) {
        const auto raw = raw_basis(lattice.n_sites(), spin, two_m);
        const auto sym = symmetric_basis_view(lattice, spin, two_m);
        const ModelParams params{-1.0, 0.2};
        const auto h_raw = build_hamiltonian(lattice, params, raw);
        const auto h_sym = build_hamiltonian(lattice, params, sym);
        const auto s2_sym = build_s2(lattice.n_sites(), spin, sym);
        EXPECT_LT(h_sym.asymmetry(), 1e-14);
        const auto basis = symmetric_basis(sym.orbits());
        const std::size_t d = raw.size();
        std::vector<std::vector<double>> columns;
        for (std::size_t a = 0; a < basis.size(); ++a) columns.push_back(basis.dense(a, d));
        for (std::size_t a = 0; a < basis.size(); ++a) {
          std::vector<double> image(d);
          h_raw.multiply(columns[a], image);
          for (std::size_t b = 0; b < basis.size(); ++b)
            EXPECT_NEAR(h_sym.at(b, a), dot(columns[b], image), 1e-12) << spec;
          // expand() maps coefficients back to the raw basis
          std::vector<double> unit(basis.size(), 0.0);
          unit[a] = 1.0;
          const auto expanded = sym.expand(unit);
          for (std::size_t x = 0; x < d; ++x) EXPECT_NEAR(expanded[x], columns[a][x], 1e-15);
        }
        // the compressed spectrum is part of the raw one
        const auto raw_values = dense_symmetric_eigenvalues(h_raw.to_dense());
        for (double e : dense_symmetric_eigenvalues(h_sym.to_dense())) {
          double best = 1e9;
          for (double r : raw_values) best = std::min(best, std::abs(r - e));
          EXPECT_LT(best, 1e-10) << spec;
        }
        for (double v : dense_symmetric_eigenvalues(s2_sym.to_dense())) {
          const int t = two_s_from_s2_oracle(v);
          EXPECT_NEAR(0.25 * t * (t + 2), v, 1e-10);
        }
      }
    }
  }
}

TEST(BasisView, ValidatesInput) {
  const SpinQuantum half(1);
  const MagnetizationSector sector(4, half, 0);
  auto codes = enumerate_codes(sector);
  std::vector<Code> reversed(codes.rbegin(), codes.rend());
  EXPECT_THROW(BasisView::raw(sector, reversed), InvalidInput);
  const MagnetizationSector other(4, half, 2);
  EXPECT_THROW(BasisView::raw(other, codes), InvalidInput);
  const auto view = BasisView::raw(sector, codes);
  EXPECT_EQ(view.locate(codes[3]), 3u);
  EXPECT_FALSE(view.is_symmetric());
}

TEST(SparseMatrix, DenseRoundTripAndCoordinates) {
  const auto lattice = parse_lattice("chain:4");
  const auto h = build_hamiltonian(lattice, {-1.0, 0.0}, raw_basis(4, SpinQuantum(1), 0));
  const auto dense = h.to_dense();
  std::vector<double> x(h.dim()), y(h.dim());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = 0.1 * static_cast<double>(i) - 0.2;
  h.multiply(x, y);
  for (std::size_t i = 0; i < x.size(); ++i) {
    double expected = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) expected += dense(i, j) * x[j];
    EXPECT_NEAR(y[i], expected, 1e-15);
  }
  EXPECT_GE(h.norm_bound(), 2.0);
  std::ostringstream out;
  h.write_coordinates(out);
  std::istringstream in(out.str());
  std::size_t row = 0, col = 0, lines = 0;
  double value = 0.0;
  while (in >> row >> col >> value) {
    EXPECT_DOUBLE_EQ(value, h.at(row, col));
    ++lines;
  }
  EXPECT_EQ(lines, h.nonzeros());
}

}  // namespace
}  // namespace spinsym
