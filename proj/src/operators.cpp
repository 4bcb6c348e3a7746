// Copyright 2026 The spinsym Authors.
// SPDX-License-Identifier: Apache-2.0

#include "spinsym/operators.hpp"

#include "spinsym/errors.hpp"
#include "spinsym/parallel.hpp"

#include <algorithm>
#include <array>
#include <type_traits>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace spinsym {

int pair_coupling_terms(Code code, int i, int j, const ConfigCodec& codec, std::span<CouplingTerm, 3> out) {
  const int two_s = codec.spin().two_s();
  const int ni = codec.digit(code, i);
  const int nj = codec.digit(code, j);
  const int mi = 2 * ni - two_s;  // doubled projections
  const int mj = 2 * nj - two_s;
  const int casimir4 = two_s * (two_s + 2);  // 4 s(s+1)
  int count = 0;
  out[count++] = {code, 0.25 * mi * mj};
  // (1/2) c+(m_i) c-(m_j) with c+-(m) = (1/2) sqrt(4s(s+1) - 2m(2m +- 2))
  if (ni < two_s && nj > 0) {
    const double product = static_cast<double>(casimir4 - mi * (mi + 2)) * (casimir4 - mj * (mj - 2));
    out[count++] = {code + codec.place(i) - codec.place(j), 0.125 * std::sqrt(product)};
  }
  if (ni > 0 && nj < two_s) {
    const double product = static_cast<double>(casimir4 - mi * (mi - 2)) * (casimir4 - mj * (mj + 2));
    out[count++] = {code - codec.place(i) + codec.place(j), 0.125 * std::sqrt(product)};
  }
  return count;
}

std::vector<std::pair<SpinConfiguration, double>> apply_pair_coupling(const SpinConfiguration& config, int i, int j) {
  const int n = static_cast<int>(config.size());
  if (i == j) throw InvalidInput("pair coupling needs two distinct sites");
  if (i < 0 || j < 0 || i >= n || j >= n) throw InvalidInput("site index out of range");
  const ConfigCodec codec(n, config.spin());
  std::array<CouplingTerm, 3> terms{};
  const int count = pair_coupling_terms(codec.encode(config), i, j, codec, terms);
  std::vector<std::pair<SpinConfiguration, double>> out;
  for (int k = 0; k < count; ++k) out.emplace_back(codec.decode(terms[k].target), terms[k].coefficient);
  return out;
}

// ---------------------------------------------------------------------------

SparseSymmetricMatrix::SparseSymmetricMatrix(std::vector<std::vector<Entry>> rows) : rows_(std::move(rows)) {}

std::size_t SparseSymmetricMatrix::nonzeros() const noexcept {
  std::size_t total = 0;
  for (const auto& r : rows_) total += r.size();
  return total;
}

double SparseSymmetricMatrix::at(std::size_t i, std::size_t j) const {
  const auto& r = rows_.at(i);
  auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.col < c; });
  return (it != r.end() && it->col == j) ? it->value : 0.0;
}

void SparseSymmetricMatrix::multiply(std::span<const double> x, std::span<double> y) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    double sum = 0.0;
    for (const Entry& e : rows_[i]) sum += e.value * x[e.col];
    y[i] = sum;
  }
}

DenseMatrix SparseSymmetricMatrix::to_dense() const {
  DenseMatrix dense(dim());
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (const Entry& e : rows_[i]) dense(i, e.col) = e.value;
  return dense;
}

double SparseSymmetricMatrix::trace() const noexcept {
  double sum = 0.0;
  for (std::size_t i = 0; i < rows_.size(); ++i) sum += at(i, i);
  return sum;
}

double SparseSymmetricMatrix::norm_bound() const noexcept {
  double best = 0.0;
  for (const auto& r : rows_) {
    double sum = 0.0;
    for (const Entry& e : r) sum += std::abs(e.value);
    best = std::max(best, sum);
  }
  return best;
}

double SparseSymmetricMatrix::asymmetry() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (const Entry& e : rows_[i]) worst = std::max(worst, std::abs(e.value - at(e.col, i)));
  return worst;
}

void SparseSymmetricMatrix::write_coordinates(std::ostream& out) const {
  char buffer[64];
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (const Entry& e : rows_[i]) {
      std::snprintf(buffer, sizeof buffer, "%.17g", e.value);
      out << i << ' ' << e.col << ' ' << buffer << '\n';
    }
}

// ---------------------------------------------------------------------------

BasisView::BasisView(MagnetizationSector sector, std::vector<Code> codes, OrbitDecomposition orbits, bool symmetric)
    : sector_(std::move(sector)), codes_(std::move(codes)), orbits_(std::move(orbits)), symmetric_(symmetric) {}

BasisView BasisView::raw(const MagnetizationSector& sector, std::vector<Code> codes) {
  if (codes.size() != sector.size()) throw InvalidInput("raw basis must list the whole sector");
  for (std::size_t k = 0; k < codes.size(); ++k)
    if (!sector.contains(codes[k]) || sector.rank_code(codes[k]) != k)
      throw InvalidInput("raw basis configuration outside the sector or out of order");
  return BasisView(sector, std::move(codes), {}, false);
}

BasisView BasisView::symmetric(const MagnetizationSector& sector, std::vector<Code> codes, OrbitDecomposition orbits) {
  if (codes.size() != sector.size() || orbits.orbit_of.size() != codes.size())
    throw InvalidInput("orbit decomposition does not cover the sector");
  for (const Orbit& orbit : orbits.orbits)
    if (!sector.contains(orbit.representative))
      throw InvalidInput("orbit representative has magnetization 2M=" +
                         std::to_string(sector.codec().two_m(orbit.representative)) + ", basis has 2M=" +
                         std::to_string(sector.two_m()));
  return BasisView(sector, std::move(codes), std::move(orbits), true);
}

std::vector<double> BasisView::expand(std::span<const double> coefficients) const {
  if (coefficients.size() != size()) throw InvalidInput("coefficient vector has the wrong length");
  if (!symmetric_) return {coefficients.begin(), coefficients.end()};
  std::vector<double> out(codes_.size());
  for (std::size_t x = 0; x < codes_.size(); ++x) {
    const auto a = orbits_.orbit_of[x];
    out[x] = coefficients[a] / std::sqrt(weight(a));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Row a holds sum_{y in support(b)} <y| sum_pairs s_i.s_j |rep(a)>. For s=1/2
// every term is a multiple of 1/4, so those rows accumulate integer quarters.
template <class Acc>
std::vector<std::pair<std::size_t, Acc>> accumulate_row(std::size_t a, std::span<const SitePair> pairs,
                                                        const BasisView& basis) {
  const ConfigCodec& codec = basis.sector().codec();
  const Code rep = basis.representative(a);
  std::vector<std::pair<std::size_t, Acc>> terms;
  terms.reserve(pairs.size() + 1);
  std::array<CouplingTerm, 3> buffer{};
  for (const auto& [i, j] : pairs) {
    const int count = pair_coupling_terms(rep, i, j, codec, buffer);
    for (int k = 0; k < count; ++k) {
      Acc value;
      if constexpr (std::is_integral_v<Acc>)
        value = static_cast<Acc>(std::lround(4.0 * buffer[k].coefficient));
      else
        value = buffer[k].coefficient;
      if (value != Acc{}) terms.emplace_back(basis.locate(buffer[k].target), value);
    }
  }
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<std::pair<std::size_t, Acc>> merged;
  for (const auto& term : terms) {
    if (!merged.empty() && merged.back().first == term.first)
      merged.back().second += term.second;
    else
      merged.push_back(term);
  }
  return merged;
}

template <class Acc>
std::vector<std::vector<SparseSymmetricMatrix::Entry>> assemble(std::span<const SitePair> pairs, double coupling,
                                                                double diagonal, const BasisView& basis,
                                                                int threads) {
  const std::size_t n = basis.size();
  std::vector<std::vector<SparseSymmetricMatrix::Entry>> rows(n);
  parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t a = begin; a < end; ++a) {
      auto& row = rows[a];
      bool has_diagonal = false;
      for (const auto& [b, raw] : accumulate_row<Acc>(a, pairs, basis)) {
        double value = coupling * static_cast<double>(raw);
        if constexpr (std::is_integral_v<Acc>) value *= 0.25;
        if (basis.is_symmetric() && b != a) value *= std::sqrt(basis.weight(a) / basis.weight(b));
        if (b == a) {
          value += diagonal;
          has_diagonal = true;
        }
        if (value != 0.0) row.push_back({b, value});
      }
      if (!has_diagonal && diagonal != 0.0) {
        row.push_back({a, diagonal});
        std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.col < y.col; });
      }
    }
  });
  return rows;
}

}  // namespace

SparseSymmetricMatrix build_pair_operator(std::span<const SitePair> pairs, double coupling, double diagonal,
                                          const BasisView& basis, int threads) {
  const int n_sites = basis.sector().n_sites();
  for (const auto& [i, j] : pairs)
    if (i == j || i < 0 || j < 0 || i >= n_sites || j >= n_sites) throw InvalidInput("invalid site pair");

  auto rows = basis.sector().spin().two_s() == 1 ? assemble<long long>(pairs, coupling, diagonal, basis, threads)
                                                 : assemble<double>(pairs, coupling, diagonal, basis, threads);
  if (basis.is_symmetric() || basis.sector().spin().two_s() != 1) {
    // floating-point rescaling leaves (a,b) and (b,a) a few ulps apart
    const SparseSymmetricMatrix unsymmetrized(rows);
    for (std::size_t a = 0; a < rows.size(); ++a)
      for (auto& entry : rows[a])
        if (entry.col != a) entry.value = 0.5 * (entry.value + unsymmetrized.at(entry.col, a));
  }
  return SparseSymmetricMatrix(std::move(rows));
}

SparseSymmetricMatrix build_hamiltonian(const FiniteLattice& lattice, const ModelParams& params,
                                        const BasisView& basis, int threads) {
  if (lattice.n_sites() != basis.sector().n_sites()) throw InvalidInput("lattice and basis differ in site count");
  std::vector<SitePair> pairs;
  for (const Bond& bond : lattice.bonds()) pairs.emplace_back(bond.a, bond.b);
  const double zeeman = -params.field * 0.5 * basis.two_m();
  return build_pair_operator(pairs, -params.exchange, zeeman, basis, threads);
}

SparseSymmetricMatrix build_s2(int n_sites, SpinQuantum spin, const BasisView& basis, int threads) {
  if (n_sites != basis.sector().n_sites() || spin != basis.sector().spin())
    throw InvalidInput("S^2 parameters do not match the basis");
  std::vector<SitePair> pairs;
  for (int i = 0; i < n_sites; ++i)
    for (int j = i + 1; j < n_sites; ++j) pairs.emplace_back(i, j);
  return build_pair_operator(pairs, 2.0, n_sites * spin.casimir(), basis, threads);
}

}  // namespace spinsym
