// Copyright 2026 The spinsym Authors.
// SPDX-License-Identifier: Apache-2.0

#include "spinsym/pipeline.hpp"

#include "spinsym/errors.hpp"
#include "spinsym/parallel.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <map>
#include <tuple>

namespace spinsym {

namespace {

struct SpinBlock {
  int two_s_total;
  std::vector<std::vector<double>> vectors;
};

std::vector<double> multiply_by(const SparseSymmetricMatrix& matrix, std::span<const double> x) {
  std::vector<double> y(matrix.dim());
  matrix.multiply(x, y);
  return y;
}

double expectation(const SparseSymmetricMatrix& matrix, std::span<const double> x) { return dot(x, multiply_by(matrix, x)); }

/// Splits an S^2-invariant subspace into blocks of definite total spin.
std::vector<SpinBlock> split_by_spin(const std::vector<std::vector<double>>& vectors, const SparseSymmetricMatrix& s2) {
  const std::size_t k = vectors.size();
  std::vector<std::vector<double>> images;
  for (const auto& v : vectors) images.push_back(multiply_by(s2, v));
  DenseMatrix projected(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) projected(i, j) = 0.5 * (dot(vectors[i], images[j]) + dot(vectors[j], images[i]));
  const auto spectrum = group_degeneracies(dense_symmetric_eig(projected), 1e-6);

  std::vector<SpinBlock> blocks;
  for (const auto& group : spectrum) {
    SpinBlock block{two_s_from_s2(group.eigenvalue), {}};
    for (const auto& y : group.eigenvectors) {
      std::vector<double> v(vectors.front().size(), 0.0);
      for (std::size_t m = 0; m < k; ++m) axpy(y[m], vectors[m], v);
      block.vectors.push_back(std::move(v));
    }
    block.vectors = orthonormalize(std::move(block.vectors));
    blocks.push_back(std::move(block));
  }
  return blocks;
}

void fix_sign(std::vector<double>& amplitudes) {
  for (double a : amplitudes)
    if (std::abs(a) > 1e-12) {
      if (a < 0)
        for (double& x : amplitudes) x = -x;
      return;
    }
}

struct RawSector {
  MagnetizationSector sector;
  std::vector<Code> codes;
};

RawSector raw_sector(int n_sites, SpinQuantum spin, int two_m, const SolverConfig& config) {
  MagnetizationSector sector(n_sites, spin, two_m);
  if (!sector.feasible())
    throw InvalidInput("no configurations with 2M=" + std::to_string(two_m) + " for " + std::to_string(n_sites) +
                       " spins " + spin.str());
  auto codes = enumerate_codes(sector, config.sector_cap);
  return {std::move(sector), std::move(codes)};
}

}  // namespace

int two_s_from_s2(double s2) {
  const double twice = std::sqrt(1.0 + 4.0 * std::max(s2, 0.0)) - 1.0;
  return static_cast<int>(std::lround(twice));
}

bool symmetric_path_applies(const FiniteLattice& lattice, SpinQuantum spin, const ModelParams& params) {
  // N s even  <=>  N * 2s divisible by 4
  return params.exchange < 0.0 && params.field == 0.0 && (lattice.n_sites() * spin.two_s()) % 4 == 0;
}

SectorSolve solve_sector(const FiniteLattice& lattice, SpinQuantum spin, const ModelParams& params, int two_m,
                         const SolverConfig& config, SectorMethod method) {
  const int n = lattice.n_sites();
  auto raw = raw_sector(n, spin, two_m, config);
  const std::size_t dim = raw.codes.size();
  const auto basis = BasisView::raw(raw.sector, std::move(raw.codes));
  const auto h = build_hamiltonian(lattice, params, basis, config.threads);
  const auto s2 = build_s2(n, spin, basis, config.threads);

  if (method == SectorMethod::Auto) method = dim <= config.dense_switch ? SectorMethod::Dense : SectorMethod::Lanczos;

  SectorSolve out;
  out.two_m = two_m;
  if (method == SectorMethod::Dense) {
    const auto groups = group_degeneracies(dense_symmetric_eig(h.to_dense(), config.dense_cap), config.degeneracy_tol);
    const auto& lowest = groups.front();
    auto blocks = split_by_spin(lowest.eigenvectors, s2);
    out.energy = lowest.eigenvalue;
    out.multiplicity = static_cast<int>(lowest.multiplicity());
    out.vector = blocks.front().vectors.front();
  } else {
    const LinearOperator op = [&](std::span<const double> x, std::span<double> y) { h.multiply(x, y); };
    auto result = lanczos_ground(op, dim, config.lanczos);
    out.energy = result.eigenvalue;
    out.vector = std::move(result.eigenvector);
    out.multiplicity = 1;
    out.multiplicity_exact = false;
  }
  fix_sign(out.vector);
  out.s2_expectation = expectation(s2, out.vector);
  out.two_s_total = two_s_from_s2(out.s2_expectation);
  return out;
}

GroundStateResult symmetric_ground_state(const FiniteLattice& lattice, SpinQuantum spin, const ModelParams& params,
                                         const SolverConfig& config) {
  if (!symmetric_path_applies(lattice, spin, params))
    throw InvalidInput("the symmetric path needs J < 0, h = 0 and N s even");
  const int n = lattice.n_sites();

  // M = 0 sector and its configurations
  auto raw = raw_sector(n, spin, 0, config);
  GroundStateResult result;
  result.lattice = lattice;
  result.spin = spin;
  result.params = params;
  result.path = "symmetric";
  result.sector_dim = raw.codes.size();

  // orbits of the space group
  const SpaceGroup group = build_space_group(lattice);
  auto orbits = orbit_decomposition(group, raw.sector, raw.codes);
  result.orbit_count = orbits.orbits.size();

  // one fully symmetric state per orbit
  const auto basis = BasisView::symmetric(raw.sector, raw.codes, std::move(orbits));
  result.symmetric_dim = basis.size();

  // S^2 = 0 subspace of the symmetric states
  const auto s2 = build_s2(n, spin, basis, config.threads);
  std::vector<std::vector<double>> singlets;
  for (auto& entry : dense_symmetric_eig(s2.to_dense(), config.dense_cap))
    if (entry.eigenvalue < 1e-6) singlets.push_back(std::move(entry.eigenvectors.front()));
  result.s0_dim = singlets.size();
  if (singlets.empty()) throw Error("no fully symmetric singlet in the M=0 sector");

  // H compressed to that subspace
  const auto h = build_hamiltonian(lattice, params, basis, config.threads);
  std::vector<std::vector<double>> images;
  for (const auto& v : singlets) images.push_back(multiply_by(h, v));
  DenseMatrix compressed(singlets.size());
  for (std::size_t i = 0; i < singlets.size(); ++i)
    for (std::size_t j = 0; j < singlets.size(); ++j)
      compressed(i, j) = 0.5 * (dot(singlets[i], images[j]) + dot(singlets[j], images[i]));
  const auto spectrum = dense_symmetric_eig(compressed, config.dense_cap);
  const auto& lowest = spectrum.front();

  // back to Ising-configuration amplitudes
  std::vector<double> coefficients(basis.size(), 0.0);
  for (std::size_t k = 0; k < singlets.size(); ++k) axpy(lowest.eigenvectors.front()[k], singlets[k], coefficients);
  scale(1.0 / norm(coefficients), coefficients);

  result.energy_total = lowest.eigenvalue;
  result.energy_per_spin = lowest.eigenvalue / n;
  result.two_m = 0;
  result.s2_expectation = expectation(s2, coefficients);
  result.two_s_total = two_s_from_s2(result.s2_expectation);
  result.amplitudes = basis.expand(coefficients);
  fix_sign(result.amplitudes);
  result.codes.assign(basis.codes().begin(), basis.codes().end());
  result.degeneracy = static_cast<int>(std::count_if(spectrum.begin(), spectrum.end(), [&](const SpectrumEntry& e) {
    return e.eigenvalue - lowest.eigenvalue <= config.degeneracy_tol;
  }));
  result.degeneracy_exact = false;  // counted inside the reduced space only
  return result;
}

GroundStateResult ground_state(const FiniteLattice& lattice, SpinQuantum spin, const ModelParams& params,
                               const SolverConfig& config) {
  if (symmetric_path_applies(lattice, spin, params)) return symmetric_ground_state(lattice, spin, params, config);

  GroundStateResult result;
  result.lattice = lattice;
  result.spin = spin;
  result.params = params;
  result.path = "raw";
  const int n = lattice.n_sites();
  if (params.exchange < 0.0) {
    if ((n * spin.two_s()) % 4 != 0)
      result.warnings.push_back("N s = " + format_half(n * spin.two_s()) +
                                " is not an even integer; solving raw magnetization sectors");
    else
      result.warnings.push_back("h != 0; solving raw magnetization sectors");
  }

  std::vector<SectorSolve> solves;
  for (int two_m : magnetization_values(n, spin)) solves.push_back(solve_sector(lattice, spin, params, two_m, config));
  double best = solves.front().energy;
  for (const auto& s : solves) best = std::min(best, s.energy);

  const SectorSolve* chosen = nullptr;
  result.degeneracy = 0;
  for (const auto& s : solves) {
    if (s.energy - best > config.degeneracy_tol) continue;
    result.degeneracy += s.multiplicity;
    result.degeneracy_exact = result.degeneracy_exact && s.multiplicity_exact;
    const auto key = [](const SectorSolve& x) { return std::make_tuple(std::abs(x.two_m), x.two_m < 0); };
    if (!chosen || key(s) < key(*chosen)) chosen = &s;
  }

  result.energy_total = chosen->energy;
  result.energy_per_spin = chosen->energy / n;
  result.two_m = chosen->two_m;
  result.two_s_total = chosen->two_s_total;
  result.s2_expectation = chosen->s2_expectation;
  result.amplitudes = chosen->vector;
  const MagnetizationSector sector(n, spin, chosen->two_m);
  result.codes = enumerate_codes(sector, config.sector_cap);
  result.sector_dim = result.codes.size();
  return result;
}

// ---------------------------------------------------------------------------

int ClassificationReport::total_states() const noexcept {
  int total = 0;
  for (const auto& row : rows) total += row.degeneracy_h0;
  return total;
}

ClassificationReport classify_small_chain(int n_sites, SpinQuantum spin, const ModelParams& params,
                                          const SolverConfig& config) {
  if (n_sites < 3) throw InvalidInput("classification needs a chain of at least 3 sites");
  const BigInt full = boost::multiprecision::pow(BigInt(spin.local_dim()), n_sites);
  if (full > BigInt(config.dense_cap))
    throw ResourceLimit("full space of dimension " + full.str() + " exceeds the dense cap " +
                        std::to_string(config.dense_cap));

  const FiniteLattice lattice = build_lattice(1, n_sites);
  const ModelParams zero_field{params.exchange, 0.0};
  const auto cyclic = cyclic_characters(n_sites);
  const auto dihedral = dihedral_characters(n_sites);
  const auto reflection = reflection_characters();
  const auto cyclic_perms = realize(cyclic, lattice);
  const auto dihedral_perms = realize(dihedral, lattice);
  const auto reflection_perms = realize(reflection, lattice);

  struct RawRow {
    ClassificationRow row;
    int two_m;
  };
  std::vector<RawRow> raw_rows;

  for (int two_m : magnetization_values(n_sites, spin)) {
    auto raw = raw_sector(n_sites, spin, two_m, config);
    const auto sector = raw.sector;
    const auto basis = BasisView::raw(raw.sector, raw.codes);
    const auto h = build_hamiltonian(lattice, zero_field, basis, config.threads);
    const auto s2 = build_s2(n_sites, spin, basis, config.threads);
    const auto levels = group_degeneracies(dense_symmetric_eig(h.to_dense(), config.dense_cap), config.degeneracy_tol);

    for (const auto& level : levels) {
      for (const auto& block : split_by_spin(level.eigenvectors, s2)) {
        const auto gammas =
            eigenspace_irrep_multiplicities(dihedral, dihedral_perms, sector, raw.codes, block.vectors);
        for (std::size_t g = 0; g < gammas.size(); ++g) {
          if (gammas[g].multiplicity == 0) continue;
          const auto component = isotypic_component(dihedral, g, dihedral_perms, sector, raw.codes, block.vectors);
          const auto thetas = eigenspace_irrep_multiplicities(cyclic, cyclic_perms, sector, raw.codes, component);
          const auto xis = eigenspace_irrep_multiplicities(reflection, reflection_perms, sector, raw.codes, component);
          ClassificationRow row;
          row.theta = direct_sum_label(thetas);
          row.xi = direct_sum_label(xis);
          row.gamma = gammas[g].multiplicity == 1 ? gammas[g].label.name
                                                  : std::to_string(gammas[g].multiplicity) + gammas[g].label.name;
          row.two_s_total = block.two_s_total;
          row.two_m_abs = std::abs(two_m);
          row.energy_per_spin = level.eigenvalue / n_sites;
          row.field_slope = -0.5 * std::abs(two_m) / n_sites;
          row.degeneracy_per_m = static_cast<int>(component.size());
          raw_rows.push_back({row, two_m});
        }
      }
    }
  }

  // pair each +M row with its -M partner
  ClassificationReport report{n_sites, spin, zero_field, {}};
  std::vector<bool> used(raw_rows.size(), false);
  for (std::size_t i = 0; i < raw_rows.size(); ++i) {
    if (used[i] || raw_rows[i].two_m < 0) continue;
    used[i] = true;
    ClassificationRow row = raw_rows[i].row;
    row.degeneracy_h0 = row.degeneracy_per_m;
    if (raw_rows[i].two_m > 0) {
      for (std::size_t j = 0; j < raw_rows.size(); ++j) {
        const auto& other = raw_rows[j].row;
        if (used[j] || raw_rows[j].two_m != -raw_rows[i].two_m) continue;
        if (other.theta != row.theta || other.gamma != row.gamma || other.xi != row.xi ||
            other.two_s_total != row.two_s_total || other.degeneracy_per_m != row.degeneracy_per_m ||
            std::abs(other.energy_per_spin - row.energy_per_spin) > config.degeneracy_tol)
          continue;
        used[j] = true;
        row.degeneracy_h0 += other.degeneracy_per_m;
        break;
      }
      if (row.degeneracy_h0 != 2 * row.degeneracy_per_m) throw Error("unpaired magnetization row in classification");
    }
    report.rows.push_back(row);
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) throw Error("unpaired negative-magnetization row");

  std::stable_sort(report.rows.begin(), report.rows.end(), [&](const ClassificationRow& a, const ClassificationRow& b) {
    if (std::abs(a.energy_per_spin - b.energy_per_spin) > config.degeneracy_tol)
      return a.energy_per_spin < b.energy_per_spin;
    return std::tie(a.two_s_total, a.two_m_abs, a.gamma) < std::tie(b.two_s_total, b.two_m_abs, b.gamma);
  });
  return report;
}

// ---------------------------------------------------------------------------

std::vector<double> parse_field_grid(std::string_view text) {
  auto number = [&](std::string_view part) {
    // std::from_chars for double is available in libstdc++ 11
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty())
      throw InvalidInput("bad number '" + std::string(part) + "' in field grid");
    return value;
  };
  const auto first = text.find(':');
  if (first == std::string_view::npos) return {number(text)};
  const auto second = text.find(':', first + 1);
  if (second == std::string_view::npos) throw InvalidInput("field grid must be start:stop:step");
  const double start = number(text.substr(0, first));
  const double stop = number(text.substr(first + 1, second - first - 1));
  const double step = number(text.substr(second + 1));
  if (!(step > 0.0) || stop < start) throw InvalidInput("field grid needs step > 0 and stop >= start");
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) grid[i] = start + static_cast<double>(i) * step;
  return grid;
}

SweepResult field_sweep(const FiniteLattice& lattice, SpinQuantum spin, double exchange,
                        std::span<const double> fields, const SolverConfig& config) {
  for (std::size_t i = 0; i < fields.size(); ++i)
    if (fields[i] < 0.0 || (i > 0 && fields[i] < fields[i - 1]))
      throw InvalidInput("field grid must be ascending and nonnegative");

  const int n = lattice.n_sites();
  const ModelParams zero_field{exchange, 0.0};
  SweepResult result;
  for (int two_m : magnetization_values(n, spin)) {
    if (two_m < 0) continue;  // spin flip: -M has the same h = 0 spectrum
    auto raw = raw_sector(n, spin, two_m, config);
    const std::size_t dim = raw.codes.size();
    const auto basis = BasisView::raw(raw.sector, std::move(raw.codes));
    const auto h = build_hamiltonian(lattice, zero_field, basis, config.threads);
    const auto s2 = build_s2(n, spin, basis, config.threads);
    std::vector<Level> sector_levels;
    if (dim <= config.dense_switch) {
      for (const auto& level :
           group_degeneracies(dense_symmetric_eig(h.to_dense(), config.dense_cap), config.degeneracy_tol))
        for (const auto& block : split_by_spin(level.eigenvectors, s2))
          sector_levels.push_back({level.eigenvalue, block.two_s_total, two_m, static_cast<int>(block.vectors.size())});
    } else {
      const LinearOperator op = [&](std::span<const double> x, std::span<double> y) { h.multiply(x, y); };
      for (const auto& pair : lanczos_lowest(op, dim, 2, config.lanczos))
        sector_levels.push_back({pair.eigenvalue, two_s_from_s2(expectation(s2, pair.eigenvector)), two_m, 1});
    }
    for (const auto& level : sector_levels) {
      result.levels.push_back(level);
      if (two_m > 0) result.levels.push_back({level.energy, level.two_s_total, -two_m, level.multiplicity});
    }
  }

  for (double field : fields) {
    std::vector<std::pair<double, const Level*>> shifted;
    for (const auto& level : result.levels) shifted.emplace_back(level.energy - 0.5 * field * level.two_m, &level);
    std::sort(shifted.begin(), shifted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    const double lowest = shifted.front().first;
    const Level* ground = shifted.front().second;
    for (const auto& [energy, level] : shifted) {
      if (energy - lowest > config.degeneracy_tol) break;
      if (level->two_m > ground->two_m) ground = level;
    }
    double second = lowest;
    if (shifted.front().second->multiplicity < 2 && shifted.size() > 1) second = shifted[1].first;
    result.points.push_back(
        {field, ground->two_s_total, ground->two_m, lowest / n, std::max(0.0, second - lowest) / n});
  }
  return result;
}

// ---------------------------------------------------------------------------

ObservableReport observables(const GroundStateResult& ground, const FiniteLattice& lattice, int threads) {
  const int n = lattice.n_sites();
  if (n != static_cast<int>(ground.lattice.n_sites())) throw InvalidInput("ground state belongs to another lattice");
  const MagnetizationSector sector(n, ground.spin, ground.two_m);
  const ConfigCodec& codec = sector.codec();
  const auto& codes = ground.codes;
  const auto& amp = ground.amplitudes;

  std::vector<SitePair> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<double> full(pairs.size()), zz(pairs.size());
  parallel_for(pairs.size(), threads, [&](std::size_t begin, std::size_t end) {
    std::array<CouplingTerm, 3> terms{};
    for (std::size_t p = begin; p < end; ++p) {
      const auto [i, j] = pairs[p];
      double total = 0.0, diagonal = 0.0;
      for (std::size_t x = 0; x < codes.size(); ++x) {
        if (amp[x] == 0.0) continue;
        const int count = pair_coupling_terms(codes[x], i, j, codec, terms);
        diagonal += amp[x] * amp[x] * terms[0].coefficient;
        total += amp[x] * amp[x] * terms[0].coefficient;
        for (int k = 1; k < count; ++k) total += amp[x] * terms[k].coefficient * amp[sector.rank_code(terms[k].target)];
      }
      full[p] = total;
      zz[p] = diagonal;
    }
  });

  const auto dist = lattice.graph_distances();
  int max_r = 0;
  for (int d : dist) max_r = std::max(max_r, d);
  ObservableReport report;
  report.distances.resize(max_r + 1);
  report.pair_counts.assign(max_r + 1, 0);
  report.spin_correlation.assign(max_r + 1, 0.0);
  report.zz_correlation.assign(max_r + 1, 0.0);
  for (int r = 0; r <= max_r; ++r) report.distances[r] = r;

  // r = 0: <s_i . s_i> = s(s+1) and <(s^z_i)^2>
  report.pair_counts[0] = n;
  report.spin_correlation[0] = n * ground.spin.casimir();
  for (std::size_t x = 0; x < codes.size(); ++x)
    for (int i = 0; i < n; ++i) {
      const int m2 = codec.two_m_at(codes[x], i);
      report.zz_correlation[0] += amp[x] * amp[x] * 0.25 * m2 * m2;
    }

  double pair_sum = 0.0;
  double staggered = n * ground.spin.casimir();
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto [i, j] = pairs[p];
    const int r = dist[static_cast<std::size_t>(i) * n + j];
    report.pair_counts[r] += 1;
    report.spin_correlation[r] += full[p];
    report.zz_correlation[r] += zz[p];
    pair_sum += full[p];
    staggered += 2.0 * lattice.sublattice_sign(i) * lattice.sublattice_sign(j) * full[p];
  }
  for (int r = 0; r <= max_r; ++r)
    if (report.pair_counts[r] > 0) {
      report.spin_correlation[r] /= report.pair_counts[r];
      report.zz_correlation[r] /= report.pair_counts[r];
    }
  report.sum_rule = n * ground.spin.casimir() + 2.0 * pair_sum;
  if (lattice.is_bipartite()) report.staggered_m_sq = staggered / (static_cast<double>(n) * n);
  return report;
}

ObservableReport observables(const GroundStateResult& ground, const FiniteLattice& lattice, const SweepResult& sweep,
                             int threads) {
  auto report = observables(ground, lattice, threads);
  for (const auto& point : sweep.points) report.gap_curve.emplace_back(point.field, point.gap_per_spin);
  return report;
}

}  // namespace spinsym
