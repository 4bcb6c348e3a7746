// Copyright 2026 The spinsym Authors.
// SPDX-License-Identifier: Apache-2.0

#include "spinsym/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace spinsym {

namespace {

std::string fixed(double value, int digits) {
  if (std::abs(value) < 0.5 * std::pow(10.0, -digits)) value = 0.0;  // no "-0.000000"
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", digits, value);
  return buffer;
}

// shortest of "%.6f" with trailing zeros dropped
std::string compact(double value) {
  std::string s = fixed(value, 6);
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

std::string half(int twice) { return format_half(twice); }

std::string signed_m(int two_m_abs) { return two_m_abs == 0 ? "0" : "±" + format_half(two_m_abs); }

}  // namespace

void write_orbits_tsv(std::ostream& out, const OrbitDecomposition& orbits, const ConfigCodec& codec) {
  out << "rep\tsize\n";
  for (const auto& orbit : orbits.orbits) out << codec.decode(orbit.representative).str() << '\t' << orbit.size() << '\n';
}

std::string energy_formula(const ClassificationRow& row) {
  const std::string e0 = fixed(row.energy_per_spin, 6);
  if (row.two_m_abs == 0) return e0;
  const double slope = -row.field_slope;  // |M|/N
  if (std::abs(row.energy_per_spin) < 5e-7) return "∓" + fixed(slope, 6) + "h";
  // E/N = e0 (1 - (slope/e0) h) for +M
  const double ratio = slope / std::abs(row.energy_per_spin);
  const std::string sign = row.energy_per_spin < 0 ? "±" : "∓";
  const std::string coefficient = std::abs(ratio - 1.0) < 1e-9 ? "" : compact(ratio);
  return e0 + "(1" + sign + coefficient + "h)";
}

void write_classification_tsv(std::ostream& out, const ClassificationReport& report) {
  out << "Theta\tGamma\tXi\tS\tM\tE\tdeg_h0\tdeg_h\n";
  for (const auto& row : report.rows) {
    const std::string split = row.two_m_abs == 0
                                  ? std::to_string(row.degeneracy_per_m)
                                  : std::to_string(row.degeneracy_per_m) + "+" + std::to_string(row.degeneracy_per_m);
    out << row.theta << '\t' << row.gamma << '\t' << row.xi << '\t' << half(row.two_s_total) << '\t'
        << signed_m(row.two_m_abs) << '\t' << energy_formula(row) << '\t' << row.degeneracy_h0 << '\t' << split
        << '\n';
  }
}

void write_sweep_tsv(std::ostream& out, const SweepResult& sweep) {
  out << "h\tS\tM\tE\tgap\n";
  for (const auto& p : sweep.points)
    out << fixed(p.field, 6) << '\t' << half(p.two_s_total) << '\t' << half(p.two_m) << '\t'
        << fixed(p.energy_per_spin, 6) << '\t' << fixed(p.gap_per_spin, 6) << '\n';
}

void write_ground_tsv(std::ostream& out, const GroundStateResult& g, const ObservableReport& obs) {
  out << "lattice\t" << g.lattice.spec() << '\n'
      << "spin\t" << g.spin.str() << '\n'
      << "J\t" << compact(g.params.exchange) << '\n'
      << "h\t" << compact(g.params.field) << '\n'
      << "path\t" << g.path << '\n'
      << "sector_dim\t" << g.sector_dim << '\n';
  if (g.path == "symmetric")
    out << "orbit_count\t" << g.orbit_count << '\n'
        << "symmetric_dim\t" << g.symmetric_dim << '\n'
        << "s0_dim\t" << g.s0_dim << '\n';
  out << "energy_total\t" << fixed(g.energy_total, 6) << '\n'
      << "energy_per_spin\t" << fixed(g.energy_per_spin, 6) << '\n';
  if (g.lattice.dims() == 1) out << "infinite_chain_reference\t" << fixed(kInfiniteChainEnergy, 6) << '\n';
  out << "S\t" << half(g.two_s_total) << '\n'
      << "M\t" << half(g.two_m) << '\n'
      << "degeneracy\t" << g.degeneracy << (g.degeneracy_exact ? "" : " (lower bound)") << '\n';
  if (obs.staggered_m_sq) out << "staggered_m_sq\t" << fixed(*obs.staggered_m_sq, 12) << '\n';
  out << "sum_rule\t" << fixed(obs.sum_rule, 12) << '\n';
  out << "r\tpairs\tss\tzz\n";
  for (std::size_t r = 0; r < obs.distances.size(); ++r)
    out << obs.distances[r] << '\t' << obs.pair_counts[r] << '\t' << fixed(obs.spin_correlation[r], 12) << '\t'
        << fixed(obs.zz_correlation[r], 12) << '\n';
}

nlohmann::ordered_json to_json(const GroundStateResult& g, const ObservableReport& obs) {
  using nlohmann::ordered_json;
  const ConfigCodec codec(g.lattice.n_sites(), g.spin);
  ordered_json amplitudes = ordered_json::object();
  for (std::size_t x = 0; x < g.codes.size(); ++x) amplitudes[codec.decode(g.codes[x]).str()] = g.amplitudes[x];

  ordered_json correlations = ordered_json::array();
  for (std::size_t r = 0; r < obs.distances.size(); ++r)
    correlations.push_back({{"r", obs.distances[r]},
                            {"pairs", obs.pair_counts[r]},
                            {"ss", obs.spin_correlation[r]},
                            {"zz", obs.zz_correlation[r]}});
  ordered_json observables = {{"correlations", correlations},
                              {"staggered_m_sq", obs.staggered_m_sq ? ordered_json(*obs.staggered_m_sq) : ordered_json()},
                              {"sum_rule", obs.sum_rule}};
  if (!obs.gap_curve.empty()) {
    ordered_json curve = ordered_json::array();
    for (const auto& [h, gap] : obs.gap_curve) curve.push_back({{"h", h}, {"gap_per_spin", gap}});
    observables["gap_curve"] = curve;
  }

  ordered_json energy = {{"total", g.energy_total}, {"per_spin", g.energy_per_spin}};
  if (g.lattice.dims() == 1) energy["infinite_chain_reference"] = kInfiniteChainEnergy;

  return {{"params", {{"J", g.params.exchange}, {"h", g.params.field}, {"spin", g.spin.str()}}},
          {"lattice", g.lattice.spec()},
          {"path", g.path},
          {"dims", {{"sector", g.sector_dim}, {"symmetric", g.symmetric_dim}, {"s0", g.s0_dim}}},
          {"orbit_count", g.orbit_count},
          {"energy", energy},
          {"S", 0.5 * g.two_s_total},
          {"M", 0.5 * g.two_m},
          {"degeneracy", g.degeneracy},
          {"degeneracy_exact", g.degeneracy_exact},
          {"warnings", g.warnings},
          {"amplitudes", amplitudes},
          {"observables", observables}};
}

nlohmann::ordered_json to_json(const ClassificationReport& report) {
  using nlohmann::ordered_json;
  ordered_json rows = ordered_json::array();
  for (const auto& row : report.rows)
    rows.push_back({{"Theta", row.theta},
                    {"Gamma", row.gamma},
                    {"Xi", row.xi},
                    {"S", 0.5 * row.two_s_total},
                    {"M_abs", 0.5 * row.two_m_abs},
                    {"energy_per_spin", row.energy_per_spin},
                    {"field_slope", row.field_slope},
                    {"E", energy_formula(row)},
                    {"degeneracy_h0", row.degeneracy_h0},
                    {"degeneracy_per_m", row.degeneracy_per_m}});
  return {{"params", {{"J", report.params.exchange}, {"spin", report.spin.str()}}},
          {"lattice", "chain:" + std::to_string(report.n_sites)},
          {"rows", rows}};
}

nlohmann::ordered_json to_json(const SweepResult& sweep, const FiniteLattice& lattice, SpinQuantum spin,
                               double exchange) {
  using nlohmann::ordered_json;
  ordered_json points = ordered_json::array();
  for (const auto& p : sweep.points)
    points.push_back({{"h", p.field},
                      {"S", 0.5 * p.two_s_total},
                      {"M", 0.5 * p.two_m},
                      {"energy_per_spin", p.energy_per_spin},
                      {"gap_per_spin", p.gap_per_spin}});
  return {{"params", {{"J", exchange}, {"spin", spin.str()}}}, {"lattice", lattice.spec()}, {"points", points}};
}

}  // namespace spinsym
