// Copyright 2026 The spinsym Authors.
// SPDX-License-Identifier: Apache-2.0

#include "spinsym/errors.hpp"
#include "spinsym/pipeline.hpp"
#include "spinsym/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace spinsym;

namespace {

SolverConfig solver(int threads, std::size_t sector_cap) {
  SolverConfig config;
  config.threads = threads;
  config.sector_cap = sector_cap;
  return config;
}

py::dict ground_dict(const std::string& lattice_spec, const std::string& spin_text, double exchange, double field,
                     int threads, std::size_t sector_cap) {
  const auto lattice = parse_lattice(lattice_spec);
  const auto spin = SpinQuantum::parse(spin_text);
  GroundStateResult g;
  {
    py::gil_scoped_release release;
    g = ground_state(lattice, spin, {exchange, field}, solver(threads, sector_cap));
  }
  const auto obs = observables(g, lattice, threads);
  const ConfigCodec codec(lattice.n_sites(), spin);
  py::dict amplitudes;
  for (std::size_t i = 0; i < g.codes.size(); ++i) amplitudes[py::str(codec.decode(g.codes[i]).str())] = g.amplitudes[i];
  py::dict correlations;
  correlations["distance"] = obs.distances;
  correlations["pairs"] = obs.pair_counts;
  correlations["ss"] = obs.spin_correlation;
  correlations["zz"] = obs.zz_correlation;
  py::dict d;
  d["lattice"] = lattice.spec();
  d["spin"] = spin.str();
  d["J"] = exchange;
  d["h"] = field;
  d["path"] = g.path;
  d["energy"] = g.energy_total;
  d["energy_per_spin"] = g.energy_per_spin;
  d["S"] = 0.5 * g.two_s_total;
  d["M"] = 0.5 * g.two_m;
  d["s2"] = g.s2_expectation;
  d["degeneracy"] = g.degeneracy;
  d["degeneracy_exact"] = g.degeneracy_exact;
  d["sector_dim"] = g.sector_dim;
  d["orbit_count"] = g.orbit_count;
  d["s0_dim"] = g.s0_dim;
  d["warnings"] = g.warnings;
  d["amplitudes"] = amplitudes;
  d["correlations"] = correlations;
  d["staggered_m_sq"] = obs.staggered_m_sq ? py::object(py::float_(*obs.staggered_m_sq)) : py::object(py::none());
  d["sum_rule"] = obs.sum_rule;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "spinsym C++ core";

  auto base = py::register_exception<Error>(m, "SpinsymError");
  py::register_exception<InvalidInput>(m, "InvalidInput", base.ptr());
  py::register_exception<ResourceLimit>(m, "ResourceLimit", base.ptr());
  py::register_exception<NonConvergence>(m, "NonConvergence", base.ptr());

  m.attr("infinite_chain_energy") = kInfiniteChainEnergy;

  m.def(
      "sector_dimension",
      [](int n_sites, const std::string& spin, const std::string& mz) {
        const BigInt dim = sector_dimension(n_sites, SpinQuantum::parse(spin), parse_half(mz));
        return py::int_(py::str(dim.str()));
      },
      py::arg("n_sites"), py::arg("spin") = "1/2", py::arg("mz") = "0",
      "Exact number of configurations with total magnetization mz.");

  m.def(
      "enumerate_sector",
      [](int n_sites, const std::string& spin, const std::string& mz, std::size_t cap) {
        std::vector<std::string> out;
        for (const auto& c : enumerate_sector(n_sites, SpinQuantum::parse(spin), parse_half(mz), cap))
          out.push_back(c.str());
        return out;
      },
      py::arg("n_sites"), py::arg("spin") = "1/2", py::arg("mz") = "0", py::arg("cap") = kDefaultSectorCap,
      "Configurations of a magnetization sector in lexicographic order.");

  m.def(
      "lattice_info",
      [](const std::string& spec) {
        const auto lattice = parse_lattice(spec);
        std::vector<std::pair<int, int>> bonds;
        for (const auto& b : lattice.bonds()) bonds.emplace_back(b.a, b.b);
        py::dict d;
        d["spec"] = lattice.spec();
        d["dims"] = lattice.dims();
        d["linear_size"] = lattice.linear_size();
        d["n_sites"] = lattice.n_sites();
        d["bonds"] = bonds;
        d["bipartite"] = lattice.is_bipartite();
        return d;
      },
      py::arg("lattice"));

  m.def(
      "space_group",
      [](const std::string& spec) {
        const auto group = build_space_group(parse_lattice(spec));
        std::vector<std::vector<int>> perms;
        for (const auto& g : group.elements()) perms.push_back(g.perm);
        py::dict d;
        d["order"] = group.size();
        d["abstract_order"] = group.abstract_order();
        d["permutations"] = perms;
        return d;
      },
      py::arg("lattice"), "Distinct site permutations of the lattice space group.");

  m.def(
      "orbits",
      [](const std::string& spec, const std::string& spin_text, const std::string& mz) {
        const auto lattice = parse_lattice(spec);
        const MagnetizationSector sector(lattice.n_sites(), SpinQuantum::parse(spin_text), parse_half(mz));
        const auto codes = enumerate_codes(sector);
        const auto decomposition = orbit_decomposition(build_space_group(lattice), sector, codes);
        std::vector<std::pair<std::string, std::size_t>> out;
        for (const auto& o : decomposition.orbits) out.emplace_back(sector.codec().decode(o.representative).str(), o.size());
        return out;
      },
      py::arg("lattice"), py::arg("spin") = "1/2", py::arg("mz") = "0",
      "(representative, size) for every space-group orbit of the sector.");

  m.def("ground_state", &ground_dict, py::arg("lattice"), py::arg("spin") = "1/2", py::arg("J") = -1.0,
        py::arg("h") = 0.0, py::arg("threads") = 1, py::arg("sector_cap") = kDefaultSectorCap,
        "Ground state, its quantum numbers, amplitudes and correlations.");

  m.def(
      "classify",
      [](int n_sites, const std::string& spin, double exchange) {
        const auto report = classify_small_chain(n_sites, SpinQuantum::parse(spin), {exchange, 0.0});
        py::list rows;
        for (const auto& r : report.rows) {
          py::dict d;
          d["Theta"] = r.theta;
          d["Gamma"] = r.gamma;
          d["Xi"] = r.xi;
          d["S"] = 0.5 * r.two_s_total;
          d["M_abs"] = 0.5 * r.two_m_abs;
          d["energy_per_spin"] = r.energy_per_spin;
          d["field_slope"] = r.field_slope;
          d["E"] = energy_formula(r);
          d["degeneracy_h0"] = r.degeneracy_h0;
          d["degeneracy_per_m"] = r.degeneracy_per_m;
          rows.append(d);
        }
        return rows;
      },
      py::arg("n_sites"), py::arg("spin") = "1/2", py::arg("J") = -1.0,
      "Every eigenstate of a small periodic chain grouped by energy, S, |M| and irreps.");

  m.def(
      "classify_tsv",
      [](int n_sites, const std::string& spin, double exchange) {
        std::ostringstream out;
        write_classification_tsv(out, classify_small_chain(n_sites, SpinQuantum::parse(spin), {exchange, 0.0}));
        return out.str();
      },
      py::arg("n_sites"), py::arg("spin") = "1/2", py::arg("J") = -1.0);

  m.def(
      "field_sweep",
      [](const std::string& spec, const std::string& spin, double exchange, const std::vector<double>& fields) {
        const auto sweep = field_sweep(parse_lattice(spec), SpinQuantum::parse(spin), exchange, fields);
        py::list points;
        for (const auto& p : sweep.points) {
          py::dict d;
          d["h"] = p.field;
          d["S"] = 0.5 * p.two_s_total;
          d["M"] = 0.5 * p.two_m;
          d["energy_per_spin"] = p.energy_per_spin;
          d["gap_per_spin"] = p.gap_per_spin;
          points.append(d);
        }
        return points;
      },
      py::arg("lattice"), py::arg("spin") = "1/2", py::arg("J") = -1.0, py::arg("fields") = std::vector<double>{0.0},
      "Ground quantum numbers and gap for each field value.");
}
