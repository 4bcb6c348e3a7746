// Copyright 2026 The spinsym Authors.
// SPDX-License-Identifier: Apache-2.0

#include "spinsym/cli.hpp"

#include "spinsym/errors.hpp"
#include "spinsym/pipeline.hpp"
#include "spinsym/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace spinsym {

namespace {

struct RunConfig {
  std::string lattice;
  std::string spin = "1/2";
  std::string mz = "0";
  double exchange = -1.0;
  std::string field = "0";
  std::string json_path;
  std::string config_path;
  std::string basis = "raw";
  std::string op = "H";
  SolverConfig solver;
};

void add_common(CLI::App* sub, RunConfig& rc, bool with_mz, bool with_model, bool with_field) {
  sub->add_option("--lattice", rc.lattice, "chain:N, square:LxL or cube:LxLxL")->required();
  sub->add_option("--spin", rc.spin, "single-site spin as a fraction, e.g. 1/2")->capture_default_str();
  if (with_mz) sub->add_option("--mz", rc.mz, "total magnetization M, e.g. 0 or 3/2")->capture_default_str();
  if (with_model) sub->add_option("-J,--exchange", rc.exchange, "exchange constant J")->capture_default_str();
  if (with_field) sub->add_option("--h,--field", rc.field, "field h (sweep: start:stop:step)")->capture_default_str();
  sub->add_option("--json", rc.json_path, "also write a JSON document to this file");
  sub->add_option("--config", rc.config_path, "key=value file merged under the flags");
  sub->add_option("--threads", rc.solver.threads, "worker threads")->envname("SPINSYM_THREADS")->check(CLI::Range(1, 1024))->capture_default_str();
  sub->add_option("--sector-cap", rc.solver.sector_cap, "largest sector enumerated")->capture_default_str();
  sub->add_option("--dense-cap", rc.solver.dense_cap, "largest dense eigenproblem")->capture_default_str();
  sub->add_option("--dense-switch", rc.solver.dense_switch, "raw sectors up to this size are solved densely")
      ->capture_default_str();
  sub->add_option("--deg-tol", rc.solver.degeneracy_tol, "absolute degeneracy tolerance")->capture_default_str();
  sub->add_option("--lanczos-tol", rc.solver.lanczos.tolerance, "relative Lanczos residual")->capture_default_str();
  sub->add_option("--lanczos-iters", rc.solver.lanczos.max_iterations, "Lanczos iteration limit")->capture_default_str();
  sub->add_option("--seed", rc.solver.lanczos.seed, "Lanczos start-vector seed")->capture_default_str();
}

std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read config file '" + path + "'");
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  auto trim = [](std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    const auto last = s.find_last_not_of(" \t\r");
    return first == std::string::npos ? std::string() : s.substr(first, last - first + 1);
  };
  while (std::getline(in, line)) {
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw InvalidInput("config line without '=': " + line);
    entries.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return entries;
}

// Inserts file entries as flags unless the command line already names them.
std::vector<std::string> merge_config(std::vector<std::string> args) {
  auto it = std::find(args.begin(), args.end(), "--config");
  std::string path;
  if (it != args.end() && it + 1 != args.end()) path = *(it + 1);
  for (const auto& a : args)
    if (a.rfind("--config=", 0) == 0) path = a.substr(9);
  if (path.empty() || args.empty()) return args;

  auto given = [&](const std::string& flag) {
    return std::any_of(args.begin(), args.end(),
                       [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
  };
  std::vector<std::string> extra;
  for (const auto& [key, value] : read_config_file(path)) {
    const std::string flag = key.size() == 1 ? "-" + key : "--" + key;
    if (key == "config" || given(flag) || (key == "J" && given("--exchange")) || (key == "exchange" && given("-J")))
      continue;
    extra.push_back(flag);
    extra.push_back(value);
  }
  args.insert(args.begin() + 1, extra.begin(), extra.end());
  return args;
}

void write_json(const std::string& path, const nlohmann::ordered_json& doc) {
  if (path.empty()) return;
  std::ofstream file(path);
  if (!file) throw InvalidInput("cannot write '" + path + "'");
  file << doc.dump(2) << '\n';
}

double parse_single_field(const std::string& text) {
  const auto grid = parse_field_grid(text);
  if (grid.size() != 1) throw InvalidInput("expected a single field value, got '" + text + "'");
  return grid.front();
}

}  // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetry-reduced exact diagonalization of finite Heisenberg magnets", "spinsym"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  RunConfig rc;

  auto* count = app.add_subcommand("count", "dimension of the fixed-magnetization sector");
  add_common(count, rc, true, false, false);
  auto* orbits = app.add_subcommand("orbits", "space-group orbits of a sector (representative, size)");
  add_common(orbits, rc, true, false, false);
  auto* ground = app.add_subcommand("ground", "ground state and its observables");
  add_common(ground, rc, false, true, true);
  auto* classify = app.add_subcommand("classify", "classify every state of a small chain");
  add_common(classify, rc, false, true, false);
  auto* sweep = app.add_subcommand("sweep", "ground quantum numbers and gap along a field grid");
  add_common(sweep, rc, false, true, true);
  auto* matrix = app.add_subcommand("matrix", "dump H or S^2 as coordinate-list text");
  add_common(matrix, rc, true, true, true);
  matrix->add_option("--basis", rc.basis, "raw or symmetric")->check(CLI::IsMember({"raw", "symmetric"}));
  matrix->add_option("--operator", rc.op, "H or S2")->check(CLI::IsMember({"H", "S2"}));

  std::stringstream cli_out, cli_err;
  try {
    auto args = merge_config(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, cli_out, cli_err);
    out << cli_out.str();
    err << cli_err.str();
    return code == 0 ? kExitOk : kExitInvalidInput;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  try {
    const FiniteLattice lattice = parse_lattice(rc.lattice);
    const SpinQuantum spin = SpinQuantum::parse(rc.spin);
    const int n = lattice.n_sites();

    if (count->parsed()) {
      const int two_m = parse_half(rc.mz);
      const BigInt dim = sector_dimension(n, spin, two_m);
      if (dim == 0)
        err << "warning: no configurations with M=" << rc.mz << " for " << n << " spins " << spin.str()
            << " (out of range or wrong parity)\n";
      out << dim.str() << '\n';
      write_json(rc.json_path, {{"lattice", lattice.spec()}, {"spin", spin.str()}, {"M", rc.mz}, {"dimension", dim.str()}});
    } else if (orbits->parsed()) {
      const MagnetizationSector sector(n, spin, parse_half(rc.mz));
      const auto codes = enumerate_codes(sector, rc.solver.sector_cap);
      const auto decomposition = orbit_decomposition(build_space_group(lattice), sector, codes);
      write_orbits_tsv(out, decomposition, sector.codec());
      if (!rc.json_path.empty()) {
        nlohmann::ordered_json list = nlohmann::ordered_json::array();
        for (const auto& o : decomposition.orbits)
          list.push_back({{"representative", sector.codec().decode(o.representative).str()}, {"size", o.size()}});
        write_json(rc.json_path, {{"lattice", lattice.spec()}, {"spin", spin.str()}, {"M", rc.mz}, {"orbits", list}});
      }
    } else if (ground->parsed()) {
      const ModelParams params{rc.exchange, parse_single_field(rc.field)};
      const auto result = ground_state(lattice, spin, params, rc.solver);
      for (const auto& w : result.warnings) err << "warning: " << w << '\n';
      const auto obs = observables(result, lattice, rc.solver.threads);
      write_ground_tsv(out, result, obs);
      write_json(rc.json_path, to_json(result, obs));
    } else if (classify->parsed()) {
      if (lattice.dims() != 1) throw InvalidInput("classify works on chains only");
      const auto report = classify_small_chain(n, spin, {rc.exchange, 0.0}, rc.solver);
      write_classification_tsv(out, report);
      write_json(rc.json_path, to_json(report));
    } else if (sweep->parsed()) {
      const auto grid = parse_field_grid(rc.field);
      const auto result = field_sweep(lattice, spin, rc.exchange, grid, rc.solver);
      write_sweep_tsv(out, result);
      write_json(rc.json_path, to_json(result, lattice, spin, rc.exchange));
    } else if (matrix->parsed()) {
      const ModelParams params{rc.exchange, parse_single_field(rc.field)};
      const MagnetizationSector sector(n, spin, parse_half(rc.mz));
      auto codes = enumerate_codes(sector, rc.solver.sector_cap);
      const BasisView basis =
          rc.basis == "raw" ? BasisView::raw(sector, std::move(codes))
                            : BasisView::symmetric(sector, codes,
                                                   orbit_decomposition(build_space_group(lattice), sector, codes));
      const auto m = rc.op == "H" ? build_hamiltonian(lattice, params, basis, rc.solver.threads)
                                  : build_s2(n, spin, basis, rc.solver.threads);
      m.write_coordinates(out);
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << '\n';
    return kExitResourceLimit;
  } catch (const NonConvergence& e) {
    err << "error: " << e.what() << '\n';
    return kExitNonConvergence;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace spinsym
