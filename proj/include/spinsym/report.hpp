// Copyright 2026 The spinsym Authors.
// SPDX-License-Identifier: Apache-2.0

// TSV and JSON serialization of pipeline results.

#pragma once

#include "spinsym/pipeline.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace spinsym {

/// One line per orbit: representative, tab, size.
void write_orbits_tsv(std::ostream& out, const OrbitDecomposition& orbits, const ConfigCodec& codec);

/// Energy column of a classification row: "-0.500000", "-0.250000(1±h)",
/// "∓0.250000h", ... (top sign belongs to +M).
std::string energy_formula(const ClassificationRow& row);

void write_classification_tsv(std::ostream& out, const ClassificationReport& report);
void write_sweep_tsv(std::ostream& out, const SweepResult& sweep);
void write_ground_tsv(std::ostream& out, const GroundStateResult& ground, const ObservableReport& obs);

nlohmann::ordered_json to_json(const GroundStateResult& ground, const ObservableReport& obs);
nlohmann::ordered_json to_json(const ClassificationReport& report);
nlohmann::ordered_json to_json(const SweepResult& sweep, const FiniteLattice& lattice, SpinQuantum spin,
                               double exchange);

}  // namespace spinsym
