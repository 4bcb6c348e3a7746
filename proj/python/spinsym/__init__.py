# Copyright 2026 The spinsym Authors.
# SPDX-License-Identifier: Apache-2.0
"""Symmetry-reduced exact diagonalization of finite Heisenberg magnets."""

from ._core import (
    InvalidInput,
    NonConvergence,
    ResourceLimit,
    SpinsymError,
    classify,
    classify_tsv,
    enumerate_sector,
    field_sweep,
    ground_state,
    infinite_chain_energy,
    lattice_info,
    orbits,
    sector_dimension,
    space_group,
)

__all__ = [
    "InvalidInput",
    "NonConvergence",
    "ResourceLimit",
    "SpinsymError",
    "classify",
    "classify_tsv",
    "enumerate_sector",
    "field_sweep",
    "ground_state",
    "infinite_chain_energy",
    "lattice_info",
    "orbits",
    "sector_dimension",
    "space_group",
]
