// Copyright 2026 The spinsym Authors.
// SPDX-License-Identifier: Apache-2.0

#include "spinsym/linalg.hpp"

namespace spinsym {

std::vector<std::vector<double>> orthonormalize(std::vector<std::vector<double>> vectors, double drop_tol) {
  std::vector<std::vector<double>> basis;
  for (auto& v : vectors) {
    const double initial = norm(v);
    if (initial == 0.0) continue;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : basis) axpy(-dot(q, v), q, v);
    const double remaining = norm(v);
    if (remaining <= drop_tol * initial) continue;
    scale(1.0 / remaining, v);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace spinsym
