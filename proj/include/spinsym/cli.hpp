// Copyright 2026 The spinsym Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spinsym {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitInvalidInput = 2,
  kExitResourceLimit = 3,
  kExitNonConvergence = 4,
};

/// Runs one CLI command; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spinsym
