// Copyright 2026 The spinsym Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace spinsym {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arguments violate a documented precondition (CLI exit code 2).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A configured size cap would be exceeded (CLI exit code 3).
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// An iterative or dense solver failed to converge (CLI exit code 4).
class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, double best_residual)
      : Error(what), best_residual_(best_residual) {}
  double best_residual() const noexcept { return best_residual_; }

 private:
  double best_residual_;
};

}  // namespace spinsym
