// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The stoplemma Authors

#pragma once

#include <stdexcept>
#include <string>

namespace stoplemma {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad or unreadable input: missing files, invalid UTF-8, malformed rows.
/// The CLI maps this to exit code 1.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A computation that cannot produce a defined result. Exit code 2.
class ComputationError : public Error {
 public:
  using Error::Error;
};

/// Point-biserial correlation on constant membership or constant ranks.
class UndefinedCorrelation : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

}  // namespace stoplemma
