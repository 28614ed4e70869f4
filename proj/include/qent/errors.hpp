// Copyright 2026 The qent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qent {

/// Which invariant a rejected input violated.
enum class ErrorKind {
  NonHermitian,
  TraceDeviation,
  NegativeEigenvalue,
  DimensionMismatch,
  IncompleteProjectorSet,
  InvalidDistribution,
  InsufficientSamples,
  InvalidArgument,
  DegenerateSpectrum,
  ConvergenceFailure,
  Parse,
};

const char *error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Input data could not be parsed (malformed file, bad number).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string &what) : Error(ErrorKind::Parse, what) {}
};

/// A well-formed input violates a physical or mathematical invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The Lagrange-form paths need pairwise-distinct nonzero eigenvalues.
class DegenerateSpectrumError : public Error {
 public:
  explicit DegenerateSpectrumError(const std::string &what)
      : Error(ErrorKind::DegenerateSpectrum, what) {}
};

class ConvergenceError : public Error {
 public:
  explicit ConvergenceError(const std::string &what)
      : Error(ErrorKind::ConvergenceFailure, what) {}
};

inline const char *error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonHermitian: return "NonHermitian";
    case ErrorKind::TraceDeviation: return "TraceDeviation";
    case ErrorKind::NegativeEigenvalue: return "NegativeEigenvalue";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::IncompleteProjectorSet: return "IncompleteProjectorSet";
    case ErrorKind::InvalidDistribution: return "InvalidDistribution";
    case ErrorKind::InsufficientSamples: return "InsufficientSamples";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace qent
