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

#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "qent/entropy.hpp"
#include "qent/experiments.hpp"
#include "qent/haar_oracle.hpp"
#include "qent/state.hpp"

namespace qent::io {

/// Density-matrix file, version 1:
///
///   {"format": "qent.density-matrix", "version": 1, "dim": N,
///    "matrix": [[re, im], ...]}
///
/// `matrix` holds N*N [re, im] pairs in row-major order. `format` and
/// `version` are optional on input; when present they must match.
inline constexpr const char *kMatrixFormat = "qent.density-matrix";
inline constexpr int kMatrixFormatVersion = 1;

/// Parses the raw matrix; throws ParseError on malformed input. The result
/// still has to go through validate_density.
Eigen::MatrixXcd parse_density_matrix(const std::string &text);
Eigen::MatrixXcd read_density_matrix_file(const std::string &path);

/// Shortest round-trip decimal for every entry.
std::string format_density_matrix(const DensityMatrix &rho);

/// Whitespace-separated reals; throws ParseError on anything else.
std::vector<double> parse_spectrum(const std::string &text);
std::vector<double> read_spectrum_file(const std::string &path);

std::string format_spectrum(const Spectrum &spectrum);

/// Locale-independent formatting with `digits` significant digits.
std::string format_number(double x, int digits);

/// Reads a whole file ("-" is stdin); throws ParseError if unreadable.
std::string slurp(const std::string &path);

void write_fig1_csv(std::ostream &os, const std::vector<Fig1Row> &rows, int digits);
void write_inset_csv(std::ostream &os, const std::vector<InsetRow> &rows, int digits);
void write_density_csv(std::ostream &os, const DensityCurve &curve, int digits);
void write_reports_csv(std::ostream &os, const std::vector<InequalityReport> &reports, int digits);
void write_certificates(std::ostream &os, const std::vector<InequalityReport> &reports, int digits);

}  // namespace qent::io
