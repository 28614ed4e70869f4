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

#include "qent/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <json.hpp>

#include "qent/errors.hpp"

namespace qent::io {
namespace {

std::string shortest(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

double parse_real(std::string_view token) {
  double v = 0.0;
  const char *first = token.data();
  const char *last = token.data() + token.size();
  if (!token.empty() && token.front() == '+') ++first;
  auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last) {
    throw ParseError("not a real number: '" + std::string(token) + "'");
  }
  return v;
}

}  // namespace

std::string slurp(const std::string &path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

Eigen::MatrixXcd parse_density_matrix(const std::string &text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(std::string("matrix file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("matrix file must hold a JSON object");
  if (j.contains("format") && j["format"] != kMatrixFormat) {
    throw ParseError("unknown matrix format tag");
  }
  if (j.contains("version") && j["version"] != kMatrixFormatVersion) {
    throw ParseError("unsupported matrix format version");
  }
  if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long>() < 1) {
    throw ParseError("field 'dim' must be a positive integer");
  }
  const long n = j["dim"].get<long>();
  if (!j.contains("matrix") || !j["matrix"].is_array()) throw ParseError("field 'matrix' must be an array");
  const auto &entries = j["matrix"];
  if (static_cast<long>(entries.size()) != n * n) {
    std::ostringstream msg;
    msg << "field 'matrix' has " << entries.size() << " entries, expected " << n * n;
    throw ParseError(msg.str());
  }
  Eigen::MatrixXcd m(n, n);
  for (long k = 0; k < n * n; ++k) {
    const auto &e = entries[k];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw ParseError("matrix entries must be [re, im] number pairs");
    }
    m(k / n, k % n) = Complex(e[0].get<double>(), e[1].get<double>());
  }
  return m;
}

Eigen::MatrixXcd read_density_matrix_file(const std::string &path) {
  return parse_density_matrix(slurp(path));
}

std::string format_density_matrix(const DensityMatrix &rho) {
  const Eigen::Index n = rho.dim();
  std::ostringstream os;
  os << "{\n  \"format\": \"" << kMatrixFormat << "\",\n  \"version\": " << kMatrixFormatVersion
     << ",\n  \"dim\": " << n << ",\n  \"matrix\": [";
  for (Eigen::Index i = 0; i < n; ++i) {
    os << "\n   ";
    for (Eigen::Index k = 0; k < n; ++k) {
      const Complex z = rho.matrix()(i, k);
      os << " [" << shortest(z.real()) << ", " << shortest(z.imag()) << "]";
      if (i + 1 < n || k + 1 < n) os << ",";
    }
  }
  os << "\n  ]\n}\n";
  return os.str();
}

std::vector<double> parse_spectrum(const std::string &text) {
  std::vector<double> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) out.push_back(parse_real(std::string_view(text).substr(i, j - i)));
    i = j;
  }
  if (out.empty()) throw ParseError("spectrum is empty");
  return out;
}

std::vector<double> read_spectrum_file(const std::string &path) { return parse_spectrum(slurp(path)); }

std::string format_spectrum(const Spectrum &spectrum) {
  std::string out;
  for (Eigen::Index k = 0; k < spectrum.dim(); ++k) {
    if (k) out += ' ';
    out += shortest(spectrum.values()(k));
  }
  out += '\n';
  return out;
}

std::string format_number(double x, int digits) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, digits);
  return std::string(buf, res.ptr);
}

void write_fig1_csv(std::ostream &os, const std::vector<Fig1Row> &rows, int digits) {
  os << "label,n,dim,s_h,s_f\n";
  for (const auto &r : rows) {
    os << mixture_name(r.label) << ',' << r.n << ',' << r.dim << ',' << format_number(r.s_h, digits) << ','
       << format_number(r.s_f, digits) << '\n';
  }
}

void write_inset_csv(std::ostream &os, const std::vector<InsetRow> &rows, int digits) {
  os << "dim,s0_exact,s0_asymptotic,gap,gap_bound,in_asymptotic_range\n";
  for (const auto &r : rows) {
    os << r.dim << ',' << format_number(r.s0_exact, digits) << ',' << format_number(r.s0_asymptotic, digits)
       << ',' << format_number(r.gap(), digits) << ',' << format_number(r.gap_bound(), digits) << ','
       << (r.in_asymptotic_range ? 1 : 0) << '\n';
  }
}

void write_density_csv(std::ostream &os, const DensityCurve &curve, int digits) {
  os << "s,p_s\n";
  for (std::size_t i = 0; i < curve.grid.size(); ++i) {
    os << format_number(curve.grid[i], digits) << ',' << format_number(curve.densities[i], digits) << '\n';
  }
}

void write_reports_csv(std::ostream &os, const std::vector<InequalityReport> &reports, int digits) {
  os << "id,family,asserted,trials,violations,worst_margin\n";
  for (const auto &r : reports) {
    os << inequality_name(r.id) << ',' << r.family << ',' << (r.asserted ? 1 : 0) << ',' << r.trials << ','
       << r.violations << ',' << format_number(r.worst_margin, digits) << '\n';
  }
}

void write_certificates(std::ostream &os, const std::vector<InequalityReport> &reports, int digits) {
  for (const auto &r : reports) {
    for (const auto &c : r.certificates) {
      os << "certificate id=" << inequality_name(c.id) << " family=" << c.family << " seed=" << c.seed
         << " stream=" << c.stream_id << " substream=" << c.substream << " dims=" << c.n << 'x' << c.m
         << " lhs=" << format_number(c.lhs, digits) << " rhs=" << format_number(c.rhs, digits)
         << " margin=" << format_number(c.margin, digits) << '\n';
    }
  }
}

}  // namespace qent::io
