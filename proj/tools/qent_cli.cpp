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

// qent: command-line front end for the entropy library.
//
// Exit codes: 0 success, 1 internal failure, 2 parse error, 3 validation
// error, 4 asserted inequality violated, 5 degenerate spectrum.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qent/constants.hpp"
#include "qent/entropy.hpp"
#include "qent/errors.hpp"
#include "qent/experiments.hpp"
#include "qent/haar_oracle.hpp"
#include "qent/io.hpp"
#include "qent/state.hpp"

namespace {

using namespace qent;

constexpr int kExitInternal = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitViolation = 4;
constexpr int kExitDegenerate = 5;

struct Options {
  std::string input;
  std::string spectrum;
  long dim = 0;
  long samples = 100000;
  int bins = 0;
  std::string seed;
  unsigned workers = 1;
  int precision = 12;
  std::string format;
  bool bits = false;
  double perturb = 0.0;
  std::string mode = "sphere";
  long grid = 1001;
  long trials = 1000;
  long count = 0;
  std::string ids = "ei1,ei2,ei3,ei3a,measurement";
  std::string dims = "2x2,2x3,3x3";
  std::string scan_dims = "2,3,4";
  std::string kind = "hs";
  std::string output;
  bool nondeterministic = false;
};

std::uint64_t parse_seed(const std::string &text, const char *what) {
  errno = 0;
  char *end = nullptr;
  const unsigned long long v = std::strtoull(text.c_str(), &end, 0);
  if (text.empty() || *end != '\0' || errno == ERANGE || text.front() == '-') {
    throw ParseError(std::string(what) + " is not an unsigned 64-bit integer: '" + text + "'");
  }
  return v;
}

/// --seed, then QENT_SEED, then machine entropy (only with
/// --nondeterministic), then the documented default.
std::uint64_t resolve_seed(const Options &o) {
  if (!o.seed.empty()) return parse_seed(o.seed, "--seed");
  if (const char *env = std::getenv("QENT_SEED"); env && *env) return parse_seed(env, "QENT_SEED");
  if (o.nondeterministic) {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) | rd();
  }
  return kDefaultSeed;
}

std::string num(double x, const Options &o) { return io::format_number(x, o.precision); }

double unit(double nats, const Options &o) { return o.bits ? nats / std::numbers::ln2 : nats; }

const char *unit_name(const Options &o) { return o.bits ? "bits" : "nats"; }

bool text_format(const Options &o, bool table_command) {
  if (o.format.empty()) return !table_command;
  return o.format == "text";
}

/// Writes to --output when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string &path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw ParseError("cannot write '" + path + "'");
    }
  }
  std::ostream &out() { return file_.is_open() ? static_cast<std::ostream &>(file_) : std::cout; }
  /// Summary goes to stdout when data goes to a file, stderr otherwise.
  std::ostream &summary() { return file_.is_open() ? std::cout : std::cerr; }

 private:
  std::ofstream file_;
};

/// Re-renders a CSV table as space-aligned columns.
void write_aligned(std::ostream &os, const std::string &csv) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(csv);
  std::string line;
  std::vector<std::size_t> width;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], cells[c].size());
    }
    rows.push_back(std::move(cells));
  }
  for (const auto &r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      os << r[c];
      if (c + 1 < r.size()) os << std::string(width[c] - r[c].size() + 2, ' ');
    }
    os << '\n';
  }
}

void emit_table(Sink &sink, const Options &o, const std::string &csv) {
  if (text_format(o, true)) {
    write_aligned(sink.out(), csv);
  } else {
    sink.out() << csv;
  }
}

/// Either a full density matrix (--input) or a spectrum (--spectrum).
struct Loaded {
  std::optional<DensityMatrix> rho;
  Spectrum spectrum;
  Eigen::Index dim;
};

Loaded load_state(const Options &o) {
  if (o.input.empty() == o.spectrum.empty()) {
    throw ParseError("give exactly one of --input (matrix file) or --spectrum (spectrum file)");
  }
  if (!o.input.empty()) {
    DensityMatrix rho = validate_density(io::read_density_matrix_file(o.input));
    Spectrum s = eig_hermitian(rho).spectrum;
    if (o.dim != 0 && o.dim != rho.dim()) {
      throw ValidationError(ErrorKind::DimensionMismatch, "--dim differs from the matrix dimension");
    }
    const Eigen::Index n = rho.dim();
    return {std::move(rho), std::move(s), n};
  }
  Spectrum s = Spectrum::from_values(io::read_spectrum_file(o.spectrum));
  const Eigen::Index n = o.dim == 0 ? s.dim() : o.dim;
  if (n < s.dim()) throw ValidationError(ErrorKind::DimensionMismatch, "--dim is smaller than the spectrum");
  if (n > s.dim()) s = s.padded(n);
  if (o.perturb > 0.0) s = perturb_spectrum(s, o.perturb);
  return {std::nullopt, std::move(s), n};
}

int cmd_entropy(const Options &o) {
  const Loaded st = load_state(o);
  const EntropyReport r = absolute_entropy(st.spectrum, st.dim);
  Sink sink(o.output);
  if (text_format(o, false)) {
    auto &os = sink.out();
    os << "dim     " << r.dim << '\n';
    os << "S_H     " << num(unit(r.s_h, o), o) << '\n';
    os << "S0      " << num(unit(r.s0, o), o) << '\n';
    os << "S_F     " << num(unit(r.s_f, o), o) << '\n';
    os << "S       " << num(unit(r.s_total, o), o) << '\n';
    os << "method  " << method_name(r.method) << '\n';
    os << "units   " << unit_name(o) << '\n';
  } else {
    sink.out() << "dim,s_h,s0,s_f,s_total,method,units\n"
               << r.dim << ',' << num(unit(r.s_h, o), o) << ',' << num(unit(r.s0, o), o) << ','
               << num(unit(r.s_f, o), o) << ',' << num(unit(r.s_total, o), o) << ',' << method_name(r.method)
               << ',' << unit_name(o) << '\n';
  }
  return 0;
}

int cmd_mc(const Options &o, std::uint64_t seed) {
  const Loaded st = load_state(o);
  const DensityMatrix rho = st.rho ? *st.rho : diagonal_state(st.spectrum);
  const McMode mode = o.mode == "basis" ? McMode::Basis : McMode::Sphere;
  const McEstimate e = mc_entropy_estimate(rho, o.samples, RngStream(seed), mode, o.workers);
  const double exact = absolute_entropy(st.spectrum, st.dim).s_total;
  // Zero-variance estimates still carry rounding noise in the mean.
  const double scale = std::max(e.std_error, 1e-12 * std::max(1.0, std::abs(exact)));
  const double z = (e.mean - exact) / scale;
  Sink sink(o.output);
  if (text_format(o, false)) {
    auto &os = sink.out();
    os << "mode         " << o.mode << '\n';
    os << "samples      " << e.samples << '\n';
    os << "seed         " << e.seed << '\n';
    os << "mean         " << num(unit(e.mean, o), o) << '\n';
    os << "stderr       " << num(unit(e.std_error, o), o) << '\n';
    os << "closed_form  " << num(unit(exact, o), o) << '\n';
    os << "z            " << io::format_number(z, 4) << '\n';
    os << "units        " << unit_name(o) << '\n';
  } else {
    sink.out() << "mode,samples,seed,mean,stderr,closed_form,z,units\n"
               << o.mode << ',' << e.samples << ',' << e.seed << ',' << num(unit(e.mean, o), o) << ','
               << num(unit(e.std_error, o), o) << ',' << num(unit(exact, o), o) << ',' << io::format_number(z, 4)
               << ',' << unit_name(o) << '\n';
  }
  return 0;
}

int cmd_pdensity(const Options &o, std::uint64_t seed) {
  const Loaded st = load_state(o);
  Sink sink(o.output);
  std::ostringstream csv;
  if (o.bins > 0) {
    const Histogram h = mc_density_histogram(st.spectrum, st.dim, o.samples, o.bins, RngStream(seed), o.workers);
    csv << "s_lo,s_hi,mc_density,mc_stderr\n";
    for (Eigen::Index b = 0; b < h.bins(); ++b) {
      csv << num(h.edges[b], o) << ',' << num(h.edges[b + 1], o) << ',' << num(h.densities[b], o) << ','
          << num(h.density_std_error(b), o) << '\n';
    }
    sink.summary() << "histogram: " << h.samples << " samples, " << h.bins() << " bins, seed " << seed << '\n';
  } else {
    if (o.grid < 2) throw ValidationError(ErrorKind::InvalidArgument, "--grid must be >= 2");
    io::write_density_csv(csv, density_curve(st.spectrum, st.dim, static_cast<std::size_t>(o.grid)), o.precision);
  }
  emit_table(sink, o, csv.str());
  return 0;
}

int cmd_fig1(const Options &o, std::uint64_t seed) {
  ExperimentConfig cfg;
  const Eigen::Index dim = o.dim == 0 ? cfg.fig1_dim : o.dim;
  const long count = o.count == 0 ? cfg.fig1_random_count : o.count;
  const auto curve = fig1_uniform_curve(dim);
  const auto rows = fig1_random_mixtures(dim, count, RngStream(seed), o.workers);
  std::vector<Fig1Row> all = curve;
  all.insert(all.end(), rows.begin(), rows.end());
  if (o.bits) {
    for (auto &r : all) {
      r.s_h = unit(r.s_h, o);
      r.s_f = unit(r.s_f, o);
    }
  }
  Sink sink(o.output);
  std::ostringstream csv;
  io::write_fig1_csv(csv, all, o.precision);
  emit_table(sink, o, csv.str());
  const EnvelopeSummary env = fig1_envelope(curve, rows, cfg.fig1_envelope);
  double max_sf = 0.0;
  for (const auto &r : rows) max_sf = std::max(max_sf, r.s_f);
  sink.summary() << "fig1: dim " << dim << ", " << count << " random mixtures, seed " << seed << '\n'
                 << "max |s_f - curve(s_h)| = " << io::format_number(env.max_deviation, 6) << " (bound "
                 << cfg.fig1_envelope << ", " << env.outside << " outside)\n"
                 << "max s_f = " << io::format_number(max_sf, 6) << " < 1 - gamma = "
                 << io::format_number(kExcessEntropyBound, 10) << '\n';
  return 0;
}

int cmd_inset(const Options &o) {
  ExperimentConfig cfg;
  const Eigen::Index max_dim = o.dim == 0 ? cfg.inset_max_dim : o.dim;
  auto rows = fig1_inset(max_dim);
  Sink sink(o.output);
  std::ostringstream csv;
  io::write_inset_csv(csv, rows, o.precision);
  emit_table(sink, o, csv.str());
  return 0;
}

std::vector<std::string> split(const std::string &s, char sep) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

long parse_long(const std::string &s, const char *what) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception &) {
    pos = 0;
  }
  if (pos != s.size() || s.empty()) throw ParseError(std::string("bad ") + what + ": '" + s + "'");
  return v;
}

int cmd_check(const Options &o, std::uint64_t seed) {
  const std::set<std::string> known = {"ei1", "ei2", "ei3", "ei3a", "measurement"};
  std::set<std::string> ids;
  for (const auto &id : split(o.ids, ',')) {
    if (!known.contains(id)) throw ParseError("unknown inequality id '" + id + "'");
    ids.insert(id);
  }
  std::vector<std::pair<Eigen::Index, Eigen::Index>> dims;
  for (const auto &d : split(o.dims, ',')) {
    const auto parts = split(d, 'x');
    if (parts.size() != 2) throw ParseError("--dims entries look like NxM, got '" + d + "'");
    dims.emplace_back(parse_long(parts[0], "--dims"), parse_long(parts[1], "--dims"));
  }
  if (o.trials < 1) throw ValidationError(ErrorKind::InvalidArgument, "--trials must be >= 1");

  const RngStream rng(seed);
  std::vector<InequalityReport> reports;
  std::vector<InequalityId> suite_ids;
  for (InequalityId id : {InequalityId::Ei1, InequalityId::Ei2, InequalityId::Ei3, InequalityId::Ei3a}) {
    if (ids.contains(std::string(inequality_name(id)))) suite_ids.push_back(id);
  }
  if (!suite_ids.empty()) reports = inequality_suite(o.trials, dims, rng, o.workers, suite_ids);
  if (ids.contains("ei2")) reports.push_back(harmonic_chain_check(8));
  if (ids.contains("ei3a")) reports.push_back(ei3a_grid(8));
  if (ids.contains("measurement")) {
    for (const auto &d : split(o.scan_dims, ',')) {
      const long n = parse_long(d, "--scan-dims");
      auto r = measurement_conjecture_scan(o.trials, n, rng.with_stream(static_cast<std::uint64_t>(n)), o.workers);
      r.family += "-n" + std::to_string(n);
      reports.push_back(std::move(r));
    }
  }

  Sink sink(o.output);
  std::ostringstream csv;
  io::write_reports_csv(csv, reports, o.precision);
  emit_table(sink, o, csv.str());

  bool failed = false;
  long certificates = 0;
  for (const auto &r : reports) {
    if (r.asserted && r.violations > 0) failed = true;
    certificates += static_cast<long>(r.certificates.size());
  }
  auto &sum = sink.summary();
  sum << "check: seed " << seed << ", " << o.trials << " trials per family and dims, " << reports.size()
      << " reports, " << certificates << " certificates\n";
  io::write_certificates(sum, reports, 17);
  sum << (failed ? "asserted inequality violated\n" : "all asserted inequalities hold\n");
  return failed ? kExitViolation : 0;
}

int cmd_random_state(const Options &o, std::uint64_t seed) {
  if (o.dim < 1) throw ValidationError(ErrorKind::InvalidArgument, "random-state needs --dim >= 1");
  RngStream rng(seed);
  const DensityMatrix rho = o.kind == "pure" ? random_pure_state(o.dim, rng).density()
                                             : random_density_matrix(o.dim, rng);
  Sink sink(o.output);
  sink.out() << io::format_density_matrix(rho);
  return 0;
}

int cmd_perturb(const Options &o) {
  if (o.perturb <= 0.0) throw ValidationError(ErrorKind::InvalidArgument, "perturb needs --perturb epsilon > 0");
  const Loaded st = load_state(o);
  Sink sink(o.output);
  sink.out() << io::format_spectrum(st.spectrum);
  return 0;
}

void add_state_options(CLI::App *cmd, Options &o) {
  cmd->add_option("--input", o.input, "Density-matrix JSON file ('-' for stdin)");
  cmd->add_option("--spectrum", o.spectrum, "Spectrum file of whitespace-separated reals ('-' for stdin)");
  cmd->add_option("--dim", o.dim, "Hilbert-space dimension (pads a spectrum with zeros)")->check(CLI::NonNegativeNumber);
  cmd->add_option("--perturb", o.perturb, "Spread degenerate clusters by relative epsilon")
      ->check(CLI::NonNegativeNumber);
}

void add_common_options(CLI::App *cmd, Options &o) {
  cmd->add_option("--seed", o.seed, "RNG seed (decimal or 0x hex); overrides QENT_SEED");
  cmd->add_option("--workers", o.workers, "Worker threads; results do not depend on it")->check(CLI::PositiveNumber);
  cmd->add_option("--precision", o.precision, "Significant digits in output")->check(CLI::Range(1, 17));
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "text"}));
  cmd->add_flag("--bits", o.bits, "Report entropies in bits instead of nats");
  cmd->add_option("--output", o.output, "Write data to this file instead of stdout");
  cmd->add_flag("--nondeterministic", o.nondeterministic, "Seed from machine entropy when no seed is given");
}

int run(int argc, char **argv) {
  Options o;
  CLI::App app{"Basis-averaged information entropy of quantum states"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "qent 1.0.0");

  auto *entropy = app.add_subcommand("entropy", "S_H, S0(N), S_F and S for a state");
  auto *mc = app.add_subcommand("mc", "Monte-Carlo estimate of S with z-score against the closed form");
  auto *pdensity = app.add_subcommand("pdensity", "Density P(s) on a grid, or an MC histogram with --bins");
  auto *fig1 = app.add_subcommand("fig1", "S_F vs S_H for uniform and random mixtures");
  auto *inset = app.add_subcommand("inset", "S0(N) exact vs asymptotic");
  auto *check = app.add_subcommand("check", "Inequality suites and the measurement scan");
  auto *random_state = app.add_subcommand("random-state", "Write a random density matrix");
  auto *perturb = app.add_subcommand("perturb", "Spread degenerate eigenvalue clusters");

  for (auto *cmd : {entropy, mc, pdensity, fig1, inset, check, random_state, perturb}) add_common_options(cmd, o);
  for (auto *cmd : {entropy, mc, pdensity, perturb}) add_state_options(cmd, o);

  for (auto *cmd : {mc, pdensity}) {
    cmd->add_option("--samples", o.samples, "Monte-Carlo samples")->capture_default_str();
  }
  mc->add_option("--mode", o.mode, "Sampling mode")->check(CLI::IsMember({"sphere", "basis"}));
  pdensity->add_option("--grid", o.grid, "Grid points on [0, 1]");
  pdensity->add_option("--bins", o.bins, "Histogram bins (switches to Monte Carlo)")->check(CLI::Range(10, 100000));

  fig1->add_option("--dim", o.dim, "Dimension of the random mixtures")->check(CLI::Range(2, 200));
  fig1->add_option("--count", o.count, "Number of random mixtures")->check(CLI::PositiveNumber);
  inset->add_option("--dim", o.dim, "Largest dimension")->check(CLI::Range(2, 100000));

  check->add_option("--ids", o.ids, "Comma-separated: ei1,ei2,ei3,ei3a,measurement");
  check->add_option("--trials", o.trials, "Random trials per family and dims pair");
  check->add_option("--dims", o.dims, "Comma-separated NxM pairs");
  check->add_option("--scan-dims", o.scan_dims, "Dimensions for the measurement scan");

  random_state->add_option("--dim", o.dim, "Dimension")->required()->check(CLI::Range(1, 200));
  random_state->add_option("--kind", o.kind, "Ensemble")->check(CLI::IsMember({"hs", "pure"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitParse;
  }

  if (o.samples < 100 && (mc->parsed() || (pdensity->parsed() && o.bins > 0))) {
    throw ValidationError(ErrorKind::InsufficientSamples, "--samples must be >= 100");
  }

  const std::uint64_t seed = resolve_seed(o);
  if (entropy->parsed()) return cmd_entropy(o);
  if (mc->parsed()) return cmd_mc(o, seed);
  if (pdensity->parsed()) return cmd_pdensity(o, seed);
  if (fig1->parsed()) return cmd_fig1(o, seed);
  if (inset->parsed()) return cmd_inset(o);
  if (check->parsed()) return cmd_check(o, seed);
  if (random_state->parsed()) return cmd_random_state(o, seed);
  return cmd_perturb(o);
}

}  // namespace

int main(int argc, char **argv) {
  try {
    return run(argc, argv);
  } catch (const qent::ParseError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const qent::DegenerateSpectrumError &e) {
    std::cerr << "error: " << e.what() << '\n'
              << "hint: rerun with --perturb EPSILON (e.g. 1e-6) or use the Monte-Carlo path "
                 "(`qent mc`, or `qent pdensity --bins`)\n";
    return kExitDegenerate;
  } catch (const qent::Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}
