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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "qent/constants.hpp"
#include "qent/entropy.hpp"
#include "qent/experiments.hpp"
#include "qent/haar_oracle.hpp"
#include "qent/io.hpp"
#include "qent/state.hpp"

namespace {

using namespace qent;
namespace fs = std::filesystem;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double time_limit;
  std::function<Outcome()> run;
};

std::string fmt(double x, int digits = 4) { return io::format_number(x, digits); }

Spectrum min_gap_dirichlet(Eigen::Index n, RngStream &rng, double min_gap) {
  for (;;) {
    Spectrum s = dirichlet_spectrum(n, rng);
    bool ok = true;
    for (Eigen::Index k = 1; k < n; ++k) ok = ok && s.values()(k - 1) - s.values()(k) >= min_gap;
    if (ok) return s;
  }
}

Outcome s0_asymptotics() {
  Outcome o;
  o.pass = s0_exact(2) == 0.5;
  double worst_ratio = 0.0;
  for (Eigen::Index n = 5; n <= 200; ++n) {
    const double gap = s0_exact(n) - s0_asymptotic(n);
    const double bound = 1.0 / (8.0 * static_cast<double>(n * n));
    if (!(gap > -bound && gap <= 0.0)) o.pass = false;
    worst_ratio = std::max(worst_ratio, -gap / bound);
  }
  o.detail = "S0(2) = " + fmt(s0_exact(2), 17) + ", max |gap| / (1/(8N^2)) = " + fmt(worst_ratio) + " over N = 5..200";
  return o;
}

Outcome uniform_confluent() {
  Outcome o;
  double worst = 0.0;
  for (Eigen::Index n = 2; n <= 20; ++n) {
    const double exact = std::log(static_cast<double>(n)) - s0_exact(n);
    worst = std::max(worst, std::abs(excess_entropy_divided_difference(uniform_mixture(n, n)) - exact));
  }
  o.pass = worst <= 1e-10;
  o.detail = "max |F_dd - (ln n - sum 1/k)| = " + fmt(worst, 3) + " for n = 2..20 (tol 1e-10)";
  return o;
}

Outcome oracle_agreement() {
  Outcome o;
  std::ostringstream d;
  for (Eigen::Index n : {2, 3, 4, 6}) {
    int agree = 0;
    double worst_z = 0.0;
    for (int i = 0; i < 20; ++i) {
      RngStream spec_rng(kDefaultSeed, 3000 + 100 * n + i);
      const Spectrum s = dirichlet_spectrum(n, spec_rng);
      const double exact = absolute_entropy(s, n).s_total;
      const McEstimate e = mc_entropy_estimate(diagonal_state(s), 200000, RngStream(kDefaultSeed, 30000 + 100 * n + i));
      const double z = std::abs(e.mean - exact) / e.std_error;
      worst_z = std::max(worst_z, z);
      if (z <= 4.0) ++agree;
    }
    if (agree < 19) o.pass = false;
    d << "N=" << n << ": " << agree << "/20 (max |z| " << fmt(worst_z, 3) << ")  ";
  }
  o.detail = d.str();
  return o;
}

Outcome path_equivalence() {
  Outcome o;
  double worst = 0.0;
  int compared = 0;
  for (int i = 0; i < 100; ++i) {
    RngStream rng(kDefaultSeed, 4000 + i);
    const Eigen::Index n = 2 + i % 7;
    const Spectrum s = dirichlet_spectrum(n, rng);
    if (!s.nonzero_values_distinct()) continue;
    ++compared;
    worst = std::max(worst, std::abs(absolute_entropy(s, n).s_total - entropy_by_quadrature(s, n)));
  }
  o.pass = worst <= 1e-8 && compared == 100;
  o.detail = "max |closed form - quadrature| = " + fmt(worst, 3) + " over " + std::to_string(compared) +
             " distinct flat-Dirichlet spectra, N = 2..8";
  return o;
}

Outcome lagrange_identities() {
  Outcome o;
  double worst_sum = 0.0, worst_moment = 0.0;
  for (int i = 0; i < 100; ++i) {
    RngStream rng(kDefaultSeed, 5000 + i);
    const Eigen::Index n = 2 + i % 9;
    const Spectrum s = min_gap_dirichlet(n, rng, 0.2 / static_cast<double>(n * n));
    const IdentityResiduals r = identity_residuals(s, rng.uniform());
    worst_sum = std::max(worst_sum, r.sum_rule);
    for (double m : r.moments) worst_moment = std::max(worst_moment, m);
  }
  o.pass = worst_sum <= 1e-10 && worst_moment <= 1e-9;
  o.detail = "max sum-rule residual " + fmt(worst_sum, 3) + " (tol 1e-10), max moment residual " +
             fmt(worst_moment, 3) + " (tol 1e-9), N = 2..10, min gap 0.2/N^2";
  return o;
}

Outcome universal_bound() {
  Outcome o;
  double max_f = 0.0;
  long below = 0;
  for (int i = 0; i < 10000; ++i) {
    RngStream rng(kDefaultSeed, 6000 + i);
    const double f = excess_entropy(dirichlet_spectrum(2 + i % 15, rng));
    if (f >= 0.0 && f < kExcessEntropyBound) ++below;
    max_f = std::max(max_f, f);
  }
  double max_near_uniform = 0.0;
  bool near_below = true;
  for (int i = 0; i < 20; ++i) {
    RngStream rng(kDefaultSeed, 60000 + i);
    const Eigen::Index n = i % 2 == 0 ? 32 : 64;
    const double f = excess_entropy(dirichlet_spectrum(n, rng, 1000.0));
    near_below = near_below && f < kExcessEntropyBound;
    max_near_uniform = std::max(max_near_uniform, f);
  }
  o.pass = below == 10000 && near_below && max_near_uniform > 0.40;
  o.detail = std::to_string(below) + "/10000 Dirichlet spectra (N = 2..16) in [0, 1-gamma), max " + fmt(max_f, 6) +
             " (uniform N=16 ceiling " + fmt(std::log(16.0) - s0_exact(16), 6) +
             "); near-uniform n in {32, 64}: max " + fmt(max_near_uniform, 6) + " > 0.40, bound " +
             fmt(kExcessEntropyBound, 10);
  return o;
}

Outcome fig1_reproduction() {
  Outcome o;
  const ExperimentConfig cfg;
  const auto long_curve = fig1_uniform_curve(1000);
  bool monotone = true;
  for (std::size_t i = 1; i < long_curve.size(); ++i) {
    monotone = monotone && long_curve[i].s_h > long_curve[i - 1].s_h && long_curve[i].s_f > long_curve[i - 1].s_f &&
               long_curve[i].s_f < kExcessEntropyBound;
  }
  const auto curve = fig1_uniform_curve(cfg.fig1_dim);
  const auto rows = fig1_random_mixtures(cfg.fig1_dim, cfg.fig1_random_count, RngStream(kDefaultSeed));
  const EnvelopeSummary env = fig1_envelope(curve, rows, cfg.fig1_envelope);
  bool inset_ok = false;
  const auto inset = fig1_inset(cfg.inset_max_dim);
  inset_ok = inset[1].s0_exact == 0.5;
  for (const auto &r : inset) {
    if (r.dim >= 5) {
      inset_ok = inset_ok && r.gap() <= 0.0 && r.gap() > -r.gap_bound();
    }
  }
  o.pass = monotone && env.outside == 0 && inset_ok;
  o.detail = std::string("uniform curve ") + (monotone ? "monotone" : "NOT monotone") + " to n = 1000; " +
             std::to_string(rows.size()) + " mixtures at N = " + std::to_string(cfg.fig1_dim) +
             ", max deviation " + fmt(env.max_deviation, 5) + " (envelope " + fmt(cfg.fig1_envelope) + ", " +
             std::to_string(env.outside) + " outside); inset " + (inset_ok ? "matches" : "does NOT match") +
             " criterion 1";
  return o;
}

Outcome inequality_suites() {
  Outcome o;
  const std::vector<std::pair<Eigen::Index, Eigen::Index>> dims = {{2, 2}, {2, 3}, {3, 3}};
  auto reports = inequality_suite(1000, dims, RngStream(kDefaultSeed, 8), 1, {InequalityId::Ei1, InequalityId::Ei2});
  reports.push_back(ei3a_grid(8));
  reports.push_back(harmonic_chain_check(8));
  std::ostringstream d;
  for (const auto &r : reports) {
    if (r.asserted && r.violations > 0) o.pass = false;
    d << inequality_name(r.id) << "/" << r.family << " " << r.violations << "/" << r.trials << "  ";
  }
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4);
  psi(1) = 1.0 / std::numbers::sqrt2;
  psi(2) = -1.0 / std::numbers::sqrt2;
  const DensityMatrix singlet = PureState::from_amplitudes(psi).density();
  const double s_sigma = entropy_report(partial_trace(singlet, {2, 2}, Subsystem::A)).s_total;
  const double s_rho = entropy_report(singlet).s_total;
  const bool singlet_ok = std::abs(s_sigma - std::numbers::ln2) <= 1e-12 && std::abs(s_rho - 13.0 / 12.0) <= 1e-12 &&
                          s_sigma < s_rho;
  o.pass = o.pass && singlet_ok;
  d << "singlet S[sigma] = " << fmt(s_sigma, 10) << " < S[rho] = " << fmt(s_rho, 10);
  o.detail = "violations: " + d.str();
  return o;
}

Outcome exploratory_scans() {
  Outcome o;
  const std::vector<std::pair<Eigen::Index, Eigen::Index>> dims = {{2, 2}, {2, 3}, {3, 3}};
  auto reports = inequality_suite(10000, dims, RngStream(kDefaultSeed, 9), 1, {InequalityId::Ei3});
  for (Eigen::Index n : {2, 3, 4}) {
    auto r = measurement_conjecture_scan(10000, n, RngStream(kDefaultSeed, 90 + n));
    r.family += "-n" + std::to_string(n);
    reports.push_back(std::move(r));
  }
  std::ostringstream d;
  long certificates = 0;
  bool reverified = true;
  for (const auto &r : reports) {
    d << inequality_name(r.id) << "/" << r.family;
    d << " " << r.violations << "/" << r.trials << " worst " << fmt(r.worst_margin, 3) << "  ";
    for (const auto &c : r.certificates) {
      ++certificates;
      reverified = reverified && reverify(c) == c.margin;
    }
  }
  Certificate synthetic;
  synthetic.id = InequalityId::MeasurementMonotonicity;
  synthetic.family = "hs-random";
  synthetic.seed = kDefaultSeed;
  synthetic.stream_id = 93;
  synthetic.substream = 17;
  synthetic.n = 3;
  RngStream trial(kDefaultSeed, 93, 17);
  const DensityMatrix rho = random_density_matrix(3, trial);
  const DensityMatrix sigma = projective_update(rho, rank_one_projectors(haar_unitary(3, trial)));
  const double direct = entropy_report(sigma).s_total - entropy_report(rho).s_total;
  reverified = reverified && reverify(synthetic) == direct;
  o.pass = reverified && !reports.empty();
  o.detail = "report only: " + d.str() + "; " + std::to_string(certificates) + " certificates plus one synthesized, " +
             (reverified ? "all re-verify" : "re-verification FAILED");
  return o;
}

std::string run_cli(const std::string &args) {
  const std::string cmd = std::string(QENT_CLI_PATH) + " " + args + " 2>&1";
  FILE *pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  out += "\nexit=" + std::to_string(WIFEXITED(status) ? WEXITSTATUS(status) : -1);
  return out;
}

std::string slurp_or_empty(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

Outcome cli_determinism() {
  Outcome o;
  const fs::path dir = fs::temp_directory_path() / "qent_acceptance";
  fs::create_directories(dir);
  const std::string spec = (dir / "spectrum.txt").string();
  std::ofstream(spec) << "0.5 0.3 0.2\n";
  const std::string degen = (dir / "degenerate.txt").string();
  std::ofstream(degen) << "0.4 0.3 0.3\n";
  const std::string matrix = (dir / "rho.json").string();
  run_cli("random-state --dim 3 --output " + matrix);

  const std::vector<std::string> commands = {
      "entropy --spectrum " + spec,
      "entropy --input " + matrix + " --format csv --bits",
      "mc --spectrum " + spec + " --samples 50000",
      "mc --input " + matrix + " --samples 20000 --mode basis",
      "pdensity --spectrum " + spec + " --grid 201",
      "pdensity --spectrum " + spec + " --bins 25 --samples 50000",
      "pdensity --spectrum " + degen + " --perturb 1e-6 --grid 101",
      "fig1",
      "inset",
      "check --trials 200",
      "random-state --dim 4",
      "random-state --dim 4 --kind pure",
      "perturb --spectrum " + degen + " --perturb 1e-6",
  };
  int identical = 0;
  std::string failed;
  for (const auto &cmd : commands) {
    bool same = true;
    std::string reference;
    std::string reference_file;
    for (int run = 0; run < 3; ++run) {
      const std::string workers = run == 2 ? " --workers 4" : " --workers 1";
      const fs::path out_file = dir / ("out" + std::to_string(run));
      fs::remove(out_file);
      const std::string stdout_text = run_cli(cmd + workers);
      run_cli(cmd + workers + " --output " + out_file.string());
      const std::string file_text = slurp_or_empty(out_file);
      if (run == 0) {
        reference = stdout_text;
        reference_file = file_text;
      } else {
        same = same && stdout_text == reference && file_text == reference_file;
      }
    }
    if (same) {
      ++identical;
    } else {
      failed += " [" + cmd + "]";
    }
  }
  fs::remove_all(dir);
  o.pass = identical == static_cast<int>(commands.size());
  o.detail = std::to_string(identical) + "/" + std::to_string(commands.size()) +
             " commands byte-identical across reruns and --workers 1/4 (stdout and --output files)" + failed;
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "minimum-uncertainty entropy", 1.0, s0_asymptotics},
      {2, "uniform-mixture closed form", 1.0, uniform_confluent},
      {3, "Monte-Carlo oracle agreement", 120.0, oracle_agreement},
      {4, "closed form vs quadrature", 10.0, path_equivalence},
      {5, "Lagrange-weight identities", 5.0, lagrange_identities},
      {6, "universal bound on S_F", 30.0, universal_bound},
      {7, "fig1 scatter and inset", 30.0, fig1_reproduction},
      {8, "inequality suites", 120.0, inequality_suites},
      {9, "exploratory scans", 600.0, exploratory_scans},
      {10, "CLI determinism", 600.0, cli_determinism},
  };
  int failures = 0;
  for (const auto &c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.time_limit;
    const bool pass = o.pass && in_time;
    if (!pass) ++failures;
    std::cout << "criterion " << c.id << ": " << (pass ? "PASS" : "FAIL") << "  " << c.title << "  " << o.detail
              << "  [" << fmt(seconds, 3) << " s, limit " << fmt(c.time_limit) << " s"
              << (in_time ? "" : ", TOO SLOW") << "]" << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria PASS" : std::to_string(failures) + " criteria FAIL") << std::endl;
  return failures == 0 ? 0 : 1;
}
