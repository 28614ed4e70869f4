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

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "qent/rng.hpp"
#include "qent/state.hpp"

namespace qent {

/// Defaults for the fig1 and inset experiments.
struct ExperimentConfig {
  Eigen::Index fig1_dim = 8;
  long fig1_random_count = 500;
  /// Regression bound on |s_f - uniform_curve(s_h)| for random mixtures,
  /// fixed from the first recorded run.
  double fig1_envelope = 0.05;
  Eigen::Index inset_max_dim = 50;
};

enum class MixtureKind { Uniform, RandomMixture };

std::string_view mixture_name(MixtureKind k);

struct Fig1Row {
  double s_h = 0.0;
  double s_f = 0.0;
  MixtureKind label = MixtureKind::Uniform;
  /// Mixture size for uniform rows, nonzero-eigenvalue count otherwise.
  Eigen::Index n = 0;
  Eigen::Index dim = 0;
};

/// Uniform mixtures n = 1..max_n: (ln n, ln n - sum_{k=2}^n 1/k), dim = max_n.
std::vector<Fig1Row> fig1_uniform_curve(Eigen::Index max_n);

/// `count` flat-Dirichlet spectra in dimension `dim`; row i draws from
/// stream (rng.seed(), rng.stream_id() + i).
std::vector<Fig1Row> fig1_random_mixtures(Eigen::Index dim, long count, const RngStream &rng,
                                          unsigned workers = 1);

/// Piecewise-linear interpolation of the uniform curve at s_h, clamped to
/// the curve's last point beyond its range.
double uniform_curve_at(const std::vector<Fig1Row> &curve, double s_h);

struct EnvelopeSummary {
  double max_deviation = 0.0;
  long outside = 0;
};

EnvelopeSummary fig1_envelope(const std::vector<Fig1Row> &curve, const std::vector<Fig1Row> &rows,
                              double tolerance);

struct InsetRow {
  Eigen::Index dim = 0;
  double s0_exact = 0.0;
  double s0_asymptotic = 0.0;
  /// False for N = 1, where the expansion is not meaningful.
  bool in_asymptotic_range = true;

  double gap() const { return s0_exact - s0_asymptotic; }
  double gap_bound() const { return 1.0 / (8.0 * static_cast<double>(dim * dim)); }
};

std::vector<InsetRow> fig1_inset(Eigen::Index max_dim);

enum class InequalityId { Ei1, Ei2, Ei3, Ei3a, MeasurementMonotonicity };

std::string_view inequality_name(InequalityId id);

/// Everything needed to regenerate and re-check one violating trial.
struct Certificate {
  InequalityId id = InequalityId::Ei1;
  std::string family;
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;
  std::uint32_t substream = 0;
  Eigen::Index n = 0;
  Eigen::Index m = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  /// Positive when the inequality holds.
  double margin = 0.0;
  std::vector<Eigen::MatrixXcd> inputs;
};

struct InequalityReport {
  InequalityId id = InequalityId::Ei1;
  /// Input ensemble, e.g. "hs-random", "hs-product", "correlated", "grid".
  std::string family;
  /// Asserted reports must show zero violations; the rest are exploratory.
  bool asserted = true;
  long trials = 0;
  long violations = 0;
  double worst_margin = 0.0;
  std::vector<Certificate> certificates;
};

/// Random-ensemble inequality checks over each (N, M) in `dims`:
///   ei1  S[sigma] < S[rho] for Hilbert-Schmidt rho and both reductions
///   ei2  S[rho] >= S[A] + S[B] for Hilbert-Schmidt product states
///   ei3  S_F subadditivity on product states (reported), on uniform
///        product mixtures (asserted) and on correlated states (reported)
///   ei3a S0(NM) > S0(N) + S0(M)
/// A trial with margin < -1e-9 is a violation and gets a certificate.
/// `ids` restricts the run to the listed inequalities (empty means all of
/// ei1, ei2, ei3, ei3a).
std::vector<InequalityReport> inequality_suite(long trials,
                                               const std::vector<std::pair<Eigen::Index, Eigen::Index>> &dims,
                                               const RngStream &rng, unsigned workers = 1,
                                               const std::vector<InequalityId> &ids = {});

/// S0(NM) - S0(N) - S0(M) over every 2 <= N, M <= max_dim.
InequalityReport ei3a_grid(Eigen::Index max_dim);

/// The harmonic-sum inequality behind ei2,
///   sum_{k=nm+1}^{NM} 1/k >= sum_{k=n+1}^N 1/k + sum_{k=m+1}^M 1/k,
/// strict unless (n, m) = (N, M), together with its regrouping identity,
/// over all 2 <= n <= N <= max_dim, 2 <= m <= M <= max_dim.
InequalityReport harmonic_chain_check(Eigen::Index max_dim);

/// S[sum_i P_i rho P_i] >= S[rho] for Hilbert-Schmidt rho and Haar rank-one
/// projector sets. Exploratory: never asserted.
InequalityReport measurement_conjecture_scan(long trials, Eigen::Index dim, const RngStream &rng,
                                             unsigned workers = 1);

/// Regenerates the certified trial from its seed and returns the margin.
double reverify(const Certificate &certificate);

}  // namespace qent
