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

#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "qent/divided_difference.hpp"
#include "qent/spectrum.hpp"
#include "qent/state.hpp"

namespace qent {

/// All entropies are in nats.

/// -sum p ln p with 0 ln 0 = 0. Throws ValidationError(InvalidDistribution)
/// for negative entries or a sum further than 1e-10 from one.
double shannon(std::span<const double> probs);
inline double shannon(const Eigen::VectorXd &probs) {
  return shannon(std::span<const double>(probs.data(), static_cast<std::size_t>(probs.size())));
}

double von_neumann(const DensityMatrix &rho);

/// Shannon entropy of the outcome distribution <a|rho|a> in `basis`.
double conditional_entropy(const DensityMatrix &rho, const MeasurementBasis &basis);

/// Minimum uncertainty entropy S0(N) = sum_{k=2}^N 1/k (compensated).
double s0_exact(Eigen::Index dim);

/// ln N - (1 - gamma) + 1/(2N).
double s0_asymptotic(Eigen::Index dim);

/// Excess statistical entropy F(p_1, p_2, ...).
///
/// F is minus the divided difference of g(x) = x^n ln x over the n nonzero
/// eigenvalues (zero eigenvalues drop out exactly). Clusters enter the
/// Newton table as confluent nodes seeded with
///   g^(k)(x) / k! = C(n, k) x^(n-k) (ln x + H_n - H_(n-k)).
/// Two well-separated values and a single uniform cluster take closed-form
/// fast paths; everything else runs in the precision tier chosen by
/// newton_table_lost_digits.
double excess_entropy(const Spectrum &spectrum);

/// The confluent divided-difference route only, never the fast paths.
double excess_entropy_divided_difference(const Spectrum &spectrum);

/// Same route as excess_entropy_divided_difference, forced to a given tier.
double excess_entropy_at(const Spectrum &spectrum, Precision precision);

/// Tier excess_entropy_divided_difference would use for this spectrum.
Precision excess_entropy_precision(const Spectrum &spectrum);

enum class EntropyMethod { ClosedForm, Quadrature, MonteCarlo };

std::string_view method_name(EntropyMethod m);

struct EntropyReport {
  Eigen::Index dim = 0;
  double s_h = 0.0;
  double s0 = 0.0;
  double s_f = 0.0;
  double s_total = 0.0;
  EntropyMethod method = EntropyMethod::ClosedForm;
};

/// S = S0(N) + F. Throws DimensionMismatch unless spectrum.dim() == dim.
EntropyReport absolute_entropy(const Spectrum &spectrum, Eigen::Index dim);

/// Convenience: diagonalize, then absolute_entropy at rho's dimension.
EntropyReport entropy_report(const DensityMatrix &rho);

/// Density of s = sum_r p_r |Psi_r|^2 over uniformly random pure states:
///   P(s) = (N-1) sum_{p_r > s} [prod_{r' != r} 1/(p_r - p_r')] (p_r - s)^(N-2).
/// Left-continuous at the eigenvalues and 0 for s > max p.
/// Needs N >= 2 and pairwise-distinct nonzero eigenvalues (zeros may repeat);
/// throws DegenerateSpectrumError otherwise.
double density_p(const Spectrum &spectrum, Eigen::Index dim, double s);

struct DensityCurve {
  Spectrum spectrum;
  std::vector<double> grid;
  std::vector<double> densities;

  double trapezoid_integral() const;
};

/// density_p on `points` equally spaced values of s in [0, 1], with the
/// eigenvalues merged in as breakpoints. For N = 2, where P jumps at each
/// eigenvalue, the breakpoint appears twice: left limit, then right limit.
DensityCurve density_curve(const Spectrum &spectrum, Eigen::Index dim, std::size_t points);

/// int_0^p (p - s)^(N-2) s ln s ds = p^N / (N (N-1)) [ln p - sum_{k=2}^N 1/k].
template <typename Scalar>
Scalar kernel_integral(const Scalar &p, long dim) {
  using std::log;
  using std::pow;
  const Scalar n(dim);
  return pow(p, static_cast<int>(dim)) / (n * (n - 1)) * (log(p) - harmonic_difference<Scalar>(1, dim));
}

double kernel_integral(double p, Eigen::Index dim);

/// S = N int f(s) P(s) ds evaluated piecewise in closed form,
/// -N(N-1) sum_r w_r kernel_integral(p_r, N). Same preconditions as density_p.
double entropy_by_quadrature(const Spectrum &spectrum, Eigen::Index dim);

struct IdentityResiduals {
  /// |sum_r p_r^N w_r - 1|
  double sum_rule = 0.0;
  /// |sum_r (s - p_r)^n w_r| for n = 0..N-2
  std::vector<double> moments;
};

/// Residuals of the two Lagrange-weight identities. All N entries (zeros
/// included) must be pairwise distinct.
IdentityResiduals identity_residuals(const Spectrum &spectrum, double s);

}  // namespace qent
