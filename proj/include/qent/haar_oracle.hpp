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
#include <vector>

#include <Eigen/Core>

#include "qent/rng.hpp"
#include "qent/spectrum.hpp"
#include "qent/state.hpp"

namespace qent {

/// Monte-Carlo estimates of the basis average and of P(s).
///
/// Samples are cut into fixed chunks of kSamplesPerChunk; chunk c draws from
/// substream c of the caller's (seed, stream_id). Chunks are pooled in chunk
/// order, so the result depends on (seed, stream_id, samples) only and not on
/// the number of workers.
inline constexpr long kSamplesPerChunk = 8192;

struct McEstimate {
  double mean = 0.0;
  /// Sample standard deviation / sqrt(samples).
  double std_error = 0.0;
  long samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;
};

enum class McMode {
  /// Average of sum_a f(<a|rho|a>) over Haar unitaries.
  Basis,
  /// Average of N f(sum_r p_r |Psi_r|^2) over uniformly random pure states.
  Sphere,
};

/// Running mean and sum of squared deviations (Welford), mergeable.
class RunningMoments {
 public:
  void add(double x);
  void merge(const RunningMoments &other);
  long count() const { return count_; }
  double mean() const { return mean_; }
  double variance() const;

 private:
  long count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

/// Throws ValidationError(InsufficientSamples) when samples < 100.
McEstimate mc_entropy_estimate(const DensityMatrix &rho, long samples, const RngStream &rng,
                               McMode mode = McMode::Sphere, unsigned workers = 1);

struct Histogram {
  std::vector<double> edges;
  std::vector<long> counts;
  std::vector<double> densities;
  long samples = 0;

  Eigen::Index bins() const { return static_cast<Eigen::Index>(counts.size()); }
  double bin_width(Eigen::Index b) const { return edges[b + 1] - edges[b]; }
  /// Binomial standard error of densities[b].
  double density_std_error(Eigen::Index b) const;
};

/// Empirical density of s over random pure states, `bins` equal bins on [0, 1].
/// Needs samples >= 10^4 and bins >= 10.
Histogram mc_density_histogram(const Spectrum &spectrum, Eigen::Index dim, long samples,
                               int bins, const RngStream &rng, unsigned workers = 1);

}  // namespace qent
