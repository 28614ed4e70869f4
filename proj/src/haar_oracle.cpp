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

#include "qent/haar_oracle.hpp"

#include <algorithm>
#include <cmath>

#include "qent/errors.hpp"
#include "qent/parallel.hpp"

namespace qent {
namespace {

inline double f(double s) { return s > 0.0 ? -s * std::log(s) : 0.0; }

std::size_t chunk_count(long samples) {
  return static_cast<std::size_t>((samples + kSamplesPerChunk - 1) / kSamplesPerChunk);
}

long chunk_size(std::size_t c, long samples) {
  const long start = static_cast<long>(c) * kSamplesPerChunk;
  return std::min(kSamplesPerChunk, samples - start);
}

/// s = sum_r p_r |Psi_r|^2 for one uniformly random pure state.
double sphere_weight(const Eigen::VectorXd &p, RngStream &rng) {
  double norm2 = 0.0;
  double s = 0.0;
  for (Eigen::Index r = 0; r < p.size(); ++r) {
    const double x = rng.normal();
    const double y = rng.normal();
    const double m = x * x + y * y;
    norm2 += m;
    s += p(r) * m;
  }
  return s / norm2;
}

}  // namespace

void RunningMoments::add(double x) {
  ++count_;
  const double delta = x - mean_;
  mean_ += delta / static_cast<double>(count_);
  m2_ += delta * (x - mean_);
}

void RunningMoments::merge(const RunningMoments &other) {
  if (other.count_ == 0) return;
  if (count_ == 0) {
    *this = other;
    return;
  }
  const double n1 = static_cast<double>(count_);
  const double n2 = static_cast<double>(other.count_);
  const double delta = other.mean_ - mean_;
  const double n = n1 + n2;
  mean_ += delta * n2 / n;
  m2_ += other.m2_ + delta * delta * n1 * n2 / n;
  count_ += other.count_;
}

double RunningMoments::variance() const {
  return count_ > 1 ? m2_ / static_cast<double>(count_ - 1) : 0.0;
}

McEstimate mc_entropy_estimate(const DensityMatrix &rho, long samples, const RngStream &rng,
                               McMode mode, unsigned workers) {
  if (samples < 100) {
    throw ValidationError(ErrorKind::InsufficientSamples, "Monte-Carlo estimate needs >= 100 samples");
  }
  const Eigen::Index n = rho.dim();
  const Eigen::VectorXd p = eig_hermitian(rho).spectrum.values();
  const std::size_t chunks = chunk_count(samples);
  std::vector<RunningMoments> partial(chunks);
  parallel_for(chunks, workers, [&](std::size_t c) {
    RngStream local = rng.substream(static_cast<std::uint32_t>(c));
    RunningMoments acc;
    const long m = chunk_size(c, samples);
    for (long i = 0; i < m; ++i) {
      if (mode == McMode::Sphere) {
        acc.add(static_cast<double>(n) * f(sphere_weight(p, local)));
      } else {
        const MeasurementBasis u = haar_unitary(n, local);
        double total = 0.0;
        for (Eigen::Index a = 0; a < n; ++a) {
          total += f(u.column(a).dot(rho.matrix() * u.column(a)).real());
        }
        acc.add(total);
      }
    }
    partial[c] = acc;
  });
  RunningMoments pooled;
  for (const auto &part : partial) pooled.merge(part);
  McEstimate est;
  est.mean = pooled.mean();
  est.std_error = std::sqrt(pooled.variance() / static_cast<double>(pooled.count()));
  est.samples = pooled.count();
  est.seed = rng.seed();
  est.stream_id = rng.stream_id();
  return est;
}

double Histogram::density_std_error(Eigen::Index b) const {
  const double n = static_cast<double>(samples);
  const double c = static_cast<double>(counts[b]);
  return std::sqrt(c * (1.0 - c / n)) / (n * bin_width(b));
}

Histogram mc_density_histogram(const Spectrum &spectrum, Eigen::Index dim, long samples, int bins,
                               const RngStream &rng, unsigned workers) {
  if (spectrum.dim() != dim) {
    throw ValidationError(ErrorKind::DimensionMismatch, "spectrum length differs from dim");
  }
  if (samples < 10000) {
    throw ValidationError(ErrorKind::InsufficientSamples, "histogram needs >= 10^4 samples");
  }
  if (bins < 10) throw ValidationError(ErrorKind::InvalidArgument, "histogram needs >= 10 bins");
  const Eigen::VectorXd &p = spectrum.values();
  const std::size_t chunks = chunk_count(samples);
  std::vector<std::vector<long>> partial(chunks);
  parallel_for(chunks, workers, [&](std::size_t c) {
    RngStream local = rng.substream(static_cast<std::uint32_t>(c));
    std::vector<long> counts(bins, 0);
    const long m = chunk_size(c, samples);
    for (long i = 0; i < m; ++i) {
      const double s = sphere_weight(p, local);
      const int b = std::clamp(static_cast<int>(s * bins), 0, bins - 1);
      ++counts[b];
    }
    partial[c] = std::move(counts);
  });
  Histogram h;
  h.samples = samples;
  h.counts.assign(bins, 0);
  for (const auto &part : partial) {
    for (int b = 0; b < bins; ++b) h.counts[b] += part[b];
  }
  h.edges.resize(bins + 1);
  for (int b = 0; b <= bins; ++b) h.edges[b] = static_cast<double>(b) / bins;
  h.densities.resize(bins);
  for (int b = 0; b < bins; ++b) {
    h.densities[b] = static_cast<double>(h.counts[b]) / (static_cast<double>(samples) * h.bin_width(b));
  }
  return h;
}

}  // namespace qent
