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

#include "qent/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "qent/errors.hpp"
#include "qent/summation.hpp"

namespace qent {

Spectrum Spectrum::from_values(std::vector<double> values, double cluster_tolerance) {
  if (values.empty()) {
    throw ValidationError(ErrorKind::InvalidDistribution, "spectrum is empty");
  }
  if (!(cluster_tolerance >= 0.0)) {
    throw ValidationError(ErrorKind::InvalidArgument, "cluster tolerance must be >= 0");
  }
  NeumaierSum<double> total;
  for (double &v : values) {
    if (!std::isfinite(v)) {
      throw ValidationError(ErrorKind::InvalidDistribution, "spectrum entry is not finite");
    }
    if (v < 0.0) {
      if (v < -kNegativeEigenvalueTolerance) {
        std::ostringstream msg;
        msg << "entry " << v << " is below -1e-10";
        throw ValidationError(ErrorKind::NegativeEigenvalue, msg.str());
      }
      v = 0.0;
    }
    if (v > 1.0 + kTraceTolerance) {
      std::ostringstream msg;
      msg << "entry " << v << " exceeds 1";
      throw ValidationError(ErrorKind::InvalidDistribution, msg.str());
    }
    total += v;
  }
  const double sum = total.value();
  if (std::abs(sum - 1.0) > kTraceTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "entries sum to " << sum << ", not 1 within 1e-10";
    throw ValidationError(ErrorKind::TraceDeviation, msg.str());
  }
  if (sum != 1.0) {
    for (double &v : values) v /= sum;
  }
  std::sort(values.begin(), values.end(), std::greater<>());
  Eigen::VectorXd vec = Eigen::Map<Eigen::VectorXd>(values.data(), values.size());
  return Spectrum(std::move(vec), cluster_tolerance);
}

Spectrum::Spectrum(Eigen::VectorXd values, double tol)
    : values_(std::move(values)), cluster_tolerance_(tol) {
  const Eigen::Index n = values_.size();
  const double floor = 1.0 / static_cast<double>(n);
  Eigen::Index i = 0;
  while (i < n) {
    const double leader = values_[i];
    if (leader == 0.0) {
      clusters_.push_back({0.0, static_cast<int>(n - i)});
      break;
    }
    const double width = tol * std::max(leader, floor);
    NeumaierSum<double> members(leader);
    Eigen::Index j = i + 1;
    for (; j < n && values_[j] != 0.0 && leader - values_[j] <= width; ++j) members += values_[j];
    const int m = static_cast<int>(j - i);
    clusters_.push_back({m == 1 ? leader : members.value() / m, m});
    i = j;
  }
}

bool Spectrum::nonzero_values_distinct() const {
  return std::all_of(clusters_.begin(), clusters_.end(),
                     [](const Cluster &c) { return c.value == 0.0 || c.multiplicity == 1; });
}

int Spectrum::zero_count() const {
  return static_cast<int>((values_.array() == 0.0).count());
}

Spectrum Spectrum::padded(Eigen::Index dim) const {
  if (dim < values_.size()) {
    throw ValidationError(ErrorKind::DimensionMismatch, "cannot pad a spectrum to a smaller dimension");
  }
  std::vector<double> v(values_.data(), values_.data() + values_.size());
  v.resize(dim, 0.0);
  return from_values(std::move(v), cluster_tolerance_);
}

Spectrum perturb_spectrum(const Spectrum &spectrum, double epsilon) {
  if (!(epsilon > spectrum.cluster_tolerance())) {
    throw ValidationError(ErrorKind::InvalidArgument,
                          "perturbation must exceed the cluster tolerance");
  }
  std::vector<double> out;
  out.reserve(spectrum.dim());
  for (const Cluster &c : spectrum.clusters()) {
    if (c.value == 0.0 || c.multiplicity == 1) {
      out.insert(out.end(), c.multiplicity, c.value);
      continue;
    }
    const double half = 0.5 * (c.multiplicity - 1);
    if (epsilon * half >= 1.0) {
      throw ValidationError(ErrorKind::InvalidArgument, "perturbation too large for cluster size");
    }
    for (int j = 0; j < c.multiplicity; ++j) out.push_back(c.value * (1.0 + epsilon * (j - half)));
  }
  return Spectrum::from_values(std::move(out), spectrum.cluster_tolerance());
}

Spectrum dirichlet_spectrum(Eigen::Index dim, RngStream &rng, double alpha) {
  if (dim < 1 || !(alpha > 0.0)) {
    throw ValidationError(ErrorKind::InvalidArgument, "dirichlet needs dim >= 1 and alpha > 0");
  }
  std::vector<double> w(dim);
  if (alpha == 1.0) {
    for (double &x : w) x = -std::log(rng.uniform_open0());
  } else {
    std::gamma_distribution<double> gamma(alpha, 1.0);
    for (double &x : w) x = gamma(rng);
  }
  NeumaierSum<double> total;
  for (double x : w) total += x;
  for (double &x : w) x /= total.value();
  return Spectrum::from_values(std::move(w));
}

Spectrum uniform_mixture(Eigen::Index n, Eigen::Index dim) {
  if (n < 1 || dim < n) {
    throw ValidationError(ErrorKind::DimensionMismatch, "uniform mixture needs 1 <= n <= dim");
  }
  std::vector<double> v(dim, 0.0);
  std::fill(v.begin(), v.begin() + n, 1.0 / static_cast<double>(n));
  return Spectrum::from_values(std::move(v));
}

}  // namespace qent
