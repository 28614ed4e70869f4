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

#include <vector>

#include <Eigen/Core>

#include "qent/constants.hpp"
#include "qent/rng.hpp"

namespace qent {

/// A run of eigenvalues treated as one node of multiplicity `multiplicity`.
struct Cluster {
  double value;
  int multiplicity;
};

/// Eigenvalues of a density matrix, sorted descending, grouped into
/// multiplicity clusters.
///
/// Two values p >= q share a cluster when p - q <= tol * max(p, 1/N), measured
/// against the cluster's leading (largest) member. Exact zeros always form
/// their own cluster with value 0.
class Spectrum {
 public:
  /// Validates, clamps values in [-1e-10, 0) to zero, renormalizes and sorts.
  /// Throws ValidationError(InvalidDistribution) otherwise.
  static Spectrum from_values(std::vector<double> values,
                              double cluster_tolerance = kDefaultClusterTolerance);

  Eigen::Index dim() const { return values_.size(); }
  const Eigen::VectorXd &values() const { return values_; }
  const std::vector<Cluster> &clusters() const { return clusters_; }
  double cluster_tolerance() const { return cluster_tolerance_; }

  /// True when every nonzero cluster has multiplicity one.
  bool nonzero_values_distinct() const;
  /// Number of entries that are exactly zero.
  int zero_count() const;

  /// The same spectrum with trailing zeros appended up to `dim`.
  Spectrum padded(Eigen::Index dim) const;

 private:
  Spectrum(Eigen::VectorXd values, double tol);

  Eigen::VectorXd values_;
  double cluster_tolerance_;
  std::vector<Cluster> clusters_;
};

/// Spreads every nonzero cluster of multiplicity m symmetrically to
/// c * (1 + epsilon * (j - (m - 1) / 2)), j = 0..m-1, which preserves the sum.
/// The resulting entropies carry an O(epsilon ln epsilon) error.
Spectrum perturb_spectrum(const Spectrum &spectrum, double epsilon);

/// Dirichlet(alpha, ..., alpha) sample over the probability simplex;
/// alpha = 1 is the flat measure.
Spectrum dirichlet_spectrum(Eigen::Index dim, RngStream &rng, double alpha = 1.0);

/// n equal weights 1/n followed by dim - n zeros.
Spectrum uniform_mixture(Eigen::Index n, Eigen::Index dim);

}  // namespace qent
