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

#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "qent/constants.hpp"
#include "qent/rng.hpp"
#include "qent/spectrum.hpp"

namespace qent {

using Complex = std::complex<double>;

/// Hermitian, positive semi-definite, unit-trace matrix. Only constructed
/// through validate_density, so every instance satisfies the invariants.
class DensityMatrix {
 public:
  Eigen::Index dim() const { return matrix_.rows(); }
  const Eigen::MatrixXcd &matrix() const { return matrix_; }

 private:
  explicit DensityMatrix(Eigen::MatrixXcd m) : matrix_(std::move(m)) {}
  friend DensityMatrix validate_density(const Eigen::MatrixXcd &raw);

  Eigen::MatrixXcd matrix_;
};

/// Orthonormal basis stored as the columns of a unitary matrix.
class MeasurementBasis {
 public:
  /// Throws ValidationError(InvalidArgument) if U^dagger U differs from the
  /// identity by more than 1e-10 in any entry.
  static MeasurementBasis from_unitary(Eigen::MatrixXcd unitary);
  static MeasurementBasis identity(Eigen::Index dim);

  Eigen::Index dim() const { return unitary_.rows(); }
  const Eigen::MatrixXcd &unitary() const { return unitary_; }
  auto column(Eigen::Index a) const { return unitary_.col(a); }

 private:
  explicit MeasurementBasis(Eigen::MatrixXcd u) : unitary_(std::move(u)) {}
  Eigen::MatrixXcd unitary_;
};

/// Normalized state vector Psi_r = <r|Psi>.
class PureState {
 public:
  /// Throws unless the squared norm is within 1e-12 of one.
  static PureState from_amplitudes(Eigen::VectorXcd amplitudes);

  Eigen::Index dim() const { return amplitudes_.size(); }
  const Eigen::VectorXcd &amplitudes() const { return amplitudes_; }
  DensityMatrix density() const;

 private:
  explicit PureState(Eigen::VectorXcd a) : amplitudes_(std::move(a)) {}
  Eigen::VectorXcd amplitudes_;
};

/// Symmetrizes (M + M^dagger)/2 when the asymmetry is within 1e-12, then
/// checks trace and positivity. Throws ValidationError with kind
/// NonHermitian, TraceDeviation, NegativeEigenvalue or DimensionMismatch.
DensityMatrix validate_density(const Eigen::MatrixXcd &raw);

struct Eigensystem {
  Spectrum spectrum;
  /// Column k is the eigenvector of spectrum.values()[k].
  MeasurementBasis basis;
};

/// Hermitian eigendecomposition with eigenvalues sorted descending.
/// Eigenvalues in [-1e-10, 0) are clamped to zero and the spectrum is
/// renormalized. Throws ConvergenceError if the solver fails.
Eigensystem eig_hermitian(const DensityMatrix &rho,
                          double cluster_tolerance = kDefaultClusterTolerance);

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the phases
/// of R's diagonal moved into Q.
MeasurementBasis haar_unitary(Eigen::Index dim, RngStream &rng);

/// Uniform on the unit sphere of C^N.
PureState random_pure_state(Eigen::Index dim, RngStream &rng);

/// Hilbert-Schmidt random state G G^dagger / tr(G G^dagger) with G Ginibre.
DensityMatrix random_density_matrix(Eigen::Index dim, RngStream &rng);

DensityMatrix diagonal_state(const Spectrum &spectrum);

DensityMatrix tensor(const DensityMatrix &a, const DensityMatrix &b);

enum class Subsystem { A, B };

/// Reduced state of a bipartite system of dims (N, M), index i*M + j.
DensityMatrix partial_trace(const DensityMatrix &rho, std::pair<Eigen::Index, Eigen::Index> dims,
                            Subsystem keep);

/// Rank-one projectors |a><a| onto each basis vector.
std::vector<Eigen::MatrixXcd> rank_one_projectors(const MeasurementBasis &basis);

/// sigma = sum_i P_i rho P_i. Throws ValidationError(IncompleteProjectorSet)
/// unless the P_i are Hermitian idempotents, mutually orthogonal, and sum to
/// the identity within 1e-10.
DensityMatrix projective_update(const DensityMatrix &rho,
                                const std::vector<Eigen::MatrixXcd> &projectors);

}  // namespace qent
