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

#include "qent/state.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "qent/errors.hpp"

namespace qent {
namespace {

Eigen::MatrixXcd ginibre(Eigen::Index rows, Eigen::Index cols, RngStream &rng) {
  const double scale = std::sqrt(0.5);
  Eigen::MatrixXcd g(rows, cols);
  // Column-major fill order is part of the reproducibility contract.
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = rng.normal();
      const double im = rng.normal();
      g(i, j) = Complex(scale * re, scale * im);
    }
  }
  return g;
}

double max_abs(const Eigen::MatrixXcd &m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace

MeasurementBasis MeasurementBasis::from_unitary(Eigen::MatrixXcd unitary) {
  if (unitary.rows() != unitary.cols() || unitary.rows() < 1) {
    throw ValidationError(ErrorKind::DimensionMismatch, "basis matrix must be square and non-empty");
  }
  const Eigen::Index n = unitary.rows();
  const double err = max_abs(unitary.adjoint() * unitary - Eigen::MatrixXcd::Identity(n, n));
  if (err > kOrthonormalityTolerance) {
    std::ostringstream msg;
    msg << "columns are not orthonormal (residual " << err << ")";
    throw ValidationError(ErrorKind::InvalidArgument, msg.str());
  }
  return MeasurementBasis(std::move(unitary));
}

MeasurementBasis MeasurementBasis::identity(Eigen::Index dim) {
  return MeasurementBasis(Eigen::MatrixXcd::Identity(dim, dim));
}

PureState PureState::from_amplitudes(Eigen::VectorXcd amplitudes) {
  if (amplitudes.size() < 1) {
    throw ValidationError(ErrorKind::DimensionMismatch, "pure state needs dim >= 1");
  }
  const double norm2 = amplitudes.squaredNorm();
  if (std::abs(norm2 - 1.0) > 1e-12) {
    throw ValidationError(ErrorKind::TraceDeviation, "state vector is not normalized");
  }
  return PureState(std::move(amplitudes));
}

DensityMatrix PureState::density() const {
  return validate_density(amplitudes_ * amplitudes_.adjoint());
}

DensityMatrix validate_density(const Eigen::MatrixXcd &raw) {
  if (raw.rows() != raw.cols() || raw.rows() < 1) {
    throw ValidationError(ErrorKind::DimensionMismatch, "density matrix must be square with dim >= 1");
  }
  if (!raw.allFinite()) {
    throw ValidationError(ErrorKind::InvalidArgument, "density matrix has non-finite entries");
  }
  const double asym = max_abs(raw - raw.adjoint());
  if (asym > kHermitianTolerance) {
    std::ostringstream msg;
    msg << "max |M - M^dagger| = " << asym << " exceeds 1e-12";
    throw ValidationError(ErrorKind::NonHermitian, msg.str());
  }
  Eigen::MatrixXcd sym = 0.5 * (raw + raw.adjoint());
  const double trace = sym.trace().real();
  if (std::abs(trace - 1.0) > kTraceTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "trace is " << trace << ", not 1 within 1e-10";
    throw ValidationError(ErrorKind::TraceDeviation, msg.str());
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sym, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw ConvergenceError("Hermitian eigensolver did not converge");
  const double smallest = es.eigenvalues()(0);
  if (smallest < -kNegativeEigenvalueTolerance) {
    std::ostringstream msg;
    msg << "smallest eigenvalue " << smallest << " is below -1e-10";
    throw ValidationError(ErrorKind::NegativeEigenvalue, msg.str());
  }
  return DensityMatrix(std::move(sym));
}

Eigensystem eig_hermitian(const DensityMatrix &rho, double cluster_tolerance) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.matrix());
  if (es.info() != Eigen::Success) throw ConvergenceError("Hermitian eigensolver did not converge");
  const Eigen::Index n = rho.dim();
  std::vector<double> values(n);
  Eigen::MatrixXcd vectors(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    values[k] = es.eigenvalues()(n - 1 - k);
    vectors.col(k) = es.eigenvectors().col(n - 1 - k);
  }
  return {Spectrum::from_values(std::move(values), cluster_tolerance),
          MeasurementBasis::from_unitary(std::move(vectors))};
}

MeasurementBasis haar_unitary(Eigen::Index dim, RngStream &rng) {
  if (dim < 1) throw ValidationError(ErrorKind::InvalidArgument, "haar_unitary needs dim >= 1");
  const Eigen::MatrixXcd g = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(dim, dim);
  const auto r_diag = qr.matrixQR().diagonal();
  for (Eigen::Index k = 0; k < dim; ++k) {
    const double mag = std::abs(r_diag(k));
    if (mag > 0.0) q.col(k) *= r_diag(k) / mag;
  }
  return MeasurementBasis::from_unitary(std::move(q));
}

PureState random_pure_state(Eigen::Index dim, RngStream &rng) {
  if (dim < 1) throw ValidationError(ErrorKind::InvalidArgument, "random_pure_state needs dim >= 1");
  Eigen::VectorXcd psi(dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    const double x = rng.normal();
    const double y = rng.normal();
    psi(r) = Complex(x, y);
  }
  psi /= psi.norm();
  return PureState::from_amplitudes(std::move(psi));
}

DensityMatrix random_density_matrix(Eigen::Index dim, RngStream &rng) {
  if (dim < 1) throw ValidationError(ErrorKind::InvalidArgument, "random_density_matrix needs dim >= 1");
  const Eigen::MatrixXcd g = ginibre(dim, dim, rng);
  Eigen::MatrixXcd w = g * g.adjoint();
  w /= w.trace().real();
  return validate_density(w);
}

DensityMatrix diagonal_state(const Spectrum &spectrum) {
  return validate_density(spectrum.values().cast<Complex>().asDiagonal().toDenseMatrix());
}

DensityMatrix tensor(const DensityMatrix &a, const DensityMatrix &b) {
  const Eigen::Index n = a.dim();
  const Eigen::Index m = b.dim();
  Eigen::MatrixXcd out(n * m, n * m);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) out.block(i * m, j * m, m, m) = a.matrix()(i, j) * b.matrix();
  }
  return validate_density(out);
}

DensityMatrix partial_trace(const DensityMatrix &rho, std::pair<Eigen::Index, Eigen::Index> dims,
                            Subsystem keep) {
  const auto [n, m] = dims;
  if (n < 1 || m < 1 || n * m != rho.dim()) {
    std::ostringstream msg;
    msg << "dims (" << n << ", " << m << ") do not factor dim " << rho.dim();
    throw ValidationError(ErrorKind::DimensionMismatch, msg.str());
  }
  const Eigen::MatrixXcd &r = rho.matrix();
  if (keep == Subsystem::A) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index k = 0; k < n; ++k) out(i, k) = r.block(i * m, k * m, m, m).trace();
    }
    return validate_density(out);
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(m, m);
  for (Eigen::Index i = 0; i < n; ++i) out += r.block(i * m, i * m, m, m);
  return validate_density(out);
}

std::vector<Eigen::MatrixXcd> rank_one_projectors(const MeasurementBasis &basis) {
  std::vector<Eigen::MatrixXcd> out;
  out.reserve(basis.dim());
  for (Eigen::Index a = 0; a < basis.dim(); ++a) out.push_back(basis.column(a) * basis.column(a).adjoint());
  return out;
}

DensityMatrix projective_update(const DensityMatrix &rho,
                                const std::vector<Eigen::MatrixXcd> &projectors) {
  const Eigen::Index n = rho.dim();
  constexpr double tol = 1e-10;
  if (projectors.empty()) throw ValidationError(ErrorKind::IncompleteProjectorSet, "no projectors given");
  Eigen::MatrixXcd total = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t i = 0; i < projectors.size(); ++i) {
    const Eigen::MatrixXcd &p = projectors[i];
    if (p.rows() != n || p.cols() != n) {
      throw ValidationError(ErrorKind::DimensionMismatch, "projector dimension differs from the state");
    }
    if (max_abs(p - p.adjoint()) > tol || max_abs(p * p - p) > tol) {
      throw ValidationError(ErrorKind::IncompleteProjectorSet, "a projector is not a Hermitian idempotent");
    }
    for (std::size_t j = i + 1; j < projectors.size(); ++j) {
      if (max_abs(p * projectors[j]) > tol) {
        throw ValidationError(ErrorKind::IncompleteProjectorSet, "projectors are not mutually orthogonal");
      }
    }
    total += p;
  }
  if (max_abs(total - Eigen::MatrixXcd::Identity(n, n)) > tol) {
    throw ValidationError(ErrorKind::IncompleteProjectorSet, "projectors do not sum to the identity");
  }
  Eigen::MatrixXcd sigma = Eigen::MatrixXcd::Zero(n, n);
  for (const auto &p : projectors) sigma.noalias() += p * rho.matrix() * p;
  return validate_density(sigma);
}

}  // namespace qent
