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

#include "qent/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qent/errors.hpp"
#include "qent/summation.hpp"

namespace qent {
namespace {

std::vector<HermiteNode> nonzero_nodes(const Spectrum &spectrum, int &order) {
  std::vector<HermiteNode> nodes;
  order = 0;
  for (const Cluster &c : spectrum.clusters()) {
    if (c.value == 0.0) continue;
    nodes.push_back({c.value, c.multiplicity});
    order += c.multiplicity;
  }
  return nodes;
}

double log10_binomial(int n, int k) {
  return (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)) / std::log(10.0);
}

double excess_lost_digits(std::span<const HermiteNode> nodes, int order) {
  double z_min = 1.0;
  for (const auto &n : nodes) z_min = std::min(z_min, n.value);
  const double seed_scale = log10_binomial(order, order / 2) +
                            std::log10(1.0 + std::abs(std::log(z_min)) + harmonic_range(0, order));
  return newton_table_lost_digits(nodes) + seed_scale;
}

/// -[z_0..z_{n-1}] x^n ln x in Scalar.
template <typename Scalar>
Scalar excess_by_table(std::span<const HermiteNode> nodes, int order) {
  using std::log;
  using std::pow;
  int max_mult = 1;
  for (const auto &n : nodes) max_mult = std::max(max_mult, n.multiplicity);
  std::vector<Scalar> binom(max_mult);
  std::vector<Scalar> hdiff(max_mult);
  Scalar b(1);
  for (int k = 0; k < max_mult; ++k) {
    binom[k] = b;
    hdiff[k] = harmonic_difference<Scalar>(order - k, order);
    b = b * Scalar(order - k) / Scalar(k + 1);
  }
  auto seed = [&](const Scalar &x, int k) -> Scalar {
    if (x == 0) return Scalar(0);
    return binom[k] * pow(x, order - k) * (log(x) + hdiff[k]);
  };
  return -confluent_divided_difference<Scalar>(nodes, seed);
}

double excess_general(const Spectrum &spectrum, const Precision *forced) {
  int order = 0;
  const auto nodes = nonzero_nodes(spectrum, order);
  const Precision p = forced ? *forced : select_precision(excess_lost_digits(nodes, order));
  return with_precision(p, [&]<typename Scalar>() {
    return to_double(excess_by_table<Scalar>(nodes, order));
  });
}

void require_distinct_nonzero(const Spectrum &spectrum, const char *what) {
  if (!spectrum.nonzero_values_distinct()) {
    std::ostringstream msg;
    msg << what << " needs pairwise-distinct nonzero eigenvalues; use perturb_spectrum or the "
        << "Monte-Carlo path";
    throw DegenerateSpectrumError(msg.str());
  }
}

void require_dim(const Spectrum &spectrum, Eigen::Index dim) {
  if (spectrum.dim() != dim) {
    std::ostringstream msg;
    msg << "spectrum has " << spectrum.dim() << " entries but dim is " << dim;
    throw ValidationError(ErrorKind::DimensionMismatch, msg.str());
  }
}

std::span<const double> as_span(const Eigen::VectorXd &v) {
  return {v.data(), static_cast<std::size_t>(v.size())};
}

template <typename Scalar>
double density_with_weights(std::span<const double> p, const std::vector<Scalar> &w, long dim,
                            double s, bool right_limit = false) {
  using std::pow;
  Scalar acc(0);
  const Scalar ss(s);
  for (std::size_t r = 0; r < p.size(); ++r) {
    if (p[r] > s || (!right_limit && p[r] == s && p[r] > 0.0)) {
      acc += w[r] * pow(Scalar(p[r]) - ss, static_cast<int>(dim - 2));
    }
  }
  // P(s) >= 0; cancellation near max p can leave a rounding-sized negative.
  return std::max(0.0, to_double(Scalar(dim - 1) * acc));
}

Precision lagrange_precision(std::span<const double> p, double extra_digits = 0.0) {
  return select_precision(lagrange_weight_log10(p) + extra_digits);
}

}  // namespace

double shannon(std::span<const double> probs) {
  NeumaierSum<double> total;
  for (double p : probs) {
    if (!(p >= 0.0)) {
      throw ValidationError(ErrorKind::InvalidDistribution, "probabilities must be >= 0");
    }
    total += p;
  }
  if (std::abs(total.value() - 1.0) > kTraceTolerance) {
    throw ValidationError(ErrorKind::InvalidDistribution, "probabilities must sum to 1 within 1e-10");
  }
  NeumaierSum<double> h;
  for (double p : probs) {
    if (p > 0.0) h += -p * std::log(p);
  }
  return h.value();
}

double von_neumann(const DensityMatrix &rho) { return shannon(eig_hermitian(rho).spectrum.values()); }

double conditional_entropy(const DensityMatrix &rho, const MeasurementBasis &basis) {
  if (basis.dim() != rho.dim()) {
    throw ValidationError(ErrorKind::DimensionMismatch, "basis and state dimensions differ");
  }
  Eigen::VectorXd probs(rho.dim());
  for (Eigen::Index a = 0; a < rho.dim(); ++a) {
    const double q = basis.column(a).dot(rho.matrix() * basis.column(a)).real();
    probs(a) = q < 0.0 ? 0.0 : q;
  }
  return shannon(probs);
}

double s0_exact(Eigen::Index dim) {
  if (dim < 1) throw ValidationError(ErrorKind::InvalidArgument, "dimension must be >= 1");
  return harmonic_range(1, static_cast<long>(dim));
}

double s0_asymptotic(Eigen::Index dim) {
  if (dim < 1) throw ValidationError(ErrorKind::InvalidArgument, "dimension must be >= 1");
  const double n = static_cast<double>(dim);
  return std::log(n) - kExcessEntropyBound + 0.5 / n;
}

double excess_entropy(const Spectrum &spectrum) {
  int order = 0;
  const auto nodes = nonzero_nodes(spectrum, order);
  if (nodes.size() == 1) {
    const int n = nodes[0].multiplicity;
    return std::log(static_cast<double>(n)) - harmonic_range(1, n);
  }
  if (nodes.size() == 2 && order == 2) {
    const double p1 = nodes[0].value;
    const double p2 = nodes[1].value;
    if ((p1 - p2) >= 1e-3 * p1) {
      return -(p1 * p1 * std::log(p1) - p2 * p2 * std::log(p2)) / (p1 - p2);
    }
  }
  return excess_general(spectrum, nullptr);
}

double excess_entropy_divided_difference(const Spectrum &spectrum) {
  return excess_general(spectrum, nullptr);
}

double excess_entropy_at(const Spectrum &spectrum, Precision precision) {
  return excess_general(spectrum, &precision);
}

Precision excess_entropy_precision(const Spectrum &spectrum) {
  int order = 0;
  const auto nodes = nonzero_nodes(spectrum, order);
  return select_precision(excess_lost_digits(nodes, order));
}

std::string_view method_name(EntropyMethod m) {
  switch (m) {
    case EntropyMethod::ClosedForm: return "closed_form";
    case EntropyMethod::Quadrature: return "quadrature";
    case EntropyMethod::MonteCarlo: return "monte_carlo";
  }
  return "unknown";
}

EntropyReport absolute_entropy(const Spectrum &spectrum, Eigen::Index dim) {
  require_dim(spectrum, dim);
  EntropyReport r;
  r.dim = dim;
  r.s_h = shannon(spectrum.values());
  r.s0 = s0_exact(dim);
  r.s_f = excess_entropy(spectrum);
  r.s_total = r.s0 + r.s_f;
  r.method = EntropyMethod::ClosedForm;
  return r;
}

EntropyReport entropy_report(const DensityMatrix &rho) {
  return absolute_entropy(eig_hermitian(rho).spectrum, rho.dim());
}

double density_p(const Spectrum &spectrum, Eigen::Index dim, double s) {
  require_dim(spectrum, dim);
  if (dim < 2) throw ValidationError(ErrorKind::InvalidArgument, "P(s) needs dim >= 2");
  if (!(s >= 0.0 && s <= 1.0)) throw ValidationError(ErrorKind::InvalidArgument, "s must lie in [0, 1]");
  require_distinct_nonzero(spectrum, "density_p");
  const auto p = as_span(spectrum.values());
  if (s > p[0]) return 0.0;
  return with_precision(lagrange_precision(p), [&]<typename Scalar>() {
    return density_with_weights<Scalar>(p, lagrange_weights<Scalar>(p), static_cast<long>(dim), s);
  });
}

double DensityCurve::trapezoid_integral() const {
  NeumaierSum<double> acc;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    acc += 0.5 * (grid[i] - grid[i - 1]) * (densities[i] + densities[i - 1]);
  }
  return acc.value();
}

DensityCurve density_curve(const Spectrum &spectrum, Eigen::Index dim, std::size_t points) {
  require_dim(spectrum, dim);
  if (dim < 2) throw ValidationError(ErrorKind::InvalidArgument, "P(s) needs dim >= 2");
  if (points < 2) throw ValidationError(ErrorKind::InvalidArgument, "grid needs at least 2 points");
  require_distinct_nonzero(spectrum, "density_curve");
  const auto p = as_span(spectrum.values());
  // Uniform grid plus the eigenvalues as breakpoints. For N = 2 P(s) jumps
  // there, so both one-sided limits are listed (left first).
  struct Node {
    double s;
    bool right;
    bool operator==(const Node &) const = default;
  };
  std::vector<Node> nodes;
  for (std::size_t i = 0; i < points; ++i) {
    nodes.push_back({static_cast<double>(i) / static_cast<double>(points - 1), false});
  }
  for (double v : p) {
    if (v <= 0.0 || v >= 1.0) continue;
    nodes.push_back({v, false});
    if (dim == 2) nodes.push_back({v, true});
  }
  std::sort(nodes.begin(), nodes.end(), [](const Node &a, const Node &b) {
    return a.s != b.s ? a.s < b.s : a.right < b.right;
  });
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  DensityCurve curve{spectrum, {}, std::vector<double>(nodes.size())};
  for (const auto &n : nodes) curve.grid.push_back(n.s);
  with_precision(lagrange_precision(p), [&]<typename Scalar>() {
    const auto w = lagrange_weights<Scalar>(p);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      curve.densities[i] = density_with_weights<Scalar>(p, w, static_cast<long>(dim), nodes[i].s, nodes[i].right);
    }
    return 0;
  });
  return curve;
}

double kernel_integral(double p, Eigen::Index dim) {
  if (!(p > 0.0 && p <= 1.0) || dim < 2) {
    throw ValidationError(ErrorKind::InvalidArgument, "kernel_integral needs p in (0, 1] and dim >= 2");
  }
  const double n = static_cast<double>(dim);
  return std::pow(p, n) / (n * (n - 1.0)) * (std::log(p) - harmonic_range(1, static_cast<long>(dim)));
}

double entropy_by_quadrature(const Spectrum &spectrum, Eigen::Index dim) {
  require_dim(spectrum, dim);
  require_distinct_nonzero(spectrum, "entropy_by_quadrature");
  if (dim == 1) return 0.0;
  const auto p = as_span(spectrum.values());
  const long n = static_cast<long>(dim);
  const double extra = std::log10(static_cast<double>(n * n)) + 1.0;
  return with_precision(lagrange_precision(p, extra), [&]<typename Scalar>() {
    const auto w = lagrange_weights<Scalar>(p);
    Scalar acc(0);
    for (std::size_t r = 0; r < p.size(); ++r) {
      if (p[r] > 0.0) acc += w[r] * kernel_integral<Scalar>(Scalar(p[r]), n);
    }
    return to_double(-Scalar(n) * Scalar(n - 1) * acc);
  });
}

IdentityResiduals identity_residuals(const Spectrum &spectrum, double s) {
  if (spectrum.zero_count() > 1 || !spectrum.nonzero_values_distinct()) {
    throw DegenerateSpectrumError("identity_residuals needs pairwise-distinct eigenvalues");
  }
  const auto p = as_span(spectrum.values());
  const long n = static_cast<long>(p.size());
  return with_precision(lagrange_precision(p, 2.0), [&]<typename Scalar>() {
    using std::abs;
    using std::pow;
    const auto w = lagrange_weights_all<Scalar>(p);
    IdentityResiduals out;
    Scalar sum_rule(0);
    for (std::size_t r = 0; r < p.size(); ++r) sum_rule += pow(Scalar(p[r]), static_cast<int>(n)) * w[r];
    out.sum_rule = to_double(abs(sum_rule - Scalar(1)));
    for (long k = 0; k <= n - 2; ++k) {
      Scalar m(0);
      for (std::size_t r = 0; r < p.size(); ++r) m += pow(Scalar(s) - Scalar(p[r]), static_cast<int>(k)) * w[r];
      out.moments.push_back(to_double(abs(m)));
    }
    return out;
  });
}

}  // namespace qent
