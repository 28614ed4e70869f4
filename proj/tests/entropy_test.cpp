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

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "gtest/gtest.h"

#include "qent/constants.hpp"
#include "qent/entropy.hpp"
#include "qent/errors.hpp"
#include "qent/rng.hpp"
#include "qent/state.hpp"

using namespace qent;

namespace {

// Reference values from a 40-digit mpmath evaluation.
constexpr double kF7525 = 0.15035553636826722;
constexpr double kF7030 = 0.16603292535161157;
constexpr double kF532 = 0.24787678364229924;
constexpr double kF6464 = 0.29484570980195091;
constexpr double kShannon7525 = 0.56233514461880835;
constexpr double kUniform2In4 = 1.2764805138932786;
constexpr double kS0Asymptotic2 = 0.52036284546147817;
constexpr double kOneMinusGamma = 0.42278433509846714;
constexpr double kFUniform16 = 0.39185972901078801;

Spectrum spec(std::vector<double> v) { return Spectrum::from_values(std::move(v)); }

double harmonic_tail(int a, int b) {
  double h = 0;
  for (int k = b; k > a; --k) h += 1.0 / k;
  return h;
}

double uniform_f(int n) { return std::log(double(n)) - harmonic_tail(1, n); }

/// Random spectrum with every relative gap at least `gap`.
Spectrum separated_dirichlet(Eigen::Index n, RngStream &rng, double gap) {
  for (;;) {
    Spectrum s = dirichlet_spectrum(n, rng);
    bool ok = true;
    for (Eigen::Index k = 1; k < n; ++k) {
      const double a = s.values()(k - 1), b = s.values()(k);
      if (a - b < gap * a || b < gap) ok = false;
    }
    if (ok) return s;
  }
}

ErrorKind kind_of(const std::function<void()> &fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an exception";
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(shannon, examples) {
  EXPECT_EQ(shannon(Eigen::Vector2d(1, 0)), 0.0);
  EXPECT_NEAR(shannon(Eigen::Vector4d(0.25, 0.25, 0.25, 0.25)), std::log(4.0), 1e-15);
  EXPECT_NEAR(shannon(Eigen::Vector2d(0.75, 0.25)), kShannon7525, 1e-15);
  EXPECT_EQ(kind_of([] { shannon(Eigen::Vector2d(0.7, 0.4)); }), ErrorKind::InvalidDistribution);
  EXPECT_EQ(kind_of([] { shannon(Eigen::Vector2d(1.1, -0.1)); }), ErrorKind::InvalidDistribution);
}

TEST(von_neumann, examples) {
  RngStream rng(1);
  EXPECT_NEAR(von_neumann(random_pure_state(5, rng).density()), 0.0, 1e-12);
  const DensityMatrix half = validate_density(Eigen::MatrixXcd::Identity(2, 2) / 2.0);
  EXPECT_NEAR(von_neumann(tensor(half, half)), std::log(4.0), 1e-14);
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4);
  psi(1) = 1.0 / std::numbers::sqrt2;
  psi(2) = -1.0 / std::numbers::sqrt2;
  const DensityMatrix spin = partial_trace(PureState::from_amplitudes(psi).density(), {2, 2}, Subsystem::A);
  EXPECT_NEAR(von_neumann(spin), std::numbers::ln2, 1e-14);
}

TEST(conditional_entropy, examples) {
  Eigen::MatrixXcd d(2, 2);
  d << 0.7, 0, 0, 0.3;
  const DensityMatrix rho = validate_density(d);
  EXPECT_NEAR(conditional_entropy(rho, MeasurementBasis::identity(2)), von_neumann(rho), 1e-15);

  Eigen::MatrixXcd pure = Eigen::MatrixXcd::Zero(2, 2);
  pure(0, 0) = 1;
  Eigen::MatrixXcd h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::numbers::sqrt2;
  EXPECT_NEAR(conditional_entropy(validate_density(pure), MeasurementBasis::from_unitary(h)), std::numbers::ln2,
              1e-15);

  EXPECT_EQ(kind_of([&] { conditional_entropy(rho, MeasurementBasis::identity(3)); }),
            ErrorKind::DimensionMismatch);
}

TEST(conditional_entropy, minimum_in_eigenbasis) {
  for (int trial = 0; trial < 100; ++trial) {
    RngStream rng(2, trial);
    const Eigen::Index n = 2 + trial % 5;
    const DensityMatrix rho = random_density_matrix(n, rng);
    const double sh = von_neumann(rho);
    EXPECT_NEAR(conditional_entropy(rho, eig_hermitian(rho).basis), sh, 1e-10);
    const double random_basis = conditional_entropy(rho, haar_unitary(n, rng));
    EXPECT_GE(random_basis, sh - 1e-10);
    EXPECT_LE(random_basis, std::log(double(n)) + 1e-12);
  }
}

TEST(s0, exact_and_asymptotic) {
  EXPECT_EQ(s0_exact(1), 0.0);
  EXPECT_EQ(s0_exact(2), 0.5);
  EXPECT_NEAR(s0_exact(4), 13.0 / 12.0, 1e-16);
  EXPECT_NEAR(s0_asymptotic(2), kS0Asymptotic2, 1e-15);
  EXPECT_NEAR(s0_asymptotic(100), s0_exact(100), 2e-5);
  for (Eigen::Index n = 2; n <= 1000; ++n) {
    const double gap = s0_exact(n) - s0_asymptotic(n);
    EXPECT_LE(gap, 0.0) << n;
    EXPECT_GT(gap, -1.0 / (8.0 * n * n)) << n;
  }
}

TEST(excess_entropy, examples) {
  EXPECT_EQ(excess_entropy(spec({1, 0, 0, 0})), 0.0);
  EXPECT_NEAR(excess_entropy(spec({0.5, 0.5})), std::numbers::ln2 - 0.5, 1e-15);
  EXPECT_NEAR(excess_entropy(spec({0.75, 0.25})), kF7525, 1e-15);
  EXPECT_NEAR(excess_entropy(spec({0.7, 0.3})), kF7030, 1e-15);
  EXPECT_NEAR(excess_entropy(spec({0.7, 0.3, 0})), kF7030, 1e-15);
  EXPECT_NEAR(excess_entropy(spec({0.5, 0.3, 0.2})), kF532, 1e-14);
  EXPECT_NEAR(excess_entropy(spec({0.36, 0.24, 0.24, 0.16})), kF6464, 1e-14);
  EXPECT_NEAR(excess_entropy(uniform_mixture(16, 16)), kFUniform16, 1e-15);
}

TEST(excess_entropy, divided_difference_path_matches_fast_paths) {
  EXPECT_NEAR(excess_entropy_divided_difference(spec({0.75, 0.25})), kF7525, 1e-14);
  EXPECT_NEAR(excess_entropy_divided_difference(spec({0.7, 0.3})), kF7030, 1e-14);
  for (int n = 2; n <= 20; ++n) {
    EXPECT_NEAR(excess_entropy_divided_difference(uniform_mixture(n, n)), uniform_f(n), 1e-10) << n;
  }
}

TEST(excess_entropy, near_degenerate_pairs_are_continuous) {
  // Pairs approaching (0.5, 0.5) must approach ln 2 - 1/2.
  for (double d : {1e-2, 1e-3, 1e-4, 1e-6, 1e-8}) {
    const double f = excess_entropy(spec({0.5 + d, 0.5 - d}));
    EXPECT_NEAR(f, std::numbers::ln2 - 0.5, 2 * d * d + 1e-14) << d;
  }
}

TEST(excess_entropy, precision_tiers_agree) {
  const Spectrum s = spec({0.4, 0.25, 0.2, 0.1, 0.05});
  const double ref = excess_entropy_at(s, Precision::Digits100);
  EXPECT_NEAR(excess_entropy_at(s, Precision::Double), ref, 1e-12);
  EXPECT_NEAR(excess_entropy_at(s, Precision::Digits50), ref, 1e-15);
  EXPECT_NEAR(excess_entropy_at(s, Precision::Digits400), ref, 1e-15);
  EXPECT_NEAR(excess_entropy(s), ref, 1e-15);
}

TEST(excess_entropy, tier_selection_tracks_conditioning) {
  EXPECT_EQ(excess_entropy_precision(spec({0.7, 0.3})), Precision::Double);
  EXPECT_NE(excess_entropy_precision(spec({0.34, 0.33, 0.33 - 1e-6, 1e-6})), Precision::Double);
}

TEST(excess_entropy, large_near_uniform_spectra_stay_bounded) {
  RngStream rng(3);
  for (Eigen::Index n : {24, 32, 48}) {
    const Spectrum s = dirichlet_spectrum(n, rng, 1000.0);
    const double f = excess_entropy(s);
    EXPECT_GT(f, uniform_f(n) - 1e-3) << n;
    EXPECT_LE(f, uniform_f(n) + 1e-12) << n;
    EXPECT_LT(f, kOneMinusGamma);
  }
}

TEST(excess_entropy, zero_padding_invariance) {
  for (int trial = 0; trial < 50; ++trial) {
    RngStream rng(4, trial);
    const Spectrum s = dirichlet_spectrum(2 + trial % 6, rng);
    const double f = excess_entropy(s);
    for (Eigen::Index extra : {1, 3}) EXPECT_NEAR(excess_entropy(s.padded(s.dim() + extra)), f, 1e-10);
  }
}

TEST(excess_entropy, bounds) {
  for (int trial = 0; trial < 300; ++trial) {
    RngStream rng(5, trial);
    const double f = excess_entropy(dirichlet_spectrum(2 + trial % 12, rng));
    EXPECT_GE(f, 0.0);
    EXPECT_LT(f, kOneMinusGamma);
  }
  for (int n = 2; n <= 200; n += 7) EXPECT_LT(excess_entropy(uniform_mixture(n, n)), kOneMinusGamma);
}

TEST(excess_entropy, concavity) {
  for (int trial = 0; trial < 100; ++trial) {
    RngStream rng(6, trial);
    const Eigen::Index n = 2 + trial % 6;
    const Spectrum p = dirichlet_spectrum(n, rng), q = dirichlet_spectrum(n, rng);
    const double fp = excess_entropy(p), fq = excess_entropy(q);
    for (double lambda : {0.25, 0.5, 0.75}) {
      const Eigen::VectorXd mix = lambda * p.values() + (1 - lambda) * q.values();
      const Spectrum m = Spectrum::from_values(std::vector<double>(mix.data(), mix.data() + n));
      EXPECT_GE(excess_entropy(m), lambda * fp + (1 - lambda) * fq - 1e-10);
    }
  }
}

TEST(excess_entropy, uniform_curve_is_monotone) {
  double prev_h = -1, prev_f = -1;
  for (int n = 1; n <= 200; ++n) {
    const Spectrum s = uniform_mixture(n, n);
    const double h = shannon(s.values()), f = excess_entropy(s);
    EXPECT_GT(h, prev_h);
    EXPECT_GT(f, prev_f);
    prev_h = h;
    prev_f = f;
  }
  EXPECT_NEAR(prev_f, kOneMinusGamma, 1.0 / 200);
}

TEST(absolute_entropy, examples) {
  for (Eigen::Index n : {1, 2, 5, 17}) {
    EXPECT_NEAR(absolute_entropy(uniform_mixture(n, n), n).s_total, std::log(double(n)), 1e-14);
  }
  EXPECT_EQ(absolute_entropy(spec({1, 0}), 2).s_total, 0.5);
  EXPECT_NEAR(absolute_entropy(uniform_mixture(2, 4), 4).s_total, kUniform2In4, 1e-15);
  EXPECT_NEAR(absolute_entropy(spec({0.75, 0.25}), 2).s_total, 0.5 + kF7525, 1e-15);
  EXPECT_EQ(kind_of([] { absolute_entropy(spec({0.7, 0.3}), 3); }), ErrorKind::DimensionMismatch);
}

TEST(absolute_entropy, report_invariants) {
  for (int trial = 0; trial < 100; ++trial) {
    RngStream rng(7, trial);
    const DensityMatrix rho = random_density_matrix(1 + trial % 7, rng);
    const EntropyReport r = entropy_report(rho);
    EXPECT_EQ(r.method, EntropyMethod::ClosedForm);
    EXPECT_NEAR(r.s_total, r.s0 + r.s_f, 1e-12);
    EXPECT_GE(r.s_f, 0.0);
    EXPECT_LT(r.s_f, kOneMinusGamma);
  }
  RngStream rng(8);
  const EntropyReport pure = entropy_report(random_pure_state(4, rng).density());
  EXPECT_NEAR(pure.s_h, 0.0, 1e-10);
  EXPECT_NEAR(pure.s_f, 0.0, 1e-10);
}

TEST(absolute_entropy, uniform_mixture_formula) {
  for (int big_n = 2; big_n <= 12; ++big_n) {
    for (int n = 1; n <= big_n; ++n) {
      EXPECT_NEAR(absolute_entropy(uniform_mixture(n, big_n), big_n).s_total,
                  std::log(double(n)) + harmonic_tail(n, big_n), 1e-13);
    }
  }
}

TEST(density_p, examples) {
  for (double s : {0.0, 0.1, 0.5, 0.99}) EXPECT_NEAR(density_p(spec({1, 0}), 2, s), 1.0, 1e-15);
  EXPECT_NEAR(density_p(spec({1, 0, 0}), 3, 0.5), 1.0, 1e-15);
  EXPECT_NEAR(density_p(spec({0.7, 0.3}), 2, 0.5), 2.5, 1e-14);
  EXPECT_EQ(density_p(spec({0.7, 0.3}), 2, 0.8), 0.0);
  EXPECT_EQ(kind_of([] { density_p(spec({0.4, 0.3, 0.3}), 3, 0.2); }), ErrorKind::DegenerateSpectrum);
  EXPECT_EQ(kind_of([] { density_p(spec({0.7, 0.3}), 2, 1.5); }), ErrorKind::InvalidArgument);
}

TEST(density_p, curve_normalization) {
  for (int trial = 0; trial < 10; ++trial) {
    RngStream rng(9, trial);
    const Spectrum s = separated_dirichlet(2 + trial % 5, rng, 0.02);
    const DensityCurve c = density_curve(s, s.dim(), 20001);
    EXPECT_NEAR(c.trapezoid_integral(), 1.0, 1e-6);
    for (double d : c.densities) EXPECT_GE(d, 0.0);
  }
}

TEST(kernel_integral, examples) {
  EXPECT_NEAR(kernel_integral(1.0, 2), -0.25, 1e-16);
  EXPECT_NEAR(kernel_integral(1.0, 3), -5.0 / 36.0, 1e-16);
}

TEST(kernel_integral, matches_numerical_integration) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  for (double p : {1.0, 0.7, 0.31, 0.05}) {
    for (long n = 2; n <= 9; ++n) {
      auto integrand = [&](double s) { return s <= 0 ? 0.0 : std::pow(p - s, double(n - 2)) * s * std::log(s); };
      const double numeric = integrator.integrate(integrand, 0.0, p, 1e-14);
      EXPECT_NEAR(kernel_integral(p, n), numeric, 1e-10) << "p=" << p << " N=" << n;
    }
  }
}

TEST(entropy_by_quadrature, examples) {
  EXPECT_NEAR(entropy_by_quadrature(spec({1, 0}), 2), 0.5, 1e-15);
  EXPECT_NEAR(entropy_by_quadrature(spec({0.7, 0.3}), 2), absolute_entropy(spec({0.7, 0.3}), 2).s_total, 1e-10);
  EXPECT_NEAR(entropy_by_quadrature(spec({0.5, 0.3, 0.2}), 3), 1.0812101169756326, 1e-8);
  EXPECT_EQ(kind_of([] { entropy_by_quadrature(spec({0.25, 0.25, 0.5}), 3); }), ErrorKind::DegenerateSpectrum);
}

TEST(entropy_by_quadrature, path_equivalence) {
  for (int trial = 0; trial < 100; ++trial) {
    RngStream rng(10, trial);
    const Spectrum s = separated_dirichlet(2 + trial % 7, rng, 1e-3);
    EXPECT_NEAR(entropy_by_quadrature(s, s.dim()), absolute_entropy(s, s.dim()).s_total, 1e-8);
  }
}

TEST(entropy_by_quadrature, accepts_zero_padding) {
  const Spectrum s = spec({0.6, 0.3, 0.1, 0, 0});
  EXPECT_NEAR(entropy_by_quadrature(s, 5), absolute_entropy(s, 5).s_total, 1e-10);
}

TEST(identity_residuals, examples) {
  const IdentityResiduals r = identity_residuals(spec({0.7, 0.3}), 0.4);
  EXPECT_LE(r.sum_rule, 1e-15);
  ASSERT_EQ(r.moments.size(), 1u);
  EXPECT_LE(r.moments[0], 1e-15);
  for (int trial = 0; trial < 20; ++trial) {
    RngStream rng(11, trial);
    const Spectrum s = separated_dirichlet(5, rng, 0.02);
    const IdentityResiduals res = identity_residuals(s, rng.uniform());
    EXPECT_LE(res.sum_rule, 1e-9);
    for (double m : res.moments) EXPECT_LE(m, 1e-9);
  }
}

TEST(perturb_spectrum, spreads_clusters) {
  const Spectrum s = spec({0.4, 0.3, 0.3});
  const Spectrum p = perturb_spectrum(s, 1e-4);
  EXPECT_TRUE(p.nonzero_values_distinct());
  EXPECT_NEAR(p.values().sum(), 1.0, 1e-15);
  EXPECT_NEAR(entropy_by_quadrature(p, 3), absolute_entropy(s, 3).s_total, 1e-5);
  EXPECT_EQ(kind_of([&] { perturb_spectrum(s, 1e-12); }), ErrorKind::InvalidArgument);
}

TEST(spectrum, clustering_and_validation) {
  const Spectrum s = spec({0.3, 0.3 + 1e-12, 0.4 - 1e-12, 0});
  ASSERT_EQ(s.clusters().size(), 3u);
  EXPECT_EQ(s.clusters()[1].multiplicity, 2);
  EXPECT_EQ(s.zero_count(), 1);
  EXPECT_FALSE(s.nonzero_values_distinct());
  EXPECT_EQ(kind_of([] { spec({0.5, 0.6}); }), ErrorKind::TraceDeviation);
  EXPECT_EQ(kind_of([] { spec({0.7, 0.5, -0.2}); }), ErrorKind::NegativeEigenvalue);
}
