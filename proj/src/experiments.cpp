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

#include "qent/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qent/constants.hpp"
#include "qent/entropy.hpp"
#include "qent/errors.hpp"
#include "qent/parallel.hpp"
#include "qent/summation.hpp"

namespace qent {
namespace {

enum FamilyCode : std::uint64_t {
  kEi1Random = 1,
  kEi2Product = 2,
  kEi3Product = 3,
  kEi3Correlated = 4,
  kMeasurement = 5,
};

std::uint64_t trial_stream(FamilyCode family, std::size_t dims_index, long trial) {
  return (static_cast<std::uint64_t>(family) << 48) | (static_cast<std::uint64_t>(dims_index) << 32) |
         static_cast<std::uint64_t>(trial);
}

struct Outcome {
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  std::vector<Eigen::MatrixXcd> inputs;
};

FamilyCode family_code(InequalityId id, std::string_view family) {
  if (id == InequalityId::Ei1 && family == "hs-random") return kEi1Random;
  if (id == InequalityId::Ei2 && family == "hs-product") return kEi2Product;
  if (id == InequalityId::Ei3 && family == "hs-product") return kEi3Product;
  if (id == InequalityId::Ei3 && family == "correlated") return kEi3Correlated;
  if (id == InequalityId::MeasurementMonotonicity && family == "hs-random") return kMeasurement;
  throw ValidationError(ErrorKind::InvalidArgument, "no random trial generator for this family");
}

Outcome run_trial(FamilyCode code, Eigen::Index n, Eigen::Index m, RngStream rng) {
  Outcome out;
  switch (code) {
    case kEi1Random: {
      const DensityMatrix rho = random_density_matrix(n * m, rng);
      const double whole = entropy_report(rho).s_total;
      const double a = entropy_report(partial_trace(rho, {n, m}, Subsystem::A)).s_total;
      const double b = entropy_report(partial_trace(rho, {n, m}, Subsystem::B)).s_total;
      out.lhs = std::max(a, b);
      out.rhs = whole;
      out.margin = whole - out.lhs;
      out.inputs = {rho.matrix()};
      break;
    }
    case kEi2Product:
    case kEi3Product: {
      const DensityMatrix a = random_density_matrix(n, rng);
      const DensityMatrix b = random_density_matrix(m, rng);
      const EntropyReport ra = entropy_report(a);
      const EntropyReport rb = entropy_report(b);
      const EntropyReport rr = entropy_report(tensor(a, b));
      if (code == kEi2Product) {
        out.lhs = rr.s_total;
        out.rhs = ra.s_total + rb.s_total;
        out.margin = out.lhs - out.rhs;
      } else {
        out.lhs = rr.s_f;
        out.rhs = ra.s_f + rb.s_f;
        out.margin = out.rhs - out.lhs;
      }
      out.inputs = {a.matrix(), b.matrix()};
      break;
    }
    case kEi3Correlated: {
      const DensityMatrix rho = random_density_matrix(n * m, rng);
      const double whole = entropy_report(rho).s_f;
      const double a = entropy_report(partial_trace(rho, {n, m}, Subsystem::A)).s_f;
      const double b = entropy_report(partial_trace(rho, {n, m}, Subsystem::B)).s_f;
      out.lhs = whole;
      out.rhs = a + b;
      out.margin = out.rhs - out.lhs;
      out.inputs = {rho.matrix()};
      break;
    }
    case kMeasurement: {
      const DensityMatrix rho = random_density_matrix(n, rng);
      const MeasurementBasis basis = haar_unitary(n, rng);
      const DensityMatrix sigma = projective_update(rho, rank_one_projectors(basis));
      out.lhs = entropy_report(sigma).s_total;
      out.rhs = entropy_report(rho).s_total;
      out.margin = out.lhs - out.rhs;
      out.inputs = {rho.matrix(), basis.unitary()};
      break;
    }
  }
  return out;
}

InequalityReport new_report(InequalityId id, std::string family, bool asserted) {
  InequalityReport r;
  r.id = id;
  r.family = std::move(family);
  r.asserted = asserted;
  return r;
}

void record(InequalityReport &report, const Outcome &o, Certificate cert) {
  ++report.trials;
  if (report.trials == 1 || o.margin < report.worst_margin) report.worst_margin = o.margin;
  if (o.margin < -kInequalityMargin) {
    ++report.violations;
    cert.lhs = o.lhs;
    cert.rhs = o.rhs;
    cert.margin = o.margin;
    cert.inputs = o.inputs;
    report.certificates.push_back(std::move(cert));
  }
}

InequalityReport random_family(InequalityId id, std::string family, bool asserted, long trials,
                               const std::vector<std::pair<Eigen::Index, Eigen::Index>> &dims,
                               const RngStream &rng, unsigned workers) {
  const FamilyCode code = family_code(id, family);
  const auto substream = static_cast<std::uint32_t>(rng.stream_id());
  InequalityReport report = new_report(id, family, asserted);
  for (std::size_t d = 0; d < dims.size(); ++d) {
    const auto [n, m] = dims[d];
    std::vector<Outcome> outcomes(trials);
    parallel_for(static_cast<std::size_t>(trials), workers, [&](std::size_t t) {
      outcomes[t] = run_trial(code, n, m, RngStream(rng.seed(), trial_stream(code, d, static_cast<long>(t)), substream));
    });
    for (long t = 0; t < trials; ++t) {
      Certificate cert;
      cert.id = id;
      cert.family = family;
      cert.seed = rng.seed();
      cert.stream_id = trial_stream(code, d, t);
      cert.substream = substream;
      cert.n = n;
      cert.m = m;
      record(report, outcomes[t], std::move(cert));
    }
  }
  return report;
}

/// Uniform mixtures of n <= N and m <= M states, for ei2 and ei3.
InequalityReport uniform_product_family(InequalityId id,
                                        const std::vector<std::pair<Eigen::Index, Eigen::Index>> &dims) {
  InequalityReport report = new_report(id, "uniform-product", true);
  for (const auto &[big_n, big_m] : dims) {
    for (Eigen::Index n = 1; n <= big_n; ++n) {
      for (Eigen::Index m = 1; m <= big_m; ++m) {
        const DensityMatrix a = diagonal_state(uniform_mixture(n, big_n));
        const DensityMatrix b = diagonal_state(uniform_mixture(m, big_m));
        const EntropyReport ra = entropy_report(a);
        const EntropyReport rb = entropy_report(b);
        const EntropyReport rr = entropy_report(tensor(a, b));
        Outcome o;
        if (id == InequalityId::Ei2) {
          o.lhs = rr.s_total;
          o.rhs = ra.s_total + rb.s_total;
          o.margin = o.lhs - o.rhs;
        } else {
          o.lhs = rr.s_f;
          o.rhs = ra.s_f + rb.s_f;
          o.margin = o.rhs - o.lhs;
        }
        o.inputs = {a.matrix(), b.matrix()};
        Certificate cert;
        cert.id = id;
        cert.family = report.family;
        cert.n = big_n;
        cert.m = big_m;
        record(report, o, std::move(cert));
      }
    }
  }
  return report;
}

}  // namespace

std::string_view mixture_name(MixtureKind k) {
  return k == MixtureKind::Uniform ? "uniform" : "random_mixture";
}

std::string_view inequality_name(InequalityId id) {
  switch (id) {
    case InequalityId::Ei1: return "ei1";
    case InequalityId::Ei2: return "ei2";
    case InequalityId::Ei3: return "ei3";
    case InequalityId::Ei3a: return "ei3a";
    case InequalityId::MeasurementMonotonicity: return "measurement_monotonicity";
  }
  return "unknown";
}

std::vector<Fig1Row> fig1_uniform_curve(Eigen::Index max_n) {
  if (max_n < 2) throw ValidationError(ErrorKind::InvalidArgument, "fig1 curve needs max_n >= 2");
  std::vector<Fig1Row> rows;
  rows.reserve(max_n);
  for (Eigen::Index n = 1; n <= max_n; ++n) {
    const double ln_n = std::log(static_cast<double>(n));
    rows.push_back({ln_n, ln_n - harmonic_range(1, static_cast<long>(n)), MixtureKind::Uniform, n, max_n});
  }
  return rows;
}

std::vector<Fig1Row> fig1_random_mixtures(Eigen::Index dim, long count, const RngStream &rng,
                                          unsigned workers) {
  if (count < 1 || dim < 1) throw ValidationError(ErrorKind::InvalidArgument, "fig1 mixtures need count, dim >= 1");
  std::vector<Fig1Row> rows(count);
  parallel_for(static_cast<std::size_t>(count), workers, [&](std::size_t i) {
    RngStream local(rng.seed(), rng.stream_id() + i);
    const Spectrum p = dirichlet_spectrum(dim, local);
    const Eigen::Index nonzero = dim - p.zero_count();
    rows[i] = {shannon(p.values()), excess_entropy(p), MixtureKind::RandomMixture, nonzero, dim};
  });
  return rows;
}

double uniform_curve_at(const std::vector<Fig1Row> &curve, double s_h) {
  if (curve.empty()) throw std::invalid_argument("empty curve");
  if (s_h <= curve.front().s_h) return curve.front().s_f;
  for (std::size_t i = 1; i < curve.size(); ++i) {
    if (s_h <= curve[i].s_h) {
      const double t = (s_h - curve[i - 1].s_h) / (curve[i].s_h - curve[i - 1].s_h);
      return curve[i - 1].s_f + t * (curve[i].s_f - curve[i - 1].s_f);
    }
  }
  return curve.back().s_f;
}

EnvelopeSummary fig1_envelope(const std::vector<Fig1Row> &curve, const std::vector<Fig1Row> &rows,
                              double tolerance) {
  EnvelopeSummary out;
  for (const auto &r : rows) {
    const double dev = std::abs(r.s_f - uniform_curve_at(curve, r.s_h));
    out.max_deviation = std::max(out.max_deviation, dev);
    if (dev > tolerance) ++out.outside;
  }
  return out;
}

std::vector<InsetRow> fig1_inset(Eigen::Index max_dim) {
  if (max_dim < 2) throw ValidationError(ErrorKind::InvalidArgument, "inset needs max_dim >= 2");
  std::vector<InsetRow> rows;
  rows.reserve(max_dim);
  for (Eigen::Index n = 1; n <= max_dim; ++n) rows.push_back({n, s0_exact(n), s0_asymptotic(n), n >= 2});
  return rows;
}

std::vector<InequalityReport> inequality_suite(long trials,
                                               const std::vector<std::pair<Eigen::Index, Eigen::Index>> &dims,
                                               const RngStream &rng, unsigned workers,
                                               const std::vector<InequalityId> &ids) {
  const auto wanted = [&](InequalityId id) { return ids.empty() || std::ranges::find(ids, id) != ids.end(); };
  if (trials < 0) throw ValidationError(ErrorKind::InvalidArgument, "trials must be >= 0");
  Eigen::Index max_dim = 2;
  for (const auto &[n, m] : dims) {
    if (n < 2 || m < 2) throw ValidationError(ErrorKind::InvalidArgument, "inequality dims must be >= 2");
    max_dim = std::max({max_dim, n, m});
  }
  std::vector<InequalityReport> out;
  if (wanted(InequalityId::Ei1)) {
    out.push_back(random_family(InequalityId::Ei1, "hs-random", true, trials, dims, rng, workers));
  }
  if (wanted(InequalityId::Ei2)) {
    out.push_back(random_family(InequalityId::Ei2, "hs-product", true, trials, dims, rng, workers));
    out.push_back(uniform_product_family(InequalityId::Ei2, dims));
  }
  if (wanted(InequalityId::Ei3)) {
    out.push_back(uniform_product_family(InequalityId::Ei3, dims));
    out.push_back(random_family(InequalityId::Ei3, "hs-product", false, trials, dims, rng, workers));
    out.push_back(random_family(InequalityId::Ei3, "correlated", false, trials, dims, rng, workers));
  }
  if (!wanted(InequalityId::Ei3a)) return out;

  InequalityReport ei3a = new_report(InequalityId::Ei3a, "dims", true);
  for (const auto &[n, m] : dims) {
    Outcome o;
    o.lhs = s0_exact(n * m);
    o.rhs = s0_exact(n) + s0_exact(m);
    o.margin = o.lhs - o.rhs;
    Certificate cert;
    cert.id = InequalityId::Ei3a;
    cert.family = "dims";
    cert.n = n;
    cert.m = m;
    record(ei3a, o, std::move(cert));
  }
  out.push_back(std::move(ei3a));
  return out;
}

InequalityReport ei3a_grid(Eigen::Index max_dim) {
  InequalityReport report = new_report(InequalityId::Ei3a, "grid", true);
  for (Eigen::Index n = 2; n <= max_dim; ++n) {
    for (Eigen::Index m = 2; m <= max_dim; ++m) {
      Outcome o;
      o.lhs = s0_exact(n * m);
      o.rhs = s0_exact(n) + s0_exact(m);
      o.margin = o.lhs - o.rhs;
      Certificate cert;
      cert.id = InequalityId::Ei3a;
      cert.family = "grid";
      cert.n = n;
      cert.m = m;
      record(report, o, std::move(cert));
    }
  }
  return report;
}

InequalityReport harmonic_chain_check(Eigen::Index max_dim) {
  InequalityReport report = new_report(InequalityId::Ei2, "harmonic-chain", true);
  for (long big_n = 2; big_n <= max_dim; ++big_n) {
    for (long big_m = 2; big_m <= max_dim; ++big_m) {
      for (long n = 2; n <= big_n; ++n) {
        for (long m = 2; m <= big_m; ++m) {
          const double lhs = harmonic_range(n * m, big_n * big_m);
          const double rhs = harmonic_range(n, big_n) + harmonic_range(m, big_m);
          // Regrouped double sums must reproduce the left-hand side.
          NeumaierSum<double> regrouped;
          for (long k1 = n + 1; k1 <= big_n; ++k1) {
            for (long l1 = 0; l1 < m; ++l1) regrouped += 1.0 / static_cast<double>(k1 * m - l1);
          }
          for (long k2 = m + 1; k2 <= big_m; ++k2) {
            for (long l2 = 0; l2 < big_n; ++l2) regrouped += 1.0 / static_cast<double>(k2 * big_n - l2);
          }
          const bool strict = (n != big_n) || (m != big_m);
          Outcome o;
          o.lhs = lhs;
          o.rhs = rhs;
          o.margin = lhs - rhs;
          const double regroup_error = std::abs(regrouped.value() - lhs);
          if (regroup_error > 1e-12) o.margin = -regroup_error;
          if (strict && o.margin <= 0.0) o.margin = std::min(o.margin, -2 * kInequalityMargin);
          Certificate cert;
          cert.id = InequalityId::Ei2;
          cert.family = "harmonic-chain";
          cert.n = big_n;
          cert.m = big_m;
          record(report, o, std::move(cert));
        }
      }
    }
  }
  return report;
}

InequalityReport measurement_conjecture_scan(long trials, Eigen::Index dim, const RngStream &rng,
                                             unsigned workers) {
  if (trials < 1) throw ValidationError(ErrorKind::InvalidArgument, "scan needs trials >= 1");
  return random_family(InequalityId::MeasurementMonotonicity, "hs-random", false, trials, {{dim, 0}}, rng,
                       workers);
}

double reverify(const Certificate &c) {
  const FamilyCode code = family_code(c.id, c.family);
  return run_trial(code, c.n, c.m, RngStream(c.seed, c.stream_id, c.substream)).margin;
}

}  // namespace qent
