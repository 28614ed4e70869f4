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

// Scalar-generic kernels behind the excess entropy and the Lagrange-form
// paths. Every routine is a template on the working scalar so the same code
// runs in double or in one of the multiprecision tiers below; callers pick
// the tier from a conditioning estimate and round the result back to double.

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "qent/spectrum.hpp"

namespace qent {

template <unsigned Digits>
using BinFloat = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<Digits>,
                                               boost::multiprecision::et_off>;

/// Working precisions, in decimal digits (Double means IEEE binary64).
enum class Precision { Double = 16, Digits50 = 50, Digits100 = 100, Digits200 = 200, Digits400 = 400 };

/// Smallest tier whose digit count covers `lost_digits` plus a 20-digit
/// working margin. Double is used while fewer than 3 digits are at stake.
inline Precision select_precision(double lost_digits) {
  if (lost_digits <= 3.0) return Precision::Double;
  const double need = lost_digits + 20.0;
  if (need <= 50.0) return Precision::Digits50;
  if (need <= 100.0) return Precision::Digits100;
  if (need <= 200.0) return Precision::Digits200;
  return Precision::Digits400;
}

/// Calls fn.template operator()<Scalar>() with the scalar type of `p`.
template <typename Fn>
decltype(auto) with_precision(Precision p, Fn &&fn) {
  switch (p) {
    case Precision::Double: return fn.template operator()<double>();
    case Precision::Digits50: return fn.template operator()<BinFloat<50>>();
    case Precision::Digits100: return fn.template operator()<BinFloat<100>>();
    case Precision::Digits200: return fn.template operator()<BinFloat<200>>();
    case Precision::Digits400: break;
  }
  return fn.template operator()<BinFloat<400>>();
}

template <typename Scalar>
double to_double(const Scalar &x) {
  return static_cast<double>(x);
}

/// H_b - H_a in the working scalar.
template <typename Scalar>
Scalar harmonic_difference(long a, long b) {
  Scalar acc = 0;
  for (long k = b; k > a; --k) acc += Scalar(1) / Scalar(k);
  return acc;
}

/// Node z with multiplicity m: the table sees z repeated m times.
struct HermiteNode {
  double value;
  int multiplicity;
};

/// Digits lost in the Newton table over `nodes` (any order).
///
/// Each level k divides differences of the previous level by the spans
/// z_{i+k} - z_i; the worst-case growth is the product over levels of
/// 2 / min_i span. Confluent spans use derivative seeds and do not divide.
inline double newton_table_lost_digits(std::span<const HermiteNode> nodes) {
  std::vector<double> z;
  for (const auto &n : nodes) z.insert(z.end(), n.multiplicity, n.value);
  std::sort(z.begin(), z.end());
  const std::size_t m = z.size();
  double lost = 0.0;
  for (std::size_t k = 1; k < m; ++k) {
    double min_span = INFINITY;
    for (std::size_t i = 0; i + k < m; ++i) {
      const double span = z[i + k] - z[i];
      if (span > 0.0) min_span = std::min(min_span, span);
    }
    if (std::isfinite(min_span)) lost += std::max(0.0, std::log10(2.0 / min_span));
  }
  return lost;
}

/// Confluent (Hermite) divided difference [z_0, ..., z_{m-1}] g.
///
/// `seed(x, k)` must return g^(k)(x) / k! in Scalar; it is called with k = 0
/// for every node and with k < multiplicity for repeated nodes. Nodes are
/// sorted ascending so repeated values sit next to each other in the table.
template <typename Scalar, typename Seed>
Scalar confluent_divided_difference(std::span<const HermiteNode> nodes, Seed &&seed) {
  std::vector<HermiteNode> sorted(nodes.begin(), nodes.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const HermiteNode &a, const HermiteNode &b) { return a.value < b.value; });
  std::vector<Scalar> z;
  std::vector<Scalar> t;
  for (const auto &n : sorted) {
    if (n.multiplicity < 1) throw std::invalid_argument("node multiplicity must be >= 1");
    const Scalar x(n.value);
    const Scalar g0 = seed(x, 0);
    for (int c = 0; c < n.multiplicity; ++c) {
      z.push_back(x);
      t.push_back(g0);
    }
  }
  const std::size_t m = z.size();
  if (m == 0) throw std::invalid_argument("divided difference needs at least one node");
  for (std::size_t k = 1; k < m; ++k) {
    for (std::size_t i = m - 1; i >= k; --i) {
      if (z[i] == z[i - k]) {
        t[i] = seed(z[i], static_cast<int>(k));
      } else {
        t[i] = (t[i] - t[i - 1]) / (z[i] - z[i - k]);
      }
    }
  }
  return t[m - 1];
}

/// Lagrange weights w_r = prod_{r' != r} 1 / (p_r - p_r') over all entries.
/// Entries equal to zero get weight 0 (they are never used with a nonzero
/// integrand); callers reject repeated nonzero entries beforehand.
template <typename Scalar>
std::vector<Scalar> lagrange_weights(std::span<const double> p) {
  std::vector<Scalar> w(p.size(), Scalar(0));
  for (std::size_t r = 0; r < p.size(); ++r) {
    if (p[r] == 0.0) continue;
    const Scalar pr(p[r]);
    Scalar prod(1);
    for (std::size_t q = 0; q < p.size(); ++q) {
      if (q != r) prod *= pr - Scalar(p[q]);
    }
    w[r] = Scalar(1) / prod;
  }
  return w;
}

/// Same as lagrange_weights but keeps zero entries (needs all entries distinct).
template <typename Scalar>
std::vector<Scalar> lagrange_weights_all(std::span<const double> p) {
  std::vector<Scalar> w(p.size());
  for (std::size_t r = 0; r < p.size(); ++r) {
    const Scalar pr(p[r]);
    Scalar prod(1);
    for (std::size_t q = 0; q < p.size(); ++q) {
      if (q != r) prod *= pr - Scalar(p[q]);
    }
    w[r] = Scalar(1) / prod;
  }
  return w;
}

/// log10 of the largest |w_r|, skipping zero entries.
inline double lagrange_weight_log10(std::span<const double> p) {
  double worst = 0.0;
  for (std::size_t r = 0; r < p.size(); ++r) {
    if (p[r] == 0.0) continue;
    double s = 0.0;
    for (std::size_t q = 0; q < p.size(); ++q) {
      if (q != r) s -= std::log10(std::abs(p[r] - p[q]));
    }
    worst = std::max(worst, s);
  }
  return worst;
}

}  // namespace qent
