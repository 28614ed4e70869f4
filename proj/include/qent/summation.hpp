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

#include <cmath>

namespace qent {

/// Kahan–Babuška–Neumaier compensated accumulator.
template <typename T = double>
class NeumaierSum {
 public:
  NeumaierSum() = default;
  explicit NeumaierSum(T init) : sum_(init) {}

  NeumaierSum &operator+=(T x) {
    const T t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  T value() const { return sum_ + comp_; }

 private:
  T sum_{0};
  T comp_{0};
};

/// H_b - H_a = sum_{k=a+1}^{b} 1/k, summed from the small terms up.
inline double harmonic_range(long a, long b) {
  NeumaierSum<double> acc;
  for (long k = b; k > a; --k) acc += 1.0 / static_cast<double>(k);
  return acc.value();
}

}  // namespace qent
