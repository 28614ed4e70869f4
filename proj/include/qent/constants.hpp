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

namespace qent {

/// Euler–Mascheroni constant to 16 significant digits.
inline constexpr double kEulerGamma = 0.5772156649015329;

/// Supremum of the excess statistical entropy.
inline constexpr double kExcessEntropyBound = 1.0 - kEulerGamma;

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-10;
inline constexpr double kNegativeEigenvalueTolerance = 1e-10;
inline constexpr double kOrthonormalityTolerance = 1e-10;
inline constexpr double kDefaultClusterTolerance = 1e-9;

/// Margin below which an inequality trial counts as a violation.
inline constexpr double kInequalityMargin = 1e-9;

/// Default seed when neither --seed nor QENT_SEED is given.
inline constexpr unsigned long long kDefaultSeed = 0x5EED;

}  // namespace qent
