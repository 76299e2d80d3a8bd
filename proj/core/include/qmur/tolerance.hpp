// Copyright 2026 The qmur Authors
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

#ifndef QMUR_TOLERANCE_HPP
#define QMUR_TOLERANCE_HPP

namespace qmur::tol {

// Positivity of effects and joint-observable elements; also the slack
// allowed on the compatibility boundary, where optimizers sit at saturation.
inline constexpr double kPositivity = 1e-12;
inline constexpr double kCompatibility = 1e-12;

inline constexpr double kHermiticity = 1e-12;

// Unit-length checks for axis vectors.
inline constexpr double kUnit = 1e-9;

// Bias/sharpness classification.
inline constexpr double kSharpness = 1e-12;

// Lower bound of an inequality may be undercut by this much before it
// counts as a violation.
inline constexpr double kSlack = 1e-9;

// |slack| at or below this value is reported as saturated.
inline constexpr double kSaturation = 1e-6;

// Disagreement allowed between a closed form and its matrix-route twin.
inline constexpr double kCrossCheck = 1e-10;

}  // namespace qmur::tol

#endif  // QMUR_TOLERANCE_HPP
