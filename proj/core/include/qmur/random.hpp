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


// Random problem instances for property sweeps. All draws go through Rng,
// so a sweep is reproducible from its seed on any platform.

#ifndef QMUR_RANDOM_HPP
#define QMUR_RANDOM_HPP

#include <utility>

#include "qmur/bloch.hpp"
#include "qmur/montecarlo.hpp"

namespace qmur {

/// Uniform on [lo, hi).
double uniform(Rng& rng, double lo, double hi);

/// Uniform on the unit sphere.
BlochVector random_unit(Rng& rng);

/// Uniform in the ball of the given radius.
BlochVector random_in_ball(Rng& rng, double radius = 1.0);

/// Pure with probability 1/2, otherwise uniform in the Bloch ball.
QubitState random_state(Rng& rng);

/// Unbiased-compatible Bloch vector pair (|c - d| + |c + d| <= 2). About a
/// quarter of the draws are scaled onto the compatibility boundary.
std::pair<BlochVector, BlochVector> random_compatible_pair(Rng& rng);

/// Observable with Bloch vector `e` and a bias drawn uniformly from the
/// range allowed by positivity.
BinaryObservable random_bias(Rng& rng, const BlochVector& e);

}  // namespace qmur

#endif  // QMUR_RANDOM_HPP
