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


#include "qmur/random.hpp"

#include <cmath>

namespace qmur {

double uniform(Rng& rng, double lo, double hi) { return lo + (hi - lo) * rng.uniform(); }

BlochVector random_unit(Rng& rng) {
  for (;;) {
    const BlochVector v = random_in_ball(rng);
    const double n = norm(v);
    if (n > 1e-3) return v / n;
  }
}

BlochVector random_in_ball(Rng& rng, double radius) {
  for (;;) {
    const BlochVector v{uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0),
                        uniform(rng, -1.0, 1.0)};
    if (squared_norm(v) <= 1.0) return radius * v;
  }
}

QubitState random_state(Rng& rng) {
  if (rng.uniform() < 0.5) return QubitState(random_unit(rng));
  return QubitState(random_in_ball(rng));
}

std::pair<BlochVector, BlochVector> random_compatible_pair(Rng& rng) {
  const bool on_boundary = rng.uniform() < 0.25;
  for (;;) {
    BlochVector c = random_in_ball(rng);
    BlochVector d = random_in_ball(rng);
    const double f = distance(c, d) + norm(c + d);
    if (on_boundary) {
      // f is homogeneous of degree one, so rescaling lands on f = 2.
      const double s = 2.0 / f;
      c *= s;
      d *= s;
      if (norm(c) <= 1.0 && norm(d) <= 1.0) return {c, d};
    } else if (f <= 2.0) {
      return {c, d};
    }
  }
}

BinaryObservable random_bias(Rng& rng, const BlochVector& e) {
  const double n = norm(e);
  return BinaryObservable(uniform(rng, n, 2.0 - n), e);
}

}  // namespace qmur
