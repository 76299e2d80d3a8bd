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

#include "qmur/transport.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qmur/errors.hpp"

namespace qmur {

namespace {

void require_unit_values(const BinaryObservable& obs, const char* what) {
  if (!obs.has_unit_values()) {
    throw InvalidArgument(std::string(what) + " must carry outcome labels +1/-1");
  }
}

double sq(double x) { return x * x; }

}  // namespace

BinaryDistribution::BinaryDistribution(double p_plus, OutcomeValues values)
    : p_plus_(p_plus), values_(values) {
  if (!(p_plus >= 0.0 && p_plus <= 1.0)) {
    throw InvalidArgument("p_plus must lie in [0, 1], got " + std::to_string(p_plus));
  }
  if (!(values.plus > values.minus)) {
    throw InvalidArgument("binary distribution requires v+ > v-");
  }
}

BinaryDistribution distribution(const BinaryObservable& obs, const QubitState& rho) {
  // Rounding can push a valid probability a hair outside [0, 1].
  const double p = std::clamp(probability(obs, Outcome::plus, rho), 0.0, 1.0);
  return BinaryDistribution(p, {obs.value_plus(), obs.value_minus()});
}

Coupling Coupling::with_gamma(const BinaryDistribution& d1, const BinaryDistribution& d2,
                              double gamma) {
  const double p = d1.p_plus();
  const double q = d2.p_plus();
  return {gamma, p - gamma, q - gamma, 1.0 - p - q + gamma};
}

bool Coupling::is_valid_for(const BinaryDistribution& d1, const BinaryDistribution& d2,
                            double tol) const {
  if (pp < -tol || pm < -tol || mp < -tol || mm < -tol) return false;
  return std::abs(pp + pm - d1.p_plus()) <= tol && std::abs(mp + mm - d1.p_minus()) <= tol &&
         std::abs(pp + mp - d2.p_plus()) <= tol && std::abs(pm + mm - d2.p_minus()) <= tol;
}

std::pair<double, double> feasible_gamma_range(const BinaryDistribution& d1,
                                               const BinaryDistribution& d2) {
  const double p = d1.p_plus();
  const double q = d2.p_plus();
  return {std::max(0.0, p + q - 1.0), std::min(p, q)};
}

double coupling_cost(const Coupling& c, const OutcomeValues& values1,
                     const OutcomeValues& values2) {
  return c.pp * sq(values1.plus - values2.plus) + c.pm * sq(values1.plus - values2.minus) +
         c.mp * sq(values1.minus - values2.plus) + c.mm * sq(values1.minus - values2.minus);
}

Coupling optimal_coupling(const BinaryDistribution& d1, const BinaryDistribution& d2) {
  return Coupling::with_gamma(d1, d2, feasible_gamma_range(d1, d2).second);
}

double wasserstein2_sq(const BinaryDistribution& d1, const BinaryDistribution& d2) {
  return coupling_cost(optimal_coupling(d1, d2), d1.values(), d2.values());
}

double delta_sq_state(const BinaryObservable& e, const BinaryObservable& f,
                      const QubitState& rho) {
  require_unit_values(e, "first observable");
  require_unit_values(f, "second observable");
  return 2.0 * std::abs(e.bias() - f.bias() + dot(rho.bloch(), e.vector() - f.vector()));
}

double delta_sq_worst(const BinaryObservable& e, const BinaryObservable& f) {
  require_unit_values(e, "first observable");
  require_unit_values(f, "second observable");
  return 2.0 * std::abs(e.bias() - f.bias()) + 2.0 * distance(e.vector(), f.vector());
}

QubitState worst_case_state(const BinaryObservable& e, const BinaryObservable& f) {
  const BlochVector diff = e.vector() - f.vector();
  const double len = norm(diff);
  if (len == 0.0) return QubitState::maximally_mixed();
  const double sign = (e.bias() - f.bias()) < 0.0 ? -1.0 : 1.0;
  return QubitState((sign / len) * diff);
}

double total_variation(const BinaryObservable& e, const BinaryObservable& f) {
  require_unit_values(e, "first observable");
  require_unit_values(f, "second observable");
  return 0.5 * (std::abs(e.bias() - f.bias()) + distance(e.vector(), f.vector()));
}

}  // namespace qmur
