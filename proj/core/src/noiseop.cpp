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

#include "qmur/noiseop.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "qmur/compat.hpp"
#include "qmur/errors.hpp"
#include "qmur/tolerance.hpp"
#include "qmur/transport.hpp"

namespace qmur {

namespace {

// The six axis eigenstates plus the maximally mixed state.
const std::array<QubitState, 7>& probe_states() {
  static const std::array<QubitState, 7> kProbes{
      QubitState(axes::i), QubitState(-axes::i), QubitState(axes::j), QubitState(-axes::j),
      QubitState(axes::k), QubitState(-axes::k), QubitState::maximally_mixed()};
  return kProbes;
}

}  // namespace

HermitianMatrix2 moment_operator(const BinaryObservable& obs, int n) {
  if (n < 1) throw InvalidArgument("moment_operator: order must be >= 1");
  return std::pow(obs.value_plus(), n) * to_matrix(obs, Outcome::plus) +
         std::pow(obs.value_minus(), n) * to_matrix(obs, Outcome::minus);
}

double eps_no_sq(const BinaryObservable& approx, const BinaryObservable& target,
                 const QubitState& rho) {
  const Eigen::Matrix2cd c1 = moment_operator(approx, 1).matrix();
  const Eigen::Matrix2cd c2 = moment_operator(approx, 2).matrix();
  const Eigen::Matrix2cd a1 = moment_operator(target, 1).matrix();
  const Eigen::Matrix2cd diff = c1 - a1;
  const HermitianMatrix2 noise(c2 - c1 * c1 + diff * diff);
  return noise.expectation(rho);
}

double eps_no_sq_closed_form(const BinaryObservable& approx, const BinaryObservable& target) {
  if (!approx.is_unbiased()) {
    throw InvalidArgument("eps_no_sq_closed_form: approximator must be unbiased");
  }
  return 1.0 - squared_norm(approx.vector()) +
         squared_norm(approx.vector() - target.vector());
}

double state_independence_probe(const BinaryObservable& approx, const BinaryObservable& target,
                                std::span<const QubitState> states) {
  if (states.empty()) return 0.0;
  double lo = eps_no_sq(approx, target, states.front());
  double hi = lo;
  for (const QubitState& s : states.subspan(1)) {
    const double v = eps_no_sq(approx, target, s);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return hi - lo;
}

bool NoiseOpReport::all_hold() const {
  return sum_lhs >= sum_rhs - tol::kSlack && product_lhs >= product_rhs - tol::kSlack &&
         eps_ge_half_delta_sq && eps_ge_unsharpness && eps_le_delta;
}

NoiseOpReport eps_relations(const BinaryObservable& c, const BinaryObservable& d,
                            const BinaryObservable& a, const BinaryObservable& b,
                            const QubitState& rho) {
  if (!c.is_unbiased() || !d.is_unbiased()) {
    throw InvalidArgument("eps_relations: approximators must be unbiased");
  }
  if (!a.is_sharp() || !b.is_sharp()) {
    throw InvalidArgument("eps_relations: targets must be sharp");
  }
  if (!is_compatible_unbiased(c.vector(), d.vector())) {
    throw IncompatiblePair("eps_relations: approximators are not jointly measurable");
  }

  NoiseOpReport r;
  r.eps_A = std::sqrt(std::max(0.0, eps_no_sq(c, a, rho)));
  r.eps_B = std::sqrt(std::max(0.0, eps_no_sq(d, b, rho)));
  r.delta_A = std::sqrt(delta_sq_worst(c, a));
  r.delta_B = std::sqrt(delta_sq_worst(d, b));
  r.state_dependent = state_independence_probe(c, a, probe_states()) > 1e-12 ||
                      state_independence_probe(d, b, probe_states()) > 1e-12;

  r.sum_lhs = r.eps_A + r.eps_B;
  r.sum_rhs = degree_of_incompatibility(a.vector(), b.vector()) / std::numbers::sqrt2;
  r.product_lhs = r.eps_A * r.eps_A * r.eps_B * r.eps_B;
  r.product_rhs = squared_norm(cross(c.vector(), d.vector()));

  constexpr double t = tol::kSlack;
  r.eps_ge_half_delta_sq = r.eps_A >= 0.5 * r.delta_A * r.delta_A - t &&
                           r.eps_B >= 0.5 * r.delta_B * r.delta_B - t;
  r.eps_ge_unsharpness =
      r.eps_A >= unsharpness(c.vector()) - t && r.eps_B >= unsharpness(d.vector()) - t;
  r.eps_le_delta = r.eps_A <= r.delta_A + t && r.eps_B <= r.delta_B + t;
  return r;
}

}  // namespace qmur
