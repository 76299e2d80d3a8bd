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

#include "qmur/tradeoff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qmur/errors.hpp"
#include "qmur/tolerance.hpp"
#include "qmur/transport.hpp"

namespace qmur {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

void require_sharp(const BinaryObservable& a, const char* what) {
  if (!a.is_sharp(tol::kSharpness) || !a.has_unit_values()) {
    throw InvalidArgument(std::string(what) + " must be a sharp +/-1 observable");
  }
}

}  // namespace

TradeoffReport TradeoffReport::make(double err_sq_A, double err_sq_B, double lower_bound) {
  TradeoffReport r;
  r.err_sq_A = err_sq_A;
  r.err_sq_B = err_sq_B;
  r.lower_bound = lower_bound;
  r.slack = err_sq_A + err_sq_B - lower_bound;
  r.saturated = std::abs(r.slack) <= tol::kSaturation;
  return r;
}

QurBound qur_bound(const BlochVector& a, const BlochVector& b) {
  QurBound out;
  out.value = kSqrt2 * degree_of_incompatibility(a, b);
  const BinaryObservable A = BinaryObservable::sharp(a);
  const BinaryObservable B = BinaryObservable::sharp(b);
  out.alt_form = kInvSqrt2 * (delta_sq_worst(A, B) +
                              delta_sq_worst(A, B.with_swapped_outcomes()) - 4.0);
  if (std::abs(out.value - out.alt_form) > 1e-12) {
    throw NumericalFailure("qur_bound: incompatibility and distance forms disagree");
  }
  return out;
}

TradeoffReport check_qur(const BinaryObservable& c, const BinaryObservable& d,
                         const BlochVector& a, const BlochVector& b) {
  if (!are_compatible(c, d)) {
    throw IncompatiblePair("check_qur: approximators are not jointly measurable");
  }
  const BinaryObservable A = BinaryObservable::sharp(a);
  const BinaryObservable B = BinaryObservable::sharp(b);
  return TradeoffReport::make(delta_sq_worst(c, A), delta_sq_worst(d, B), qur_bound(a, b).value);
}

OptimalPair optimal_pair(const BlochVector& a, const BlochVector& b) {
  require_unit(a, "a");
  require_unit(b, "b");
  OptimalPair out;
  out.bound = qur_bound(a, b).value;

  const double plus_len = norm(a + b);
  const double minus_len = distance(a, b);
  if (plus_len <= 1e-12 || minus_len <= 1e-12) {
    // a = +-b: A and B commute, so they approximate themselves exactly.
    out.c = a;
    out.d = b;
  } else {
    const BlochVector u = (a + b) / plus_len;
    const BlochVector v = (a - b) / minus_len;
    const double cos_phi = 0.5 * plus_len;
    const double sin_phi = 0.5 * minus_len;
    const double t = 0.5 * (1.0 - cos_phi - sin_phi);
    const double alpha = cos_phi + t;
    const double beta = sin_phi + t;
    out.c = alpha * u + beta * v;
    out.d = alpha * u - beta * v;
  }
  out.achieved = 2.0 * distance(out.c, a) + 2.0 * distance(out.d, b);
  return out;
}

ProductBound qur_product(const BinaryObservable& c, const BinaryObservable& d,
                         const BinaryObservable& a, const BinaryObservable& b) {
  if (!c.is_unbiased() || !d.is_unbiased()) {
    throw InvalidArgument("qur_product: approximators must be unbiased");
  }
  require_sharp(a, "target A");
  require_sharp(b, "target B");
  const double comm = commutator_norm(c, d);
  return {delta_sq_worst(c, a) * delta_sq_worst(d, b), 4.0 * comm * comm};
}

double prep_std(const BinaryObservable& a, const QubitState& rho) {
  require_sharp(a, "observable");
  // 1 - (r.a)^2 = (1 - |r|^2) + |r x a|^2 for unit a. The split keeps an
  // eigenstate at exactly zero; the first term is dropped below a few ulps.
  const BlochVector& r = rho.bloch();
  const double mixedness = 1.0 - squared_norm(r);
  const double variance = (mixedness > 4.0 * std::numeric_limits<double>::epsilon() ? mixedness : 0.0) +
                          squared_norm(cross(r, a.vector()));
  return std::sqrt(variance);
}

PrepSumRelations prep_sum_relations(const BinaryObservable& a, const BinaryObservable& b,
                                    const QubitState& rho) {
  const double sa = prep_std(a, rho);
  const double sb = prep_std(b, rho);
  PrepSumRelations out;
  out.sum_std = sa + sb;
  out.bound_std = norm(cross(a.vector(), b.vector()));
  out.sum_var = sa * sa + sb * sb;
  out.bound_var = 1.0 - std::abs(dot(a.vector(), b.vector()));
  return out;
}

SmearingDistribution::SmearingDistribution(double mu_plus, double mu_minus)
    : mu_plus_(mu_plus), mu_minus_(mu_minus) {
  if (!(mu_plus >= 0.0) || !(mu_minus >= 0.0) || std::abs(mu_plus + mu_minus - 1.0) > 1e-12) {
    throw InvalidArgument("smearing distribution must be non-negative and sum to 1");
  }
}

SmearingDistribution SmearingDistribution::from_lambda(double lambda) {
  if (!(lambda >= -1.0 && lambda <= 1.0)) {
    throw InvalidArgument("lambda must lie in [-1, 1]");
  }
  return SmearingDistribution(0.5 * (1.0 + lambda), 0.5 * (1.0 - lambda));
}

SmearingResult smearing_error(const SmearingDistribution& mu, const BlochVector& a) {
  require_unit(a, "a");
  SmearingResult out{BinaryObservable::unbiased(mu.lambda() * a), 4.0 * mu.mu_minus(),
                     mu.variance()};
  const double route = delta_sq_worst(out.approximator, BinaryObservable::sharp(a));
  if (std::abs(route - out.err_sq) > tol::kCrossCheck) {
    throw NumericalFailure("smearing_error: 4 mu_- disagrees with the worst-case error");
  }
  if (out.err_sq < out.variance - tol::kCrossCheck) {
    throw NumericalFailure("smearing_error: error below the variance of mu");
  }
  return out;
}

BoundChain prep_bound_chain(const BlochVector& a, const BlochVector& b, double lambda) {
  require_unit(a, "a");
  require_unit(b, "b");
  if (std::abs(dot(a, b)) > tol::kUnit) {
    throw InvalidArgument("prep_bound_chain: a and b must be orthogonal");
  }
  if (!(lambda >= 0.0 && lambda <= kInvSqrt2 + 1e-12)) {
    throw InvalidArgument(
        "prep_bound_chain: lambda must lie in [0, 1/sqrt(2)], the range where the smeared "
        "approximators are compatible");
  }
  const QubitState rho_s(lambda * (a + b));
  // mu and nu are the outcome distributions of A and B in rho_s.
  const auto mu = SmearingDistribution::from_lambda(dot(rho_s.bloch(), a));
  const auto nu = SmearingDistribution::from_lambda(dot(rho_s.bloch(), b));
  const BinaryObservable A = BinaryObservable::sharp(a);
  const BinaryObservable B = BinaryObservable::sharp(b);
  BoundChain out;
  out.lhs = 4.0 * mu.mu_minus() + 4.0 * nu.mu_minus();
  const PrepSumRelations rel = prep_sum_relations(A, B, rho_s);
  out.mid = rel.sum_var;
  out.rhs = rel.bound_var;
  return out;
}

std::string_view to_string(FrameConjugation u) {
  switch (u) {
    case FrameConjugation::identity:
      return "1";
    case FrameConjugation::tau1:
      return "sigma1";
    case FrameConjugation::tau2:
      return "sigma2";
    case FrameConjugation::tau3:
      return "sigma3";
  }
  return "?";
}

Eigen::Matrix2cd conjugation_unitary(FrameConjugation u, const BlochVector& e1,
                                     const BlochVector& e3) {
  switch (u) {
    case FrameConjugation::identity:
      return Eigen::Matrix2cd::Identity();
    case FrameConjugation::tau1:
      return pauli_along(e1);
    case FrameConjugation::tau2:
      return pauli_along(cross(e3, e1));
    case FrameConjugation::tau3:
      return pauli_along(e3);
  }
  return Eigen::Matrix2cd::Identity();
}

HwCovariantForm hw_covariant_form(double c_len, const BlochVector& e1, const BlochVector& e3) {
  require_unit(e1, "e1");
  require_unit(e3, "e3");
  if (std::abs(dot(e1, e3)) > tol::kUnit) {
    throw InvalidArgument("hw_covariant_form: e1 and e3 must be orthogonal");
  }
  if (!(c_len >= 0.0)) throw InvalidArgument("hw_covariant_form: c_len must be >= 0");
  if (c_len > kInvSqrt2 + tol::kCompatibility) {
    throw IncompatiblePair("hw_covariant_form: c_len > 1/sqrt(2) is not jointly measurable");
  }

  HwCovariantForm out{joint_observable(c_len * e1, c_len * e3),
                      QubitState(c_len * (e1 + e3)),
                      {},
                      0.0};
  const Eigen::Matrix2cd rho = density_matrix(out.rho_s).matrix();
  constexpr std::array<FrameConjugation, 4> kCandidates{
      FrameConjugation::identity, FrameConjugation::tau1, FrameConjugation::tau2,
      FrameConjugation::tau3};

  for (std::size_t idx = 0; idx < 4; ++idx) {
    const Eigen::Matrix2cd& g = out.joint.matrices()[idx].matrix();
    double best = std::numeric_limits<double>::infinity();
    for (FrameConjugation u : kCandidates) {
      const Eigen::Matrix2cd w = conjugation_unitary(u, e1, e3);
      const double r = (g - 0.5 * (w * rho * w.adjoint())).cwiseAbs().maxCoeff();
      // Strict comparison keeps the first candidate on ties (only at c_len = 0).
      if (r < best - 1e-15) {
        best = r;
        out.assignment[idx] = u;
      }
    }
    out.residual = std::max(out.residual, best);
  }
  return out;
}

}  // namespace qmur
