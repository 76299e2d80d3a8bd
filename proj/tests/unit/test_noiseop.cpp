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


#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qmur/compat.hpp"
#include "qmur/errors.hpp"
#include "qmur/noiseop.hpp"
#include "qmur/random.hpp"
#include "qmur/transport.hpp"

namespace qmur {
namespace {

const double kSqrt2 = std::numbers::sqrt2;

// eps^2 from raw matrices: tr[rho (C[x^2] - C[x]^2)] + tr[rho (C[x] - A[x])^2]
// with C[x] = C+ - C-, C[x^2] = C+ + C-, A[x] = a.sigma.
double eps_sq_oracle(double c0, const BlochVector& c, const BlochVector& a, const BlochVector& r) {
  const oracle::Mat cp = oracle::effect_plus(c0, c);
  const oracle::Mat cm = oracle::Mat::Identity() - cp;
  const oracle::Mat x = cp - cm;
  const oracle::Mat x2 = cp + cm;
  const oracle::Mat diff = x - oracle::pauli_sum(0, a);
  const oracle::Mat R = oracle::rho(r);
  return oracle::trace_product(R, x2 - x * x) + oracle::trace_product(R, diff * diff);
}

std::vector<QubitState> probe_states(Rng& rng, int n) {
  std::vector<QubitState> out{QubitState(), QubitState(axes::i), QubitState(-axes::k)};
  for (int i = 0; i < n; ++i) out.push_back(random_state(rng));
  return out;
}

TEST(MomentOperator, Examples) {
  const BinaryObservable z = BinaryObservable::sharp(axes::k);
  EXPECT_LE(oracle::max_abs(moment_operator(z, 1).matrix() - oracle::sigma(2)), 1e-15);
  Rng rng(61);
  for (int n = 0; n < 1000; ++n) {
    const BinaryObservable e = random_bias(rng, random_in_ball(rng));
    ASSERT_LE(oracle::max_abs(moment_operator(e, 2).matrix() - oracle::Mat::Identity()), 1e-15);
    ASSERT_LE(oracle::max_abs(moment_operator(e, 4).matrix() - oracle::Mat::Identity()), 1e-15);
  }
  const BlochVector c{0.1, -0.4, 0.3};
  EXPECT_LE(oracle::max_abs(moment_operator(BinaryObservable::unbiased(c), 1).matrix() -
                            oracle::pauli_sum(0, c)),
            1e-15);
}

TEST(EpsNo, Examples) {
  const BlochVector a = axes::i;
  const BinaryObservable A = BinaryObservable::sharp(a);
  EXPECT_NEAR(eps_no_sq(A, A, QubitState(axes::j)), 0.0, 1e-15);
  const BinaryObservable C = BinaryObservable::unbiased(a / kSqrt2);
  EXPECT_NEAR(eps_no_sq(C, A, QubitState()), 2 - kSqrt2, 1e-15);
  EXPECT_NEAR(eps_no_sq(C, A, QubitState()), delta_sq_worst(C, A), 1e-15);
  EXPECT_THROW(eps_no_sq_closed_form(BinaryObservable(1.2, 0.1 * a), A), InvalidArgument);
}

TEST(EpsNo, MatrixRouteMatchesOracleAndClosedForm) {
  Rng rng(62);
  for (int n = 0; n < 10000; ++n) {
    const BlochVector a = random_unit(rng);
    const BinaryObservable A = BinaryObservable::sharp(a);
    const BinaryObservable Cb = random_bias(rng, random_in_ball(rng));
    const BinaryObservable Cu = BinaryObservable::unbiased(random_in_ball(rng));
    const QubitState rho = random_state(rng);
    ASSERT_NEAR(eps_no_sq(Cb, A, rho), eps_sq_oracle(Cb.bias(), Cb.vector(), a, rho.bloch()),
                1e-12);
    const double closed = 1 - squared_norm(Cu.vector()) + squared_norm(Cu.vector() - a);
    ASSERT_NEAR(eps_no_sq_closed_form(Cu, A), closed, 1e-12);
    ASSERT_NEAR(eps_no_sq(Cu, A, rho), closed, 1e-12);
  }
}

TEST(EpsNo, StateIndependentForUnbiasedApproximators) {
  Rng rng(63);
  const std::vector<QubitState> probes = probe_states(rng, 100);
  for (int n = 0; n < 1000; ++n) {
    const BinaryObservable C = BinaryObservable::unbiased(random_in_ball(rng));
    const BinaryObservable A = BinaryObservable::sharp(random_unit(rng));
    ASSERT_LE(state_independence_probe(C, A, probes), 1e-12);
  }
  // Outside the claim's class the spread is generally nonzero.
  const BinaryObservable biased(1.3, 0.2 * axes::i);
  EXPECT_GT(state_independence_probe(biased, BinaryObservable::sharp(axes::i), probes), 1e-3);
  EXPECT_EQ(state_independence_probe(biased, BinaryObservable::sharp(axes::i), {}), 0.0);
}

TEST(EpsNo, EqualsDeltaExactlyForShrunkTargets) {
  Rng rng(64);
  for (int n = 0; n < 10000; ++n) {
    const BlochVector a = random_unit(rng);
    const double gamma = rng.uniform();
    const BinaryObservable C = BinaryObservable::unbiased(gamma * a);
    const BinaryObservable A = BinaryObservable::sharp(a);
    ASSERT_NEAR(eps_no_sq(C, A, QubitState()), delta_sq_worst(C, A), 1e-12);
  }
}

TEST(EpsNo, NeverExceedsDeltaAndDecomposes) {
  Rng rng(65);
  for (int n = 0; n < 100000; ++n) {
    const BlochVector c = random_in_ball(rng);
    const BlochVector a = random_unit(rng);
    const BinaryObservable C = BinaryObservable::unbiased(c);
    const BinaryObservable A = BinaryObservable::sharp(a);
    const double eps_sq = eps_no_sq_closed_form(C, A);
    const double delta_sq = delta_sq_worst(C, A);
    ASSERT_LE(std::sqrt(eps_sq), std::sqrt(delta_sq) + 1e-12);
    // U^2 + Delta^4 / 4 reproduces eps^2.
    const double u = unsharpness(c);
    ASSERT_NEAR(u * u + 0.25 * delta_sq * delta_sq, eps_sq, 1e-12);
  }
}

TEST(EpsRelations, SaturatingPair) {
  const BinaryObservable A = BinaryObservable::sharp(axes::i);
  const BinaryObservable B = BinaryObservable::sharp(axes::j);
  const NoiseOpReport r = eps_relations(BinaryObservable::unbiased(axes::i / kSqrt2),
                                        BinaryObservable::unbiased(axes::j / kSqrt2), A, B,
                                        QubitState(axes::k));
  EXPECT_NEAR(r.eps_A, std::sqrt(2 - kSqrt2), 1e-12);
  EXPECT_NEAR(r.eps_B, std::sqrt(2 - kSqrt2), 1e-12);
  EXPECT_NEAR(r.sum_lhs, 2 * std::sqrt(2 - kSqrt2), 1e-12);
  EXPECT_NEAR(r.sum_rhs, (2 * kSqrt2 - 2) / kSqrt2, 1e-12);
  EXPECT_FALSE(r.state_dependent);
  EXPECT_TRUE(r.all_hold());
}

TEST(EpsRelations, CommutingPairHasZeroProductBound) {
  const NoiseOpReport r = eps_relations(
      BinaryObservable::unbiased(0.6 * axes::k), BinaryObservable::unbiased(-0.2 * axes::k),
      BinaryObservable::sharp(axes::i), BinaryObservable::sharp(axes::j), QubitState());
  EXPECT_EQ(r.product_rhs, 0.0);
  EXPECT_TRUE(r.all_hold());
}

TEST(EpsRelations, Preconditions) {
  const BinaryObservable A = BinaryObservable::sharp(axes::i);
  const BinaryObservable B = BinaryObservable::sharp(axes::j);
  EXPECT_THROW(eps_relations(A, B, A, B, QubitState()), IncompatiblePair);
  EXPECT_THROW(eps_relations(BinaryObservable(1.1, 0.1 * axes::i), BinaryObservable(), A, B,
                             QubitState()),
               InvalidArgument);
}

TEST(EpsRelations, RandomCompatiblePairsSatisfyAllFive) {
  Rng rng(66);
  for (int n = 0; n < 100000; ++n) {
    const auto [c, d] = random_compatible_pair(rng);
    const NoiseOpReport r = eps_relations(
        BinaryObservable::unbiased(c), BinaryObservable::unbiased(d),
        BinaryObservable::sharp(random_unit(rng)), BinaryObservable::sharp(random_unit(rng)),
        random_state(rng));
    ASSERT_TRUE(r.all_hold());
    ASSERT_FALSE(r.state_dependent);
  }
}

}  // namespace
}  // namespace qmur
