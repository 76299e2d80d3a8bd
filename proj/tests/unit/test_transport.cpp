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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qmur/errors.hpp"
#include "qmur/random.hpp"
#include "qmur/transport.hpp"

namespace qmur {
namespace {

const double kSqrt2 = std::numbers::sqrt2;

TEST(BinaryDistribution, Invariants) {
  EXPECT_THROW(BinaryDistribution(1.1), InvalidArgument);
  EXPECT_THROW(BinaryDistribution(-0.1), InvalidArgument);
  EXPECT_THROW(BinaryDistribution(0.5, {-1.0, 1.0}), InvalidArgument);
  EXPECT_DOUBLE_EQ(BinaryDistribution(0.3).p_minus(), 0.7);
}

TEST(CouplingCost, Examples) {
  const Coupling diag{0.4, 0.0, 0.0, 0.6};
  EXPECT_DOUBLE_EQ(coupling_cost(diag, kUnitValues, kUnitValues), 0.0);
  const Coupling c{0.5, 0.3, 0.0, 0.2};
  EXPECT_NEAR(coupling_cost(c, kUnitValues, kUnitValues), 1.2, 1e-15);
}

TEST(CouplingCost, MatchesGeneralLabelExpansion) {
  // Reference labels (+1, -1); second labels (a+, a-). With E = P(+1) and
  // F = P(a+), the cost of the gamma-coupling expands to
  //   (1 + a-)^2 - 4 gamma (a+ - a-) - 4 E a- + F [(1 + a+)^2 - (1 + a-)^2].
  for (double ap : {1.0, 0.5, 2.0, -0.3}) {
    for (double am : {-1.0, -2.5, -0.4}) {
      if (!(ap > am)) continue;
      for (double E : {0.1, 0.5, 0.9}) {
        for (double F : {0.2, 0.6, 1.0}) {
          const BinaryDistribution d1(E);
          const BinaryDistribution d2(F, {ap, am});
          const auto [lo, hi] = feasible_gamma_range(d1, d2);
          for (int k = 0; k <= 10; ++k) {
            const double g = lo + (hi - lo) * k / 10.0;
            const double expansion = (1 + am) * (1 + am) - 4 * g * (ap - am) - 4 * E * am +
                                     F * ((1 + ap) * (1 + ap) - (1 + am) * (1 + am));
            const double cost = coupling_cost(Coupling::with_gamma(d1, d2, g), kUnitValues, {ap, am});
            ASSERT_NEAR(cost, expansion, 1e-12);
            ASSERT_NEAR(cost, oracle::coupling_cost(E, F, g, 1, -1, ap, am), 1e-12);
          }
        }
      }
    }
  }
}

TEST(Wasserstein, Examples) {
  EXPECT_NEAR(wasserstein2_sq(BinaryDistribution(0.7), BinaryDistribution(0.7)), 0.0, 1e-15);
  EXPECT_NEAR(wasserstein2_sq(BinaryDistribution(0.8), BinaryDistribution(0.5)), 1.2, 1e-15);
  EXPECT_NEAR(oracle::brute_force_w2(0.8, 0.5), 1.2, 1e-12);
}

TEST(Wasserstein, VanishesAtEqualityOnlyForUnitLabels) {
  // p1 = p2 but labels differ: transport still costs something.
  const BinaryDistribution d1(0.4);
  EXPECT_GT(wasserstein2_sq(d1, BinaryDistribution(0.4, {1.0, -0.5})), 1e-3);
  EXPECT_GT(wasserstein2_sq(d1, BinaryDistribution(0.4, {2.0, -1.0})), 1e-3);
  EXPECT_NEAR(wasserstein2_sq(d1, BinaryDistribution(0.4, {1.0, -1.0})), 0.0, 1e-15);
}

TEST(Wasserstein, OptimalGammaIsMinPQ) {
  Rng rng(21);
  for (int n = 0; n < 2000; ++n) {
    const double p = rng.uniform();
    const double q = rng.uniform();
    const double ap = uniform(rng, -1, 3);
    const double am = ap - uniform(rng, 0.01, 3);
    const BinaryDistribution d1(p);
    const BinaryDistribution d2(q, {ap, am});
    const Coupling best = optimal_coupling(d1, d2);
    ASSERT_NEAR(best.pp, std::min(p, q), 1e-15);
    ASSERT_TRUE(best.is_valid_for(d1, d2));
    const double cost = coupling_cost(best, kUnitValues, {ap, am});
    ASSERT_LE(cost, oracle::brute_force_w2(p, q, 1, -1, ap, am) + 1e-12);
    ASSERT_NEAR(wasserstein2_sq(d1, d2), cost, 1e-12);
  }
}

TEST(DeltaSqState, Examples) {
  const BlochVector a = axes::i;
  const BinaryObservable E = BinaryObservable::sharp(a);
  const QubitState ra(a);
  EXPECT_NEAR(delta_sq_state(E, E, ra), 0.0, 1e-15);
  EXPECT_NEAR(delta_sq_state(E, BinaryObservable::sharp(-a), ra), 4.0, 1e-15);
  EXPECT_NEAR(delta_sq_state(E, BinaryObservable::unbiased(a / kSqrt2), ra),
              0.585786437626904951, 1e-15);
  EXPECT_THROW(delta_sq_state(BinaryObservable(1.0, a, 2.0, -1.0), E, ra), InvalidArgument);
}

TEST(DeltaSqState, ClosedFormMatchesBruteForceCoupling) {
  Rng rng(22);
  for (int n = 0; n < 10000; ++n) {
    const BinaryObservable E = random_bias(rng, random_in_ball(rng));
    const BinaryObservable F = random_bias(rng, random_in_ball(rng));
    const QubitState rho = random_state(rng);
    const double p = oracle::born_plus(E.bias(), E.vector(), rho.bloch());
    const double q = oracle::born_plus(F.bias(), F.vector(), rho.bloch());
    const double oracle_value = oracle::brute_force_w2(p, q);
    const double closed = delta_sq_state(E, F, rho);
    ASSERT_NEAR(closed, oracle_value, 1e-9);
    ASSERT_NEAR(closed, wasserstein2_sq(distribution(E, rho), distribution(F, rho)), 1e-12);
    ASSERT_NEAR(closed, delta_sq_state(F, E, rho), 1e-15);
  }
}

TEST(DeltaSqWorst, Examples) {
  const BlochVector a = axes::j;
  const BinaryObservable A = BinaryObservable::sharp(a);
  EXPECT_NEAR(delta_sq_worst(A, A), 0.0, 1e-15);
  EXPECT_NEAR(delta_sq_worst(BinaryObservable::unbiased(a / kSqrt2), A), 2.0 - kSqrt2, 1e-15);
}

TEST(DeltaSqWorst, DominatesStatesAndMatchesGridMaximum) {
  Rng rng(23);
  for (int n = 0; n < 200; ++n) {
    const BinaryObservable E = random_bias(rng, random_in_ball(rng));
    const BinaryObservable F = random_bias(rng, random_in_ball(rng));
    const double worst = delta_sq_worst(E, F);
    ASSERT_NEAR(worst, delta_sq_worst(F, E), 1e-15);
    for (int k = 0; k < 50; ++k) {
      ASSERT_LE(delta_sq_state(E, F, random_state(rng)), worst + 1e-12);
    }
    ASSERT_NEAR(delta_sq_state(E, F, worst_case_state(E, F)), worst, 1e-12);
    if (n < 10) {
      const double grid =
          oracle::worst_case_by_grid(E.bias(), E.vector(), F.bias(), F.vector(), 400);
      ASSERT_NEAR(grid, worst, 1e-6);
    }
  }
}

TEST(DeltaSqWorst, ZeroExactlyForEqualObservables) {
  const BinaryObservable E(1.1, BlochVector{0.2, 0.3, -0.1});
  EXPECT_EQ(delta_sq_worst(E, E), 0.0);
  EXPECT_GT(delta_sq_worst(E, BinaryObservable(1.1 + 1e-9, E.vector())), 0.0);
  EXPECT_GT(delta_sq_worst(E, BinaryObservable(1.1, E.vector() + BlochVector{1e-9, 0, 0})), 0.0);
}

TEST(TotalVariation, Examples) {
  const BinaryObservable A = BinaryObservable::sharp(axes::i);
  const BinaryObservable B = BinaryObservable::sharp(axes::j);
  EXPECT_NEAR(total_variation(A, A), 0.0, 1e-15);
  EXPECT_NEAR(total_variation(A, B), kSqrt2 / 2, 1e-15);
}

TEST(TotalVariation, IsQuarterOfWorstCaseError) {
  Rng rng(24);
  for (int n = 0; n < 10000; ++n) {
    const BinaryObservable E = random_bias(rng, random_in_ball(rng));
    const BinaryObservable F = random_bias(rng, random_in_ball(rng));
    ASSERT_NEAR(total_variation(E, F), delta_sq_worst(E, F) / 4.0, 1e-12);
  }
}

}  // namespace
}  // namespace qmur
