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

#include "qmur/errors.hpp"
#include "qmur/random.hpp"
#include "qmur/serialize.hpp"

namespace qmur {
namespace {

template <typename T>
T round_trip(const T& value) {
  const json j = value;
  return json::parse(j.dump()).get<T>();
}

TEST(Serialize, BlochVectorIsAnArray) {
  const json j = BlochVector{1, 2.5, -3};
  EXPECT_EQ(j.dump(), "[1.0,2.5,-3.0]");
  EXPECT_THROW(json::parse("[1,2]").get<BlochVector>(), InvalidArgument);
  EXPECT_THROW(json::parse("[1,2,3,4]").get<BlochVector>(), InvalidArgument);
  EXPECT_THROW(json::parse("{\"x\":1}").get<BlochVector>(), std::exception);
}

TEST(Serialize, RandomRoundTripsAreExact) {
  Rng rng(21);
  for (int t = 0; t < 2000; ++t) {
    const QubitState rho = random_state(rng);
    ASSERT_EQ(round_trip(rho), rho);
    const BlochVector e = random_in_ball(rng);
    const BinaryObservable obs(random_bias(rng, e).bias(), e, uniform(rng, 0, 3),
                               uniform(rng, -3, 0));
    ASSERT_EQ(round_trip(obs), obs);
    const BinaryDistribution d(rng.uniform(), {uniform(rng, 0, 2), uniform(rng, -2, 0)});
    ASSERT_EQ(round_trip(d), d);
    const Coupling c{rng.uniform(), rng.uniform(), rng.uniform(), rng.uniform()};
    ASSERT_EQ(round_trip(c), c);

    const auto [cv, dv] = random_compatible_pair(rng);
    const JointObservable g = joint_observable(cv, dv);
    const JointObservable g2 = round_trip(g);
    for (std::size_t i = 0; i < 4; ++i) {
      ASSERT_EQ(g2.elements()[i].weight, g.elements()[i].weight);
      ASSERT_EQ(g2.elements()[i].vector, g.elements()[i].vector);
      ASSERT_EQ(max_abs_diff(g2.matrices()[i], g.matrices()[i]), 0.0);
    }

    const HermitianMatrix2 m = HermitianMatrix2::from_pauli(uniform(rng, -1, 1), e);
    ASSERT_EQ(max_abs_diff(round_trip(m), m), 0.0);
  }
}

TEST(Serialize, ReportRoundTrips) {
  const TradeoffReport r = TradeoffReport::make(0.3, 0.4, 0.5);
  const TradeoffReport r2 = round_trip(r);
  EXPECT_EQ(r2.err_sq_A, r.err_sq_A);
  EXPECT_EQ(r2.slack, r.slack);
  EXPECT_EQ(r2.saturated, r.saturated);

  const OptimalPair p = optimal_pair(axes::i, axes::j);
  const OptimalPair p2 = round_trip(p);
  EXPECT_EQ(p2.c, p.c);
  EXPECT_EQ(p2.d, p.d);
  EXPECT_EQ(p2.achieved, p.achieved);
  EXPECT_EQ(p2.bound, p.bound);

  const SmearingDistribution s(0.7, 0.3);
  EXPECT_EQ(round_trip(s).mu_plus(), 0.7);

  const ViennaConfig v = ViennaConfig::canonical(0.3);
  const ViennaConfig v2 = round_trip(v);
  EXPECT_EQ(v2.b, v.b);
  EXPECT_EQ(v2.rho, v.rho);

  const TorontoConfig tc{0.4, 0.2};
  EXPECT_EQ(round_trip(tc).theta, 0.4);

  const std::vector<SweepRow> rows = vienna_sweep(std::vector<double>{0.1, 0.7});
  const auto rows2 = round_trip(rows);
  ASSERT_EQ(rows2.size(), 2U);
  EXPECT_EQ(rows2[1].eps_B, rows[1].eps_B);
  EXPECT_EQ(rows2[1].slack, rows[1].slack);

  const ShotRecord shots = sample(BinaryObservable(), QubitState(), 100, 3);
  EXPECT_EQ(round_trip(shots), shots);

  const NoiseOpReport n = eps_relations(BinaryObservable::unbiased(axes::i / std::numbers::sqrt2),
                                        BinaryObservable::unbiased(axes::j / std::numbers::sqrt2),
                                        BinaryObservable::sharp(axes::i),
                                        BinaryObservable::sharp(axes::j), QubitState(axes::k));
  const NoiseOpReport n2 = round_trip(n);
  EXPECT_EQ(n2.eps_A, n.eps_A);
  EXPECT_EQ(n2.product_rhs, n.product_rhs);
  EXPECT_EQ(n2.eps_le_delta, n.eps_le_delta);
}

TEST(Serialize, LargeSeedsSurvive) {
  ShotRecord r;
  r.n_shots = 1;
  r.counts = {1, 0};
  r.seed = 0xFFFFFFFFFFFFFFFFULL;
  EXPECT_EQ(round_trip(r).seed, r.seed);
}

TEST(Serialize, RejectsInvalidDomainValues) {
  // Bloch vector outside the ball.
  EXPECT_THROW(json::parse(R"({"r":[1,1,0]})").get<QubitState>(), InvalidArgument);
  // Effect not positive.
  EXPECT_THROW(json::parse(R"({"e0":0.2,"e":[0.5,0,0]})").get<BinaryObservable>(),
               InvalidArgument);
  EXPECT_THROW(json::parse(R"({"p_plus":1.5,"values":[1,-1]})").get<BinaryDistribution>(),
               InvalidArgument);
  EXPECT_THROW(
      json::parse(R"({"gamma_pp":-0.1,"gamma_pm":0.6,"gamma_mp":0.5,"gamma_mm":0})").get<Coupling>(),
      InvalidArgument);
  EXPECT_THROW(json::parse(R"({"mu_plus":0.9,"mu_minus":0.3})").get<SmearingDistribution>(),
               InvalidArgument);
  EXPECT_THROW(json::parse(R"({"n_shots":10,"counts":[3,3],"seed":1})").get<ShotRecord>(),
               InvalidArgument);
  EXPECT_THROW(json::parse(R"({"theta":0.1,"phi":"x"})").get<TorontoConfig>(), json::exception);
  EXPECT_THROW(json::parse(R"({"a":[1,0,0],"b":[0,2,0],"c":[1,0,0],"rho":{"r":[0,0,1]}})")
                   .get<ViennaConfig>(),
               InvalidArgument);
}

TEST(Serialize, MissingFieldsThrow) {
  EXPECT_THROW(json::parse(R"({"e":[0,0,0]})").get<BinaryObservable>(), json::exception);
  EXPECT_THROW(json::parse(R"({"re":[[1,0],[0,1]]})").get<HermitianMatrix2>(), json::exception);
  EXPECT_THROW(json::parse("{}").get<JointObservable>(), json::exception);
}

TEST(Serialize, ObservableLabelsDefaultToUnit) {
  const auto o = json::parse(R"({"e0":1,"e":[0,0,0.5]})").get<BinaryObservable>();
  EXPECT_TRUE(o.has_unit_values());
}

}  // namespace
}  // namespace qmur
