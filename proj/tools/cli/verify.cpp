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


#include "cli/verify.hpp"

#include <cmath>
#include <stdexcept>

#include "qmur/compat.hpp"
#include "qmur/montecarlo.hpp"
#include "qmur/noiseop.hpp"
#include "qmur/random.hpp"
#include "qmur/serialize.hpp"
#include "qmur/tradeoff.hpp"
#include "qmur/transport.hpp"

namespace qmur::cli {

namespace {

using nlohmann::json;

constexpr std::array<const char*, 4> kSuites{"qur", "prep", "epsno", "compat"};

std::uint64_t suite_stream(const std::string& suite) {
  for (std::size_t i = 0; i < kSuites.size(); ++i) {
    if (suite == kSuites[i]) return i;
  }
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

PropertyTally tally(const char* name, double tolerance) {
  PropertyTally t;
  t.name = name;
  t.tolerance = tolerance;
  return t;
}

SuiteResult run_qur(Rng& rng, std::uint64_t samples) {
  SuiteResult r;
  r.properties = {tally("sum_bound", 1e-9), tally("optimal_pair_attains_bound", 1e-9),
                  tally("product_bound", 1e-9)};
  for (std::uint64_t n = 0; n < samples; ++n) {
    const BlochVector a = random_unit(rng);
    const BlochVector b = random_unit(rng);
    const auto [cv, dv] = random_compatible_pair(rng);
    const bool biased = rng.uniform() < 0.5;
    const BinaryObservable c = biased ? random_bias(rng, cv) : BinaryObservable::unbiased(cv);
    const BinaryObservable d = biased ? random_bias(rng, dv) : BinaryObservable::unbiased(dv);

    const TradeoffReport rep = check_qur(c, d, a, b);
    r.properties[0].record(rep.slack, [&] {
      return json{{"a", a}, {"b", b}, {"C", c}, {"D", d}, {"report", rep}};
    });

    const OptimalPair opt = optimal_pair(a, b);
    r.properties[1].record(-std::abs(opt.achieved - opt.bound), [&] {
      return json{{"a", a}, {"b", b}, {"optimal", opt}};
    });

    const BinaryObservable cu = BinaryObservable::unbiased(cv);
    const BinaryObservable du = BinaryObservable::unbiased(dv);
    const ProductBound pb =
        qur_product(cu, du, BinaryObservable::sharp(a), BinaryObservable::sharp(b));
    r.properties[2].record(pb.lhs - pb.rhs, [&] {
      return json{{"a", a}, {"b", b}, {"c", cv}, {"d", dv}, {"bound", pb}};
    });
  }
  return r;
}

SuiteResult run_prep(Rng& rng, std::uint64_t samples) {
  SuiteResult r;
  r.properties = {tally("std_sum_bound", 1e-12),        tally("variance_sum_bound", 1e-12),
                  tally("std_sum_minimizer", 1e-12),    tally("variance_sum_minimizer", 1e-12),
                  tally("chain_lhs_ge_mid", 1e-12),     tally("chain_mid_ge_rhs", 1e-12)};
  for (std::uint64_t n = 0; n < samples; ++n) {
    const BlochVector a = random_unit(rng);
    const BlochVector b = random_unit(rng);
    const BinaryObservable A = BinaryObservable::sharp(a);
    const BinaryObservable B = BinaryObservable::sharp(b);
    const QubitState rho = random_state(rng);

    const PrepSumRelations p = prep_sum_relations(A, B, rho);
    const auto instance = [&] { return json{{"a", a}, {"b", b}, {"rho", rho}, {"relations", p}}; };
    r.properties[0].record(p.sum_std - p.bound_std, instance);
    r.properties[1].record(p.sum_var - p.bound_var, instance);

    const PrepSumRelations at_a = prep_sum_relations(A, B, QubitState(a));
    r.properties[2].record(-std::abs(at_a.sum_std - at_a.bound_std), [&] {
      return json{{"a", a}, {"b", b}, {"relations", at_a}};
    });

    const BlochVector bb = dot(a, b) >= 0.0 ? b : -b;
    if (norm(a + bb) > 1e-6) {
      const QubitState s((a + bb) / norm(a + bb));
      const PrepSumRelations at_s = prep_sum_relations(A, B, s);
      r.properties[3].record(-std::abs(at_s.sum_var - at_s.bound_var), [&] {
        return json{{"a", a}, {"b", b}, {"rho", s}, {"relations", at_s}};
      });
    }

    BlochVector perp = cross(a, random_unit(rng));
    if (norm(perp) > 1e-6) {
      perp = perp / norm(perp);
      const double lambda = uniform(rng, 0.0, 1.0 / std::sqrt(2.0));
      const BoundChain chain = prep_bound_chain(a, perp, lambda);
      const auto chain_instance = [&] {
        return json{{"a", a}, {"b", perp}, {"lambda", lambda}, {"chain", chain}};
      };
      r.properties[4].record(chain.lhs - chain.mid, chain_instance);
      r.properties[5].record(chain.mid - chain.rhs, chain_instance);
    }
  }
  return r;
}

SuiteResult run_epsno(Rng& rng, std::uint64_t samples) {
  SuiteResult r;
  r.properties = {tally("sum_bound", 1e-9),          tally("product_bound", 1e-9),
                  tally("eps_ge_half_delta_sq", 1e-12), tally("eps_ge_unsharpness", 1e-12),
                  tally("eps_le_delta", 1e-12),       tally("matrix_equals_closed_form", 1e-12)};
  for (std::uint64_t n = 0; n < samples; ++n) {
    const BlochVector a = random_unit(rng);
    const BlochVector b = random_unit(rng);
    const auto [cv, dv] = random_compatible_pair(rng);
    const QubitState rho = random_state(rng);
    const BinaryObservable C = BinaryObservable::unbiased(cv);
    const BinaryObservable D = BinaryObservable::unbiased(dv);
    const BinaryObservable A = BinaryObservable::sharp(a);
    const BinaryObservable B = BinaryObservable::sharp(b);

    const NoiseOpReport rep = eps_relations(C, D, A, B, rho);
    const auto instance = [&] {
      return json{{"a", a}, {"b", b}, {"c", cv}, {"d", dv}, {"rho", rho}, {"report", rep}};
    };
    r.properties[0].record(rep.sum_lhs - rep.sum_rhs, instance);
    r.properties[1].record(rep.product_lhs - rep.product_rhs, instance);
    r.properties[2].record(
        std::min(rep.eps_A - 0.5 * rep.delta_A * rep.delta_A,
                 rep.eps_B - 0.5 * rep.delta_B * rep.delta_B),
        instance);
    r.properties[3].record(std::min(rep.eps_A - unsharpness(cv), rep.eps_B - unsharpness(dv)),
                           instance);
    r.properties[4].record(std::min(rep.delta_A - rep.eps_A, rep.delta_B - rep.eps_B), instance);
    const double gap = std::abs(eps_no_sq(C, A, rho) - eps_no_sq_closed_form(C, A));
    r.properties[5].record(-gap, instance);
  }
  return r;
}

SuiteResult run_compat(Rng& rng, std::uint64_t samples) {
  SuiteResult r;
  r.properties = {tally("criteria_agree", 0.0), tally("joint_observable_valid", 1e-12)};
  constexpr double kBand = 1e-10;
  std::uint64_t agree = 0;
  std::uint64_t band = 0;
  std::uint64_t compatible = 0;
  for (std::uint64_t n = 0; n < samples; ++n) {
    BlochVector c = random_in_ball(rng);
    BlochVector d = random_in_ball(rng);
    const double mode = rng.uniform();
    if (mode < 0.25) {
      // Onto the boundary, with a perturbation of either sign.
      const double s = 2.0 / (distance(c, d) + norm(c + d)) * (1.0 + uniform(rng, -1e-9, 1e-9));
      if (norm(s * c) <= 1.0 && norm(s * d) <= 1.0) {
        c *= s;
        d *= s;
      }
    }
    const double f = distance(c, d) + norm(c + d) - 2.0;
    const bool eq2 = is_compatible_unbiased(c, d);
    const UnsharpnessCriterion eq3 = compat_equiv_unsharpness(c, d);
    const bool disagree = eq2 != eq3.holds && std::abs(f) > kBand;
    if (eq2 == eq3.holds) {
      ++agree;
    } else if (!disagree) {
      ++band;
    }
    if (eq2) ++compatible;
    r.properties[0].record(disagree ? -1.0 : 0.0, [&] {
      return json{{"c", c}, {"d", d}, {"norm_sum_minus_2", f}, {"eq2", eq2}, {"eq3", eq3}};
    });
    if (eq2 && eq3.holds) {
      const JointObservable g = joint_observable(c, d);
      const JointCheck chk =
          check_joint(g, BinaryObservable::unbiased(c), BinaryObservable::unbiased(d));
      const double margin = std::min(
          {chk.min_eigenvalue, -chk.normalization_residual, -chk.marginal_residual});
      r.properties[1].record(margin, [&] {
        return json{{"c", c}, {"d", d}, {"check", chk}};
      });
    }
  }
  r.details = {{"agree", agree},
               {"disagree_within_band", band},
               {"band", kBand},
               {"compatible", compatible}};
  return r;
}

}  // namespace

std::uint64_t SuiteResult::violations() const {
  std::uint64_t total = 0;
  for (const PropertyTally& p : properties) total += p.violations;
  return total;
}

SuiteResult run_suite(const std::string& suite, std::uint64_t samples, std::uint64_t seed) {
  Rng rng(derive_seed(seed, suite_stream(suite)));
  SuiteResult r;
  if (suite == "qur") {
    r = run_qur(rng, samples);
  } else if (suite == "prep") {
    r = run_prep(rng, samples);
  } else if (suite == "epsno") {
    r = run_epsno(rng, samples);
  } else {
    r = run_compat(rng, samples);
  }
  r.suite = suite;
  r.samples = samples;
  return r;
}

std::vector<SuiteResult> run_suites(const std::string& suite, std::uint64_t samples,
                                    std::uint64_t seed) {
  std::vector<SuiteResult> out;
  if (suite == "all") {
    for (const char* s : kSuites) out.push_back(run_suite(s, samples, seed));
  } else {
    out.push_back(run_suite(suite, samples, seed));
  }
  return out;
}

nlohmann::json to_json(const PropertyTally& t) {
  json j{{"name", t.name},
         {"tolerance", t.tolerance},
         {"checks", t.checks},
         {"violations", t.violations}};
  if (t.checks > 0) {
    j["min_margin"] = t.min_margin;
    j["max_margin"] = t.max_margin;
    j["worst_case"] = t.worst_case;
  }
  if (!t.first_violation.is_null()) j["violation"] = t.first_violation;
  return j;
}

nlohmann::json to_json(const SuiteResult& s) {
  json props = json::array();
  for (const PropertyTally& p : s.properties) props.push_back(to_json(p));
  return json{{"suite", s.suite},
              {"samples", s.samples},
              {"violations", s.violations()},
              {"properties", props},
              {"details", s.details}};
}

}  // namespace qmur::cli
