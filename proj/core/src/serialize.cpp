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

#include "qmur/serialize.hpp"

#include <string>

#include "qmur/errors.hpp"

namespace qmur {

namespace {

constexpr std::array<const char*, 4> kJointKeys{"G_pp", "G_pm", "G_mp", "G_mm"};

}  // namespace

void to_json(json& j, const BlochVector& v) { j = json::array({v.x, v.y, v.z}); }

void from_json(const json& j, BlochVector& v) {
  if (!j.is_array() || j.size() != 3) {
    throw InvalidArgument("Bloch vector must be a 3-element array, got " + j.dump());
  }
  v = {j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>()};
}

void to_json(json& j, const QubitState& s) { j = json{{"r", s.bloch()}}; }

void from_json(const json& j, QubitState& s) { s = QubitState(j.at("r").get<BlochVector>()); }

void to_json(json& j, const BinaryObservable& o) {
  j = json{{"e0", o.bias()},
           {"e", o.vector()},
           {"value_plus", o.value_plus()},
           {"value_minus", o.value_minus()}};
}

void from_json(const json& j, BinaryObservable& o) {
  o = BinaryObservable(j.at("e0").get<double>(), j.at("e").get<BlochVector>(),
                       j.value("value_plus", 1.0), j.value("value_minus", -1.0));
}

void to_json(json& j, const HermitianMatrix2& m) {
  json re = json::array();
  json im = json::array();
  for (int r = 0; r < 2; ++r) {
    re.push_back({m(r, 0).real(), m(r, 1).real()});
    im.push_back({m(r, 0).imag(), m(r, 1).imag()});
  }
  j = json{{"re", re}, {"im", im}};
}

void from_json(const json& j, HermitianMatrix2& m) {
  const json& re = j.at("re");
  const json& im = j.at("im");
  HermitianMatrix2::Matrix mat;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      mat(r, c) = {re.at(r).at(c).get<double>(), im.at(r).at(c).get<double>()};
    }
  }
  m = HermitianMatrix2(mat);
}

void to_json(json& j, const OutcomeValues& v) { j = json::array({v.plus, v.minus}); }

void from_json(const json& j, OutcomeValues& v) {
  if (!j.is_array() || j.size() != 2) {
    throw InvalidArgument("outcome values must be a 2-element array [v+, v-]");
  }
  v = {j.at(0).get<double>(), j.at(1).get<double>()};
}

void to_json(json& j, const BinaryDistribution& d) {
  j = json{{"p_plus", d.p_plus()}, {"values", d.values()}};
}

void from_json(const json& j, BinaryDistribution& d) {
  d = BinaryDistribution(j.at("p_plus").get<double>(),
                         j.value("values", json(kUnitValues)).get<OutcomeValues>());
}

void to_json(json& j, const Coupling& c) {
  j = json{{"gamma_pp", c.pp}, {"gamma_pm", c.pm}, {"gamma_mp", c.mp}, {"gamma_mm", c.mm}};
}

void from_json(const json& j, Coupling& c) {
  c = {j.at("gamma_pp").get<double>(), j.at("gamma_pm").get<double>(),
       j.at("gamma_mp").get<double>(), j.at("gamma_mm").get<double>()};
  if (c.pp < 0.0 || c.pm < 0.0 || c.mp < 0.0 || c.mm < 0.0) {
    throw InvalidArgument("coupling entries must be non-negative");
  }
}

void to_json(json& j, const JointElement& e) {
  j = json{{"weight", e.weight}, {"vector", e.vector}};
}

void from_json(const json& j, JointElement& e) {
  e = {j.at("weight").get<double>(), j.at("vector").get<BlochVector>()};
}

void to_json(json& j, const JointObservable& g) {
  j = json::object();
  for (std::size_t i = 0; i < 4; ++i) j[kJointKeys[i]] = g.elements()[i];
}

void from_json(const json& j, JointObservable& g) {
  std::array<JointElement, 4> elements;
  for (std::size_t i = 0; i < 4; ++i) elements[i] = j.at(kJointKeys[i]).get<JointElement>();
  g = JointObservable::from_elements(elements);
}

void to_json(json& j, const UnsharpnessCriterion& u) {
  j = json{{"lhs", u.lhs}, {"rhs", u.rhs}, {"holds", u.holds}};
}

void to_json(json& j, const JointCheck& c) {
  j = json{{"min_eigenvalue", c.min_eigenvalue},
           {"normalization_residual", c.normalization_residual},
           {"marginal_residual", c.marginal_residual}};
}

void to_json(json& j, const TradeoffReport& r) {
  j = json{{"err_sq_A", r.err_sq_A},       {"err_sq_B", r.err_sq_B}, {"lower_bound", r.lower_bound},
           {"slack", r.slack}, {"saturated", r.saturated}};
}

void from_json(const json& j, TradeoffReport& r) {
  r = TradeoffReport::make(j.at("err_sq_A").get<double>(), j.at("err_sq_B").get<double>(),
                           j.at("lower_bound").get<double>());
}

void to_json(json& j, const QurBound& b) {
  j = json{{"value", b.value}, {"alt_form", b.alt_form}};
}

void to_json(json& j, const OptimalPair& p) {
  j = json{{"c", p.c},
           {"d", p.d},
           {"achieved", p.achieved},
           {"bound", p.bound},
           {"slack", p.achieved - p.bound}};
}

void from_json(const json& j, OptimalPair& p) {
  p.c = j.at("c").get<BlochVector>();
  p.d = j.at("d").get<BlochVector>();
  p.achieved = j.at("achieved").get<double>();
  p.bound = j.at("bound").get<double>();
}

void to_json(json& j, const ProductBound& p) { j = json{{"lhs", p.lhs}, {"rhs", p.rhs}}; }

void to_json(json& j, const PrepSumRelations& p) {
  j = json{{"sum_std", p.sum_std},
           {"bound_std", p.bound_std},
           {"sum_var", p.sum_var},
           {"bound_var", p.bound_var}};
}

void to_json(json& j, const SmearingDistribution& s) {
  j = json{{"mu_plus", s.mu_plus()}, {"mu_minus", s.mu_minus()}};
}

void from_json(const json& j, SmearingDistribution& s) {
  s = SmearingDistribution(j.at("mu_plus").get<double>(), j.at("mu_minus").get<double>());
}

void to_json(json& j, const SmearingResult& s) {
  j = json{{"approximator", s.approximator}, {"err_sq", s.err_sq}, {"variance", s.variance}};
}

void to_json(json& j, const BoundChain& c) {
  j = json{{"lhs", c.lhs}, {"mid", c.mid}, {"rhs", c.rhs}};
}

void to_json(json& j, const HwCovariantForm& f) {
  json assignment = json::object();
  for (std::size_t i = 0; i < 4; ++i) assignment[kJointKeys[i]] = to_string(f.assignment[i]);
  j = json{{"joint", f.joint},
           {"rho_s", f.rho_s},
           {"assignment", assignment},
           {"residual", f.residual}};
}

void to_json(json& j, const NoiseOpReport& r) {
  j = json{{"eps_A", r.eps_A},
           {"eps_B", r.eps_B},
           {"delta_A", r.delta_A},
           {"delta_B", r.delta_B},
           {"state_dependent", r.state_dependent},
           {"sum_lhs", r.sum_lhs},
           {"sum_rhs", r.sum_rhs},
           {"product_lhs", r.product_lhs},
           {"product_rhs", r.product_rhs},
           {"eps_ge_half_delta_sq", r.eps_ge_half_delta_sq},
           {"eps_ge_unsharpness", r.eps_ge_unsharpness},
           {"eps_le_delta", r.eps_le_delta}};
}

void from_json(const json& j, NoiseOpReport& r) {
  r.eps_A = j.at("eps_A").get<double>();
  r.eps_B = j.at("eps_B").get<double>();
  r.delta_A = j.at("delta_A").get<double>();
  r.delta_B = j.at("delta_B").get<double>();
  r.state_dependent = j.at("state_dependent").get<bool>();
  r.sum_lhs = j.value("sum_lhs", 0.0);
  r.sum_rhs = j.value("sum_rhs", 0.0);
  r.product_lhs = j.value("product_lhs", 0.0);
  r.product_rhs = j.value("product_rhs", 0.0);
  r.eps_ge_half_delta_sq = j.value("eps_ge_half_delta_sq", false);
  r.eps_ge_unsharpness = j.value("eps_ge_unsharpness", false);
  r.eps_le_delta = j.value("eps_le_delta", false);
}

void to_json(json& j, const ViennaConfig& c) {
  j = json{{"a", c.a}, {"b", c.b}, {"c", c.c}, {"rho", c.rho}};
}

void from_json(const json& j, ViennaConfig& c) {
  c.a = j.at("a").get<BlochVector>();
  c.b = j.at("b").get<BlochVector>();
  c.c = j.at("c").get<BlochVector>();
  c.rho = j.at("rho").get<QubitState>();
  c.validate();
}

void to_json(json& j, const TorontoConfig& c) {
  j = json{{"theta", c.theta}, {"phi", c.phi}};
}

void from_json(const json& j, TorontoConfig& c) {
  c.theta = j.at("theta").get<double>();
  c.phi = j.value("phi", 0.0);
  c.validate();
}

void to_json(json& j, const SchemeResult& r) {
  j = json{{"C", r.approx_A},
           {"D", r.approx_B},
           {"M", r.joint},
           {"delta_sq_state_A", r.delta_sq_state_A},
           {"delta_sq_state_B", r.delta_sq_state_B},
           {"delta_sq_A", r.delta_sq_A},
           {"delta_sq_B", r.delta_sq_B},
           {"eps_sq_A", r.eps_sq_A},
           {"eps_sq_B", r.eps_sq_B},
           {"lhs", r.lhs},
           {"rhs", r.rhs},
           {"slack", r.slack},
           {"closed_form_residual", r.closed_form_residual}};
}

void to_json(json& j, const SequentialJoint& s) {
  j = json{{"joint", s.joint}, {"first", s.first}, {"second", s.second}};
}

void to_json(json& j, const TorontoRelations& r) {
  j = json{{"report", r.report},
           {"max_state_formula_residual", r.max_state_formula_residual},
           {"state_bounds_hold", r.state_bounds_hold}};
}

void to_json(json& j, const SweepRow& r) {
  j = json{{"parameter_deg", r.parameter_deg},
           {"phi_deg", r.phi_deg},
           {"delta_sq_A", r.delta_sq_A},
           {"delta_sq_B", r.delta_sq_B},
           {"delta_sq_state_A", r.delta_sq_state_A},
           {"delta_sq_state_B", r.delta_sq_state_B},
           {"eps_A", r.eps_A},
           {"eps_B", r.eps_B},
           {"lhs", r.lhs},
           {"rhs", r.rhs},
           {"slack", r.slack}};
}

void from_json(const json& j, SweepRow& r) {
  r.parameter_deg = j.at("parameter_deg").get<double>();
  r.phi_deg = j.at("phi_deg").get<double>();
  r.delta_sq_A = j.at("delta_sq_A").get<double>();
  r.delta_sq_B = j.at("delta_sq_B").get<double>();
  r.delta_sq_state_A = j.at("delta_sq_state_A").get<double>();
  r.delta_sq_state_B = j.at("delta_sq_state_B").get<double>();
  r.eps_A = j.at("eps_A").get<double>();
  r.eps_B = j.at("eps_B").get<double>();
  r.lhs = j.at("lhs").get<double>();
  r.rhs = j.at("rhs").get<double>();
  r.slack = j.at("slack").get<double>();
}

void to_json(json& j, const ShotRecord& r) {
  j = json{{"n_shots", r.n_shots}, {"counts", r.counts}, {"seed", r.seed}};
}

void from_json(const json& j, ShotRecord& r) {
  r.n_shots = j.at("n_shots").get<std::uint64_t>();
  r.counts = j.at("counts").get<std::vector<std::uint64_t>>();
  r.seed = j.at("seed").get<std::uint64_t>();
  std::uint64_t total = 0;
  for (std::uint64_t c : r.counts) total += c;
  if (total != r.n_shots) throw InvalidArgument("shot record counts must sum to n_shots");
}

void to_json(json& j, const ErrorAnalysisOptions& o) {
  j = json{{"resamples", o.resamples}, {"confidence", o.confidence}};
}

void from_json(const json& j, ErrorAnalysisOptions& o) {
  o.resamples = j.value("resamples", o.resamples);
  o.confidence = j.value("confidence", o.confidence);
}

void to_json(json& j, const StateErrorEstimate& e) {
  j = json{{"state", e.state},
           {"approx_shots", e.approx_shots},
           {"reference_shots", e.reference_shots},
           {"p_approx", e.p_approx},
           {"p_reference", e.p_reference},
           {"estimate", e.estimate},
           {"analytic", e.analytic},
           {"bias", e.bias},
           {"std_error", e.std_error},
           {"ci_low", e.ci_low},
           {"ci_high", e.ci_high}};
}

void to_json(json& j, const ErrorAnalysisReport& r) {
  j = json{{"n_shots", r.n_shots}, {"seed", r.seed}, {"options", r.options}, {"states", r.states}};
}

}  // namespace qmur
