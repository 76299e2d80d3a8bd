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


#include "cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli/verify.hpp"
#include "qmur/errors.hpp"
#include "qmur/experiments.hpp"
#include "qmur/montecarlo.hpp"
#include "qmur/noiseop.hpp"
#include "qmur/serialize.hpp"
#include "qmur/tradeoff.hpp"
#include "qmur/transport.hpp"

namespace qmur::cli {

namespace {

using nlohmann::json;

constexpr double kDegree = std::numbers::pi / 180.0;
constexpr double kSlackTolerance = 1e-9;

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty() || cfg.output == "-") {
    out << text;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open output file '" + cfg.output + "'");
  file << text;
  file.close();
  if (!file) throw IoError("error while writing '" + cfg.output + "'");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int code(ExitCode c) { return static_cast<int>(c); }

struct Comparison {
  std::string target;
  BinaryObservable approx;
  BinaryObservable reference;
};

}  // namespace

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::vector<SuiteResult> results = run_suites(cfg.suite, cfg.samples, cfg.seed);
  std::uint64_t violations = 0;
  json suites = json::array();
  for (const SuiteResult& r : results) {
    violations += r.violations();
    suites.push_back(to_json(r));
  }
  const json summary{{"command", "verify"},
                     {"suite", cfg.suite},
                     {"samples", cfg.samples},
                     {"seed", cfg.seed},
                     {"violations", violations},
                     {"suites", suites}};
  emit(cfg, dump(summary), out);
  if (violations > 0) {
    err << "verify: " << violations << " violation(s)\n";
    return code(ExitCode::violation);
  }
  return code(ExitCode::ok);
}

int cmd_optimize(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  BlochVector a = axes::i;
  BlochVector b;
  if (cfg.angle_deg) {
    const double t = *cfg.angle_deg * kDegree;
    b = {std::cos(t), std::sin(t), 0.0};
  } else {
    a = *cfg.a;
    b = *cfg.b;
  }
  const OptimalPair p = optimal_pair(a, b);
  json j = p;
  j["a"] = a;
  j["b"] = b;
  emit(cfg, dump(j), out);
  if (!(std::abs(p.achieved - p.bound) <= kSlackTolerance)) {
    err << "optimize: achieved value misses the bound by " << p.achieved - p.bound << "\n";
    return code(ExitCode::violation);
  }
  return code(ExitCode::ok);
}

int cmd_experiment(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::vector<double> degrees = cfg.sweep->values();
  std::vector<double> angles = degrees;
  for (double& x : angles) x *= kDegree;
  const bool vienna = cfg.kind == "vienna";
  std::vector<SweepRow> rows =
      vienna ? vienna_sweep(angles)
             : toronto_sweep(angles, cfg.phi_deg * kDegree, QubitState(cfg.state));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].parameter_deg = degrees[i];
    if (!vienna) rows[i].phi_deg = cfg.phi_deg;
  }
  const char* parameter = vienna ? "alpha" : "theta";

  std::string text;
  if (cfg.format == Format::csv) {
    std::ostringstream os;
    write_sweep_csv(os, rows, parameter);
    text = os.str();
  } else {
    json j{{"command", "experiment"}, {"kind", cfg.kind}, {"parameter", parameter},
           {"rows", rows}};
    if (!vienna) {
      j["phi_deg"] = cfg.phi_deg;
      j["state"] = QubitState(cfg.state);
    }
    text = dump(j);
  }
  emit(cfg, text, out);

  std::size_t violations = 0;
  for (const SweepRow& r : rows) {
    if (!(r.slack >= -kSlackTolerance)) ++violations;
  }
  if (violations > 0) {
    err << "experiment: " << violations << " row(s) violate the lower bound\n";
    return code(ExitCode::violation);
  }
  return code(ExitCode::ok);
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
  std::vector<QubitState> states;
  for (const BlochVector& r : cfg.states) states.emplace_back(r);
  if (states.empty()) states.emplace_back(axes::k);

  json scheme{{"name", cfg.scheme}};
  std::vector<Comparison> comparisons;
  if (cfg.scheme == "vienna") {
    const ViennaConfig vc = ViennaConfig::canonical(cfg.alpha_deg * kDegree);
    const SchemeResult res = vienna_model(vc);
    scheme["alpha_deg"] = cfg.alpha_deg;
    scheme["config"] = vc;
    comparisons = {{"A", res.approx_A, BinaryObservable::sharp(vc.a)},
                   {"B", res.approx_B, BinaryObservable::sharp(vc.b)}};
  } else if (cfg.scheme == "toronto") {
    const TorontoConfig tc{cfg.theta_deg * kDegree, cfg.phi_deg * kDegree};
    tc.validate();
    const TorontoObservables obs = toronto_closed_form(tc);
    scheme["theta_deg"] = cfg.theta_deg;
    scheme["phi_deg"] = cfg.phi_deg;
    comparisons = {{"A", obs.C, BinaryObservable::sharp(axes::k)},
                   {"B", obs.D, BinaryObservable::sharp(axes::i)}};
  } else {
    comparisons = {{"custom", *cfg.approx, *cfg.reference}};
  }

  const ErrorAnalysisOptions options{cfg.resamples, cfg.confidence};
  json results = json::array();
  for (std::size_t i = 0; i < comparisons.size(); ++i) {
    const Comparison& c = comparisons[i];
    const ErrorAnalysisReport report = empirical_error_analysis(
        c.approx, c.reference, states, cfg.shots, derive_seed(cfg.seed, i), options);
    json analysis = report;
    json eps = json::array();
    for (std::size_t s = 0; s < states.size(); ++s) {
      const StateErrorEstimate& e = report.states[s];
      json& row = analysis["states"][s];
      row["ci_contains_zero"] = e.ci_low <= 0.0;
      row["ci_contains_analytic"] = e.ci_low <= e.analytic && e.analytic <= e.ci_high;
      row["eps_no"] = std::sqrt(std::max(0.0, eps_no_sq(c.approx, c.reference, states[s])));
    }
    results.push_back({{"target", c.target},
                       {"approx", c.approx},
                       {"reference", c.reference},
                       {"delta_sq_worst", delta_sq_worst(c.approx, c.reference)},
                       {"analysis", analysis}});
  }
  const json j{{"command", "simulate"},
               {"scheme", scheme},
               {"shots", cfg.shots},
               {"seed", cfg.seed},
               {"comparisons", results}};
  emit(cfg, dump(j), out);
  return code(ExitCode::ok);
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    cfg.validate();
    if (cfg.command == "verify") return cmd_verify(cfg, out, err);
    if (cfg.command == "optimize") return cmd_optimize(cfg, out, err);
    if (cfg.command == "experiment") return cmd_experiment(cfg, out, err);
    return cmd_simulate(cfg, out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return code(ExitCode::usage);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return code(ExitCode::io);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return code(ExitCode::usage);
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return code(ExitCode::usage);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return code(ExitCode::violation);
  }
}

}  // namespace qmur::cli
