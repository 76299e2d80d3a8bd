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


#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "cli/run_config.hpp"

namespace {

using qmur::cli::ConfigError;
using qmur::cli::ExitCode;
using qmur::cli::IoError;
using qmur::cli::RunConfig;

struct Flags {
  std::string suite = "all";
  std::uint64_t samples = 10000;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> output;
  std::optional<double> angle;
  std::optional<std::string> a;
  std::optional<std::string> b;
  std::string kind;
  std::optional<std::string> alpha;
  std::optional<std::string> theta;
  std::optional<double> phi;
  std::optional<std::string> state;
  std::string format = "csv";
  std::optional<std::string> config;
  std::optional<std::uint64_t> shots;
  std::optional<std::uint64_t> resamples;
};

RunConfig build(const std::string& command, const Flags& f) {
  RunConfig cfg;
  if (command == "simulate" && f.config) {
    cfg = qmur::cli::load_run_config(*f.config);
    if (cfg.command != "simulate") {
      throw ConfigError(*f.config + ": field 'command'", "expected \"simulate\"");
    }
  }
  cfg.command = command;
  if (f.seed) cfg.seed = *f.seed;
  if (f.output) cfg.output = *f.output;

  if (command == "verify") {
    cfg.suite = f.suite;
    cfg.samples = f.samples;
  } else if (command == "optimize") {
    cfg.angle_deg = f.angle;
    if (f.a) cfg.a = qmur::cli::parse_vector(*f.a);
    if (f.b) cfg.b = qmur::cli::parse_vector(*f.b);
  } else if (command == "experiment") {
    cfg.kind = f.kind;
    const auto& range = f.kind == "vienna" ? f.alpha : f.theta;
    const auto& other = f.kind == "vienna" ? f.theta : f.alpha;
    const char* name = f.kind == "vienna" ? "--alpha" : "--theta";
    if (other) throw ConfigError(f.kind, std::string("use ") + name + " for this experiment");
    if (!range) throw ConfigError(f.kind, std::string(name) + " start:stop:step is required");
    cfg.sweep = qmur::cli::SweepRange::parse(*range);
    if (f.phi) {
      if (f.kind == "vienna") throw ConfigError("--phi", "applies only to toronto");
      cfg.phi_deg = *f.phi;
    }
    if (f.state) cfg.state = qmur::cli::parse_vector(*f.state);
    cfg.format = qmur::cli::parse_format(f.format);
  } else {
    if (f.shots) cfg.shots = *f.shots;
    if (f.resamples) cfg.resamples = *f.resamples;
  }
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qmur: qubit measurement uncertainty relations toolkit"};
  app.require_subcommand(1);
  Flags f;

  auto* verify = app.add_subcommand("verify", "Run random-sweep property suites");
  verify->add_option("--suite", f.suite, "qur|prep|epsno|compat|all");
  verify->add_option("--samples", f.samples, "Random instances per suite");

  auto* optimize = app.add_subcommand("optimize", "Error-optimal compatible approximators");
  optimize->add_option("--angle", f.angle, "Angle between a = x and b in the xy-plane (degrees)");
  optimize->add_option("--a", f.a, "Target axis a as x,y,z");
  optimize->add_option("--b", f.b, "Target axis b as x,y,z");

  auto* experiment = app.add_subcommand("experiment", "Parameter sweeps of the two schemes");
  experiment->add_option("kind", f.kind, "vienna|toronto")->required();
  experiment->add_option("--alpha", f.alpha, "Approximator angle sweep start:stop:step (degrees)");
  experiment->add_option("--theta", f.theta, "Pointer angle sweep start:stop:step (degrees)");
  experiment->add_option("--phi", f.phi, "Pointer phase (degrees, toronto)");
  experiment->add_option("--state", f.state, "Input state Bloch vector x,y,z (toronto)");
  experiment->add_option("--format", f.format, "csv|json");

  auto* simulate = app.add_subcommand("simulate", "Finite-shot error analysis");
  simulate->add_option("--config", f.config, "JSON run configuration");
  simulate->add_option("--shots", f.shots, "Shots per observable and state");
  simulate->add_option("--resamples", f.resamples, "Bootstrap resamples");

  for (CLI::App* sub : {verify, optimize, experiment, simulate}) {
    sub->add_option("--seed", f.seed, "Random seed");
    sub->add_option("--output,-o", f.output, "Output file (default: standard output)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(ExitCode::usage);
  }

  const std::string command = app.get_subcommands().front()->get_name();
  RunConfig cfg;
  try {
    cfg = build(command, f);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::usage);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::io);
  }
  return qmur::cli::run(cfg, std::cout, std::cerr);
}
