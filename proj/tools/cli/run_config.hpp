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


// RunConfig: the validated parameter set of one CLI invocation. Flags and
// JSON config files both end up here; commands only ever see a validated
// RunConfig.

#ifndef QMUR_TOOLS_RUN_CONFIG_HPP
#define QMUR_TOOLS_RUN_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qmur/bloch.hpp"

namespace qmur::cli {

enum class ExitCode : int { ok = 0, violation = 1, usage = 2, io = 3 };

// Invalid parameters. `where` is "file:line:column", a field path, or empty.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& where, const std::string& what)
      : std::runtime_error(where.empty() ? what : where + ": " + what) {}
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SweepRange {
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;

  /// "start:stop:step" (stop inclusive) or "value".
  static SweepRange parse(const std::string& text);
  /// Evaluated as start + i*step, ascending. Throws ConfigError when empty.
  std::vector<double> values() const;
};

enum class Format { csv, json };

struct RunConfig {
  std::string command;  // verify | optimize | experiment | simulate

  // verify
  std::string suite = "all";
  std::uint64_t samples = 10000;

  // optimize
  std::optional<double> angle_deg;
  std::optional<BlochVector> a;
  std::optional<BlochVector> b;

  // experiment
  std::string kind;  // vienna | toronto
  std::optional<SweepRange> sweep;
  double phi_deg = 0.0;
  BlochVector state = axes::k;

  // simulate
  std::string scheme = "vienna";  // vienna | toronto | custom
  double alpha_deg = 45.0;
  double theta_deg = 45.0;
  std::optional<BinaryObservable> approx;
  std::optional<BinaryObservable> reference;
  std::vector<BlochVector> states;
  std::uint64_t shots = 100000;
  std::uint64_t resamples = 1000;
  double confidence = 0.95;

  std::uint64_t seed = 1;
  std::string output;  // empty or "-" for standard output
  Format format = Format::json;

  /// Throws ConfigError on the first invalid or inconsistent parameter.
  void validate() const;
};

/// Reads a JSON RunConfig document. Unknown keys and ill-typed fields are
/// rejected with the offending field named; syntax errors report
/// file:line:column. Throws IoError if the file cannot be read.
RunConfig load_run_config(const std::string& path);
RunConfig parse_run_config(const std::string& text, const std::string& source);

nlohmann::json to_json(const RunConfig& cfg);

BlochVector parse_vector(const std::string& text);
Format parse_format(const std::string& text);

}  // namespace qmur::cli

#endif  // QMUR_TOOLS_RUN_CONFIG_HPP
