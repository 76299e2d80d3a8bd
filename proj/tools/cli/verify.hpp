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


// Random-sweep property suites behind `qmur verify`.

#ifndef QMUR_TOOLS_VERIFY_HPP
#define QMUR_TOOLS_VERIFY_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace qmur::cli {

// Tally of one property. Each check contributes a margin that must stay
// >= -tolerance; the smallest margin and its instance are kept.
struct PropertyTally {
  std::string name;
  double tolerance = 0.0;
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
  double min_margin = std::numeric_limits<double>::infinity();
  double max_margin = -std::numeric_limits<double>::infinity();
  nlohmann::json worst_case;
  nlohmann::json first_violation;

  template <typename MakeInstance>
  void record(double margin, MakeInstance&& instance) {
    ++checks;
    const bool violated = !(margin >= -tolerance);
    if (violated) ++violations;
    if (margin < min_margin || violated) {
      nlohmann::json j = instance();
      if (margin < min_margin) {
        min_margin = margin;
        worst_case = j;
      }
      if (violated && first_violation.is_null()) first_violation = std::move(j);
    }
    if (margin > max_margin) max_margin = margin;
  }
};

struct SuiteResult {
  std::string suite;
  std::uint64_t samples = 0;
  std::vector<PropertyTally> properties;
  nlohmann::json details = nlohmann::json::object();
  std::uint64_t violations() const;
};

/// Runs one suite ("qur", "prep", "epsno", "compat"); each suite draws from
/// its own seed-derived stream.
SuiteResult run_suite(const std::string& suite, std::uint64_t samples, std::uint64_t seed);

/// Suites named by `suite`, expanding "all".
std::vector<SuiteResult> run_suites(const std::string& suite, std::uint64_t samples,
                                    std::uint64_t seed);

nlohmann::json to_json(const PropertyTally& t);
nlohmann::json to_json(const SuiteResult& s);

}  // namespace qmur::cli

#endif  // QMUR_TOOLS_VERIFY_HPP
