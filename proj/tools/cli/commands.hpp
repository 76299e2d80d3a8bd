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


// The four qmur subcommands. Each takes a RunConfig, writes its artifact to
// cfg.output (or `out`), diagnostics to `err`, and returns an exit code.

#ifndef QMUR_TOOLS_COMMANDS_HPP
#define QMUR_TOOLS_COMMANDS_HPP

#include <iosfwd>

#include "cli/run_config.hpp"

namespace qmur::cli {

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_optimize(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_experiment(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Validates `cfg` and dispatches on cfg.command, mapping exceptions to
/// exit codes (ConfigError and invalid domain input: 2, IoError: 3,
/// numerical failure: 1).
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace qmur::cli

#endif  // QMUR_TOOLS_COMMANDS_HPP
