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


#include "cli/run_config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string_view>

#include "qmur/errors.hpp"
#include "qmur/serialize.hpp"

namespace qmur::cli {

namespace {

using nlohmann::json;

double parse_number(std::string_view text, const std::string& what) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw ConfigError(what, "'" + std::string(text) + "' is not a finite number");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t begin = 0;
  for (;;) {
    const std::size_t end = text.find(sep, begin);
    parts.push_back(text.substr(begin, end - begin));
    if (end == std::string_view::npos) return parts;
    begin = end + 1;
  }
}

bool one_of(const std::string& value, std::initializer_list<std::string_view> choices) {
  return std::find(choices.begin(), choices.end(), value) != choices.end();
}

constexpr std::array<std::string_view, 22> kKeys{
    "command", "suite",     "samples",   "angle_deg", "a",          "b",
    "kind",    "sweep",     "phi_deg",   "state",     "scheme",     "alpha_deg",
    "theta_deg", "approx",  "reference", "states",    "shots",      "resamples",
    "confidence", "seed",   "output",    "format"};

// Reads one field, naming it in any error.
template <typename T>
void read(const json& doc, const char* key, const std::string& source, T& out) {
  const auto it = doc.find(key);
  if (it == doc.end()) return;
  try {
    out = it->get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(source + ": field '" + key + "'", e.what());
  } catch (const InvalidArgument& e) {
    throw ConfigError(source + ": field '" + key + "'", e.what());
  }
}

std::uint64_t read_count(const json& doc, const char* key, const std::string& source,
                         std::uint64_t fallback) {
  const auto it = doc.find(key);
  if (it == doc.end()) return fallback;
  if (!it->is_number_unsigned()) {
    throw ConfigError(source + ": field '" + std::string(key) + "'",
                      "expected a non-negative integer, got " + it->dump());
  }
  return it->get<std::uint64_t>();
}

void require_unit_field(const BlochVector& v, const char* what) {
  try {
    require_unit(v, what);
  } catch (const InvalidArgument& e) {
    throw ConfigError(what, e.what());
  }
}

}  // namespace

SweepRange SweepRange::parse(const std::string& text) {
  const auto parts = split(text, ':');
  SweepRange r;
  if (parts.size() == 1) {
    r.start = r.stop = parse_number(parts[0], "sweep");
    return r;
  }
  if (parts.size() != 3) throw ConfigError("sweep", "expected start:stop:step, got '" + text + "'");
  r.start = parse_number(parts[0], "sweep start");
  r.stop = parse_number(parts[1], "sweep stop");
  r.step = parse_number(parts[2], "sweep step");
  return r;
}

std::vector<double> SweepRange::values() const {
  if (!(step > 0.0)) throw ConfigError("sweep", "step must be positive");
  if (stop < start) throw ConfigError("sweep", "empty range (stop < start)");
  // Round so that an inclusive stop survives floating-point division.
  const double span = (stop - start) / step;
  const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
  if (count > 10'000'000) throw ConfigError("sweep", "range has too many points");
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = start + static_cast<double>(i) * step;
  return out;
}

BlochVector parse_vector(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw ConfigError("vector", "expected x,y,z, got '" + text + "'");
  return {parse_number(parts[0], "vector x"), parse_number(parts[1], "vector y"),
          parse_number(parts[2], "vector z")};
}

Format parse_format(const std::string& text) {
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw ConfigError("format", "expected csv or json, got '" + text + "'");
}

void RunConfig::validate() const {
  if (!one_of(command, {"verify", "optimize", "experiment", "simulate"})) {
    throw ConfigError("command", "unknown command '" + command + "'");
  }
  if (command == "verify") {
    if (!one_of(suite, {"qur", "prep", "epsno", "compat", "all"})) {
      throw ConfigError("suite", "expected qur|prep|epsno|compat|all, got '" + suite + "'");
    }
    if (samples == 0) throw ConfigError("samples", "must be >= 1");
  } else if (command == "optimize") {
    const bool vectors = a.has_value() || b.has_value();
    if (angle_deg.has_value() == vectors) {
      throw ConfigError("optimize", "give either an angle or both vectors a and b");
    }
    if (angle_deg.has_value() && !std::isfinite(*angle_deg)) {
      throw ConfigError("angle_deg", "must be finite");
    }
    if (vectors) {
      if (!a || !b) throw ConfigError("optimize", "both vectors a and b are required");
      require_unit_field(*a, "a");
      require_unit_field(*b, "b");
    }
  } else if (command == "experiment") {
    if (!one_of(kind, {"vienna", "toronto"})) {
      throw ConfigError("kind", "expected vienna or toronto, got '" + kind + "'");
    }
    if (!sweep) throw ConfigError("sweep", "a sweep range is required");
    (void)sweep->values();
    if (!std::isfinite(phi_deg)) throw ConfigError("phi_deg", "must be finite");
    if (norm(state) > 1.0 + 1e-12) throw ConfigError("state", "Bloch vector longer than 1");
  } else {
    if (!one_of(scheme, {"vienna", "toronto", "custom"})) {
      throw ConfigError("scheme", "expected vienna, toronto or custom, got '" + scheme + "'");
    }
    if (scheme == "custom") {
      if (!approx || !reference) {
        throw ConfigError("scheme", "custom scheme needs both 'approx' and 'reference'");
      }
      if (!approx->has_unit_values() || !reference->has_unit_values()) {
        throw ConfigError("approx", "observables need +1/-1 outcome labels");
      }
    } else if (approx || reference) {
      throw ConfigError("approx", "'approx' and 'reference' apply only to the custom scheme");
    }
    if (!std::isfinite(alpha_deg) || !std::isfinite(theta_deg) || !std::isfinite(phi_deg)) {
      throw ConfigError("angles", "must be finite");
    }
    for (std::size_t i = 0; i < states.size(); ++i) {
      if (norm(states[i]) > 1.0 + 1e-12) {
        throw ConfigError("states[" + std::to_string(i) + "]", "Bloch vector longer than 1");
      }
    }
    if (shots == 0) throw ConfigError("shots", "must be >= 1");
    if (resamples < 2) throw ConfigError("resamples", "must be >= 2");
    if (!(confidence > 0.0 && confidence < 1.0)) {
      throw ConfigError("confidence", "must lie in (0, 1)");
    }
  }
}

RunConfig parse_run_config(const std::string& text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t byte = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < byte; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ConfigError(source + ":" + std::to_string(line) + ":" + std::to_string(column),
                      "JSON syntax error");
  }
  if (!doc.is_object()) throw ConfigError(source, "top-level value must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) {
      throw ConfigError(source + ": field '" + key + "'", "unknown key");
    }
  }

  RunConfig cfg;
  cfg.command = "simulate";
  read(doc, "command", source, cfg.command);
  read(doc, "suite", source, cfg.suite);
  cfg.samples = read_count(doc, "samples", source, cfg.samples);
  if (doc.contains("angle_deg")) {
    double angle = 0.0;
    read(doc, "angle_deg", source, angle);
    cfg.angle_deg = angle;
  }
  if (doc.contains("a")) {
    BlochVector v;
    read(doc, "a", source, v);
    cfg.a = v;
  }
  if (doc.contains("b")) {
    BlochVector v;
    read(doc, "b", source, v);
    cfg.b = v;
  }
  read(doc, "kind", source, cfg.kind);
  if (const auto it = doc.find("sweep"); it != doc.end()) {
    if (it->is_string()) {
      try {
        cfg.sweep = SweepRange::parse(it->get<std::string>());
      } catch (const ConfigError& e) {
        throw ConfigError(source + ": field 'sweep'", e.what());
      }
    } else {
      SweepRange r;
      try {
        r.start = it->at("start").get<double>();
        r.stop = it->at("stop").get<double>();
        r.step = it->value("step", 1.0);
      } catch (const json::exception& e) {
        throw ConfigError(source + ": field 'sweep'", e.what());
      }
      cfg.sweep = r;
    }
  }
  read(doc, "phi_deg", source, cfg.phi_deg);
  read(doc, "state", source, cfg.state);
  read(doc, "scheme", source, cfg.scheme);
  read(doc, "alpha_deg", source, cfg.alpha_deg);
  read(doc, "theta_deg", source, cfg.theta_deg);
  if (doc.contains("approx")) {
    BinaryObservable o;
    read(doc, "approx", source, o);
    cfg.approx = o;
  }
  if (doc.contains("reference")) {
    BinaryObservable o;
    read(doc, "reference", source, o);
    cfg.reference = o;
  }
  read(doc, "states", source, cfg.states);
  cfg.shots = read_count(doc, "shots", source, cfg.shots);
  cfg.resamples = read_count(doc, "resamples", source, cfg.resamples);
  read(doc, "confidence", source, cfg.confidence);
  cfg.seed = read_count(doc, "seed", source, cfg.seed);
  read(doc, "output", source, cfg.output);
  if (const auto it = doc.find("format"); it != doc.end()) {
    std::string f;
    read(doc, "format", source, f);
    try {
      cfg.format = parse_format(f);
    } catch (const ConfigError& e) {
      throw ConfigError(source + ": field 'format'", e.what());
    }
  }
  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path + "'");
  return parse_run_config(text.str(), path);
}

nlohmann::json to_json(const RunConfig& cfg) {
  json j{{"command", cfg.command}, {"seed", cfg.seed}};
  if (cfg.command == "verify") {
    j["suite"] = cfg.suite;
    j["samples"] = cfg.samples;
  } else if (cfg.command == "optimize") {
    if (cfg.angle_deg) j["angle_deg"] = *cfg.angle_deg;
    if (cfg.a) j["a"] = *cfg.a;
    if (cfg.b) j["b"] = *cfg.b;
  } else if (cfg.command == "experiment") {
    j["kind"] = cfg.kind;
    if (cfg.sweep) {
      j["sweep"] = {{"start", cfg.sweep->start}, {"stop", cfg.sweep->stop},
                    {"step", cfg.sweep->step}};
    }
    j["phi_deg"] = cfg.phi_deg;
    j["state"] = cfg.state;
    j["format"] = cfg.format == Format::csv ? "csv" : "json";
  } else {
    j["scheme"] = cfg.scheme;
    if (cfg.scheme == "vienna") j["alpha_deg"] = cfg.alpha_deg;
    if (cfg.scheme == "toronto") {
      j["theta_deg"] = cfg.theta_deg;
      j["phi_deg"] = cfg.phi_deg;
    }
    if (cfg.approx) j["approx"] = *cfg.approx;
    if (cfg.reference) j["reference"] = *cfg.reference;
    j["states"] = cfg.states;
    j["shots"] = cfg.shots;
    j["resamples"] = cfg.resamples;
    j["confidence"] = cfg.confidence;
  }
  return j;
}

}  // namespace qmur::cli
