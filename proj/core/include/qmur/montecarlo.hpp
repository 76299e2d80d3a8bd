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

// Finite-shot sampling and the empirical error analysis: sample an
// approximator and a reference observable on the same input states and
// compare the two outcome distributions in the transport metric.
//
// Randomness: every stream is a std::mt19937_64 seeded through
// derive_seed(seed, stream). Uniform doubles are built from the top 53 bits
// of each draw, so results do not depend on the standard library's
// distribution implementations. Stream numbering used by
// empirical_error_analysis for state i:
//   2i     approximator shots
//   2i + 1 reference shots
//   kBootstrapStreamOffset + i  bootstrap resamples

#ifndef QMUR_MONTECARLO_HPP
#define QMUR_MONTECARLO_HPP

#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <vector>

#include "qmur/bloch.hpp"
#include "qmur/compat.hpp"

namespace qmur {

/// SplitMix64 mix of (seed, stream); distinct streams give unrelated seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::uint64_t bits() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// Outcome counts of n i.i.d. shots. Binary observables record (+, -);
// joint observables record (++, +-, -+, --).
struct ShotRecord {
  std::uint64_t n_shots = 0;
  std::vector<std::uint64_t> counts;
  std::uint64_t seed = 0;

  double frequency(std::size_t outcome) const;
  friend bool operator==(const ShotRecord&, const ShotRecord&) = default;
};

/// Pools two records over the same outcome set. Associative and
/// commutative in the counts; the merged seed is the first record's seed.
ShotRecord merge(const ShotRecord& a, const ShotRecord& b);

/// Draws `n` shots of `obs` in `rho`. Deterministic given `seed`.
ShotRecord sample(const BinaryObservable& obs, const QubitState& rho, std::uint64_t n,
                  std::uint64_t seed);
ShotRecord sample(const JointObservable& obs, const QubitState& rho, std::uint64_t n,
                  std::uint64_t seed);

/// Writes "outcome,count" rows.
void write_counts_csv(std::ostream& os, const ShotRecord& record);

// Binomial(n, p) draws by inverse-CDF lookup in a precomputed table
// covering all outcomes with non-negligible mass.
class BinomialSampler {
 public:
  BinomialSampler(std::uint64_t n, double p);
  std::uint64_t operator()(Rng& rng) const;

 private:
  std::uint64_t first_ = 0;
  std::vector<double> cdf_;
};

inline constexpr std::uint64_t kBootstrapStreamOffset = 1ULL << 32;

struct ErrorAnalysisOptions {
  std::uint64_t resamples = 1000;
  double confidence = 0.95;
};

struct StateErrorEstimate {
  QubitState state;
  ShotRecord approx_shots;
  ShotRecord reference_shots;
  double p_approx = 0.0;     // empirical P(+)
  double p_reference = 0.0;
  double estimate = 0.0;     // 4 |p_approx - p_reference|
  double analytic = 0.0;     // delta_sq_state
  double bias = 0.0;         // estimate - analytic
  double std_error = 0.0;    // 4 sqrt(p1(1-p1)/n + p2(1-p2)/n)
  double ci_low = 0.0;       // bootstrap interval for Delta^2
  double ci_high = 0.0;
};

struct ErrorAnalysisReport {
  std::uint64_t n_shots = 0;
  std::uint64_t seed = 0;
  ErrorAnalysisOptions options;
  std::vector<StateErrorEstimate> states;
};

/// For every state, samples approximator and reference, forms the plug-in
/// estimate 4|p1 - p2| of Delta(approx_rho, reference_rho)^2 and a
/// percentile-bootstrap interval. The interval is built for the signed
/// difference p1 - p2 and mapped through 4|.|, so it contains 0 whenever the
/// signed interval does. Both observables need +/-1 labels.
ErrorAnalysisReport empirical_error_analysis(const BinaryObservable& approx,
                                             const BinaryObservable& reference,
                                             std::span<const QubitState> states,
                                             std::uint64_t n, std::uint64_t seed,
                                             const ErrorAnalysisOptions& options = {});

}  // namespace qmur

#endif  // QMUR_MONTECARLO_HPP
