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

#include "qmur/montecarlo.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <ostream>
#include <string>

#include "qmur/errors.hpp"
#include "qmur/transport.hpp"

namespace qmur {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Type-7 (linear interpolation) quantile of sorted data.
double quantile(const std::vector<double>& sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

template <std::size_t N>
ShotRecord sample_categorical(const std::array<double, N>& probs, std::uint64_t n,
                              std::uint64_t seed) {
  if (n == 0) throw InvalidArgument("sample: number of shots must be >= 1");
  std::array<double, N> cdf{};
  double total = 0.0;
  for (std::size_t i = 0; i < N; ++i) {
    total += std::max(0.0, probs[i]);
    cdf[i] = total;
  }
  for (double& c : cdf) c /= total;
  cdf[N - 1] = 1.0;

  ShotRecord rec;
  rec.n_shots = n;
  rec.seed = seed;
  rec.counts.assign(N, 0);
  Rng rng(seed);
  for (std::uint64_t shot = 0; shot < n; ++shot) {
    const double u = rng.uniform();
    std::size_t i = 0;
    while (i + 1 < N && u >= cdf[i]) ++i;
    ++rec.counts[i];
  }
  return rec;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed ^ splitmix64(stream));
}

double ShotRecord::frequency(std::size_t outcome) const {
  if (n_shots == 0) return 0.0;
  return static_cast<double>(counts.at(outcome)) / static_cast<double>(n_shots);
}

ShotRecord merge(const ShotRecord& a, const ShotRecord& b) {
  if (a.counts.size() != b.counts.size()) {
    throw InvalidArgument("merge: records have different outcome sets");
  }
  ShotRecord out = a;
  out.n_shots += b.n_shots;
  for (std::size_t i = 0; i < out.counts.size(); ++i) out.counts[i] += b.counts[i];
  return out;
}

ShotRecord sample(const BinaryObservable& obs, const QubitState& rho, std::uint64_t n,
                  std::uint64_t seed) {
  return sample_categorical<2>(
      {probability(obs, Outcome::plus, rho), probability(obs, Outcome::minus, rho)}, n, seed);
}

ShotRecord sample(const JointObservable& obs, const QubitState& rho, std::uint64_t n,
                  std::uint64_t seed) {
  std::array<double, 4> probs{};
  for (Outcome k : kOutcomes) {
    for (Outcome l : kOutcomes) probs[JointObservable::index(k, l)] = obs.probability(k, l, rho);
  }
  return sample_categorical<4>(probs, n, seed);
}

void write_counts_csv(std::ostream& os, const ShotRecord& record) {
  static constexpr std::array<const char*, 2> kBinary{"+", "-"};
  static constexpr std::array<const char*, 4> kJoint{"++", "+-", "-+", "--"};
  os << "outcome,count\n";
  for (std::size_t i = 0; i < record.counts.size(); ++i) {
    const char* label = record.counts.size() == 2 ? kBinary[i]
                        : record.counts.size() == 4 ? kJoint[i]
                                                    : nullptr;
    if (label != nullptr) {
      os << label;
    } else {
      os << i;
    }
    os << ',' << record.counts[i] << '\n';
  }
}

BinomialSampler::BinomialSampler(std::uint64_t n, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("BinomialSampler: p must lie in [0, 1]");
  if (p == 0.0 || p == 1.0 || n == 0) {
    first_ = p == 1.0 ? n : 0;
    cdf_ = {1.0};
    return;
  }
  const double nd = static_cast<double>(n);
  const auto mode = std::min<std::uint64_t>(n, static_cast<std::uint64_t>((nd + 1.0) * p));
  const double md = static_cast<double>(mode);
  const double log_pmf_mode = std::lgamma(nd + 1.0) - std::lgamma(md + 1.0) -
                              std::lgamma(nd - md + 1.0) + md * std::log(p) +
                              (nd - md) * std::log1p(-p);
  const double odds = p / (1.0 - p);
  constexpr double kNegligible = 1e-18;

  // Walk outward from the mode using pmf(k+1)/pmf(k) = (n-k)/(k+1) * odds.
  std::vector<double> left;  // pmf(mode-1), pmf(mode-2), ...
  double pmf = std::exp(log_pmf_mode);
  for (std::uint64_t k = mode; k > 0 && pmf > kNegligible; --k) {
    pmf *= static_cast<double>(k) / (static_cast<double>(n - k + 1) * odds);
    left.push_back(pmf);
  }
  std::vector<double> right;  // pmf(mode), pmf(mode+1), ...
  pmf = std::exp(log_pmf_mode);
  right.push_back(pmf);
  for (std::uint64_t k = mode; k < n && pmf > kNegligible; ++k) {
    pmf *= static_cast<double>(n - k) / static_cast<double>(k + 1) * odds;
    right.push_back(pmf);
  }

  first_ = mode - left.size();
  cdf_.reserve(left.size() + right.size());
  double total = 0.0;
  for (auto it = left.rbegin(); it != left.rend(); ++it) cdf_.push_back(total += *it);
  for (double v : right) cdf_.push_back(total += v);
  for (double& c : cdf_) c /= total;
  cdf_.back() = 1.0;
}

std::uint64_t BinomialSampler::operator()(Rng& rng) const {
  const double u = rng.uniform();
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  const auto offset = static_cast<std::uint64_t>(
      std::min<std::ptrdiff_t>(it - cdf_.begin(), static_cast<std::ptrdiff_t>(cdf_.size()) - 1));
  return first_ + offset;
}

ErrorAnalysisReport empirical_error_analysis(const BinaryObservable& approx,
                                             const BinaryObservable& reference,
                                             std::span<const QubitState> states,
                                             std::uint64_t n, std::uint64_t seed,
                                             const ErrorAnalysisOptions& options) {
  if (!approx.has_unit_values() || !reference.has_unit_values()) {
    throw InvalidArgument("empirical_error_analysis: observables need +1/-1 labels");
  }
  if (n == 0) throw InvalidArgument("empirical_error_analysis: shots must be >= 1");
  if (options.resamples < 2) {
    throw InvalidArgument("empirical_error_analysis: need at least 2 bootstrap resamples");
  }
  if (!(options.confidence > 0.0 && options.confidence < 1.0)) {
    throw InvalidArgument("empirical_error_analysis: confidence must lie in (0, 1)");
  }

  ErrorAnalysisReport report;
  report.n_shots = n;
  report.seed = seed;
  report.options = options;
  const double nd = static_cast<double>(n);

  for (std::size_t i = 0; i < states.size(); ++i) {
    StateErrorEstimate est;
    est.state = states[i];
    est.approx_shots = sample(approx, states[i], n, derive_seed(seed, 2 * i));
    est.reference_shots = sample(reference, states[i], n, derive_seed(seed, 2 * i + 1));
    est.p_approx = est.approx_shots.frequency(0);
    est.p_reference = est.reference_shots.frequency(0);
    est.estimate = 4.0 * std::abs(est.p_approx - est.p_reference);
    est.analytic = delta_sq_state(approx, reference, states[i]);
    est.bias = est.estimate - est.analytic;
    est.std_error = 4.0 * std::sqrt(est.p_approx * (1.0 - est.p_approx) / nd +
                                     est.p_reference * (1.0 - est.p_reference) / nd);

    // Resampling n shots with replacement from a binary sample is exactly
    // a Binomial(n, p_hat) draw.
    const BinomialSampler draw_approx(n, est.p_approx);
    const BinomialSampler draw_reference(n, est.p_reference);
    Rng rng(derive_seed(seed, kBootstrapStreamOffset + i));
    std::vector<double> diffs(options.resamples);
    for (double& d : diffs) {
      const auto x1 = static_cast<double>(draw_approx(rng));
      const auto x2 = static_cast<double>(draw_reference(rng));
      d = (x1 - x2) / nd;
    }
    std::sort(diffs.begin(), diffs.end());
    const double tail = 0.5 * (1.0 - options.confidence);
    const double lo = quantile(diffs, tail);
    const double hi = quantile(diffs, 1.0 - tail);
    if (lo <= 0.0 && hi >= 0.0) {
      est.ci_low = 0.0;
      est.ci_high = 4.0 * std::max(-lo, hi);
    } else {
      est.ci_low = 4.0 * std::min(std::abs(lo), std::abs(hi));
      est.ci_high = 4.0 * std::max(std::abs(lo), std::abs(hi));
    }
    report.states.push_back(std::move(est));
  }
  return report;
}

}  // namespace qmur
