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

// Wasserstein-2 distances between two-point distributions, and the
// state-dependent and worst-case approximation errors they induce between
// binary qubit observables.
//
// A coupling of two binary distributions has one free parameter, the mass
// gamma placed on (+, +). The transport cost is linear in gamma with a
// negative slope whenever both label pairs are ordered, so the optimum is the
// largest feasible gamma, min(p, q). For +/-1 labels this gives
// W2^2 = 4|p - q|.

#ifndef QMUR_TRANSPORT_HPP
#define QMUR_TRANSPORT_HPP

#include <utility>

#include "qmur/bloch.hpp"

namespace qmur {

/// Outcome labels (v+, v-) of a two-point distribution.
struct OutcomeValues {
  double plus = 1.0;
  double minus = -1.0;

  friend bool operator==(const OutcomeValues&, const OutcomeValues&) = default;
};

inline constexpr OutcomeValues kUnitValues{1.0, -1.0};

// Probability distribution on two ordered points v+ > v-.
class BinaryDistribution {
 public:
  BinaryDistribution() = default;
  explicit BinaryDistribution(double p_plus, OutcomeValues values = kUnitValues);

  double p_plus() const { return p_plus_; }
  double p_minus() const { return 1.0 - p_plus_; }
  const OutcomeValues& values() const { return values_; }

  friend bool operator==(const BinaryDistribution&, const BinaryDistribution&) = default;

 private:
  double p_plus_ = 0.5;
  OutcomeValues values_{};
};

/// Outcome distribution of `obs` in state `rho`. Requires v+ > v-.
BinaryDistribution distribution(const BinaryObservable& obs, const QubitState& rho);

// Joint distribution on {+,-} x {+,-}; first index refers to the first
// marginal.
struct Coupling {
  double pp = 0.0;
  double pm = 0.0;
  double mp = 0.0;
  double mm = 0.0;

  /// Coupling of (d1, d2) with mass `gamma` on (+, +). Entries may be
  /// negative if gamma is infeasible; see feasible_gamma_range.
  static Coupling with_gamma(const BinaryDistribution& d1, const BinaryDistribution& d2,
                             double gamma);

  /// True when all entries are >= -tol and the marginals match (d1, d2).
  bool is_valid_for(const BinaryDistribution& d1, const BinaryDistribution& d2,
                    double tol = 1e-12) const;

  friend bool operator==(const Coupling&, const Coupling&) = default;
};

/// Interval [max(0, p + q - 1), min(p, q)] of admissible gamma.
std::pair<double, double> feasible_gamma_range(const BinaryDistribution& d1,
                                               const BinaryDistribution& d2);

/// Sum over cells of gamma_ij (x_i - y_j)^2.
double coupling_cost(const Coupling& c, const OutcomeValues& values1,
                     const OutcomeValues& values2);

/// Minimal transport cost (squared W2 distance).
double wasserstein2_sq(const BinaryDistribution& d1, const BinaryDistribution& d2);

/// Cost-minimizing coupling.
Coupling optimal_coupling(const BinaryDistribution& d1, const BinaryDistribution& d2);

/// Delta(E_rho, F_rho)^2 = 2|e0 - f0 + r.(e - f)|. Requires +/-1 labels.
double delta_sq_state(const BinaryObservable& e, const BinaryObservable& f,
                      const QubitState& rho);

/// Delta(E, F)^2 = sup_rho Delta(E_rho, F_rho)^2 = 2|e0 - f0| + 2|e - f|.
double delta_sq_worst(const BinaryObservable& e, const BinaryObservable& f);

/// A state attaining the worst-case error. When e = f the choice is
/// arbitrary and the maximally mixed state is returned.
QubitState worst_case_state(const BinaryObservable& e, const BinaryObservable& f);

/// sup_rho |E_rho(+1) - F_rho(+1)| = (|e0 - f0| + |e - f|)/2 = Delta^2 / 4.
double total_variation(const BinaryObservable& e, const BinaryObservable& f);

}  // namespace qmur

#endif  // QMUR_TRANSPORT_HPP
