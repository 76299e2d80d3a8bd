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

// Models of two qubit error-disturbance experiments.
//
// Projective scheme: a Lueders measurement of the sharp observable C (axis c)
// approximates A and distorts a later measurement of B into D with
// d = (c.b) c. The joint observable is the product M_kl = C_k D_l.
//
// CNOT scheme: the system controls a CNOT onto a probe prepared in
// |phi> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>; reading the probe in
// the sigma_z basis (|0> -> +1) measures an unsharp sigma_z. The sequential
// joint observable is M_kl = I(k)^*(B_l) for the conditional channels I(k).
// With s the Bloch vector of the probe state, c = (s.k) k and d = (s.i) i.

#ifndef QMUR_EXPERIMENTS_HPP
#define QMUR_EXPERIMENTS_HPP

#include <array>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "qmur/bloch.hpp"
#include "qmur/compat.hpp"
#include "qmur/tradeoff.hpp"

namespace qmur {

struct ViennaConfig {
  BlochVector a = axes::i;
  BlochVector b = axes::j;
  BlochVector c = axes::i;
  QubitState rho = QubitState(axes::k);

  /// a = x, b = y, c = (cos alpha, sin alpha, 0), r = z.
  static ViennaConfig canonical(double alpha);
  /// Throws InvalidArgument unless a, b, c are unit vectors.
  void validate() const;
};

// Approximators, joint observable and error ledger of one scheme
// configuration. "A" refers to the first target, "B" to the second.
struct SchemeResult {
  BinaryObservable approx_A;  // C
  BinaryObservable approx_B;  // D
  JointObservable joint;      // M
  double delta_sq_state_A = 0.0;
  double delta_sq_state_B = 0.0;
  double delta_sq_A = 0.0;  // worst case
  double delta_sq_B = 0.0;
  double eps_sq_A = 0.0;  // matrix route
  double eps_sq_B = 0.0;
  double lhs = 0.0;  // delta_sq_A + delta_sq_B
  double rhs = 0.0;  // scheme-specific lower bound
  double slack = 0.0;
  /// Max entrywise gap between closed-form and operator-level (C, D).
  double closed_form_residual = 0.0;
};

/// Projective scheme. The distorted D is computed by the Lueders update on
/// the matrix backend and checked against d = (c.b) c; lower bound
/// 2 |a x b|.
SchemeResult vienna_model(const ViennaConfig& cfg);

struct TorontoConfig {
  double theta = 0.0;
  double phi = 0.0;

  /// Real pointer amplitudes alpha|0> + beta|1>; alpha^2 + beta^2 = 1.
  static TorontoConfig from_alpha_beta(double alpha, double beta);

  double alpha() const;  // cos(theta/2)
  double beta() const;   // sin(theta/2)
  /// s = (sin theta cos phi, sin theta sin phi, cos theta)
  BlochVector pointer_bloch() const;
  void validate() const;
};

struct TorontoObservables {
  BinaryObservable C;
  BinaryObservable D;
};

/// c = (s.k) k, d = (s.i) i. Also checks the amplitude forms
/// 2 alpha^2 - 1 = s.k and 2 alpha beta cos phi = s.i.
TorontoObservables toronto_closed_form(const TorontoConfig& cfg);

struct SequentialJoint {
  JointObservable joint;
  BinaryObservable first;
  BinaryObservable second;
};

struct TorontoSimulation {
  BinaryObservable C;
  BinaryObservable D;
  SequentialJoint M;
  /// System Kraus operators of the conditional channels, ordered (+, -).
  std::array<Eigen::Matrix2cd, 2> kraus;
  /// Max entrywise gap between simulated and closed-form (C, D).
  double closed_form_residual = 0.0;
};

/// Full two-qubit simulation (4x4 CNOT, pointer projection, Kraus duals).
/// Throws NumericalFailure if a reconstructed POVM element is not positive
/// to 1e-10 or the result departs from the closed form by more than 1e-10.
TorontoSimulation toronto_simulate(const TorontoConfig& cfg);

/// Error ledger of the CNOT scheme for targets A = sigma_z, B = sigma_x in
/// state rho; lower bound 2(2 - sqrt 2).
SchemeResult toronto_model(const TorontoConfig& cfg, const QubitState& rho);

struct TorontoRelations {
  TradeoffReport report;  // |s-k|^2 + |s-i|^2 against 2(2 - sqrt 2)
  /// Max |Delta(C_rho, A_rho)^2 - |r.k| |s-k|^2| (and likewise for B)
  /// over the probe states.
  double max_state_formula_residual = 0.0;
  /// Every probe state satisfied Delta(C_rho, A_rho)^2 <= Delta(C, A)^2.
  bool state_bounds_hold = true;
};

TorontoRelations error_relations_toronto(const TorontoConfig& cfg,
                                         std::span<const QubitState> probes);

struct SweepRow {
  double parameter_deg = 0.0;  // alpha or theta
  double phi_deg = 0.0;
  double delta_sq_A = 0.0;
  double delta_sq_B = 0.0;
  double delta_sq_state_A = 0.0;
  double delta_sq_state_B = 0.0;
  double eps_A = 0.0;
  double eps_B = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
};

/// Canonical projective scheme at each alpha (radians), state r = z.
std::vector<SweepRow> vienna_sweep(std::span<const double> alphas);

/// CNOT scheme at each theta (radians) with fixed phi, evaluated in `rho`.
std::vector<SweepRow> toronto_sweep(std::span<const double> thetas, double phi,
                                    const QubitState& rho);

/// CSV with a header row; '.' decimal separator, 17 significant digits.
/// `parameter` names the sweep column ("alpha" or "theta").
void write_sweep_csv(std::ostream& os, std::span<const SweepRow> rows,
                     std::string_view parameter);

}  // namespace qmur

#endif  // QMUR_EXPERIMENTS_HPP
