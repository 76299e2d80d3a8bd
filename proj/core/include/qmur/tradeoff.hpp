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

// Error trade-off relations for jointly measurable approximations of two
// sharp qubit observables A, B (axes a, b), and the additive preparation
// uncertainty relations they reduce to.
//
// The central inequality: for any compatible C, D
//
//   Delta(C, A)^2 + Delta(D, B)^2 >= sqrt(2) * (|a - b| + |a + b| - 2),
//
// with equality reached by a symmetric pair of covariant approximators
// sitting on the compatibility boundary (see optimal_pair).

#ifndef QMUR_TRADEOFF_HPP
#define QMUR_TRADEOFF_HPP

#include <array>
#include <string_view>

#include "qmur/bloch.hpp"
#include "qmur/compat.hpp"

namespace qmur {

struct TradeoffReport {
  double err_sq_A = 0.0;
  double err_sq_B = 0.0;
  double lower_bound = 0.0;
  double slack = 0.0;  // err_sq_A + err_sq_B - lower_bound
  bool saturated = false;

  static TradeoffReport make(double err_sq_A, double err_sq_B, double lower_bound);
};

struct QurBound {
  double value = 0.0;     // sqrt(2) * degree of incompatibility
  double alt_form = 0.0;  // (Delta(A,B)^2 + Delta(A,B^(-))^2 - 4) / sqrt(2)
};

/// Tight lower bound for the summed squared errors. Both forms are
/// evaluated and must agree to 1e-12 (NumericalFailure otherwise).
QurBound qur_bound(const BlochVector& a, const BlochVector& b);

/// Evaluates the trade-off for approximators (C, D) of sharp targets along
/// (a, b). Errors are worst-case errors of the raw pair; compatibility is
/// certified on the symmetrized pair. Throws IncompatiblePair.
TradeoffReport check_qur(const BinaryObservable& c, const BinaryObservable& d,
                         const BlochVector& a, const BlochVector& b);

struct OptimalPair {
  BlochVector c{};
  BlochVector d{};
  double achieved = 0.0;  // Delta(C, A)^2 + Delta(D, B)^2
  double bound = 0.0;
};

/// Error-optimal compatible covariant approximators for sharp targets (a, b).
///
/// In the orthonormal frame u = (a+b)/|a+b|, v = (a-b)/|a-b| the targets are
/// a = (cos phi, sin phi), b = (cos phi, -sin phi). The optimum is the foot
/// of the perpendicular from a onto the boundary segment alpha + beta = 1,
/// i.e. c = (cos phi + t, sin phi + t) with t = (1 - cos phi - sin phi)/2,
/// and d its mirror image. For collinear targets the exact answer c = a,
/// d = b (commuting, zero error) is returned.
OptimalPair optimal_pair(const BlochVector& a, const BlochVector& b);

struct ProductBound {
  double lhs = 0.0;  // Delta(C, A)^2 Delta(D, B)^2
  double rhs = 0.0;  // 4 |[C_+, D_+]|^2 = |c x d|^2
};

/// Error-product bound for unbiased approximators (InvalidArgument if
/// biased). Note the bound is set by the approximators' commutator.
ProductBound qur_product(const BinaryObservable& c, const BinaryObservable& d,
                         const BinaryObservable& a, const BinaryObservable& b);

/// Standard deviation sqrt(1 - (r.a)^2) of a sharp +/-1 observable.
double prep_std(const BinaryObservable& a, const QubitState& rho);

struct PrepSumRelations {
  double sum_std = 0.0;    // Delta(A, rho) + Delta(B, rho)
  double bound_std = 0.0;  // |a x b|
  double sum_var = 0.0;    // Delta(A, rho)^2 + Delta(B, rho)^2
  double bound_var = 0.0;  // 1 - |a.b|
};

PrepSumRelations prep_sum_relations(const BinaryObservable& a, const BinaryObservable& b,
                                    const QubitState& rho);

// Two-point probability distribution (mu_+, mu_-).
class SmearingDistribution {
 public:
  SmearingDistribution() = default;
  SmearingDistribution(double mu_plus, double mu_minus);

  static SmearingDistribution from_lambda(double lambda);

  double mu_plus() const { return mu_plus_; }
  double mu_minus() const { return mu_minus_; }
  double lambda() const { return mu_plus_ - mu_minus_; }
  /// Variance of the +/-1 valued distribution: 4 mu_+ mu_-.
  double variance() const { return 4.0 * mu_plus_ * mu_minus_; }

 private:
  double mu_plus_ = 1.0;
  double mu_minus_ = 0.0;
};

struct SmearingResult {
  BinaryObservable approximator;  // C_+ = mu_+ A_+ + mu_- A_-
  double err_sq = 0.0;            // Delta(C, A)^2 = 4 mu_-
  double variance = 0.0;          // of mu
};

SmearingResult smearing_error(const SmearingDistribution& mu, const BlochVector& a);

struct BoundChain {
  double lhs = 0.0;  // 4 mu_- + 4 nu_-
  double mid = 0.0;  // Delta(A, rho_s)^2 + Delta(B, rho_s)^2
  double rhs = 0.0;  // 1 - |a.b|
};

/// Chain lhs >= mid >= rhs for the smeared approximators with parameter
/// lambda and the state s = lambda (a + b). Requires a perpendicular to b and
/// 0 <= lambda <= 1/sqrt(2).
BoundChain prep_bound_chain(const BlochVector& a, const BlochVector& b, double lambda);

// Unitary conjugations 1(.)1 and tau_k(.)tau_k, where tau_k = e_k.sigma for
// the right-handed frame (e1, e2 = e3 x e1, e3).
enum class FrameConjugation { identity, tau1, tau2, tau3 };

std::string_view to_string(FrameConjugation u);
Eigen::Matrix2cd conjugation_unitary(FrameConjugation u, const BlochVector& e1,
                                     const BlochVector& e3);

struct HwCovariantForm {
  JointObservable joint;
  QubitState rho_s;
  /// Conjugation matched to each outcome, ordered (++, +-, -+, --).
  std::array<FrameConjugation, 4> assignment{};
  /// max over outcomes of max entrywise |G_kl - U_kl(rho_s)/2|
  double residual = 0.0;
};

/// Heisenberg-Weyl covariant form of the joint observable for
/// c = c_len e1, d = c_len e3, i.e. G_kl = U_kl(rho_s)/2 with
/// rho_s = (1 + c_len (e1 + e3).sigma)/2. The conjugation for each outcome is
/// found by searching {1, tau1, tau2, tau3}, not hard-coded.
/// Requires 0 <= c_len <= 1/sqrt(2) and orthonormal e1, e3.
HwCovariantForm hw_covariant_form(double c_len, const BlochVector& e1, const BlochVector& e3);

}  // namespace qmur

#endif  // QMUR_TRADEOFF_HPP
