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

// Noise-operator error eps_NO of an approximator C for a sharp target A:
//
//   eps_NO(A, rho)^2 = tr[rho (C[x^2] - C[x]^2)] + tr[rho (C[x] - A[x])^2]
//
// where X[x^n] is the n-th moment operator. It is always evaluated on the
// matrix backend; for unbiased C it reduces to 1 - |c|^2 + |c - a|^2,
// independent of rho.

#ifndef QMUR_NOISEOP_HPP
#define QMUR_NOISEOP_HPP

#include <span>

#include "qmur/bloch.hpp"

namespace qmur {

/// X[x^n] = v+^n X_+ + v-^n X_-.
HermitianMatrix2 moment_operator(const BinaryObservable& obs, int n);

/// Matrix-route eps_NO^2. Valid for any bias of `approx`.
double eps_no_sq(const BinaryObservable& approx, const BinaryObservable& target,
                 const QubitState& rho);

/// Closed form 1 - |c|^2 + |c - a|^2 for unbiased approximators
/// (InvalidArgument otherwise).
double eps_no_sq_closed_form(const BinaryObservable& approx, const BinaryObservable& target);

/// max - min of eps_no_sq over `states` (0 for an empty list).
double state_independence_probe(const BinaryObservable& approx, const BinaryObservable& target,
                                std::span<const QubitState> states);

struct NoiseOpReport {
  double eps_A = 0.0;
  double eps_B = 0.0;
  double delta_A = 0.0;  // Delta(C, A), not squared
  double delta_B = 0.0;
  bool state_dependent = false;  // eps varied across the probe states

  // eps_A + eps_B >= (|a - b| + |a + b| - 2)/sqrt(2)
  double sum_lhs = 0.0;
  double sum_rhs = 0.0;
  // eps_A^2 eps_B^2 >= |c x d|^2
  double product_lhs = 0.0;
  double product_rhs = 0.0;
  // Bridging inequalities, each holding for both A and B:
  //   eps >= Delta^2/2, eps >= U, eps <= Delta
  bool eps_ge_half_delta_sq = false;
  bool eps_ge_unsharpness = false;
  bool eps_le_delta = false;

  bool all_hold() const;
};

/// Evaluates the eps_NO trade-off relations for an unbiased compatible pair
/// (C, D) approximating sharp (A, B). Throws IncompatiblePair or
/// InvalidArgument on violated preconditions.
NoiseOpReport eps_relations(const BinaryObservable& c, const BinaryObservable& d,
                            const BinaryObservable& a, const BinaryObservable& b,
                            const QubitState& rho);

}  // namespace qmur

#endif  // QMUR_NOISEOP_HPP
