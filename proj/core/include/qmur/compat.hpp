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

// Joint measurability of binary qubit observables.
//
// Only the unbiased (swap-covariant) criterion |c - d| + |c + d| <= 2 is
// decided directly. Biased pairs are handled by first replacing each
// observable with its covariant symmetrization, which keeps the Bloch vector
// and resets the bias to 1; a compatible pair stays compatible under this map
// and its errors against sharp targets do not grow, which is all that the
// trade-off relations need.

#ifndef QMUR_COMPAT_HPP
#define QMUR_COMPAT_HPP

#include <array>

#include "qmur/bloch.hpp"

namespace qmur {

/// |a - b| + |a + b| - 2 for unit vectors; ranges over [0, 2*sqrt(2) - 2].
double degree_of_incompatibility(const BlochVector& a, const BlochVector& b);

/// |c - d| + |c + d| <= 2 (within tol::kCompatibility).
bool is_compatible_unbiased(const BlochVector& c, const BlochVector& d);

/// Compatibility of arbitrary-bias observables, decided on their covariant
/// symmetrizations.
bool are_compatible(const BinaryObservable& c, const BinaryObservable& d);

/// U = sqrt(1 - |c|^2).
double unsharpness(const BlochVector& c);

struct UnsharpnessCriterion {
  double lhs = 0.0;  // U(C)^2 U(D)^2
  double rhs = 0.0;  // |c x d|^2
  bool holds = false;
};

/// The unsharpness form of the compatibility criterion. Equivalent to
/// is_compatible_unbiased for |c|, |d| <= 1.
UnsharpnessCriterion compat_equiv_unsharpness(const BlochVector& c, const BlochVector& d);

/// One element G = (weight*1 + vector.sigma)/4 of a four-outcome POVM.
struct JointElement {
  double weight = 0.0;
  BlochVector vector{};
};

// Four-outcome POVM G_{kl}, k indexing the first marginal and l the second.
// Carries both the Pauli (weight, vector) form and the matrix form; the
// matrix form is the one used for positivity.
class JointObservable {
 public:
  JointObservable() = default;

  /// Ordered (++, +-, -+, --).
  static JointObservable from_elements(const std::array<JointElement, 4>& elements);
  static JointObservable from_matrices(const std::array<HermitianMatrix2, 4>& matrices);

  static constexpr std::size_t index(Outcome k, Outcome l) {
    return (k == Outcome::plus ? 0U : 2U) + (l == Outcome::plus ? 0U : 1U);
  }

  const HermitianMatrix2& matrix(Outcome k, Outcome l) const { return matrices_[index(k, l)]; }
  const JointElement& element(Outcome k, Outcome l) const { return elements_[index(k, l)]; }
  const std::array<HermitianMatrix2, 4>& matrices() const { return matrices_; }
  const std::array<JointElement, 4>& elements() const { return elements_; }

  HermitianMatrix2 first_marginal(Outcome k) const;
  HermitianMatrix2 second_marginal(Outcome l) const;

  double probability(Outcome k, Outcome l, const QubitState& rho) const;
  /// Smallest eigenvalue over the four elements.
  double min_eigenvalue() const;
  /// max entrywise |sum G - 1|
  double normalization_residual() const;

 private:
  std::array<HermitianMatrix2, 4> matrices_{};
  std::array<JointElement, 4> elements_{};
};

struct JointCheck {
  double min_eigenvalue = 0.0;
  double normalization_residual = 0.0;
  double marginal_residual = 0.0;  // against the declared marginals

  bool ok(double tol = 1e-12) const {
    return min_eigenvalue >= -tol && normalization_residual <= tol && marginal_residual <= tol;
  }
};

/// Positivity, normalization and marginality of `g` against (first, second).
JointCheck check_joint(const JointObservable& g, const BinaryObservable& first,
                       const BinaryObservable& second);

/// Joint observable of the unbiased pair with vectors (c, d):
///   G_{+,+-} = (1 +- c.d)/4 * 1 + (c +- d).sigma/4
///   G_{-,+-} = (1 -+ c.d)/4 * 1 - (c -+ d).sigma/4
/// Throws IncompatiblePair if 1 +- c.d >= |c +- d| fails beyond tolerance.
JointObservable joint_observable(const BlochVector& c, const BlochVector& d);

/// Unbiased observable with the same Bloch vector: the average of C and its
/// bias-mirrored twin (2 - c0, c).
BinaryObservable symmetrize_covariant(const BinaryObservable& c);

/// Replaces the Bloch vector by its orthogonal projection onto span(a, b);
/// bias and labels unchanged. Throws DegeneratePlane if a, b are collinear.
BinaryObservable project_to_plane(const BinaryObservable& c, const BlochVector& a,
                                  const BlochVector& b);

}  // namespace qmur

#endif  // QMUR_COMPAT_HPP
