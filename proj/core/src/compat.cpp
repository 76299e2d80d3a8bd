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

#include "qmur/compat.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qmur/errors.hpp"
#include "qmur/tolerance.hpp"

namespace qmur {

double degree_of_incompatibility(const BlochVector& a, const BlochVector& b) {
  require_unit(a, "a");
  require_unit(b, "b");
  return distance(a, b) + norm(a + b) - 2.0;
}

bool is_compatible_unbiased(const BlochVector& c, const BlochVector& d) {
  return distance(c, d) + norm(c + d) <= 2.0 + tol::kCompatibility;
}

bool are_compatible(const BinaryObservable& c, const BinaryObservable& d) {
  return is_compatible_unbiased(symmetrize_covariant(c).vector(),
                                symmetrize_covariant(d).vector());
}

double unsharpness(const BlochVector& c) {
  return std::sqrt(std::max(0.0, 1.0 - squared_norm(c)));
}

UnsharpnessCriterion compat_equiv_unsharpness(const BlochVector& c, const BlochVector& d) {
  UnsharpnessCriterion out;
  out.lhs = (1.0 - squared_norm(c)) * (1.0 - squared_norm(d));
  out.rhs = squared_norm(cross(c, d));
  out.holds = out.lhs >= out.rhs - tol::kCompatibility;
  return out;
}

JointObservable JointObservable::from_elements(const std::array<JointElement, 4>& elements) {
  JointObservable g;
  g.elements_ = elements;
  for (std::size_t i = 0; i < 4; ++i) {
    g.matrices_[i] =
        HermitianMatrix2::from_pauli(0.25 * elements[i].weight, 0.25 * elements[i].vector);
  }
  return g;
}

JointObservable JointObservable::from_matrices(const std::array<HermitianMatrix2, 4>& matrices) {
  JointObservable g;
  g.matrices_ = matrices;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto [t0, t] = matrices[i].pauli_coefficients();
    g.elements_[i] = {4.0 * t0, 4.0 * t};
  }
  return g;
}

HermitianMatrix2 JointObservable::first_marginal(Outcome k) const {
  return matrix(k, Outcome::plus) + matrix(k, Outcome::minus);
}

HermitianMatrix2 JointObservable::second_marginal(Outcome l) const {
  return matrix(Outcome::plus, l) + matrix(Outcome::minus, l);
}

double JointObservable::probability(Outcome k, Outcome l, const QubitState& rho) const {
  const JointElement& e = element(k, l);
  return 0.25 * (e.weight + dot(rho.bloch(), e.vector));
}

double JointObservable::min_eigenvalue() const {
  double lo = matrices_[0].min_eigenvalue();
  for (std::size_t i = 1; i < 4; ++i) lo = std::min(lo, matrices_[i].min_eigenvalue());
  return lo;
}

double JointObservable::normalization_residual() const {
  HermitianMatrix2 sum;
  for (const auto& m : matrices_) sum += m;
  return max_abs_diff(sum, HermitianMatrix2::identity());
}

JointCheck check_joint(const JointObservable& g, const BinaryObservable& first,
                       const BinaryObservable& second) {
  JointCheck out;
  out.min_eigenvalue = g.min_eigenvalue();
  out.normalization_residual = g.normalization_residual();
  for (Outcome o : kOutcomes) {
    out.marginal_residual = std::max(
        {out.marginal_residual, max_abs_diff(g.first_marginal(o), to_matrix(first, o)),
         max_abs_diff(g.second_marginal(o), to_matrix(second, o))});
  }
  return out;
}

JointObservable joint_observable(const BlochVector& c, const BlochVector& d) {
  const double cd = dot(c, d);
  const BlochVector sum = c + d;
  const BlochVector diff = c - d;
  if (1.0 + cd < norm(sum) - tol::kPositivity || 1.0 - cd < norm(diff) - tol::kPositivity) {
    throw IncompatiblePair("no joint observable: positivity fails (1 + c.d = " +
                           std::to_string(1.0 + cd) + ", |c + d| = " + std::to_string(norm(sum)) +
                           ", 1 - c.d = " + std::to_string(1.0 - cd) +
                           ", |c - d| = " + std::to_string(norm(diff)) + ")");
  }
  return JointObservable::from_elements({{
      {1.0 + cd, sum},
      {1.0 - cd, diff},
      {1.0 - cd, -diff},
      {1.0 + cd, -sum},
  }});
}

BinaryObservable symmetrize_covariant(const BinaryObservable& c) {
  return BinaryObservable(1.0, c.vector(), c.value_plus(), c.value_minus());
}

BinaryObservable project_to_plane(const BinaryObservable& c, const BlochVector& a,
                                  const BlochVector& b) {
  const double na = norm(a);
  const BlochVector n = cross(a, b);
  if (na == 0.0 || norm(n) <= 1e-12 * na * norm(b)) {
    throw DegeneratePlane("project_to_plane: a and b are collinear");
  }
  // Remove the component along the plane normal.
  const BlochVector unit_n = n / norm(n);
  const BlochVector v = c.vector();
  return BinaryObservable(c.bias(), v - dot(v, unit_n) * unit_n, c.value_plus(),
                          c.value_minus());
}

}  // namespace qmur
