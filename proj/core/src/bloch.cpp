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

#include "qmur/bloch.hpp"

#include <algorithm>
#include <string>

#include <Eigen/Eigenvalues>

#include "qmur/errors.hpp"
#include "qmur/tolerance.hpp"

namespace qmur {

namespace {

using cd = std::complex<double>;

bool finite(const BlochVector& v) {
  return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

}  // namespace

double max_abs_diff(const BlochVector& a, const BlochVector& b) {
  return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

void require_unit(const BlochVector& v, const char* what) {
  if (!finite(v) || std::abs(norm(v) - 1.0) > tol::kUnit) {
    throw InvalidArgument(std::string(what) + " must be a unit vector (|v| = " +
                          std::to_string(norm(v)) + ")");
  }
}

QubitState::QubitState(const BlochVector& r) : r_(r) {
  if (!finite(r) || norm(r) > 1.0 + tol::kPositivity) {
    throw InvalidArgument("state Bloch vector must satisfy |r| <= 1 (|r| = " +
                          std::to_string(norm(r)) + ")");
  }
}

BinaryObservable::BinaryObservable(double e0, const BlochVector& e, double value_plus,
                                   double value_minus)
    : e0_(e0), e_(e), value_plus_(value_plus), value_minus_(value_minus) {
  if (!std::isfinite(e0) || !finite(e)) {
    throw InvalidArgument("observable parameters must be finite");
  }
  const double bound = std::min(e0, 2.0 - e0);
  if (norm(e) > bound + tol::kPositivity) {
    throw InvalidArgument("observable violates positivity |e| <= min(e0, 2 - e0): |e| = " +
                          std::to_string(norm(e)) + ", e0 = " + std::to_string(e0));
  }
  if (!std::isfinite(value_plus) || !std::isfinite(value_minus) || value_plus == value_minus) {
    throw InvalidArgument("observable outcome labels must be finite and distinct");
  }
}

BinaryObservable BinaryObservable::sharp(const BlochVector& axis) {
  require_unit(axis, "sharp observable axis");
  return BinaryObservable(1.0, axis);
}

BinaryObservable BinaryObservable::unbiased(const BlochVector& e) { return BinaryObservable(1.0, e); }

std::pair<double, BlochVector> BinaryObservable::effect(Outcome o) const {
  if (o == Outcome::plus) return {e0_, e_};
  return {2.0 - e0_, -e_};
}

BinaryObservable BinaryObservable::with_swapped_outcomes() const {
  return BinaryObservable(2.0 - e0_, -e_, value_plus_, value_minus_);
}

double probability(const BinaryObservable& obs, Outcome o, const QubitState& rho) {
  const auto [w, v] = obs.effect(o);
  return 0.5 * (w + dot(rho.bloch(), v));
}

HermitianMatrix2::HermitianMatrix2(const Matrix& m) : m_(m) {
  if (!m.allFinite()) throw InvalidArgument("matrix entries must be finite");
  const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asym > tol::kHermiticity) {
    throw InvalidArgument("matrix is not Hermitian (max |M - M^*| = " + std::to_string(asym) +
                          ")");
  }
  // Symmetrize so downstream closed forms see an exactly Hermitian matrix.
  m_ = 0.5 * (m + m.adjoint());
}

HermitianMatrix2 HermitianMatrix2::identity() { return HermitianMatrix2(Matrix::Identity()); }

HermitianMatrix2 HermitianMatrix2::from_pauli(double t0, const BlochVector& t) {
  Matrix m;
  m << cd(t0 + t.z, 0.0), cd(t.x, -t.y), cd(t.x, t.y), cd(t0 - t.z, 0.0);
  return HermitianMatrix2(m);
}

std::pair<double, double> HermitianMatrix2::eigenvalues() const {
  const double a = m_(0, 0).real();
  const double d = m_(1, 1).real();
  const double half_gap = std::hypot(0.5 * (a - d), std::abs(m_(0, 1)));
  const double mean = 0.5 * (a + d);
  return {mean - half_gap, mean + half_gap};
}

std::pair<double, BlochVector> HermitianMatrix2::pauli_coefficients() const {
  const double t0 = 0.5 * (m_(0, 0).real() + m_(1, 1).real());
  const BlochVector t{m_(1, 0).real(), m_(1, 0).imag(), 0.5 * (m_(0, 0).real() - m_(1, 1).real())};
  return {t0, t};
}

double HermitianMatrix2::expectation(const QubitState& rho) const {
  return (density_matrix(rho).matrix() * m_).trace().real();
}

HermitianMatrix2& HermitianMatrix2::operator+=(const HermitianMatrix2& o) {
  m_ += o.m_;
  return *this;
}

HermitianMatrix2& HermitianMatrix2::operator-=(const HermitianMatrix2& o) {
  m_ -= o.m_;
  return *this;
}

HermitianMatrix2& HermitianMatrix2::operator*=(double s) {
  m_ *= s;
  return *this;
}

double max_abs_diff(const HermitianMatrix2& a, const HermitianMatrix2& b) {
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

const Eigen::Matrix2cd& pauli(int axis) {
  static const std::array<Eigen::Matrix2cd, 3> kPauli = [] {
    std::array<Eigen::Matrix2cd, 3> p;
    p[0] << 0.0, 1.0, 1.0, 0.0;
    p[1] << cd(0.0, 0.0), cd(0.0, -1.0), cd(0.0, 1.0), cd(0.0, 0.0);
    p[2] << 1.0, 0.0, 0.0, -1.0;
    return p;
  }();
  if (axis < 0 || axis > 2) throw InvalidArgument("Pauli axis must be 0, 1 or 2");
  return kPauli[static_cast<std::size_t>(axis)];
}

Eigen::Matrix2cd pauli_along(const BlochVector& n) {
  return n.x * pauli(0) + n.y * pauli(1) + n.z * pauli(2);
}

HermitianMatrix2 density_matrix(const QubitState& rho) {
  return HermitianMatrix2::from_pauli(0.5, 0.5 * rho.bloch());
}

HermitianMatrix2 to_matrix(const BinaryObservable& obs, Outcome o) {
  const auto [w, v] = obs.effect(o);
  return HermitianMatrix2::from_pauli(0.5 * w, 0.5 * v);
}

double commutator_norm(const BinaryObservable& e, const BinaryObservable& f) {
  if (!e.is_unbiased() || !f.is_unbiased()) {
    throw InvalidArgument("commutator_norm is defined here for unbiased observables only");
  }
  return 0.5 * norm(cross(e.vector(), f.vector()));
}

double commutator_norm_matrix(const BinaryObservable& e, const BinaryObservable& f) {
  const Eigen::Matrix2cd ep = to_matrix(e, Outcome::plus).matrix();
  const Eigen::Matrix2cd fp = to_matrix(f, Outcome::plus).matrix();
  // i[E,F] is Hermitian; its largest |eigenvalue| is the operator norm.
  const Eigen::Matrix2cd h = cd(0.0, 1.0) * (ep * fp - fp * ep);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace qmur
