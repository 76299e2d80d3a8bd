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

// Bloch-sphere value types for qubit states and two-outcome observables,
// plus a 2x2 Hermitian matrix type that serves as an independent
// cross-check backend for the closed forms used everywhere else.
//
// Conventions: the Pauli basis is fixed to sigma_1 = x, sigma_2 = y,
// sigma_3 = z. A state is rho = (1 + r.sigma)/2. A binary observable E
// has effects E_+ = (e0*1 + e.sigma)/2 and E_- = 1 - E_+.

#ifndef QMUR_BLOCH_HPP
#define QMUR_BLOCH_HPP

#include <array>
#include <cmath>
#include <complex>
#include <utility>

#include <Eigen/Core>

namespace qmur {

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr double operator[](int axis) const { return axis == 0 ? x : (axis == 1 ? y : z); }

  constexpr BlochVector operator-() const { return {-x, -y, -z}; }
  constexpr BlochVector& operator+=(const BlochVector& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr BlochVector& operator-=(const BlochVector& o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr BlochVector& operator*=(double s) {
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }

  friend constexpr bool operator==(const BlochVector&, const BlochVector&) = default;
};

constexpr BlochVector operator+(BlochVector a, const BlochVector& b) { return a += b; }
constexpr BlochVector operator-(BlochVector a, const BlochVector& b) { return a -= b; }
constexpr BlochVector operator*(double s, BlochVector v) { return v *= s; }
constexpr BlochVector operator*(BlochVector v, double s) { return v *= s; }
constexpr BlochVector operator/(BlochVector v, double s) { return v *= (1.0 / s); }

constexpr double dot(const BlochVector& a, const BlochVector& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
constexpr BlochVector cross(const BlochVector& a, const BlochVector& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
constexpr double squared_norm(const BlochVector& v) { return dot(v, v); }
inline double norm(const BlochVector& v) { return std::hypot(v.x, v.y, v.z); }
inline double distance(const BlochVector& a, const BlochVector& b) { return norm(a - b); }

/// Largest absolute component difference.
double max_abs_diff(const BlochVector& a, const BlochVector& b);

namespace axes {
inline constexpr BlochVector i{1.0, 0.0, 0.0};
inline constexpr BlochVector j{0.0, 1.0, 0.0};
inline constexpr BlochVector k{0.0, 0.0, 1.0};
}  // namespace axes

/// Throws InvalidArgument unless |v| = 1 within tol::kUnit.
void require_unit(const BlochVector& v, const char* what);

// Qubit density operator in Bloch form. Mixed states are allowed.
class QubitState {
 public:
  QubitState() = default;  // maximally mixed
  explicit QubitState(const BlochVector& r);

  static QubitState maximally_mixed() { return QubitState{}; }

  const BlochVector& bloch() const { return r_; }
  bool is_pure(double tol = 1e-12) const { return std::abs(norm(r_) - 1.0) <= tol; }

  friend bool operator==(const QubitState&, const QubitState&) = default;

 private:
  BlochVector r_{};
};

enum class Outcome { plus, minus };

constexpr Outcome opposite(Outcome o) { return o == Outcome::plus ? Outcome::minus : Outcome::plus; }
constexpr std::array<Outcome, 2> kOutcomes{Outcome::plus, Outcome::minus};

// Two-outcome POVM E on a qubit. Outcome labels default to +1 / -1; the
// error measures in this library assume those labels and check for them.
class BinaryObservable {
 public:
  /// Trivial coin: E_+ = E_- = 1/2.
  BinaryObservable() = default;
  BinaryObservable(double e0, const BlochVector& e, double value_plus = 1.0,
                   double value_minus = -1.0);

  /// Projection-valued observable along the unit vector `axis`.
  static BinaryObservable sharp(const BlochVector& axis);
  /// Swap-covariant observable (e0 = 1) with Bloch vector `e`.
  static BinaryObservable unbiased(const BlochVector& e);

  double bias() const { return e0_; }
  const BlochVector& vector() const { return e_; }
  double value(Outcome o) const { return o == Outcome::plus ? value_plus_ : value_minus_; }
  double value_plus() const { return value_plus_; }
  double value_minus() const { return value_minus_; }

  bool has_unit_values() const { return value_plus_ == 1.0 && value_minus_ == -1.0; }
  bool is_unbiased(double tol = 1e-12) const { return std::abs(e0_ - 1.0) <= tol; }
  bool is_sharp(double tol = 1e-12) const {
    return is_unbiased(tol) && std::abs(norm(e_) - 1.0) <= tol;
  }

  /// Effect for `o` as (weight, vector) with E_o = (weight*1 + vector.sigma)/2.
  std::pair<double, BlochVector> effect(Outcome o) const;

  /// The same POVM with the roles of the two outcomes exchanged
  /// (B^(-) for a target B): effect for +1 becomes the old E_-.
  BinaryObservable with_swapped_outcomes() const;

  friend bool operator==(const BinaryObservable&, const BinaryObservable&) = default;

 private:
  double e0_ = 1.0;
  BlochVector e_{};
  double value_plus_ = 1.0;
  double value_minus_ = -1.0;
};

/// tr[rho E_o] = (e0 + r.e)/2 for o = +.
double probability(const BinaryObservable& obs, Outcome o, const QubitState& rho);

// 2x2 complex Hermitian matrix. Construction checks Hermiticity.
class HermitianMatrix2 {
 public:
  using Matrix = Eigen::Matrix2cd;

  HermitianMatrix2() : m_(Matrix::Zero()) {}
  explicit HermitianMatrix2(const Matrix& m);

  static HermitianMatrix2 identity();
  /// t0*1 + t.sigma
  static HermitianMatrix2 from_pauli(double t0, const BlochVector& t);

  const Matrix& matrix() const { return m_; }
  std::complex<double> operator()(int row, int col) const { return m_(row, col); }

  double trace() const { return m_(0, 0).real() + m_(1, 1).real(); }
  /// Closed-form eigenvalues, ascending.
  std::pair<double, double> eigenvalues() const;
  double min_eigenvalue() const { return eigenvalues().first; }
  /// Coefficients (t0, t) with M = t0*1 + t.sigma.
  std::pair<double, BlochVector> pauli_coefficients() const;
  /// tr[rho M]
  double expectation(const QubitState& rho) const;

  HermitianMatrix2& operator+=(const HermitianMatrix2& o);
  HermitianMatrix2& operator-=(const HermitianMatrix2& o);
  HermitianMatrix2& operator*=(double s);

 private:
  Matrix m_;
};

inline HermitianMatrix2 operator+(HermitianMatrix2 a, const HermitianMatrix2& b) { return a += b; }
inline HermitianMatrix2 operator-(HermitianMatrix2 a, const HermitianMatrix2& b) { return a -= b; }
inline HermitianMatrix2 operator*(double s, HermitianMatrix2 a) { return a *= s; }

/// Entrywise max |a_ij - b_ij|.
double max_abs_diff(const HermitianMatrix2& a, const HermitianMatrix2& b);

/// Pauli matrix for axis 0, 1, 2 (x, y, z).
const Eigen::Matrix2cd& pauli(int axis);
/// n.sigma
Eigen::Matrix2cd pauli_along(const BlochVector& n);

HermitianMatrix2 density_matrix(const QubitState& rho);
HermitianMatrix2 to_matrix(const BinaryObservable& obs, Outcome o);

/// Operator norm of [E_+, F_+] for unbiased observables: |e x f| / 2.
/// Throws InvalidArgument for biased inputs.
double commutator_norm(const BinaryObservable& e, const BinaryObservable& f);

/// The same norm evaluated numerically from the matrices. Accepts any bias.
double commutator_norm_matrix(const BinaryObservable& e, const BinaryObservable& f);

}  // namespace qmur

#endif  // QMUR_BLOCH_HPP
