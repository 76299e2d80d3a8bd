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

#include "qmur/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <ostream>
#include <string>

#include "qmur/errors.hpp"
#include "qmur/noiseop.hpp"
#include "qmur/tolerance.hpp"
#include "qmur/transport.hpp"

namespace qmur {

namespace {

using cd = std::complex<double>;
using Matrix4cd = Eigen::Matrix4cd;

constexpr double kRadToDeg = 180.0 / std::numbers::pi;

BinaryObservable observable_from_effect(const HermitianMatrix2& plus) {
  const auto [t0, t] = plus.pauli_coefficients();
  return BinaryObservable(2.0 * t0, 2.0 * t);
}

double observable_gap(const BinaryObservable& x, const BinaryObservable& y) {
  return max_abs_diff(to_matrix(x, Outcome::plus), to_matrix(y, Outcome::plus));
}

// Basis index of |system, probe> in C^2 (x) C^2.
constexpr int basis(int system, int probe) { return 2 * system + probe; }

Matrix4cd cnot_system_controls_probe() {
  Matrix4cd u = Matrix4cd::Zero();
  for (int s = 0; s < 2; ++s) {
    for (int p = 0; p < 2; ++p) u(basis(s, p ^ s), basis(s, p)) = 1.0;
  }
  return u;
}

void write_number(std::ostream& os, double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  os.write(buf, res.ptr - buf);
}

}  // namespace

ViennaConfig ViennaConfig::canonical(double alpha) {
  ViennaConfig cfg;
  cfg.c = {std::cos(alpha), std::sin(alpha), 0.0};
  return cfg;
}

void ViennaConfig::validate() const {
  require_unit(a, "Vienna target axis a");
  require_unit(b, "Vienna target axis b");
  require_unit(c, "Vienna measured axis c");
}

SchemeResult vienna_model(const ViennaConfig& cfg) {
  cfg.validate();
  const BinaryObservable A = BinaryObservable::sharp(cfg.a);
  const BinaryObservable B = BinaryObservable::sharp(cfg.b);
  const BinaryObservable C = BinaryObservable::sharp(cfg.c);

  // Lueders distortion B_+ -> C_+ B_+ C_+ + C_- B_+ C_-.
  const Eigen::Matrix2cd cp = to_matrix(C, Outcome::plus).matrix();
  const Eigen::Matrix2cd cm = to_matrix(C, Outcome::minus).matrix();
  const Eigen::Matrix2cd bp = to_matrix(B, Outcome::plus).matrix();
  const HermitianMatrix2 d_plus(cp * bp * cp + cm * bp * cm);
  const BinaryObservable D = observable_from_effect(d_plus);
  const BinaryObservable D_closed = BinaryObservable::unbiased(dot(cfg.c, cfg.b) * cfg.c);

  SchemeResult r;
  r.approx_A = C;
  r.approx_B = D;
  r.closed_form_residual = observable_gap(D, D_closed);
  if (r.closed_form_residual > tol::kCrossCheck) {
    throw NumericalFailure("vienna_model: Lueders update disagrees with d = (c.b) c");
  }

  std::array<HermitianMatrix2, 4> m;
  for (Outcome k : kOutcomes) {
    for (Outcome l : kOutcomes) {
      const Eigen::Matrix2cd prod = to_matrix(C, k).matrix() * to_matrix(D, l).matrix();
      m[JointObservable::index(k, l)] = HermitianMatrix2(prod);
    }
  }
  r.joint = JointObservable::from_matrices(m);

  r.delta_sq_state_A = delta_sq_state(C, A, cfg.rho);
  r.delta_sq_state_B = delta_sq_state(D, B, cfg.rho);
  r.delta_sq_A = delta_sq_worst(C, A);
  r.delta_sq_B = delta_sq_worst(D, B);
  r.eps_sq_A = eps_no_sq(C, A, cfg.rho);
  r.eps_sq_B = eps_no_sq(D, B, cfg.rho);
  r.lhs = r.delta_sq_A + r.delta_sq_B;
  r.rhs = 2.0 * norm(cross(cfg.a, cfg.b));
  r.slack = r.lhs - r.rhs;
  return r;
}

TorontoConfig TorontoConfig::from_alpha_beta(double alpha, double beta) {
  if (!std::isfinite(alpha) || !std::isfinite(beta) ||
      std::abs(alpha * alpha + beta * beta - 1.0) > tol::kUnit) {
    throw InvalidArgument("pointer amplitudes must satisfy alpha^2 + beta^2 = 1");
  }
  // A global sign does not change the state; fold it so that alpha >= 0.
  if (alpha < 0.0) {
    alpha = -alpha;
    beta = -beta;
  }
  TorontoConfig cfg;
  cfg.theta = 2.0 * std::atan2(std::abs(beta), alpha);
  cfg.phi = beta < 0.0 ? std::numbers::pi : 0.0;
  return cfg;
}

double TorontoConfig::alpha() const { return std::cos(0.5 * theta); }
double TorontoConfig::beta() const { return std::sin(0.5 * theta); }

BlochVector TorontoConfig::pointer_bloch() const {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

void TorontoConfig::validate() const {
  if (!std::isfinite(theta) || !std::isfinite(phi)) {
    throw InvalidArgument("pointer angles must be finite");
  }
}

TorontoObservables toronto_closed_form(const TorontoConfig& cfg) {
  cfg.validate();
  const BlochVector s = cfg.pointer_bloch();
  TorontoObservables out{BinaryObservable::unbiased(dot(s, axes::k) * axes::k),
                         BinaryObservable::unbiased(dot(s, axes::i) * axes::i)};
  const double al = cfg.alpha();
  const double be = cfg.beta();
  if (std::abs((2.0 * al * al - 1.0) - dot(s, axes::k)) > 1e-12 ||
      std::abs(2.0 * al * be * std::cos(cfg.phi) - dot(s, axes::i)) > 1e-12) {
    throw NumericalFailure("toronto_closed_form: amplitude and Bloch forms disagree");
  }
  return out;
}

TorontoSimulation toronto_simulate(const TorontoConfig& cfg) {
  cfg.validate();
  const Matrix4cd u = cnot_system_controls_probe();
  const Eigen::Vector2cd pointer(cd(cfg.alpha(), 0.0), std::polar(cfg.beta(), cfg.phi));

  // Isometry V = U (1 (x) |phi>) from the system into system (x) probe.
  Eigen::Matrix<cd, 4, 2> embed = Eigen::Matrix<cd, 4, 2>::Zero();
  for (int s = 0; s < 2; ++s) {
    for (int p = 0; p < 2; ++p) embed(basis(s, p), s) = pointer(p);
  }
  const Eigen::Matrix<cd, 4, 2> v = u * embed;

  TorontoSimulation sim;
  std::array<HermitianMatrix2, 2> c_effects;
  for (int k = 0; k < 2; ++k) {
    // Pointer reading k: probe basis state |k>, |0> <-> outcome +.
    Matrix4cd proj = Matrix4cd::Zero();
    for (int s = 0; s < 2; ++s) proj(basis(s, k), basis(s, k)) = 1.0;
    c_effects[static_cast<std::size_t>(k)] = HermitianMatrix2(v.adjoint() * proj * v);

    Eigen::Matrix2cd kraus;
    for (int row = 0; row < 2; ++row) {
      for (int col = 0; col < 2; ++col) kraus(row, col) = v(basis(row, k), col);
    }
    sim.kraus[static_cast<std::size_t>(k)] = kraus;
  }

  const BinaryObservable B = BinaryObservable::sharp(axes::i);
  std::array<HermitianMatrix2, 4> m;
  for (Outcome k : kOutcomes) {
    const Eigen::Matrix2cd& kr = sim.kraus[k == Outcome::plus ? 0 : 1];
    for (Outcome l : kOutcomes) {
      m[JointObservable::index(k, l)] =
          HermitianMatrix2(kr.adjoint() * to_matrix(B, l).matrix() * kr);
    }
  }
  sim.M.joint = JointObservable::from_matrices(m);

  const double min_eig =
      std::min({c_effects[0].min_eigenvalue(), c_effects[1].min_eigenvalue(),
                sim.M.joint.min_eigenvalue()});
  if (min_eig < -1e-10) {
    throw NumericalFailure("toronto_simulate: reconstructed POVM is not positive");
  }

  sim.C = observable_from_effect(c_effects[0]);
  sim.D = observable_from_effect(sim.M.joint.second_marginal(Outcome::plus));
  sim.M.first = sim.C;
  sim.M.second = sim.D;

  const TorontoObservables closed = toronto_closed_form(cfg);
  sim.closed_form_residual = std::max({observable_gap(sim.C, closed.C),
                                       observable_gap(sim.D, closed.D),
                                       max_abs_diff(sim.M.joint.first_marginal(Outcome::plus),
                                                    c_effects[0])});
  if (sim.closed_form_residual > tol::kCrossCheck) {
    throw NumericalFailure("toronto_simulate: simulation disagrees with the closed form");
  }
  return sim;
}

SchemeResult toronto_model(const TorontoConfig& cfg, const QubitState& rho) {
  const TorontoSimulation sim = toronto_simulate(cfg);
  const BinaryObservable A = BinaryObservable::sharp(axes::k);
  const BinaryObservable B = BinaryObservable::sharp(axes::i);

  SchemeResult r;
  r.approx_A = sim.C;
  r.approx_B = sim.D;
  r.joint = sim.M.joint;
  r.closed_form_residual = sim.closed_form_residual;
  r.delta_sq_state_A = delta_sq_state(sim.C, A, rho);
  r.delta_sq_state_B = delta_sq_state(sim.D, B, rho);
  r.delta_sq_A = delta_sq_worst(sim.C, A);
  r.delta_sq_B = delta_sq_worst(sim.D, B);
  r.eps_sq_A = eps_no_sq(sim.C, A, rho);
  r.eps_sq_B = eps_no_sq(sim.D, B, rho);
  r.lhs = r.delta_sq_A + r.delta_sq_B;
  r.rhs = 2.0 * (2.0 - std::numbers::sqrt2);
  r.slack = r.lhs - r.rhs;
  return r;
}

TorontoRelations error_relations_toronto(const TorontoConfig& cfg,
                                         std::span<const QubitState> probes) {
  const TorontoObservables obs = toronto_closed_form(cfg);
  const BlochVector s = cfg.pointer_bloch();
  const double sk = squared_norm(s - axes::k);
  const double si = squared_norm(s - axes::i);
  const BinaryObservable A = BinaryObservable::sharp(axes::k);
  const BinaryObservable B = BinaryObservable::sharp(axes::i);

  TorontoRelations out;
  out.report = TradeoffReport::make(sk, si, 2.0 * (2.0 - std::numbers::sqrt2));
  const double worst_A = delta_sq_worst(obs.C, A);
  const double worst_B = delta_sq_worst(obs.D, B);
  for (const QubitState& rho : probes) {
    const double state_A = delta_sq_state(obs.C, A, rho);
    const double state_B = delta_sq_state(obs.D, B, rho);
    out.max_state_formula_residual =
        std::max({out.max_state_formula_residual,
                  std::abs(state_A - std::abs(dot(rho.bloch(), axes::k)) * sk),
                  std::abs(state_B - std::abs(dot(rho.bloch(), axes::i)) * si)});
    if (state_A > worst_A + tol::kSlack || state_B > worst_B + tol::kSlack) {
      out.state_bounds_hold = false;
    }
  }
  return out;
}

std::vector<SweepRow> vienna_sweep(std::span<const double> alphas) {
  std::vector<SweepRow> rows;
  rows.reserve(alphas.size());
  for (double alpha : alphas) {
    const SchemeResult r = vienna_model(ViennaConfig::canonical(alpha));
    rows.push_back({alpha * kRadToDeg, 0.0, r.delta_sq_A, r.delta_sq_B, r.delta_sq_state_A,
                    r.delta_sq_state_B, std::sqrt(std::max(0.0, r.eps_sq_A)),
                    std::sqrt(std::max(0.0, r.eps_sq_B)), r.lhs, r.rhs, r.slack});
  }
  return rows;
}

std::vector<SweepRow> toronto_sweep(std::span<const double> thetas, double phi,
                                    const QubitState& rho) {
  std::vector<SweepRow> rows;
  rows.reserve(thetas.size());
  for (double theta : thetas) {
    const SchemeResult r = toronto_model({theta, phi}, rho);
    rows.push_back({theta * kRadToDeg, phi * kRadToDeg, r.delta_sq_A, r.delta_sq_B,
                    r.delta_sq_state_A, r.delta_sq_state_B, std::sqrt(std::max(0.0, r.eps_sq_A)),
                    std::sqrt(std::max(0.0, r.eps_sq_B)), r.lhs, r.rhs, r.slack});
  }
  return rows;
}

void write_sweep_csv(std::ostream& os, std::span<const SweepRow> rows,
                     std::string_view parameter) {
  os << parameter
     << ",phi,delta_sq_A,delta_sq_B,delta_sq_state_A,delta_sq_state_B,eps_A,eps_B,lhs,rhs,"
        "slack\n";
  for (const SweepRow& row : rows) {
    const std::array<double, 11> cells{row.parameter_deg,    row.phi_deg,      row.delta_sq_A,
                                       row.delta_sq_B,       row.delta_sq_state_A,
                                       row.delta_sq_state_B, row.eps_A,        row.eps_B,
                                       row.lhs,              row.rhs,          row.slack};
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) os << ',';
      write_number(os, cells[i]);
    }
    os << '\n';
  }
}

}  // namespace qmur
