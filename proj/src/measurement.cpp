// Copyright 2026 The nonent Authors
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

#include "nonent/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "nonent/errors.hpp"

namespace nonent {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

// U (I (x) |phi0>): the slice map from the object space into the joint space.
ComplexMatrix slice_map(const MeasurementScheme& s) {
  return s.coupling * tensor_product(identity(s.object_dim), ComplexMatrix(s.probe_init));
}

}  // namespace

PovmReport validate_povm(const Povm& e, Tolerance tol) {
  PovmReport r;
  if (e.dim < 1) {
    r.valid = false;
    r.violations.push_back("dimension must be positive");
    return r;
  }
  if (e.effects.empty()) {
    r.valid = false;
    r.violations.push_back("POVM has no effects");
    return r;
  }
  if (e.outcomes.size() != e.effects.size()) {
    r.valid = false;
    r.violations.push_back("outcome label count " + std::to_string(e.outcomes.size()) +
                           " differs from effect count " + std::to_string(e.effects.size()));
  }
  ComplexMatrix sum = ComplexMatrix::Zero(e.dim, e.dim);
  bool shapes_ok = true;
  for (std::size_t x = 0; x < e.effects.size(); ++x) {
    const ComplexMatrix& m = e.effects[x];
    if (m.rows() != e.dim || m.cols() != e.dim) {
      r.valid = false;
      shapes_ok = false;
      r.violations.push_back("effect " + std::to_string(x) + " has shape " +
                             std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
      continue;
    }
    r.max_hermiticity_defect = std::max(r.max_hermiticity_defect, (m - m.adjoint()).norm());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (m + m.adjoint()),
                                                        Eigen::EigenvaluesOnly);
    r.min_eigenvalue = std::min(r.min_eigenvalue, solver.eigenvalues().minCoeff());
    sum += m;
  }
  if (r.max_hermiticity_defect > tol.eps) {
    r.valid = false;
    r.violations.push_back("hermiticity: worst ||E - E^dag||_F = " +
                           fmt(r.max_hermiticity_defect));
  }
  if (r.min_eigenvalue < -tol.eps) {
    r.valid = false;
    r.violations.push_back("positivity: most negative eigenvalue " + fmt(r.min_eigenvalue));
  }
  if (shapes_ok) {
    r.completeness_defect = (sum - identity(e.dim)).norm();
    if (r.completeness_defect > tol.eps) {
      r.valid = false;
      r.violations.push_back("completeness: ||sum E - I||_F = " + fmt(r.completeness_defect));
    }
  }
  return r;
}

TrivialityResult is_trivial_povm(const Povm& e, Tolerance tol) {
  TrivialityResult r;
  const double d = static_cast<double>(e.dim);
  for (const ComplexMatrix& m : e.effects) {
    const double lambda = m.trace().real() / d;
    r.scalars.push_back(lambda);
    r.max_deviation = std::max(r.max_deviation, (m - lambda * identity(e.dim)).norm());
  }
  r.trivial = r.max_deviation <= tol.eps;
  return r;
}

void validate_scheme(const MeasurementScheme& s, Tolerance tol) {
  if (s.object_dim < 1 || s.probe_dim < 1) {
    throw DimensionError("scheme: dimensions must be positive");
  }
  const Eigen::Index n = s.object_dim * s.probe_dim;
  if (s.coupling.rows() != n || s.coupling.cols() != n) {
    throw DimensionError("scheme: coupling is " + std::to_string(s.coupling.rows()) + "x" +
                         std::to_string(s.coupling.cols()) + ", expected " +
                         std::to_string(n) + "x" + std::to_string(n));
  }
  const double defect = unitarity_defect(s.coupling);
  if (defect > tol.eps) {
    throw NotUnitaryError("scheme: coupling is not unitary (defect " + fmt(defect) + ")",
                          defect);
  }
  if (s.probe_init.size() != s.probe_dim) {
    throw DimensionError("scheme: probe_init has length " +
                         std::to_string(s.probe_init.size()) + ", expected " +
                         std::to_string(s.probe_dim));
  }
  if (std::abs(s.probe_init.norm() - 1.0) > tol.eps) {
    throw NotNormalizedError("scheme: probe_init is not a unit vector", s.probe_init.norm());
  }
  if (s.pointer.dim != s.probe_dim) {
    throw DimensionError("scheme: pointer acts on dimension " + std::to_string(s.pointer.dim) +
                         ", probe has " + std::to_string(s.probe_dim));
  }
  const PovmReport report = validate_povm(s.pointer, tol);
  if (!report.valid) {
    std::string msg = "scheme: invalid pointer POVM";
    for (const auto& v : report.violations) msg += "; " + v;
    throw InvalidPovmError(msg);
  }
}

MeasurementScheme make_scheme(Eigen::Index object_dim, Eigen::Index probe_dim,
                              ComplexVector probe_init, ComplexMatrix coupling, Povm pointer,
                              Tolerance tol) {
  MeasurementScheme s{object_dim, probe_dim, std::move(probe_init), std::move(coupling),
                      std::move(pointer)};
  validate_scheme(s, tol);
  return s;
}

MeasurementScheme swap_scheme(const Povm& e, const ComplexVector& phi0, Tolerance tol) {
  const PovmReport report = validate_povm(e, tol);
  if (!report.valid) {
    std::string msg = "swap_scheme: invalid POVM";
    for (const auto& v : report.violations) msg += "; " + v;
    throw InvalidPovmError(msg);
  }
  return make_scheme(e.dim, e.dim, phi0, swap_operator(e.dim, e.dim), e, tol);
}

Povm measured_observable(const MeasurementScheme& s, Tolerance tol) {
  validate_scheme(s, tol);
  const ComplexMatrix j = slice_map(s);
  Povm out{s.object_dim, s.pointer.outcomes, {}};
  out.effects.reserve(s.pointer.size());
  for (const ComplexMatrix& e : s.pointer.effects) {
    const ComplexMatrix lifted = tensor_product(identity(s.object_dim), e);
    ComplexMatrix eff = j.adjoint() * lifted * j;
    out.effects.push_back(0.5 * (eff + eff.adjoint()));
  }
  return out;
}

OutcomeDistribution outcome_probabilities(const MeasurementScheme& s, const ComplexVector& phi,
                                          Tolerance tol) {
  validate_scheme(s, tol);
  if (phi.size() != s.object_dim) {
    throw DimensionError("outcome_probabilities: state has length " +
                         std::to_string(phi.size()) + ", expected " +
                         std::to_string(s.object_dim));
  }
  if (std::abs(phi.norm() - 1.0) > tol.eps) {
    throw NotNormalizedError("outcome_probabilities: state is not a unit vector", phi.norm());
  }
  const ComplexVector psi = s.coupling * tensor_product(phi, s.probe_init);
  OutcomeDistribution out{s.pointer.outcomes, {}};
  double total = 0.0;
  for (const ComplexMatrix& e : s.pointer.effects) {
    double p = psi.dot(tensor_product(identity(s.object_dim), e) * psi).real();
    if (p < -tol.eps) {
      throw std::runtime_error("outcome_probabilities: probability " + fmt(p) +
                               " below -eps; pointer or coupling is inconsistent");
    }
    p = std::max(p, 0.0);
    out.probabilities.push_back(p);
    total += p;
  }
  if (std::abs(total - 1.0) > 10.0 * tol.eps) {
    throw std::runtime_error("outcome_probabilities: probabilities sum to " + fmt(total));
  }
  for (double& p : out.probabilities) p /= total;
  return out;
}

ComplexMatrix Instrument::apply(std::size_t outcome, const ComplexMatrix& rho) const {
  const auto& ks = kraus.at(outcome);
  ComplexMatrix out = ComplexMatrix::Zero(rho.rows(), rho.cols());
  for (const ComplexMatrix& k : ks) out += k * rho * k.adjoint();
  return out;
}

ComplexMatrix Instrument::apply_total(const ComplexMatrix& rho) const {
  ComplexMatrix out = ComplexMatrix::Zero(rho.rows(), rho.cols());
  for (std::size_t x = 0; x < kraus.size(); ++x) out += apply(x, rho);
  return out;
}

double Instrument::trace_preservation_defect() const {
  if (kraus.empty() || kraus.front().empty()) return 0.0;
  const Eigen::Index d = kraus.front().front().cols();
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (const auto& ks : kraus)
    for (const ComplexMatrix& k : ks) sum += k.adjoint() * k;
  return (sum - identity(d)).norm();
}

ComplexMatrix psd_sqrt(const ComplexMatrix& e, Tolerance tol) {
  const HermitianEig eig = hermitian_eig(e, Tolerance{std::max(tol.eps, 1e-12)});
  RealVector roots(eig.values.size());
  for (Eigen::Index k = 0; k < roots.size(); ++k) {
    const double v = eig.values(k);
    if (v < -tol.eps) {
      throw InvalidPovmError("psd_sqrt: eigenvalue " + fmt(v) + " below -eps");
    }
    roots(k) = std::sqrt(std::max(v, 0.0));
  }
  return eig.vectors * roots.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
}

Instrument luders_instrument(const MeasurementScheme& s, Tolerance tol) {
  validate_scheme(s, tol);
  const ComplexMatrix j = slice_map(s);
  const Eigen::Index d1 = s.object_dim;
  const Eigen::Index d2 = s.probe_dim;
  Instrument inst{s.pointer.outcomes, {}};
  inst.kraus.reserve(s.pointer.size());
  for (const ComplexMatrix& e : s.pointer.effects) {
    const ComplexMatrix m = tensor_product(identity(d1), psd_sqrt(e, tol)) * j;
    std::vector<ComplexMatrix> ks;
    ks.reserve(static_cast<std::size_t>(d2));
    for (Eigen::Index k = 0; k < d2; ++k) {
      ComplexMatrix kx(d1, d1);
      for (Eigen::Index i = 0; i < d1; ++i) kx.row(i) = m.row(i * d2 + k);
      ks.push_back(std::move(kx));
    }
    inst.kraus.push_back(std::move(ks));
  }
  return inst;
}

double disturbance(const Instrument& inst, const DensityOperator& rho) {
  return trace_distance(rho.mat(), inst.apply_total(rho.mat()));
}

double disturbance(const MeasurementScheme& s, const DensityOperator& rho, Tolerance tol) {
  if (rho.dim() != s.object_dim) {
    throw DimensionError("disturbance: state dimension " + std::to_string(rho.dim()) +
                         " differs from object dimension " + std::to_string(s.object_dim));
  }
  return disturbance(luders_instrument(s, tol), rho);
}

NoInfoNoDisturbanceReport no_info_no_disturbance_check(const MeasurementScheme& s,
                                                       Tolerance tol, Seed seed,
                                                       std::size_t n_states) {
  const Instrument inst = luders_instrument(s, tol);
  const Eigen::Index d = s.object_dim;

  std::vector<ComplexVector> states;
  for (Eigen::Index i = 0; i < d; ++i) states.push_back(basis_vector(d, i));
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = i + 1; j < d; ++j) {
      ComplexVector plus = basis_vector(d, i) + basis_vector(d, j);
      ComplexVector phase = basis_vector(d, i) + Complex(0.0, 1.0) * basis_vector(d, j);
      states.push_back(plus / std::numbers::sqrt2);
      states.push_back(phase / std::numbers::sqrt2);
    }
  }
  auto rng = make_engine(derive_seed(seed, "measurement.states"));
  for (std::size_t n = 0; n < n_states; ++n) states.push_back(random_state(d, rng));

  NoInfoNoDisturbanceReport r;
  for (std::size_t k = 0; k < states.size(); ++k) {
    const double dist = disturbance(inst, DensityOperator::pure(states[k], Tolerance{1e-8}));
    if (k == 0 || dist > r.max_disturbance) {
      r.max_disturbance = dist;
      r.max_disturbance_state = k;
    }
  }
  r.states_checked = states.size();
  r.max_disturbance_witness = states[r.max_disturbance_state];

  const TrivialityResult triv = is_trivial_povm(measured_observable(s, tol), tol);
  r.triviality_deviation = triv.max_deviation;
  r.trivial = triv.trivial;
  r.undisturbed = r.max_disturbance <= tol.eps;
  r.implication_holds = !r.undisturbed || r.trivial;
  return r;
}

namespace povms {

Povm computational(Eigen::Index d) {
  Povm p{d, {}, {}};
  for (Eigen::Index k = 0; k < d; ++k) {
    const ComplexVector v = basis_vector(d, k);
    p.outcomes.push_back(std::to_string(k));
    p.effects.push_back(v * v.adjoint());
  }
  return p;
}

Povm trivial(Eigen::Index d, const std::vector<double>& weights) {
  Povm p{d, {}, {}};
  for (std::size_t k = 0; k < weights.size(); ++k) {
    p.outcomes.push_back(std::to_string(k));
    p.effects.push_back(weights[k] * identity(d));
  }
  return p;
}

Povm trine() {
  Povm p{2, {}, {}};
  for (int k = 0; k < 3; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / 3.0;
    ComplexVector v(2);
    v << std::cos(angle), std::sin(angle);
    p.outcomes.push_back(std::to_string(k));
    p.effects.push_back((2.0 / 3.0) * v * v.adjoint());
  }
  return p;
}

Povm qutrit_fourier() {
  Povm p{3, {}, {}};
  for (int k = 0; k < 3; ++k) {
    ComplexVector v(3);
    for (int j = 0; j < 3; ++j) v(j) = std::polar(1.0 / std::sqrt(3.0), 2.0 * std::numbers::pi * j * k / 3.0);
    p.outcomes.push_back(std::to_string(k));
    p.effects.push_back(v * v.adjoint());
  }
  return p;
}

Povm random(Eigen::Index d, std::size_t n_outcomes, std::mt19937_64& rng) {
  std::vector<ComplexMatrix> raw;
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (std::size_t x = 0; x < n_outcomes; ++x) {
    const ComplexMatrix g = complex_gaussian(d, d, rng);
    raw.push_back(g * g.adjoint());
    sum += raw.back();
  }
  const HermitianEig eig = hermitian_eig(sum, Tolerance{1e-8});
  RealVector inv_roots(d);
  for (Eigen::Index k = 0; k < d; ++k) inv_roots(k) = 1.0 / std::sqrt(eig.values(k));
  const ComplexMatrix s = eig.vectors * inv_roots.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
  Povm p{d, {}, {}};
  for (std::size_t x = 0; x < n_outcomes; ++x) {
    ComplexMatrix e = s * raw[x] * s;
    p.outcomes.push_back(std::to_string(x));
    p.effects.push_back(0.5 * (e + e.adjoint()));
  }
  return p;
}

}  // namespace povms

}  // namespace nonent
