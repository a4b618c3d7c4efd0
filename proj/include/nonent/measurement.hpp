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

// Finite-outcome POVMs, measurement schemes (object, probe, coupling,
// pointer), the observables they measure and the instruments they induce.

#ifndef NONENT_MEASUREMENT_HPP
#define NONENT_MEASUREMENT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "nonent/bipartite.hpp"
#include "nonent/linalg.hpp"

namespace nonent {

struct Povm {
  Eigen::Index dim = 0;
  std::vector<std::string> outcomes;
  std::vector<ComplexMatrix> effects;

  std::size_t size() const { return effects.size(); }
};

/// Result of validate_povm. Defects are the worst value per invariant.
struct PovmReport {
  bool valid = true;
  double max_hermiticity_defect = 0.0;
  double min_eigenvalue = 0.0;  // most negative effect eigenvalue
  double completeness_defect = 0.0;  // ||sum E - I||_F
  std::vector<std::string> violations;
};

/// Checks shapes, label count, Hermiticity, positivity (>= -eps) and
/// completeness. Never throws.
PovmReport validate_povm(const Povm& e, Tolerance tol = {});

struct TrivialityResult {
  bool trivial = false;
  std::vector<double> scalars;  // Tr E(X) / dim per outcome
  double max_deviation = 0.0;   // max_X ||E(X) - scalar_X I||_F
};

/// Trivial observable test: every effect is a multiple of the identity.
TrivialityResult is_trivial_povm(const Povm& e, Tolerance tol = {});

struct MeasurementScheme {
  Eigen::Index object_dim = 0;
  Eigen::Index probe_dim = 0;
  ComplexVector probe_init;
  ComplexMatrix coupling;
  Povm pointer;
};

/// Throws DimensionError, NotUnitaryError, NotNormalizedError or
/// InvalidPovmError when the scheme invariants fail.
void validate_scheme(const MeasurementScheme& s, Tolerance tol = {});

/// Builds and validates a scheme.
MeasurementScheme make_scheme(Eigen::Index object_dim, Eigen::Index probe_dim,
                              ComplexVector probe_init, ComplexMatrix coupling, Povm pointer,
                              Tolerance tol = {});

/// Swap coupling on H (x) H with pointer e and probe state phi0.
/// Throws InvalidPovmError for an invalid POVM.
MeasurementScheme swap_scheme(const Povm& e, const ComplexVector& phi0, Tolerance tol = {});

/// E'(X) = (I (x) <phi0|) U^dag (I (x) E(X)) U (I (x) |phi0>).
Povm measured_observable(const MeasurementScheme& s, Tolerance tol = {});

struct OutcomeDistribution {
  std::vector<std::string> labels;
  std::vector<double> probabilities;
};

/// p(X) = <U(phi (x) phi0) | (I (x) E(X)) U(phi (x) phi0)>.
///
/// Values in [-eps, 0) are reported as 0. The distribution is renormalized
/// when its total is within 10 eps of 1; a larger deviation or a value
/// below -eps raises std::runtime_error.
/// Throws NotNormalizedError for a non-unit phi.
OutcomeDistribution outcome_probabilities(const MeasurementScheme& s, const ComplexVector& phi,
                                          Tolerance tol = {});

/// Outcome-indexed Kraus collections on the object space.
struct Instrument {
  std::vector<std::string> labels;
  std::vector<std::vector<ComplexMatrix>> kraus;

  /// I_X(rho) = sum_k K rho K^dag.
  ComplexMatrix apply(std::size_t outcome, const ComplexMatrix& rho) const;
  /// sum_X I_X(rho).
  ComplexMatrix apply_total(const ComplexMatrix& rho) const;
  /// ||sum_X sum_k K^dag K - I||_F.
  double trace_preservation_defect() const;
};

/// Square-root pointer reading:
/// K_{X,k} = (I (x) <g_k|)(I (x) sqrt E(X)) U (I (x) |phi0>) over the
/// computational probe basis {g_k}.
Instrument luders_instrument(const MeasurementScheme& s, Tolerance tol = {});

/// PSD square root through the Hermitian eigendecomposition; eigenvalues in
/// [-eps, 0) are clamped to zero, anything more negative throws
/// InvalidPovmError.
ComplexMatrix psd_sqrt(const ComplexMatrix& e, Tolerance tol = {});

/// trace_distance(rho, sum_X I_X(rho)).
/// Throws DimensionError when rho does not live on the object space.
double disturbance(const MeasurementScheme& s, const DensityOperator& rho, Tolerance tol = {});
double disturbance(const Instrument& inst, const DensityOperator& rho);

struct NoInfoNoDisturbanceReport {
  std::size_t states_checked = 0;
  double max_disturbance = 0.0;
  std::size_t max_disturbance_state = 0;
  ComplexVector max_disturbance_witness;
  double triviality_deviation = 0.0;
  bool undisturbed = false;
  bool trivial = false;
  bool implication_holds = false;  // undisturbed => trivial
};

/// Evaluates disturbance over the basis grid {e_i, (e_i+e_j)/sqrt2,
/// (e_i + i e_j)/sqrt2} plus n_states seeded random states, and the
/// triviality of the measured observable.
NoInfoNoDisturbanceReport no_info_no_disturbance_check(const MeasurementScheme& s,
                                                       Tolerance tol = {}, Seed seed = 0xB05C,
                                                       std::size_t n_states = 32);

// Named POVMs.
namespace povms {
/// {|k><k|} on C^d, labels "0".."d-1".
Povm computational(Eigen::Index d);
/// Weights times the identity.
Povm trivial(Eigen::Index d, const std::vector<double>& weights);
/// Qubit trine {(2/3)|psi_k><psi_k|}, psi_k = cos(2 pi k/3) e_0 + sin(2 pi k/3) e_1.
Povm trine();
/// Qutrit Fourier basis {|psi_k><psi_k|}, psi_k = sum_j w^{jk} e_j / sqrt3,
/// w = e^{2 pi i/3}.
Povm qutrit_fourier();
/// Random POVM with n outcomes: E_X = S^{-1/2} A_X S^{-1/2}, A_X = G G^dag.
Povm random(Eigen::Index d, std::size_t n_outcomes, std::mt19937_64& rng);
}  // namespace povms

}  // namespace nonent

#endif  // NONENT_MEASUREMENT_HPP
