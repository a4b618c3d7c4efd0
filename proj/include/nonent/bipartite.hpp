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

// Bipartite structure over H1 (x) H2.
//
// Index convention: component (i * d2 + j) of a joint vector is the amplitude
// on e_i (x) f_j, where {e_i} spans H1 and {f_j} spans H2.

#ifndef NONENT_BIPARTITE_HPP
#define NONENT_BIPARTITE_HPP

#include <optional>
#include <utility>

#include "nonent/linalg.hpp"

namespace nonent {

struct BipartiteSpace {
  Eigen::Index d1 = 1;
  Eigen::Index d2 = 1;

  BipartiteSpace() = default;
  /// Throws DimensionError unless both dimensions are positive.
  BipartiteSpace(Eigen::Index d1, Eigen::Index d2);

  Eigen::Index dim() const { return d1 * d2; }
  bool operator==(const BipartiteSpace&) const = default;
};

/// Unit vector in H1 (x) H2.
class PureState {
 public:
  /// Throws DimensionError on a length mismatch and NotNormalizedError when
  /// | ||vec|| - 1 | > tol.eps.
  PureState(BipartiteSpace space, ComplexVector vec, Tolerance tol = {});

  static PureState product(const ComplexVector& left, const ComplexVector& right,
                           Tolerance tol = {});

  const BipartiteSpace& space() const { return space_; }
  const ComplexVector& vec() const { return vec_; }

  /// The d1 x d2 coefficient matrix M with vec = sum_ij M(i,j) e_i (x) f_j.
  ComplexMatrix coefficient_matrix() const;

 private:
  BipartiteSpace space_;
  ComplexVector vec_;
};

struct SchmidtDecomposition {
  RealVector coeffs;    // descending, strictly positive above tol.eps
  ComplexMatrix left;   // d1 x r, orthonormal columns
  ComplexMatrix right;  // d2 x r, orthonormal columns

  Eigen::Index rank() const { return coeffs.size(); }
  ComplexVector reconstruct() const;
};

/// Schmidt decomposition through the SVD of the coefficient matrix. Terms
/// with coefficient <= tol.eps are dropped (at least one term is kept).
/// Each left vector has its first component of modulus > eps made real
/// positive; the compensating phase sits in the matching right vector.
SchmidtDecomposition schmidt(const PureState& psi, Tolerance tol = {});

/// All min(d1, d2) singular values of the coefficient matrix, descending.
RealVector schmidt_coefficients(const PureState& psi);

/// Number of Schmidt coefficients > tol.eps.
Eigen::Index schmidt_rank(const PureState& psi, Tolerance tol = {});

struct ProductFactors {
  ComplexVector left;
  ComplexVector right;
};

/// Unit factors (left, right) with psi == left (x) right when psi has Schmidt
/// rank 1; std::nullopt otherwise. Same phase convention as schmidt().
std::optional<ProductFactors> is_product(const PureState& psi, Tolerance tol = {});

/// Density operator: Hermitian, unit trace, eigenvalues >= -eps.
class DensityOperator {
 public:
  /// Throws std::invalid_argument if the invariants fail within tol.eps.
  explicit DensityOperator(ComplexMatrix mat, Tolerance tol = {});

  static DensityOperator pure(const ComplexVector& v, Tolerance tol = {});

  Eigen::Index dim() const { return mat_.rows(); }
  const ComplexMatrix& mat() const { return mat_; }

 private:
  ComplexMatrix mat_;
};

enum class Subsystem { kFirst = 1, kSecond = 2 };

/// Traces out the factor not named by `keep`.
/// Throws DimensionError when rho.dim() != space.dim().
DensityOperator partial_trace(const DensityOperator& rho, const BipartiteSpace& space,
                              Subsystem keep);

/// Raw partial trace on an arbitrary (not necessarily normalized) operator.
ComplexMatrix partial_trace(const ComplexMatrix& op, const BipartiteSpace& space,
                            Subsystem keep);

/// Entropy of the squared Schmidt coefficients in bits, with 0 log 0 = 0.
double entanglement_entropy(const PureState& psi);

/// Half the trace norm of a - b. Throws DimensionError on mismatched sizes.
double trace_distance(const DensityOperator& a, const DensityOperator& b);
double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace nonent

#endif  // NONENT_BIPARTITE_HPP
