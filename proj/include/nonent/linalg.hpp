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

// Dense complex linear algebra used throughout the toolkit: Kronecker
// products, unitarity checks, Hermitian eigendecomposition with a
// deterministic phase convention, principal unitary logarithms and seeded
// sampling of states and Haar unitaries.

#ifndef NONENT_LINALG_HPP
#define NONENT_LINALG_HPP

#include <complex>
#include <cstdint>
#include <random>
#include <string_view>

#include <Eigen/Dense>

namespace nonent {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Absolute tolerance for norm-based comparisons.
struct Tolerance {
  double eps = 1e-9;
};

using Seed = std::uint64_t;

/// Derives an independent stream seed for a named consumer. Used to split one
/// user-facing seed into per-module streams.
Seed derive_seed(Seed seed, std::string_view label);

/// 64-bit engine seeded through splitmix64 so that nearby seeds give
/// unrelated streams.
std::mt19937_64 make_engine(Seed seed);

// ---------------------------------------------------------------------------
// Elementary operations
// ---------------------------------------------------------------------------

/// Kronecker product; block (i, j) of the result equals a(i, j) * b.
/// Throws DimensionError when the product shape overflows.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector tensor_product(const ComplexVector& a, const ComplexVector& b);

ComplexMatrix adjoint(const ComplexMatrix& a);

/// max(||U^dag U - I||_F, ||U U^dag - I||_F). Throws DimensionError if u is
/// not square.
double unitarity_defect(const ComplexMatrix& u);
bool is_unitary(const ComplexMatrix& u, Tolerance tol = {});

/// ||H - H^dag||_F. Throws DimensionError if h is not square.
double hermiticity_defect(const ComplexMatrix& h);

ComplexMatrix identity(Eigen::Index d);
ComplexVector basis_vector(Eigen::Index d, Eigen::Index i);

/// Rescales `v` in place so that its first component with modulus > eps is
/// real positive. Returns the unit-modulus factor that was multiplied in.
Complex canonicalize_phase(Eigen::Ref<ComplexVector> v, double eps);

/// Distance between a and b after removing the best global phase:
/// min over theta of ||a - e^{i theta} b||_F.
double phase_aligned_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// Global-phase equality: |tr(a^dag b)| == ||a||_F ||b||_F within eps.
bool equal_up_to_phase(const ComplexMatrix& a, const ComplexMatrix& b,
                       Tolerance tol = {});

// ---------------------------------------------------------------------------
// Spectral operations
// ---------------------------------------------------------------------------

struct HermitianEig {
  RealVector values;     // descending
  ComplexMatrix vectors;  // columns, unitary
};

/// Eigendecomposition of a Hermitian matrix, eigenvalues descending.
///
/// Each eigenvector is rescaled so its first component of modulus > eps is
/// real positive. Eigenvalues equal within eps keep a deterministic order by
/// lexicographic comparison (real part, then imaginary part, component by
/// component) of the rescaled vectors.
///
/// Throws NotHermitianError if ||h - h^dag||_F > tol.eps.
HermitianEig hermitian_eig(const ComplexMatrix& h, Tolerance tol = {});

/// exp(i t H) for Hermitian H, through its eigendecomposition.
ComplexMatrix exp_i_hermitian(const ComplexMatrix& h, double t = 1.0);
ComplexMatrix exp_i_hermitian(const HermitianEig& eig, double t = 1.0);

/// Hermitian H with exp(iH) == u. Eigenphases lie in (-pi, pi]; an
/// eigenvalue within eps of -1 maps to +pi.
/// Throws NotUnitaryError when u fails is_unitary(u, tol).
ComplexMatrix unitary_log(const ComplexMatrix& u, Tolerance tol = {});

/// Eigenphases of a unitary under the same branch convention, ascending.
RealVector unitary_eigenphases(const ComplexMatrix& u, Tolerance tol = {});

// ---------------------------------------------------------------------------
// Seeded sampling
// ---------------------------------------------------------------------------

/// d x d matrix of i.i.d. standard complex Gaussians (E|z|^2 = 1).
ComplexMatrix complex_gaussian(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng);

/// Haar-distributed unitary via QR of a complex Gaussian matrix with the
/// R-diagonal phase correction.
ComplexMatrix haar_unitary(Eigen::Index d, Seed seed);
ComplexMatrix haar_unitary(Eigen::Index d, std::mt19937_64& rng);

/// Normalized complex Gaussian vector.
ComplexVector random_state(Eigen::Index d, Seed seed);
ComplexVector random_state(Eigen::Index d, std::mt19937_64& rng);

/// A + A^dag for a complex Gaussian A.
ComplexMatrix random_hermitian(Eigen::Index d, std::mt19937_64& rng);

// ---------------------------------------------------------------------------
// Named operators
// ---------------------------------------------------------------------------

/// Canonical flip H1 (x) H2 -> H2 (x) H1, e_i (x) f_j -> f_j (x) e_i.
/// For d1 == d2 this is the swap unitary on H (x) H.
ComplexMatrix swap_operator(Eigen::Index d1, Eigen::Index d2);

namespace gates {
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix hadamard();
/// Controlled-NOT with the control on the first tensor factor.
ComplexMatrix cnot();
/// Controlled-NOT with the control on the second tensor factor.
ComplexMatrix cnot_reversed();
/// diag(1, 1, 1, e^{i theta}).
ComplexMatrix controlled_phase(double theta);
/// Generalized controlled phase on C^d (x) C^d:
/// e_i (x) f_j -> e^{i theta i j} e_i (x) f_j.
ComplexMatrix controlled_phase(Eigen::Index d1, Eigen::Index d2, double theta);
}  // namespace gates

}  // namespace nonent

#endif  // NONENT_LINALG_HPP
