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

// Classification of bipartite unitaries that never create entanglement.
//
// A unitary U on H1 (x) H2 that maps every product vector to a product vector
// is either a product V (x) W of local unitaries, or (only when
// dim H1 == dim H2) a swap form (V21 (x) W12) SWAP, which sends
// phi (x) chi to V21 chi (x) W12 phi. Everything else entangles some
// product input.
//
// The decision is spectral: U == V (x) W exactly when the realigned matrix
// realign(U) has rank one, and its leading singular pair yields the factors.

#ifndef NONENT_CLASSIFIER_HPP
#define NONENT_CLASSIFIER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "nonent/bipartite.hpp"
#include "nonent/linalg.hpp"

namespace nonent {

struct ProductForm {
  ComplexMatrix v;  // d1 x d1
  ComplexMatrix w;  // d2 x d2
};

struct SwapForm {
  ComplexMatrix v21;  // H2 -> H1
  ComplexMatrix w12;  // H1 -> H2
};

/// A product input whose image has Schmidt rank >= 2.
struct EntanglingWitness {
  ComplexVector input_left;
  ComplexVector input_right;
  ComplexVector image;
  double second_coefficient = 0.0;
  std::string candidate;  // human-readable id of the candidate input
};

using NonEntanglingForm = std::variant<ProductForm, SwapForm, EntanglingWitness>;

enum class Verdict { kProduct, kSwap, kEntangling };

Verdict verdict_of(const NonEntanglingForm& form);
std::string_view verdict_name(Verdict v);

/// Reassembled operator for Product/SwapForm; std::nullopt for witnesses.
std::optional<ComplexMatrix> reassemble(const NonEntanglingForm& form);

/// Operator-Schmidt reshuffle: output(i*d1 + k, j*d2 + l) = u(i*d2 + j, k*d2 + l).
/// Maps V (x) W to vec(V) vec(W)^T with row-major vec.
/// Throws DimensionError unless u is (d1*d2) x (d1*d2).
ComplexMatrix realign(const ComplexMatrix& u, Eigen::Index d1, Eigen::Index d2);

/// Singular values of realign(u), descending.
RealVector operator_schmidt_coefficients(const ComplexMatrix& u, Eigen::Index d1,
                                         Eigen::Index d2);

/// Count of realignment singular values > tol.eps * sigma_max.
Eigen::Index operator_schmidt_rank(const ComplexMatrix& u, Eigen::Index d1, Eigen::Index d2,
                                   Tolerance tol = {});

/// Factors of a product unitary. V's first entry in column-major order with
/// modulus > eps is real positive. Throws FormMismatchError when
/// ||u - V (x) W||_F > 10 eps or a factor is not unitary.
ProductForm decompose_product(const ComplexMatrix& u, Eigen::Index d1, Eigen::Index d2,
                              Tolerance tol = {});

/// Factors of a swap-form unitary u = (V21 (x) W12) SWAP on C^d (x) C^d,
/// with V21 under the same phase convention. Throws FormMismatchError on
/// non-swap input.
SwapForm decompose_swap(const ComplexMatrix& u, Eigen::Index d, Tolerance tol = {});

/// Number of random product candidates tried after the deterministic grid.
inline constexpr std::size_t kWitnessRandomCandidates = 512;

/// Classifies u into ProductForm, SwapForm or EntanglingWitness.
///
/// Witness candidates are tried in a fixed order: (e_i+e_j)/sqrt2 (x) f_k,
/// then e_i (x) (f_k+f_l)/sqrt2, then (e_i+e_j)/sqrt2 (x) (f_k+f_l)/sqrt2,
/// then seeded random products. A witness needs its second Schmidt
/// coefficient above 10 eps.
///
/// Throws NotUnitaryError, DimensionError, or WitnessSearchError when no
/// candidate qualifies.
NonEntanglingForm classify_unitary(const ComplexMatrix& u, Eigen::Index d1, Eigen::Index d2,
                                   Tolerance tol = {}, Seed seed = 0xB05C);

// ---------------------------------------------------------------------------
// Fixed probe slice phi -> U(phi (x) phi0)
// ---------------------------------------------------------------------------

/// U(phi (x) phi0) = V phi (x) phi_prime.
struct LocalOnObject {
  ComplexMatrix v;          // d1 x d1 isometry
  ComplexVector phi_prime;  // unit vector in H2
};

/// U(phi (x) phi0) = phi_prime (x) W12 phi.
struct TransferToProbe {
  ComplexVector phi_prime;  // unit vector in H1
  ComplexMatrix w12;        // d2 x d1 isometry
};

using SliceForm = std::variant<LocalOnObject, TransferToProbe>;

/// Constructive form of the slice map for probe vector phi0.
///
/// Factors the images of e_i (x) phi0, checks that the superpositions
/// (e_i+e_j)/sqrt2 (x) phi0 also map to products, then picks the pattern by
/// the first pair: orthogonal object factors give LocalOnObject, orthogonal
/// probe factors give TransferToProbe. The isometry is assembled column by
/// column and verified by linear extension.
///
/// Throws NotUnitaryError, DimensionError, NotNormalizedError for phi0,
/// SliceHypothesisError when an image is entangled, and
/// InconsistentPatternError when the data fits neither pattern.
SliceForm classify_slice(const ComplexMatrix& u, Eigen::Index d1, Eigen::Index d2,
                         const ComplexVector& phi0, Tolerance tol = {});

/// The isometry carried by a SliceForm (V or W12).
const ComplexMatrix& slice_isometry(const SliceForm& form);

// ---------------------------------------------------------------------------
// Sampling oracle
// ---------------------------------------------------------------------------

struct BruteForceResult {
  bool non_entangling = true;
  std::size_t inputs_checked = 0;
  std::optional<EntanglingWitness> counterexample;
  bool counterexample_from_grid = false;
};

/// Checks every grid input (e_i+e_j) (x) (f_k+f_l) (normalized, i <= j,
/// k <= l) and then n_samples seeded random product inputs, stopping at the
/// first image with Schmidt rank >= 2 within tol. Independent of the
/// realignment route.
BruteForceResult brute_force_non_entangling(const ComplexMatrix& u, Eigen::Index d1,
                                            Eigen::Index d2, Tolerance tol = {},
                                            Seed seed = 0xB05C, std::size_t n_samples = 200);

}  // namespace nonent

#endif  // NONENT_CLASSIFIER_HPP
