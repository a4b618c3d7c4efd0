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

#include "nonent/classifier.hpp"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "nonent/bipartite.hpp"
#include "nonent/errors.hpp"

namespace nonent {
namespace {

const Complex kI(0.0, 1.0);

ComplexVector e(Eigen::Index d, Eigen::Index i) { return basis_vector(d, i); }

ComplexVector plus(Eigen::Index d, Eigen::Index i, Eigen::Index j) {
  return (e(d, i) + e(d, j)) / std::numbers::sqrt2;
}

// Row-major vectorization of a matrix.
ComplexVector vec_rows(const ComplexMatrix& m) {
  ComplexVector v(m.size());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) v(i * m.cols() + j) = m(i, j);
  return v;
}

TEST(RealignTest, ProductBecomesOuterProduct) {
  auto rng = make_engine(2);
  const ComplexMatrix v = haar_unitary(2, rng), w = haar_unitary(3, rng);
  const ComplexMatrix r = realign(tensor_product(v, w), 2, 3);
  EXPECT_LT((r - vec_rows(v) * vec_rows(w).transpose()).norm(), 1e-12);
  const RealVector s = operator_schmidt_coefficients(tensor_product(v, w), 2, 3);
  EXPECT_NEAR(s(0), v.norm() * w.norm(), 1e-12);
  for (Eigen::Index k = 1; k < s.size(); ++k) EXPECT_LT(s(k), 1e-12);
}

TEST(RealignTest, IdentityIsRankOne) {
  const ComplexMatrix r = realign(identity(4), 2, 2);
  EXPECT_LT((r - vec_rows(identity(2)) * vec_rows(identity(2)).transpose()).norm(), 1e-15);
}

TEST(OperatorSchmidtRankTest, Examples) {
  EXPECT_EQ(operator_schmidt_rank(identity(4), 2, 2), 1);
  EXPECT_EQ(operator_schmidt_rank(swap_operator(2, 2), 2, 2), 4);
  EXPECT_EQ(operator_schmidt_rank(gates::cnot(), 2, 2), 2);
  EXPECT_EQ(operator_schmidt_rank(swap_operator(3, 3), 3, 3), 9);
}

TEST(DecomposeProductTest, Identity) {
  const ProductForm f = decompose_product(identity(4), 2, 2);
  EXPECT_LT((f.v - identity(2)).norm(), 1e-14);
  EXPECT_LT((f.w - identity(2)).norm(), 1e-14);
}

TEST(DecomposeProductTest, PauliXZ) {
  const ProductForm f = decompose_product(tensor_product(gates::pauli_x(), gates::pauli_z()), 2, 2);
  EXPECT_TRUE(equal_up_to_phase(f.v, gates::pauli_x()));
  EXPECT_TRUE(equal_up_to_phase(f.w, gates::pauli_z()));
}

TEST(DecomposeProductTest, HaarRoundTrip) {
  auto rng = make_engine(8);
  const ComplexMatrix v = haar_unitary(3, rng), w = haar_unitary(2, rng);
  const ComplexMatrix u = tensor_product(v, w);
  const ProductForm f = decompose_product(u, 3, 2);
  EXPECT_LT((tensor_product(f.v, f.w) - u).norm(), 1e-9);
  EXPECT_LT(phase_aligned_distance(f.v, v), 1e-9);
  EXPECT_LT(phase_aligned_distance(f.w, w), 1e-9);
  EXPECT_TRUE(is_unitary(f.v));
  EXPECT_TRUE(is_unitary(f.w));
}

TEST(DecomposeProductTest, RejectsEntangling) {
  EXPECT_THROW(decompose_product(gates::cnot(), 2, 2), FormMismatchError);
}

TEST(DecomposeSwapTest, Swap) {
  const SwapForm f = decompose_swap(swap_operator(2, 2), 2);
  EXPECT_LT((f.v21 - identity(2)).norm(), 1e-14);
  EXPECT_LT((f.w12 - identity(2)).norm(), 1e-14);
}

TEST(DecomposeSwapTest, DressedRoundTrip) {
  auto rng = make_engine(13);
  const ComplexMatrix a = haar_unitary(3, rng), b = haar_unitary(3, rng);
  const ComplexMatrix u = tensor_product(a, b) * swap_operator(3, 3);
  const SwapForm f = decompose_swap(u, 3);
  EXPECT_LT((tensor_product(f.v21, f.w12) * swap_operator(3, 3) - u).norm(), 1e-9);
  EXPECT_LT(phase_aligned_distance(f.v21, a), 1e-9);
  EXPECT_LT(phase_aligned_distance(f.w12, b), 1e-9);
}

TEST(DecomposeSwapTest, SwapTimesLocalPhase) {
  ComplexMatrix p = identity(2);
  p(1, 1) = kI;
  const ComplexMatrix u = swap_operator(2, 2) * tensor_product(p, identity(2));
  const SwapForm f = decompose_swap(u, 2);
  const auto rebuilt = reassemble(NonEntanglingForm{f});
  ASSERT_TRUE(rebuilt.has_value());
  EXPECT_LT((*rebuilt - u).norm(), 1e-9);
  // SWAP (P (x) I) = (I (x) P) SWAP.
  EXPECT_TRUE(equal_up_to_phase(f.w12, p));
}

TEST(ClassifyUnitaryTest, SwapGivesIdentityFactors) {
  const NonEntanglingForm form = classify_unitary(swap_operator(2, 2), 2, 2);
  ASSERT_EQ(verdict_of(form), Verdict::kSwap);
  const auto& f = std::get<SwapForm>(form);
  EXPECT_LT((f.v21 - identity(2)).norm(), 1e-12);
  EXPECT_LT((f.w12 - identity(2)).norm(), 1e-12);
}

TEST(ClassifyUnitaryTest, HaarProduct) {
  auto rng = make_engine(8);
  const ComplexMatrix v = haar_unitary(2, rng), w = haar_unitary(2, rng);
  const ComplexMatrix u = tensor_product(v, w);
  const NonEntanglingForm form = classify_unitary(u, 2, 2);
  ASSERT_EQ(verdict_of(form), Verdict::kProduct);
  const auto& f = std::get<ProductForm>(form);
  EXPECT_LT((tensor_product(f.v, f.w) - u).norm(), 1e-9);
}

TEST(ClassifyUnitaryTest, CnotWitness) {
  const NonEntanglingForm form = classify_unitary(gates::cnot(), 2, 2);
  ASSERT_EQ(verdict_of(form), Verdict::kEntangling);
  const auto& w = std::get<EntanglingWitness>(form);
  EXPECT_LT((w.input_left - plus(2, 0, 1)).norm(), 1e-15);
  EXPECT_LT((w.input_right - e(2, 0)).norm(), 1e-15);
  ComplexVector bell = ComplexVector::Zero(4);
  bell(0) = bell(3) = 1.0 / std::numbers::sqrt2;
  EXPECT_LT((w.image - bell).norm(), 1e-15);
  EXPECT_NEAR(w.second_coefficient, 1.0 / std::numbers::sqrt2, 1e-14);
}

TEST(ClassifyUnitaryTest, UnequalDimensionsNeverSwap) {
  // The index flip C^2 (x) C^3 -> C^3 (x) C^2 is unitary but not a swap.
  EXPECT_EQ(verdict_of(classify_unitary(swap_operator(2, 3), 2, 3)), Verdict::kEntangling);
  EXPECT_EQ(verdict_of(classify_unitary(swap_operator(3, 2), 3, 2)), Verdict::kEntangling);
}

TEST(ClassifyUnitaryTest, Errors) {
  EXPECT_THROW(classify_unitary(2.0 * identity(4), 2, 2), NotUnitaryError);
  EXPECT_THROW(classify_unitary(identity(4), 2, 3), DimensionError);
}

TEST(ClassifyUnitaryTest, DeterministicWitness) {
  const ComplexMatrix u = haar_unitary(9, 77);
  const auto a = std::get<EntanglingWitness>(classify_unitary(u, 3, 3));
  const auto b = std::get<EntanglingWitness>(classify_unitary(u, 3, 3));
  EXPECT_EQ(a.candidate, b.candidate);
  EXPECT_EQ(a.image, b.image);
}

TEST(ClassifyUnitaryTest, MatchesBruteForceOnSmallCorpus) {
  auto rng = make_engine(101);
  for (int k = 0; k < 30; ++k) {
    const Eigen::Index d1 = 2 + k % 2, d2 = 2 + (k / 2) % 2;
    ComplexMatrix u;
    switch (k % 3) {
      case 0: u = tensor_product(haar_unitary(d1, rng), haar_unitary(d2, rng)); break;
      case 1: u = haar_unitary(d1 * d2, rng); break;
      default:
        u = d1 == d2 ? ComplexMatrix(tensor_product(haar_unitary(d1, rng),
                                                    haar_unitary(d2, rng)) *
                                     swap_operator(d1, d2))
                     : gates::controlled_phase(d1, d2, 1.0);
    }
    const bool non_entangling = verdict_of(classify_unitary(u, d1, d2)) != Verdict::kEntangling;
    EXPECT_EQ(non_entangling, brute_force_non_entangling(u, d1, d2).non_entangling) << k;
  }
}

TEST(ClassifySliceTest, IdentityIsLocal) {
  const ComplexVector phi0 = random_state(3, 4);
  const SliceForm form = classify_slice(identity(6), 2, 3, phi0);
  const auto* l = std::get_if<LocalOnObject>(&form);
  ASSERT_NE(l, nullptr);
  EXPECT_LT((l->v - identity(2)).norm(), 1e-12);
  EXPECT_LT(phase_aligned_distance(l->phi_prime, phi0), 1e-12);
}

TEST(ClassifySliceTest, SwapTransfersToProbe) {
  const SliceForm form = classify_slice(swap_operator(2, 2), 2, 2, e(2, 0));
  const auto* t = std::get_if<TransferToProbe>(&form);
  ASSERT_NE(t, nullptr);
  EXPECT_LT((t->w12 - identity(2)).norm(), 1e-12);
  EXPECT_LT((t->phi_prime - e(2, 0)).norm(), 1e-12);
}

TEST(ClassifySliceTest, HaarProductRecoversFactors) {
  auto rng = make_engine(21);
  const ComplexMatrix v = haar_unitary(3, rng), w = haar_unitary(2, rng);
  const ComplexVector phi0 = random_state(2, rng);
  const SliceForm form = classify_slice(tensor_product(v, w), 3, 2, phi0);
  const auto* l = std::get_if<LocalOnObject>(&form);
  ASSERT_NE(l, nullptr);
  EXPECT_LT(phase_aligned_distance(l->v, v), 1e-9);
  EXPECT_LT(phase_aligned_distance(l->phi_prime, w * phi0), 1e-9);
}

TEST(ClassifySliceTest, SliceReproducesImages) {
  auto rng = make_engine(22);
  const ComplexMatrix u =
      tensor_product(haar_unitary(3, rng), haar_unitary(3, rng)) * swap_operator(3, 3);
  const ComplexVector phi0 = random_state(3, rng);
  const SliceForm form = classify_slice(u, 3, 3, phi0);
  const auto* t = std::get_if<TransferToProbe>(&form);
  ASSERT_NE(t, nullptr);
  for (int k = 0; k < 5; ++k) {
    const ComplexVector phi = random_state(3, rng);
    const ComplexVector image = u * tensor_product(phi, phi0);
    const ComplexVector model = tensor_product(t->phi_prime, ComplexVector(t->w12 * phi));
    EXPECT_LT(phase_aligned_distance(image, model), 1e-9);
  }
}

TEST(ClassifySliceTest, CnotConventions) {
  // Control on the object: (e0+e1)/sqrt2 (x) f0 becomes a Bell state.
  try {
    classify_slice(gates::cnot(), 2, 2, e(2, 0));
    FAIL() << "expected SliceHypothesisError";
  } catch (const SliceHypothesisError& err) {
    EXPECT_EQ(err.index(), 0u);
    EXPECT_EQ(err.partner(), 1u);
  }
  // Control on the probe, probe in f0: the target is never flipped.
  const SliceForm form = classify_slice(gates::cnot_reversed(), 2, 2, e(2, 0));
  const auto* l = std::get_if<LocalOnObject>(&form);
  ASSERT_NE(l, nullptr);
  EXPECT_LT((l->v - identity(2)).norm(), 1e-12);
}

TEST(ClassifySliceTest, ProbeStateErrors) {
  EXPECT_THROW(classify_slice(identity(4), 2, 2, ComplexVector::Ones(2)), NotNormalizedError);
  EXPECT_THROW(classify_slice(identity(4), 2, 2, e(3, 0)), DimensionError);
}

TEST(BruteForceTest, Examples) {
  EXPECT_TRUE(brute_force_non_entangling(identity(4), 2, 2).non_entangling);
  const BruteForceResult cnot = brute_force_non_entangling(gates::cnot(), 2, 2);
  EXPECT_FALSE(cnot.non_entangling);
  EXPECT_TRUE(cnot.counterexample_from_grid);
  ASSERT_TRUE(cnot.counterexample.has_value());
  auto rng = make_engine(8);
  const ComplexMatrix u = tensor_product(haar_unitary(2, rng), haar_unitary(2, rng));
  const BruteForceResult r = brute_force_non_entangling(u, 2, 2, Tolerance{}, 8, 500);
  EXPECT_TRUE(r.non_entangling);
  EXPECT_GE(r.inputs_checked, 500u);
}

}  // namespace
}  // namespace nonent
