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

#include "nonent/bipartite.hpp"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "nonent/errors.hpp"

namespace nonent {
namespace {

const BipartiteSpace kQubits(2, 2);

ComplexVector bell() {
  ComplexVector v = ComplexVector::Zero(4);
  v(0) = v(3) = 1.0 / std::numbers::sqrt2;
  return v;
}

ComplexVector e(Eigen::Index d, Eigen::Index i) { return basis_vector(d, i); }

TEST(BipartiteSpaceTest, RejectsNonPositive) {
  EXPECT_THROW(BipartiteSpace(0, 2), DimensionError);
  EXPECT_THROW(BipartiteSpace(2, -1), DimensionError);
  EXPECT_EQ(BipartiteSpace(2, 3).dim(), 6);
}

TEST(PureStateTest, Validation) {
  EXPECT_THROW(PureState(kQubits, ComplexVector::Ones(4)), NotNormalizedError);
  EXPECT_THROW(PureState(kQubits, e(3, 0)), DimensionError);
  const PureState p = PureState::product(e(2, 1), e(3, 2));
  EXPECT_EQ(p.space(), BipartiteSpace(2, 3));
  EXPECT_EQ(p.coefficient_matrix()(1, 2), Complex(1.0));
}

TEST(SchmidtTest, ProductState) {
  const SchmidtDecomposition sd = schmidt(PureState::product(e(2, 0), e(2, 1)));
  ASSERT_EQ(sd.rank(), 1);
  EXPECT_NEAR(sd.coeffs(0), 1.0, 1e-15);
  EXPECT_LT((sd.left.col(0) - e(2, 0)).norm(), 1e-15);
  EXPECT_LT((sd.right.col(0) - e(2, 1)).norm(), 1e-15);
}

TEST(SchmidtTest, BellState) {
  const SchmidtDecomposition sd = schmidt(PureState(kQubits, bell()));
  ASSERT_EQ(sd.rank(), 2);
  EXPECT_NEAR(sd.coeffs(0), 1.0 / std::numbers::sqrt2, 1e-15);
  EXPECT_NEAR(sd.coeffs(1), 1.0 / std::numbers::sqrt2, 1e-15);
}

TEST(SchmidtTest, RandomStateInvariants) {
  const PureState psi(BipartiteSpace(3, 4), random_state(12, 9));
  const SchmidtDecomposition sd = schmidt(psi);
  EXPECT_LT((sd.reconstruct() - psi.vec()).norm(), 1e-10);
  EXPECT_NEAR(sd.coeffs.squaredNorm(), 1.0, 1e-12);
  EXPECT_LT((sd.left.adjoint() * sd.left - identity(sd.rank())).norm(), 1e-12);
  EXPECT_LT((sd.right.adjoint() * sd.right - identity(sd.rank())).norm(), 1e-12);
  for (Eigen::Index k = 0; k < sd.rank(); ++k) {
    EXPECT_GT(sd.coeffs(k), 0.0);
    if (k > 0) EXPECT_GE(sd.coeffs(k - 1), sd.coeffs(k));
  }
}

TEST(SchmidtTest, ReconstructionProperty) {
  auto rng = make_engine(31);
  for (int trial = 0; trial < 30; ++trial) {
    const Eigen::Index d1 = 1 + trial % 4, d2 = 1 + (trial / 4) % 4;
    const PureState psi(BipartiteSpace(d1, d2), random_state(d1 * d2, rng));
    EXPECT_LT((schmidt(psi).reconstruct() - psi.vec()).norm(), 1e-10);
  }
}

TEST(SchmidtRankTest, Examples) {
  EXPECT_EQ(schmidt_rank(PureState::product(e(2, 0), e(2, 0))), 1);
  EXPECT_EQ(schmidt_rank(PureState(kQubits, bell())), 2);
  const ComplexVector plus0 =
      tensor_product(ComplexVector((e(2, 0) + e(2, 1)) / std::numbers::sqrt2), e(2, 0));
  EXPECT_EQ(schmidt_rank(PureState(kQubits, gates::cnot() * plus0)), 2);
}

TEST(IsProductTest, Examples) {
  const auto f = is_product(PureState::product(e(2, 1), e(2, 0)));
  ASSERT_TRUE(f.has_value());
  EXPECT_LT((f->left - e(2, 1)).norm(), 1e-15);
  EXPECT_LT((f->right - e(2, 0)).norm(), 1e-15);
  EXPECT_FALSE(is_product(PureState(kQubits, bell())).has_value());
}

TEST(IsProductTest, HaarRotatedProduct) {
  auto rng = make_engine(3);
  const ComplexMatrix v = haar_unitary(2, rng), w = haar_unitary(3, rng);
  const ComplexVector psi = tensor_product(v, w) * tensor_product(e(2, 0), e(3, 0));
  const auto f = is_product(PureState(BipartiteSpace(2, 3), psi));
  ASSERT_TRUE(f.has_value());
  EXPECT_LT((tensor_product(f->left, f->right) - psi).norm(), 1e-12);
  EXPECT_LT(phase_aligned_distance(f->left, v.col(0)), 1e-12);
}

TEST(PartialTraceTest, ProductKeepsFactor) {
  auto rng = make_engine(41);
  const ComplexVector a = random_state(2, rng), b = random_state(3, rng);
  const ComplexMatrix rho1 = a * a.adjoint();
  const ComplexMatrix rho2 = b * b.adjoint();
  const DensityOperator rho(tensor_product(rho1, rho2));
  const BipartiteSpace space(2, 3);
  EXPECT_LT((partial_trace(rho, space, Subsystem::kFirst).mat() - rho1).norm(), 1e-12);
  EXPECT_LT((partial_trace(rho, space, Subsystem::kSecond).mat() - rho2).norm(), 1e-12);
}

TEST(PartialTraceTest, BellMarginalIsMaximallyMixed) {
  const DensityOperator rho = DensityOperator::pure(bell());
  EXPECT_LT((partial_trace(rho, kQubits, Subsystem::kFirst).mat() - 0.5 * identity(2)).norm(),
            1e-15);
}

TEST(PartialTraceTest, MarginalSpectraAgree) {
  const BipartiteSpace space(2, 3);
  const DensityOperator rho = DensityOperator::pure(random_state(6, 4));
  const RealVector s1 = hermitian_eig(partial_trace(rho, space, Subsystem::kFirst).mat()).values;
  const RealVector s2 = hermitian_eig(partial_trace(rho, space, Subsystem::kSecond).mat()).values;
  EXPECT_NEAR(s1(0), s2(0), 1e-10);
  EXPECT_NEAR(s1(1), s2(1), 1e-10);
  EXPECT_NEAR(s2(2), 0.0, 1e-10);
}

TEST(PartialTraceTest, DimensionMismatch) {
  EXPECT_THROW(partial_trace(DensityOperator::pure(e(3, 0)), kQubits, Subsystem::kFirst),
               DimensionError);
}

TEST(DensityOperatorTest, RejectsInvalid) {
  EXPECT_THROW(DensityOperator(identity(2)), std::invalid_argument);
  ComplexMatrix neg = ComplexMatrix::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  EXPECT_THROW(DensityOperator{neg}, std::invalid_argument);
}

TEST(EntropyTest, Examples) {
  EXPECT_NEAR(entanglement_entropy(PureState::product(e(2, 0), e(2, 1))), 0.0, 1e-15);
  EXPECT_NEAR(entanglement_entropy(PureState(kQubits, bell())), 1.0, 1e-15);
  ComplexVector v = ComplexVector::Zero(4);
  v(0) = std::sqrt(0.9);
  v(3) = std::sqrt(0.1);
  // -0.9 log2 0.9 - 0.1 log2 0.1.
  EXPECT_NEAR(entanglement_entropy(PureState(kQubits, v)), 0.46899559358928122, 1e-14);
}

TEST(TraceDistanceTest, Examples) {
  const DensityOperator rho = DensityOperator::pure(random_state(3, 8));
  EXPECT_NEAR(trace_distance(rho, rho), 0.0, 1e-15);
  EXPECT_NEAR(trace_distance(DensityOperator::pure(e(2, 0)), DensityOperator::pure(e(2, 1))),
              1.0, 1e-15);
  const ComplexVector plus = (e(2, 0) + e(2, 1)) / std::numbers::sqrt2;
  EXPECT_NEAR(trace_distance(DensityOperator::pure(e(2, 0)), DensityOperator::pure(plus)),
              1.0 / std::numbers::sqrt2, 1e-14);
  EXPECT_THROW(trace_distance(identity(2), identity(3)), DimensionError);
}

}  // namespace
}  // namespace nonent
