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

#include "nonent/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gtest/gtest.h>

#include "nonent/fixtures.hpp"

namespace nonent {
namespace {

const Complex kI(0.0, 1.0);

ComplexVector e(Eigen::Index d, Eigen::Index i) { return basis_vector(d, i); }

// sqrt(SWAP) from the symmetric and antisymmetric projectors, with no
// logarithm involved.
ComplexMatrix projector_sqrt_swap(Eigen::Index d) {
  const ComplexMatrix s = swap_operator(d, d);
  const ComplexMatrix id = identity(d * d);
  return 0.5 * (id + s) + kI * 0.5 * (id - s);
}

// Entropy in bits from squared Schmidt coefficients, via the reduced
// density matrix spectrum.
double reduced_entropy(const ComplexVector& psi, Eigen::Index d) {
  ComplexMatrix m(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) m(i, j) = psi(i * d + j);
  const Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m * m.adjoint());
  double h = 0.0;
  for (Eigen::Index k = 0; k < d; ++k) {
    const double p = es.eigenvalues()(k);
    if (p > 1e-300) h -= p * std::log2(p);
  }
  return h;
}

TEST(UnitaryPathTest, IdentityEndpoint) {
  const UnitaryPath p = UnitaryPath::geodesic(identity(4), 2, 2);
  EXPECT_LT(p.generator().norm(), 1e-15);
  EXPECT_LT((p.at(0.37) - identity(4)).norm(), 1e-15);
}

TEST(UnitaryPathTest, ControlledZ) {
  const UnitaryPath p = UnitaryPath::geodesic(gates::controlled_phase(std::numbers::pi), 2, 2);
  ComplexMatrix half = identity(4);
  half(3, 3) = kI;
  EXPECT_LT((p.at(0.5) - half).norm(), 1e-12);
  const HermitianEig eig = hermitian_eig(p.generator());
  EXPECT_NEAR(eig.values(0), std::numbers::pi, 1e-12);
  EXPECT_NEAR(eig.values(1), 0.0, 1e-12);
}

TEST(UnitaryPathTest, SwapEndpoints) {
  const ComplexMatrix s = swap_operator(2, 2);
  const UnitaryPath p = UnitaryPath::geodesic(s, 2, 2);
  EXPECT_EQ(p.at(0.0), identity(4));
  EXPECT_LT((p.at(1.0) - s).norm(), 1e-10);
  const ComplexMatrix half = p.at(0.5);
  EXPECT_LT((half * half - s).norm(), 1e-10);
  EXPECT_LT((half - projector_sqrt_swap(2)).norm(), 1e-10);
}

TEST(UnitaryPathTest, OutOfRange) {
  const UnitaryPath p = UnitaryPath::geodesic(identity(4), 2, 2);
  EXPECT_THROW(p.at(-0.1), std::out_of_range);
  EXPECT_THROW(p.at(1.5), std::out_of_range);
}

TEST(UnitaryPathTest, GroupProperty) {
  const UnitaryPath p = UnitaryPath::geodesic(haar_unitary(6, 3), 2, 3);
  EXPECT_LT((p.at(0.3) * p.at(0.5) - p.at(0.8)).norm(), 1e-10);
  for (double t : {0.1, 0.4, 0.9}) EXPECT_TRUE(is_unitary(p.at(t), Tolerance{1e-10}));
}

TEST(SqrtSwapOracleTest, FrozenValue) {
  // The image has coefficient matrix [[1, (1-i)/2], [(1+i)/2, 0]] / sqrt2,
  // so p q = |det|^2 = 1/16 and p, q = (2 +- sqrt3)/4.
  const double p = (2.0 + std::numbers::sqrt3) / 4.0, q = (2.0 - std::numbers::sqrt3) / 4.0;
  const double closed_form = -p * std::log2(p) - q * std::log2(q);
  EXPECT_NEAR(closed_form, 0.35457890266527, 1e-13);
  for (Eigen::Index d : {2, 3}) {
    const ComplexVector in = tensor_product(ComplexVector((e(d, 0) + e(d, 1)) / std::numbers::sqrt2),
                                            e(d, 0));
    EXPECT_NEAR(reduced_entropy(projector_sqrt_swap(d) * in, d), closed_form, 1e-12);
  }
}

TEST(EntanglementProfileTest, ConstantPath) {
  const UnitaryPath p = UnitaryPath::geodesic(identity(4), 2, 2);
  const EntanglementProfile prof = entanglement_profile(p, e(2, 0), 16);
  ASSERT_EQ(prof.points.size(), 17u);
  for (const ProfilePoint& pt : prof.points) {
    EXPECT_LT(pt.max_entropy_bits, 1e-12);
    EXPECT_EQ(pt.verdict, Verdict::kProduct);
  }
  EXPECT_FALSE(swap_obstruction_witnessed(prof));
}

TEST(EntanglementProfileTest, SwapMidpointMatchesOracle) {
  const UnitaryPath p = UnitaryPath::geodesic(swap_operator(2, 2), 2, 2);
  const ComplexVector in =
      tensor_product(ComplexVector((e(2, 0) + e(2, 1)) / std::numbers::sqrt2), e(2, 0));
  EXPECT_NEAR(reduced_entropy(p.at(0.5) * in, 2), 0.35457890266527, 1e-6);
}

TEST(EntanglementProfileTest, SwapObstruction) {
  for (Eigen::Index d : {2, 3}) {
    const UnitaryPath p = UnitaryPath::geodesic(swap_operator(d, d), d, d);
    const EntanglementProfile prof = entanglement_profile(p, e(d, 0), 64);
    ASSERT_EQ(prof.points.size(), 65u);
    EXPECT_TRUE(swap_obstruction_witnessed(prof));
    EXPECT_EQ(prof.points.front().verdict, Verdict::kProduct);
    EXPECT_EQ(prof.points.back().verdict, Verdict::kSwap);
    const PathMaximum best = max_path_entanglement(prof);
    EXPECT_GT(best.entropy_bits, 0.5);
    EXPECT_NEAR(best.t, 0.5, 0.1);
  }
}

TEST(EntanglementProfileTest, CnotEndpointKeepsWitnessEntropy) {
  const UnitaryPath p = UnitaryPath::geodesic(gates::cnot(), 2, 2);
  const PathMaximum best = max_path_entanglement(p, e(2, 0), 64);
  EXPECT_GE(best.entropy_bits, 1.0 - 1e-9);
}

TEST(EntanglementProfileTest, LocalGeneratorNeverEntangles) {
  for (Seed seed = 0; seed < 10; ++seed) {
    const Eigen::Index d1 = 2 + seed % 2, d2 = 2 + (seed / 2) % 2;
    const UnitaryPath p = UnitaryPath::from_generator(local_generator(d1, d2, seed), d1, d2);
    EXPECT_LT((p.endpoint() - local_generator_product(d1, d2, seed)).norm(), 1e-12);
    const EntanglementProfile prof = entanglement_profile(p, random_state(d2, seed), 32, seed);
    for (const ProfilePoint& pt : prof.points) {
      EXPECT_LT(pt.max_entropy_bits, 1e-9);
      EXPECT_EQ(pt.verdict, Verdict::kProduct);
    }
  }
}

TEST(EntanglementProfileTest, LocalGeneratorGeodesicRecoversGenerator) {
  const ComplexMatrix h = local_generator(2, 3, 5);
  const UnitaryPath p = UnitaryPath::geodesic(local_generator_product(2, 3, 5), 2, 3);
  EXPECT_LT((p.generator() - h).norm(), 1e-9);
}

TEST(EntanglementProfileTest, InputFamilyAndDeterminism) {
  const UnitaryPath p = UnitaryPath::geodesic(haar_unitary(4, 9), 2, 2);
  const EntanglementProfile a = entanglement_profile(p, e(2, 0), 8, 11, 4);
  const EntanglementProfile b = entanglement_profile(p, e(2, 0), 8, 11, 4);
  ASSERT_EQ(a.inputs.size(), 2u + 1u + 4u);
  EXPECT_EQ(a.inputs[0].id, "e0");
  EXPECT_EQ(a.inputs[2].id, "(e0+e1)/sqrt2");
  for (std::size_t k = 0; k < a.points.size(); ++k) {
    EXPECT_EQ(a.points[k].max_entropy_bits, b.points[k].max_entropy_bits);
  }
  EXPECT_THROW(entanglement_profile(p, e(2, 0), 1), std::invalid_argument);
}

}  // namespace
}  // namespace nonent
