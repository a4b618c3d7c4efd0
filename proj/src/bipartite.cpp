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

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "nonent/errors.hpp"

namespace nonent {

BipartiteSpace::BipartiteSpace(Eigen::Index d1_, Eigen::Index d2_) : d1(d1_), d2(d2_) {
  if (d1 < 1 || d2 < 1) {
    throw DimensionError("BipartiteSpace: dimensions must be positive, got " +
                         std::to_string(d1) + "x" + std::to_string(d2));
  }
}

PureState::PureState(BipartiteSpace space, ComplexVector vec, Tolerance tol)
    : space_(space), vec_(std::move(vec)) {
  if (vec_.size() != space_.dim()) {
    throw DimensionError("PureState: vector length " + std::to_string(vec_.size()) +
                         " does not match d1*d2 = " + std::to_string(space_.dim()));
  }
  const double norm = vec_.norm();
  if (std::abs(norm - 1.0) > tol.eps) {
    throw NotNormalizedError("PureState: vector norm " + std::to_string(norm) + " is not 1",
                             norm);
  }
}

PureState PureState::product(const ComplexVector& left, const ComplexVector& right,
                             Tolerance tol) {
  return PureState(BipartiteSpace(left.size(), right.size()), tensor_product(left, right), tol);
}

ComplexMatrix PureState::coefficient_matrix() const {
  using RowMajor = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  return Eigen::Map<const RowMajor>(vec_.data(), space_.d1, space_.d2);
}

ComplexVector SchmidtDecomposition::reconstruct() const {
  ComplexVector out = ComplexVector::Zero(left.rows() * right.rows());
  for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
    out += coeffs(k) * tensor_product(ComplexVector(left.col(k)), ComplexVector(right.col(k)));
  }
  return out;
}

SchmidtDecomposition schmidt(const PureState& psi, Tolerance tol) {
  const ComplexMatrix m = psi.coefficient_matrix();
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVector& s = svd.singularValues();

  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > tol.eps) ++rank;
  rank = std::max<Eigen::Index>(rank, 1);

  SchmidtDecomposition out{s.head(rank), ComplexMatrix(m.rows(), rank),
                           ComplexMatrix(m.cols(), rank)};
  for (Eigen::Index k = 0; k < rank; ++k) {
    ComplexVector l = svd.matrixU().col(k);
    // M = U S V^dag, so the right Schmidt vectors are conj(V).
    ComplexVector r = svd.matrixV().col(k).conjugate();
    const Complex phase = canonicalize_phase(l, tol.eps);
    r /= phase;
    out.left.col(k) = l;
    out.right.col(k) = r;
  }
  return out;
}

RealVector schmidt_coefficients(const PureState& psi) {
  Eigen::JacobiSVD<ComplexMatrix> svd(psi.coefficient_matrix());
  return svd.singularValues();
}

Eigen::Index schmidt_rank(const PureState& psi, Tolerance tol) {
  const RealVector s = schmidt_coefficients(psi);
  return std::max<Eigen::Index>(1, (s.array() > tol.eps).count());
}

std::optional<ProductFactors> is_product(const PureState& psi, Tolerance tol) {
  const SchmidtDecomposition sd = schmidt(psi, tol);
  if (sd.rank() != 1) return std::nullopt;
  return ProductFactors{sd.left.col(0), sd.right.col(0)};
}

DensityOperator::DensityOperator(ComplexMatrix mat, Tolerance tol) : mat_(std::move(mat)) {
  if (mat_.rows() != mat_.cols() || mat_.rows() < 1) {
    throw DimensionError("DensityOperator: matrix must be square and non-empty");
  }
  const double herm = hermiticity_defect(mat_);
  if (herm > tol.eps) {
    throw std::invalid_argument("DensityOperator: not Hermitian (defect " +
                                std::to_string(herm) + ")");
  }
  const double tr = mat_.trace().real();
  if (std::abs(tr - 1.0) > tol.eps) {
    throw std::invalid_argument("DensityOperator: trace " + std::to_string(tr) + " is not 1");
  }
  const ComplexMatrix sym = 0.5 * (mat_ + mat_.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -tol.eps) {
    throw std::invalid_argument("DensityOperator: negative eigenvalue " +
                                std::to_string(solver.eigenvalues().minCoeff()));
  }
}

DensityOperator DensityOperator::pure(const ComplexVector& v, Tolerance tol) {
  return DensityOperator(v * v.adjoint(), tol);
}

ComplexMatrix partial_trace(const ComplexMatrix& op, const BipartiteSpace& space,
                            Subsystem keep) {
  if (op.rows() != space.dim() || op.cols() != space.dim()) {
    throw DimensionError("partial_trace: operator is " + std::to_string(op.rows()) + "x" +
                         std::to_string(op.cols()) + ", expected " +
                         std::to_string(space.dim()) + "x" + std::to_string(space.dim()));
  }
  const Eigen::Index d1 = space.d1;
  const Eigen::Index d2 = space.d2;
  if (keep == Subsystem::kFirst) {
    ComplexMatrix out = ComplexMatrix::Zero(d1, d1);
    for (Eigen::Index i = 0; i < d1; ++i)
      for (Eigen::Index k = 0; k < d1; ++k)
        for (Eigen::Index j = 0; j < d2; ++j) out(i, k) += op(i * d2 + j, k * d2 + j);
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(d2, d2);
  for (Eigen::Index j = 0; j < d2; ++j)
    for (Eigen::Index l = 0; l < d2; ++l)
      for (Eigen::Index i = 0; i < d1; ++i) out(j, l) += op(i * d2 + j, i * d2 + l);
  return out;
}

DensityOperator partial_trace(const DensityOperator& rho, const BipartiteSpace& space,
                              Subsystem keep) {
  ComplexMatrix reduced = partial_trace(rho.mat(), space, keep);
  // Contraction preserves the invariants; symmetrize away rounding.
  return DensityOperator(0.5 * (reduced + reduced.adjoint()), Tolerance{1e-8});
}

double entanglement_entropy(const PureState& psi) {
  const RealVector s = schmidt_coefficients(psi);
  double h = 0.0;
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    const double p = s(k) * s(k);
    if (p > 0.0) h -= p * std::log2(p);
  }
  return std::max(h, 0.0);
}

double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
    throw DimensionError("trace_distance: operands must be square with equal dimensions");
  }
  const ComplexMatrix diff = a - b;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (diff + diff.adjoint()),
                                                      Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

double trace_distance(const DensityOperator& a, const DensityOperator& b) {
  return trace_distance(a.mat(), b.mat());
}

}  // namespace nonent
