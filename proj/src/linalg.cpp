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

#include "nonent/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "nonent/errors.hpp"

namespace nonent {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw DimensionError(std::string(what) + ": expected a square matrix, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

Eigen::Index checked_mul(Eigen::Index a, Eigen::Index b) {
  if (a != 0 && b > std::numeric_limits<Eigen::Index>::max() / a) {
    throw DimensionError("tensor_product: result dimension overflows");
  }
  return a * b;
}

bool lex_less(const ComplexVector& a, const ComplexVector& b) {
  for (Eigen::Index k = 0; k < a.size(); ++k) {
    if (a(k).real() != b(k).real()) return a(k).real() < b(k).real();
    if (a(k).imag() != b(k).imag()) return a(k).imag() < b(k).imag();
  }
  return false;
}

}  // namespace

Seed derive_seed(Seed seed, std::string_view label) {
  // FNV-1a over the label, folded into the seed.
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return splitmix64(seed ^ splitmix64(h));
}

std::mt19937_64 make_engine(Seed seed) { return std::mt19937_64(splitmix64(seed)); }

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Eigen::Index rows = checked_mul(a.rows(), b.rows());
  const Eigen::Index cols = checked_mul(a.cols(), b.cols());
  ComplexMatrix out(rows, cols);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexVector tensor_product(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(checked_mul(a.size(), b.size()));
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& a) { return a.adjoint(); }

double unitarity_defect(const ComplexMatrix& u) {
  require_square(u, "unitarity_defect");
  const auto id = ComplexMatrix::Identity(u.rows(), u.cols());
  return std::max((u.adjoint() * u - id).norm(), (u * u.adjoint() - id).norm());
}

bool is_unitary(const ComplexMatrix& u, Tolerance tol) {
  return unitarity_defect(u) <= tol.eps;
}

double hermiticity_defect(const ComplexMatrix& h) {
  require_square(h, "hermiticity_defect");
  return (h - h.adjoint()).norm();
}

ComplexMatrix identity(Eigen::Index d) { return ComplexMatrix::Identity(d, d); }

ComplexVector basis_vector(Eigen::Index d, Eigen::Index i) {
  if (i < 0 || i >= d) {
    throw DimensionError("basis_vector: index " + std::to_string(i) +
                         " out of range for dimension " + std::to_string(d));
  }
  ComplexVector v = ComplexVector::Zero(d);
  v(i) = 1.0;
  return v;
}

Complex canonicalize_phase(Eigen::Ref<ComplexVector> v, double eps) {
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    const double mod = std::abs(v(k));
    if (mod > eps) {
      const Complex factor = std::conj(v(k)) / mod;
      v *= factor;
      v(k) = mod;  // exactly real
      return factor;
    }
  }
  return 1.0;
}

double phase_aligned_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("phase_aligned_distance: shape mismatch");
  }
  const Complex overlap = (b.adjoint() * a).trace();
  const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0);
  return (a - phase * b).norm();
}

bool equal_up_to_phase(const ComplexMatrix& a, const ComplexMatrix& b, Tolerance tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  const double overlap = std::abs((a.adjoint() * b).trace());
  return std::abs(overlap - a.norm() * b.norm()) <= tol.eps;
}

HermitianEig hermitian_eig(const ComplexMatrix& h, Tolerance tol) {
  const double defect = hermiticity_defect(h);
  if (defect > tol.eps) {
    throw NotHermitianError("hermitian_eig: ||H - H^dag||_F = " + std::to_string(defect) +
                            " exceeds tolerance");
  }
  const ComplexMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eig: eigensolver did not converge");
  }
  const Eigen::Index n = sym.rows();

  std::vector<ComplexVector> vecs(static_cast<std::size_t>(n));
  std::vector<double> vals(static_cast<std::size_t>(n));
  // Solver order is ascending; walk it backwards for descending output.
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = n - 1 - k;
    vals[k] = solver.eigenvalues()(src);
    vecs[k] = solver.eigenvectors().col(src);
    canonicalize_phase(vecs[k], tol.eps);
  }

  std::vector<std::size_t> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::size_t start = 0;
  while (start < order.size()) {
    std::size_t end = start + 1;
    while (end < order.size() && vals[end - 1] - vals[end] <= tol.eps) ++end;
    std::stable_sort(order.begin() + static_cast<std::ptrdiff_t>(start),
                     order.begin() + static_cast<std::ptrdiff_t>(end),
                     [&](std::size_t a, std::size_t b) { return lex_less(vecs[a], vecs[b]); });
    start = end;
  }

  HermitianEig out{RealVector(n), ComplexMatrix(n, n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = vals[order[k]];
    out.vectors.col(k) = vecs[order[k]];
  }
  return out;
}

ComplexMatrix exp_i_hermitian(const HermitianEig& eig, double t) {
  ComplexVector phases(eig.values.size());
  for (Eigen::Index k = 0; k < phases.size(); ++k) {
    phases(k) = std::polar(1.0, t * eig.values(k));
  }
  return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

ComplexMatrix exp_i_hermitian(const ComplexMatrix& h, double t) {
  // Generators are Hermitian by construction; allow accumulated rounding.
  const double slack = 1e-8 * std::max(1.0, h.norm());
  return exp_i_hermitian(hermitian_eig(h, Tolerance{slack}), t);
}

namespace {

struct UnitarySpectrum {
  ComplexMatrix basis;  // unitary Schur vectors
  RealVector phases;
};

UnitarySpectrum unitary_spectrum(const ComplexMatrix& u, Tolerance tol) {
  const double defect = unitarity_defect(u);
  if (defect > tol.eps) {
    throw NotUnitaryError("unitary_log: input is not unitary (defect " +
                              std::to_string(defect) + ")",
                          defect);
  }
  // A unitary is normal, so its complex Schur form is diagonal up to rounding
  // and the Schur vectors form an orthonormal eigenbasis, including inside
  // degenerate eigenspaces.
  Eigen::ComplexSchur<ComplexMatrix> schur(u);
  if (schur.info() != Eigen::Success) {
    throw std::runtime_error("unitary_log: Schur decomposition did not converge");
  }
  const ComplexMatrix& t = schur.matrixT();
  UnitarySpectrum out{schur.matrixU(), RealVector(u.rows())};
  for (Eigen::Index k = 0; k < u.rows(); ++k) {
    const Complex lambda = t(k, k) / std::abs(t(k, k));
    double phase = std::arg(lambda);
    if (std::abs(lambda + 1.0) <= tol.eps) phase = std::numbers::pi;
    out.phases(k) = phase;
  }
  return out;
}

}  // namespace

ComplexMatrix unitary_log(const ComplexMatrix& u, Tolerance tol) {
  const UnitarySpectrum spec = unitary_spectrum(u, tol);
  ComplexMatrix h = spec.basis * spec.phases.cast<Complex>().asDiagonal() * spec.basis.adjoint();
  return 0.5 * (h + h.adjoint());
}

RealVector unitary_eigenphases(const ComplexMatrix& u, Tolerance tol) {
  RealVector phases = unitary_spectrum(u, tol).phases;
  std::sort(phases.begin(), phases.end());
  return phases;
}

ComplexMatrix complex_gaussian(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, std::numbers::sqrt2 / 2.0);
  ComplexMatrix z(rows, cols);
  // Row-major fill order, real part before imaginary part.
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      z(i, j) = Complex(re, im);
    }
  }
  return z;
}

ComplexMatrix haar_unitary(Eigen::Index d, std::mt19937_64& rng) {
  if (d < 1) throw DimensionError("haar_unitary: dimension must be positive");
  const ComplexMatrix z = complex_gaussian(d, d, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(d, d);
  const ComplexMatrix& r = qr.matrixQR();
  for (Eigen::Index k = 0; k < d; ++k) {
    const double mod = std::abs(r(k, k));
    const Complex phase = mod > 0.0 ? r(k, k) / mod : Complex(1.0);
    q.col(k) *= phase;
  }
  return q;
}

ComplexMatrix haar_unitary(Eigen::Index d, Seed seed) {
  auto rng = make_engine(seed);
  return haar_unitary(d, rng);
}

ComplexVector random_state(Eigen::Index d, std::mt19937_64& rng) {
  if (d < 1) throw DimensionError("random_state: dimension must be positive");
  ComplexVector v = complex_gaussian(d, 1, rng);
  return v / v.norm();
}

ComplexVector random_state(Eigen::Index d, Seed seed) {
  auto rng = make_engine(seed);
  return random_state(d, rng);
}

ComplexMatrix random_hermitian(Eigen::Index d, std::mt19937_64& rng) {
  const ComplexMatrix a = complex_gaussian(d, d, rng);
  return a + a.adjoint();
}

ComplexMatrix swap_operator(Eigen::Index d1, Eigen::Index d2) {
  const Eigen::Index n = checked_mul(d1, d2);
  ComplexMatrix s = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < d1; ++i) {
    for (Eigen::Index j = 0; j < d2; ++j) {
      s(j * d1 + i, i * d2 + j) = 1.0;
    }
  }
  return s;
}

namespace gates {

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

ComplexMatrix hadamard() {
  ComplexMatrix m(2, 2);
  m << 1.0, 1.0, 1.0, -1.0;
  return m / std::numbers::sqrt2;
}

ComplexMatrix cnot() {
  ComplexMatrix p0 = ComplexMatrix::Zero(2, 2);
  ComplexMatrix p1 = ComplexMatrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  return tensor_product(p0, identity(2)) + tensor_product(p1, pauli_x());
}

ComplexMatrix cnot_reversed() {
  ComplexMatrix p0 = ComplexMatrix::Zero(2, 2);
  ComplexMatrix p1 = ComplexMatrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  return tensor_product(identity(2), p0) + tensor_product(pauli_x(), p1);
}

ComplexMatrix controlled_phase(double theta) { return controlled_phase(2, 2, theta); }

ComplexMatrix controlled_phase(Eigen::Index d1, Eigen::Index d2, double theta) {
  ComplexMatrix m = ComplexMatrix::Zero(d1 * d2, d1 * d2);
  for (Eigen::Index i = 0; i < d1; ++i) {
    for (Eigen::Index j = 0; j < d2; ++j) {
      m(i * d2 + j, i * d2 + j) = std::polar(1.0, theta * static_cast<double>(i * j));
    }
  }
  return m;
}

}  // namespace gates

}  // namespace nonent
