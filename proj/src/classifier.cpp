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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/SVD>

#include "nonent/errors.hpp"

namespace nonent {

namespace {

constexpr double kReconstructionSlack = 10.0;

void require_bipartite_square(const ComplexMatrix& u, Eigen::Index d1, Eigen::Index d2,
                              const char* what) {
  const BipartiteSpace space(d1, d2);
  if (u.rows() != space.dim() || u.cols() != space.dim()) {
    throw DimensionError(std::string(what) + ": matrix is " + std::to_string(u.rows()) + "x" +
                         std::to_string(u.cols()) + ", expected " +
                         std::to_string(space.dim()) + "x" + std::to_string(space.dim()));
  }
}

void require_unitary(const ComplexMatrix& u, Tolerance tol, const char* what) {
  const double defect = unitarity_defect(u);
  if (defect > tol.eps) {
    throw NotUnitaryError(std::string(what) + ": input is not unitary (defect " +
                              std::to_string(defect) + ")",
                          defect);
  }
}

ComplexMatrix unvec_row_major(const ComplexVector& v, Eigen::Index rows, Eigen::Index cols) {
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = v(i * cols + j);
  return m;
}

ComplexVector normalized_pair(Eigen::Index d, Eigen::Index i, Eigen::Index j) {
  ComplexVector v = basis_vector(d, i);
  if (i != j) {
    v(j) = 1.0;
    v /= std::numbers::sqrt2;
  }
  return v;
}

std::string pair_label(char base, Eigen::Index i, Eigen::Index j) {
  if (i == j) return std::string(1, base) + std::to_string(i);
  return "(" + std::string(1, base) + std::to_string(i) + "+" + std::string(1, base) +
         std::to_string(j) + ")/sqrt2";
}

// Images of unit vectors are unit only up to the unitarity defect of u.
Tolerance state_tol(Tolerance tol) { return Tolerance{std::max(1e-8, 2.0 * tol.eps)}; }

double second_coefficient(const RealVector& s) { return s.size() > 1 ? s(1) : 0.0; }

// Component of `v` orthogonal to the unit vector `ref`.
double off_axis(const ComplexVector& v, const ComplexVector& ref) {
  return (v - ref.dot(v) * ref).norm();
}

Complex unit_phase(Complex z) {
  const double mod = std::abs(z);
  return mod > 0.0 ? z / mod : Complex(1.0);
}

}  // namespace

Verdict verdict_of(const NonEntanglingForm& form) {
  switch (form.index()) {
    case 0:
      return Verdict::kProduct;
    case 1:
      return Verdict::kSwap;
    default:
      return Verdict::kEntangling;
  }
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kProduct:
      return "product";
    case Verdict::kSwap:
      return "swap";
    case Verdict::kEntangling:
      return "entangling";
  }
  return "unknown";
}

std::optional<ComplexMatrix> reassemble(const NonEntanglingForm& form) {
  if (const auto* p = std::get_if<ProductForm>(&form)) return tensor_product(p->v, p->w);
  if (const auto* s = std::get_if<SwapForm>(&form)) {
    return tensor_product(s->v21, s->w12) * swap_operator(s->w12.cols(), s->v21.cols());
  }
  return std::nullopt;
}

ComplexMatrix realign(const ComplexMatrix& u, Eigen::Index d1, Eigen::Index d2) {
  require_bipartite_square(u, d1, d2, "realign");
  ComplexMatrix r(d1 * d1, d2 * d2);
  for (Eigen::Index i = 0; i < d1; ++i)
    for (Eigen::Index k = 0; k < d1; ++k)
      for (Eigen::Index j = 0; j < d2; ++j)
        for (Eigen::Index l = 0; l < d2; ++l) r(i * d1 + k, j * d2 + l) = u(i * d2 + j, k * d2 + l);
  return r;
}

RealVector operator_schmidt_coefficients(const ComplexMatrix& u, Eigen::Index d1,
                                         Eigen::Index d2) {
  Eigen::JacobiSVD<ComplexMatrix> svd(realign(u, d1, d2));
  return svd.singularValues();
}

Eigen::Index operator_schmidt_rank(const ComplexMatrix& u, Eigen::Index d1, Eigen::Index d2,
                                   Tolerance tol) {
  const RealVector s = operator_schmidt_coefficients(u, d1, d2);
  if (s.size() == 0 || s(0) == 0.0) return 0;
  return (s.array() > tol.eps * s(0)).count();
}

ProductForm decompose_product(const ComplexMatrix& u, Eigen::Index d1, Eigen::Index d2,
                              Tolerance tol) {
  const ComplexMatrix r = realign(u, d1, d2);
  Eigen::JacobiSVD<ComplexMatrix> svd(r, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double sigma = svd.singularValues()(0);
  const double scale = std::sqrt(static_cast<double>(d1));

  // r ~ sigma a b^dag = vec(V) vec(W)^T.
  ProductForm out{unvec_row_major(scale * svd.matrixU().col(0), d1, d1),
                  unvec_row_major((sigma / scale) * svd.matrixV().col(0).conjugate(), d2, d2)};

  for (Eigen::Index j = 0; j < d1; ++j) {
    bool done = false;
    for (Eigen::Index i = 0; i < d1; ++i) {
      const double mod = std::abs(out.v(i, j));
      if (mod > tol.eps) {
        const Complex phase = std::conj(out.v(i, j)) / mod;
        out.v *= phase;
        out.w /= phase;
        out.v(i, j) = mod;
        done = true;
        break;
      }
    }
    if (done) break;
  }

  const double err = (u - tensor_product(out.v, out.w)).norm();
  const double limit = kReconstructionSlack * tol.eps;
  if (err > limit) {
    throw FormMismatchError("decompose_product: input is not a product unitary "
                            "(best rank-one reconstruction error " +
                            std::to_string(err) + ")");
  }
  if (unitarity_defect(out.v) > limit || unitarity_defect(out.w) > limit) {
    throw FormMismatchError("decompose_product: factors are not unitary");
  }
  return out;
}

SwapForm decompose_swap(const ComplexMatrix& u, Eigen::Index d, Tolerance tol) {
  require_bipartite_square(u, d, d, "decompose_swap");
  // SWAP is an involution: u = (V21 (x) W12) SWAP  <=>  u SWAP = V21 (x) W12.
  try {
    ProductForm p = decompose_product(u * swap_operator(d, d), d, d, tol);
    return SwapForm{std::move(p.v), std::move(p.w)};
  } catch (const FormMismatchError& e) {
    throw FormMismatchError(std::string("decompose_swap: input is not of swap form: ") +
                            e.what());
  }
}

namespace {

struct Candidate {
  ComplexVector left;
  ComplexVector right;
  std::string id;
};

std::vector<Candidate> deterministic_candidates(Eigen::Index d1, Eigen::Index d2) {
  std::vector<Candidate> out;
  for (Eigen::Index i = 0; i < d1; ++i)
    for (Eigen::Index j = i + 1; j < d1; ++j)
      for (Eigen::Index k = 0; k < d2; ++k)
        out.push_back({normalized_pair(d1, i, j), basis_vector(d2, k),
                       pair_label('e', i, j) + " x " + pair_label('f', k, k)});
  for (Eigen::Index i = 0; i < d1; ++i)
    for (Eigen::Index k = 0; k < d2; ++k)
      for (Eigen::Index l = k + 1; l < d2; ++l)
        out.push_back({basis_vector(d1, i), normalized_pair(d2, k, l),
                       pair_label('e', i, i) + " x " + pair_label('f', k, l)});
  for (Eigen::Index i = 0; i < d1; ++i)
    for (Eigen::Index j = i + 1; j < d1; ++j)
      for (Eigen::Index k = 0; k < d2; ++k)
        for (Eigen::Index l = k + 1; l < d2; ++l)
          out.push_back({normalized_pair(d1, i, j), normalized_pair(d2, k, l),
                         pair_label('e', i, j) + " x " + pair_label('f', k, l)});
  return out;
}

std::optional<EntanglingWitness> try_witness(const ComplexMatrix& u, const Candidate& c,
                                             const BipartiteSpace& space, double margin,
                                             Tolerance tol) {
  ComplexVector image = u * tensor_product(c.left, c.right);
  const RealVector s = schmidt_coefficients(PureState(space, image, state_tol(tol)));
  const double second = second_coefficient(s);
  if (second > margin) {
    return EntanglingWitness{c.left, c.right, std::move(image), second, c.id};
  }
  return std::nullopt;
}

}  // namespace

NonEntanglingForm classify_unitary(const ComplexMatrix& u, Eigen::Index d1, Eigen::Index d2,
                                   Tolerance tol, Seed seed) {
  require_bipartite_square(u, d1, d2, "classify_unitary");
  require_unitary(u, tol, "classify_unitary");

  if (operator_schmidt_rank(u, d1, d2, tol) == 1) {
    return decompose_product(u, d1, d2, tol);
  }
  if (d1 == d2 && operator_schmidt_rank(u * swap_operator(d1, d2), d1, d2, tol) == 1) {
    return decompose_swap(u, d1, tol);
  }

  const BipartiteSpace space(d1, d2);
  const double margin = kReconstructionSlack * tol.eps;
  for (const Candidate& c : deterministic_candidates(d1, d2)) {
    if (auto w = try_witness(u, c, space, margin, tol)) return *w;
  }
  auto rng = make_engine(derive_seed(seed, "classifier.witness"));
  for (std::size_t n = 0; n < kWitnessRandomCandidates; ++n) {
    Candidate c;
    c.left = random_state(d1, rng);
    c.right = random_state(d2, rng);
    c.id = "random#" + std::to_string(n);
    if (auto w = try_witness(u, c, space, margin, tol)) return *w;
  }
  throw WitnessSearchError(
      "classify_unitary: operator Schmidt rank exceeds 1 but no product input in the "
      "candidate list has an image with second Schmidt coefficient above 10*eps; "
      "check the tolerance");
}

const ComplexMatrix& slice_isometry(const SliceForm& form) {
  if (const auto* l = std::get_if<LocalOnObject>(&form)) return l->v;
  return std::get<TransferToProbe>(form).w12;
}

SliceForm classify_slice(const ComplexMatrix& u, Eigen::Index d1, Eigen::Index d2,
                         const ComplexVector& phi0, Tolerance tol) {
  require_bipartite_square(u, d1, d2, "classify_slice");
  require_unitary(u, tol, "classify_slice");
  if (phi0.size() != d2) {
    throw DimensionError("classify_slice: phi0 has length " + std::to_string(phi0.size()) +
                         ", expected " + std::to_string(d2));
  }
  if (std::abs(phi0.norm() - 1.0) > tol.eps) {
    throw NotNormalizedError("classify_slice: phi0 is not a unit vector", phi0.norm());
  }

  const BipartiteSpace space(d1, d2);
  const double limit = kReconstructionSlack * tol.eps;
  // Columns of the slice map phi -> U (phi (x) phi0).
  const ComplexMatrix slice = u * tensor_product(identity(d1), ComplexMatrix(phi0));

  std::vector<ProductFactors> factors;
  factors.reserve(static_cast<std::size_t>(d1));
  for (Eigen::Index i = 0; i < d1; ++i) {
    auto f = is_product(PureState(space, slice.col(i), state_tol(tol)), tol);
    if (!f) {
      throw SliceHypothesisError("classify_slice: image of e_" + std::to_string(i) +
                                     " (x) phi0 is entangled",
                                 static_cast<std::size_t>(i));
    }
    factors.push_back(std::move(*f));
  }
  for (Eigen::Index i = 0; i < d1; ++i) {
    for (Eigen::Index j = i + 1; j < d1; ++j) {
      const ComplexVector image = slice * normalized_pair(d1, i, j);
      if (schmidt_rank(PureState(space, image, state_tol(tol)), tol) != 1) {
        throw SliceHypothesisError("classify_slice: image of (e_" + std::to_string(i) + "+e_" +
                                       std::to_string(j) + ")/sqrt2 (x) phi0 is entangled",
                                   static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      }
    }
  }

  // The first pair fixes the pattern: images are orthogonal, so either the
  // object factors or the probe factors of e_0 and e_1 are orthogonal.
  bool local = true;
  if (d1 > 1) {
    const double left_overlap = std::abs(factors[0].left.dot(factors[1].left));
    const double right_overlap = std::abs(factors[0].right.dot(factors[1].right));
    local = left_overlap <= right_overlap;
  }

  SliceForm form;
  ComplexMatrix predicted;
  double parallel_defect = 0.0;
  if (local) {
    const ComplexVector& ref = factors[0].right;
    LocalOnObject l{ComplexMatrix(d1, d1), ref};
    for (Eigen::Index i = 0; i < d1; ++i) {
      const auto& f = factors[static_cast<std::size_t>(i)];
      parallel_defect = std::max(parallel_defect, off_axis(f.right, ref));
      l.v.col(i) = unit_phase(ref.dot(f.right)) * f.left;
    }
    predicted = tensor_product(l.v, ComplexMatrix(l.phi_prime));
    form = std::move(l);
  } else {
    const ComplexVector& ref = factors[0].left;
    TransferToProbe t{ref, ComplexMatrix(d2, d1)};
    for (Eigen::Index i = 0; i < d1; ++i) {
      const auto& f = factors[static_cast<std::size_t>(i)];
      parallel_defect = std::max(parallel_defect, off_axis(f.left, ref));
      t.w12.col(i) = unit_phase(ref.dot(f.left)) * f.right;
    }
    predicted = tensor_product(ComplexMatrix(t.phi_prime), t.w12);
    form = std::move(t);
  }

  if (parallel_defect > limit) {
    throw InconsistentPatternError(
        "classify_slice: factors are neither orthonormal-with-fixed-partner nor "
        "fixed-with-orthonormal-partner (parallel defect " +
        std::to_string(parallel_defect) + ")");
  }
  const ComplexMatrix& iso = slice_isometry(form);
  const double iso_defect = (iso.adjoint() * iso - identity(d1)).norm();
  if (iso_defect > limit) {
    throw InconsistentPatternError("classify_slice: assembled map is not an isometry (defect " +
                                   std::to_string(iso_defect) + ")");
  }
  const double extension_error = (slice - predicted).norm();
  if (extension_error > limit) {
    throw InconsistentPatternError("classify_slice: linear extension disagrees with U (error " +
                                   std::to_string(extension_error) + ")");
  }
  return form;
}

BruteForceResult brute_force_non_entangling(const ComplexMatrix& u, Eigen::Index d1,
                                            Eigen::Index d2, Tolerance tol, Seed seed,
                                            std::size_t n_samples) {
  require_bipartite_square(u, d1, d2, "brute_force_non_entangling");
  const BipartiteSpace space(d1, d2);
  BruteForceResult result;

  auto check = [&](const ComplexVector& left, const ComplexVector& right, std::string id,
                   bool grid) {
    ++result.inputs_checked;
    ComplexVector image = u * tensor_product(left, right);
    const PureState out(space, image, state_tol(tol));
    if (schmidt_rank(out, tol) > 1) {
      result.non_entangling = false;
      result.counterexample = EntanglingWitness{
          left, right, std::move(image), second_coefficient(schmidt_coefficients(out)),
          std::move(id)};
      result.counterexample_from_grid = grid;
      return true;
    }
    return false;
  };

  for (Eigen::Index i = 0; i < d1; ++i)
    for (Eigen::Index j = i; j < d1; ++j)
      for (Eigen::Index k = 0; k < d2; ++k)
        for (Eigen::Index l = k; l < d2; ++l)
          if (check(normalized_pair(d1, i, j), normalized_pair(d2, k, l),
                    pair_label('e', i, j) + " x " + pair_label('f', k, l), true))
            return result;

  auto rng = make_engine(derive_seed(seed, "classifier.brute_force"));
  for (std::size_t n = 0; n < n_samples; ++n) {
    ComplexVector left = random_state(d1, rng);
    ComplexVector right = random_state(d2, rng);
    if (check(left, right, "random#" + std::to_string(n), false)) return result;
  }
  return result;
}

}  // namespace nonent
