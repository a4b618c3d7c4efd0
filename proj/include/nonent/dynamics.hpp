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

// One-parameter unitary paths U_t = exp(i t H), t in [0, 1], and the
// entanglement they generate from product inputs along the way.

#ifndef NONENT_DYNAMICS_HPP
#define NONENT_DYNAMICS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "nonent/bipartite.hpp"
#include "nonent/classifier.hpp"
#include "nonent/linalg.hpp"

namespace nonent {

class UnitaryPath {
 public:
  /// Path through the principal logarithm of `endpoint`.
  /// Throws NotUnitaryError / DimensionError.
  static UnitaryPath geodesic(const ComplexMatrix& endpoint, Eigen::Index d1, Eigen::Index d2,
                              Tolerance tol = {});

  /// Path generated by a given Hermitian matrix; endpoint = exp(i H).
  static UnitaryPath from_generator(const ComplexMatrix& generator, Eigen::Index d1,
                                    Eigen::Index d2, Tolerance tol = {});

  const ComplexMatrix& generator() const { return generator_; }
  const ComplexMatrix& endpoint() const { return endpoint_; }
  const BipartiteSpace& space() const { return space_; }

  /// exp(i t H). Exactly the identity at t = 0.
  /// Throws std::out_of_range unless 0 <= t <= 1.
  ComplexMatrix at(double t) const;

 private:
  UnitaryPath(ComplexMatrix generator, ComplexMatrix endpoint, BipartiteSpace space,
              HermitianEig eig)
      : generator_(std::move(generator)),
        endpoint_(std::move(endpoint)),
        space_(space),
        eig_(std::move(eig)) {}

  ComplexMatrix generator_;
  ComplexMatrix endpoint_;
  BipartiteSpace space_;
  HermitianEig eig_;
};

inline UnitaryPath geodesic_path(const ComplexMatrix& endpoint, Eigen::Index d1,
                                 Eigen::Index d2, Tolerance tol = {}) {
  return UnitaryPath::geodesic(endpoint, d1, d2, tol);
}

inline ComplexMatrix path_point(const UnitaryPath& p, double t) { return p.at(t); }

/// Product input family used by the profiler.
struct ProductInput {
  std::string id;
  ComplexVector object;
  ComplexVector probe;
};

struct ProfilePoint {
  double t = 0.0;
  double max_entropy_bits = 0.0;
  std::size_t maximizing_input = 0;  // index into EntanglementProfile::inputs
  Eigen::Index op_schmidt_rank = 1;
  Verdict verdict = Verdict::kProduct;
};

struct EntanglementProfile {
  BipartiteSpace space;
  std::vector<ProductInput> inputs;
  std::vector<ProfilePoint> points;
};

/// Grid t_k = k / n_steps for k = 0..n_steps (n_steps intervals). Inputs:
/// e_i (x) probe_init, then (e_i+e_j)/sqrt2 (x) probe_init, then n_inputs
/// seeded random products. Throws std::invalid_argument if n_steps < 2.
EntanglementProfile entanglement_profile(const UnitaryPath& p, const ComplexVector& probe_init,
                                         std::size_t n_steps = 64, Seed seed = 0xB05C,
                                         std::size_t n_inputs = 16, Tolerance tol = {});

struct PathMaximum {
  double t = 0.0;
  std::string input_id;
  ComplexVector input;  // joint product vector
  double entropy_bits = 0.0;
};

/// First grid point attaining the largest profile entropy.
PathMaximum max_path_entanglement(const EntanglementProfile& profile);
PathMaximum max_path_entanglement(const UnitaryPath& p, const ComplexVector& probe_init,
                                  std::size_t n_steps = 64, Seed seed = 0xB05C,
                                  std::size_t n_inputs = 16, Tolerance tol = {});

/// True when some interior grid point (0 < t < 1) classifies as entangling.
bool swap_obstruction_witnessed(const EntanglementProfile& profile);

}  // namespace nonent

#endif  // NONENT_DYNAMICS_HPP
