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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "nonent/errors.hpp"

namespace nonent {

UnitaryPath UnitaryPath::geodesic(const ComplexMatrix& endpoint, Eigen::Index d1,
                                  Eigen::Index d2, Tolerance tol) {
  const BipartiteSpace space(d1, d2);
  if (endpoint.rows() != space.dim() || endpoint.cols() != space.dim()) {
    throw DimensionError("geodesic_path: endpoint must be (d1*d2)x(d1*d2)");
  }
  ComplexMatrix h = unitary_log(endpoint, tol);
  HermitianEig eig = hermitian_eig(h, Tolerance{1e-8});
  return UnitaryPath(std::move(h), endpoint, space, std::move(eig));
}

UnitaryPath UnitaryPath::from_generator(const ComplexMatrix& generator, Eigen::Index d1,
                                        Eigen::Index d2, Tolerance tol) {
  const BipartiteSpace space(d1, d2);
  if (generator.rows() != space.dim() || generator.cols() != space.dim()) {
    throw DimensionError("from_generator: generator must be (d1*d2)x(d1*d2)");
  }
  HermitianEig eig = hermitian_eig(generator, Tolerance{std::max(tol.eps, 1e-8)});
  ComplexMatrix endpoint = exp_i_hermitian(eig, 1.0);
  return UnitaryPath(generator, std::move(endpoint), space, std::move(eig));
}

ComplexMatrix UnitaryPath::at(double t) const {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw std::out_of_range("path_point: t = " + std::to_string(t) + " outside [0, 1]");
  }
  if (t == 0.0) return identity(space_.dim());
  return exp_i_hermitian(eig_, t);
}

EntanglementProfile entanglement_profile(const UnitaryPath& p, const ComplexVector& probe_init,
                                         std::size_t n_steps, Seed seed, std::size_t n_inputs,
                                         Tolerance tol) {
  if (n_steps < 2) throw std::invalid_argument("entanglement_profile: n_steps must be >= 2");
  const BipartiteSpace& space = p.space();
  if (probe_init.size() != space.d2) {
    throw DimensionError("entanglement_profile: probe_init has length " +
                         std::to_string(probe_init.size()) + ", expected " +
                         std::to_string(space.d2));
  }
  if (std::abs(probe_init.norm() - 1.0) > tol.eps) {
    throw NotNormalizedError("entanglement_profile: probe_init is not a unit vector",
                             probe_init.norm());
  }

  EntanglementProfile prof{space, {}, {}};
  const Eigen::Index d1 = space.d1;
  for (Eigen::Index i = 0; i < d1; ++i) {
    prof.inputs.push_back({"e" + std::to_string(i), basis_vector(d1, i), probe_init});
  }
  for (Eigen::Index i = 0; i < d1; ++i) {
    for (Eigen::Index j = i + 1; j < d1; ++j) {
      prof.inputs.push_back({"(e" + std::to_string(i) + "+e" + std::to_string(j) + ")/sqrt2",
                             (basis_vector(d1, i) + basis_vector(d1, j)) / std::numbers::sqrt2,
                             probe_init});
    }
  }
  auto rng = make_engine(derive_seed(seed, "dynamics.inputs"));
  for (std::size_t n = 0; n < n_inputs; ++n) {
    ComplexVector obj = random_state(d1, rng);
    ComplexVector prb = random_state(space.d2, rng);
    prof.inputs.push_back({"random#" + std::to_string(n), std::move(obj), std::move(prb)});
  }

  std::vector<ComplexVector> joint;
  joint.reserve(prof.inputs.size());
  for (const auto& in : prof.inputs) joint.push_back(tensor_product(in.object, in.probe));

  const Seed classify_seed = derive_seed(seed, "dynamics.classify");
  for (std::size_t k = 0; k <= n_steps; ++k) {
    ProfilePoint pt;
    pt.t = static_cast<double>(k) / static_cast<double>(n_steps);
    const ComplexMatrix u = p.at(pt.t);
    for (std::size_t m = 0; m < joint.size(); ++m) {
      const double h = entanglement_entropy(PureState(space, u * joint[m], Tolerance{1e-8}));
      if (m == 0 || h > pt.max_entropy_bits) {
        pt.max_entropy_bits = h;
        pt.maximizing_input = m;
      }
    }
    pt.op_schmidt_rank = operator_schmidt_rank(u, space.d1, space.d2, tol);
    pt.verdict = verdict_of(classify_unitary(u, space.d1, space.d2, tol, classify_seed));
    prof.points.push_back(pt);
  }
  return prof;
}

PathMaximum max_path_entanglement(const EntanglementProfile& profile) {
  PathMaximum best;
  bool first = true;
  for (const ProfilePoint& pt : profile.points) {
    if (first || pt.max_entropy_bits > best.entropy_bits) {
      const ProductInput& in = profile.inputs.at(pt.maximizing_input);
      best = PathMaximum{pt.t, in.id, tensor_product(in.object, in.probe), pt.max_entropy_bits};
      first = false;
    }
  }
  return best;
}

PathMaximum max_path_entanglement(const UnitaryPath& p, const ComplexVector& probe_init,
                                  std::size_t n_steps, Seed seed, std::size_t n_inputs,
                                  Tolerance tol) {
  return max_path_entanglement(entanglement_profile(p, probe_init, n_steps, seed, n_inputs, tol));
}

bool swap_obstruction_witnessed(const EntanglementProfile& profile) {
  return std::any_of(profile.points.begin(), profile.points.end(), [](const ProfilePoint& pt) {
    return pt.t > 0.0 && pt.t < 1.0 && pt.verdict == Verdict::kEntangling;
  });
}

}  // namespace nonent
