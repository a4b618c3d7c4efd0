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

#include "nonent/fixtures.hpp"

#include <cmath>
#include <numbers>

#include "nonent/errors.hpp"
#include "nonent/measurement.hpp"

namespace nonent {

namespace {

Json named(Json j, const std::string& name) {
  j["name"] = name;
  return j;
}

void require_equal_dims(const FixtureOptions& o, const std::string& name) {
  if (o.d1 != o.d2) {
    throw DimensionError(name + " requires equal dimensions, got " + std::to_string(o.d1) +
                         " and " + std::to_string(o.d2));
  }
}

void require_qubits(const FixtureOptions& o, const std::string& name) {
  if (o.d1 != 2 || o.d2 != 2) throw DimensionError(name + " requires --dims 2 2");
}

ComplexMatrix scaled_hermitian(Eigen::Index d, std::mt19937_64& rng, double radius) {
  const ComplexMatrix h = random_hermitian(d, rng);
  const HermitianEig eig = hermitian_eig(h, Tolerance{1e-8});
  const double spectral = std::max(std::abs(eig.values(0)), std::abs(eig.values(d - 1)));
  return spectral > 0.0 ? ComplexMatrix(h * (radius / spectral)) : h;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "identity",        "swap",          "cnot",          "cnot-probe-control",
      "cz",              "controlled-phase", "haar",       "haar-product",
      "dressed-swap",    "local-generator-product",        "computational-povm",
      "trivial-povm",    "trine-povm",    "qutrit-fourier-povm", "random-povm",
      "swap-scheme",     "product-scheme", "identity-scheme", "basis-state",
      "plus-state",      "random-state"};
  return names;
}

ComplexMatrix local_generator(Eigen::Index d1, Eigen::Index d2, Seed seed) {
  auto rng = make_engine(derive_seed(seed, "fixtures.local_generator"));
  // Spectral radius 0.45 pi per factor keeps every eigenvalue of the sum
  // strictly inside (-pi, pi).
  const double radius = 0.45 * std::numbers::pi;
  const ComplexMatrix a = scaled_hermitian(d1, rng, radius);
  const ComplexMatrix b = scaled_hermitian(d2, rng, radius);
  return tensor_product(a, identity(d2)) + tensor_product(identity(d1), b);
}

ComplexMatrix local_generator_product(Eigen::Index d1, Eigen::Index d2, Seed seed) {
  return exp_i_hermitian(local_generator(d1, d2, seed), 1.0);
}

Json make_fixture(const std::string& name, const FixtureOptions& o) {
  const BipartiteSpace space(o.d1, o.d2);
  auto rng = make_engine(derive_seed(o.seed, "fixtures." + name));

  if (name == "identity") return named(matrix_to_json(identity(space.dim())), name);
  if (name == "swap") {
    require_equal_dims(o, name);
    return named(matrix_to_json(swap_operator(o.d1, o.d2)), name);
  }
  if (name == "cnot") {
    require_qubits(o, name);
    return named(matrix_to_json(gates::cnot()), name);
  }
  if (name == "cnot-probe-control") {
    require_qubits(o, name);
    return named(matrix_to_json(gates::cnot_reversed()), name);
  }
  if (name == "cz") {
    return named(matrix_to_json(gates::controlled_phase(o.d1, o.d2, std::numbers::pi)), name);
  }
  if (name == "controlled-phase") {
    return named(matrix_to_json(gates::controlled_phase(o.d1, o.d2, std::numbers::pi / 2.0)),
                 name);
  }
  if (name == "haar") return named(matrix_to_json(haar_unitary(space.dim(), rng)), name);
  if (name == "haar-product") {
    const ComplexMatrix v = haar_unitary(o.d1, rng);
    const ComplexMatrix w = haar_unitary(o.d2, rng);
    return named(matrix_to_json(tensor_product(v, w)), name);
  }
  if (name == "dressed-swap") {
    require_equal_dims(o, name);
    const ComplexMatrix a = haar_unitary(o.d1, rng);
    const ComplexMatrix b = haar_unitary(o.d2, rng);
    return named(matrix_to_json(tensor_product(a, b) * swap_operator(o.d1, o.d2)), name);
  }
  if (name == "local-generator-product") {
    return named(matrix_to_json(local_generator_product(o.d1, o.d2, o.seed)), name);
  }
  if (name == "computational-povm") return povm_to_json(povms::computational(o.d1));
  if (name == "trivial-povm") return povm_to_json(povms::trivial(o.d1, {0.5, 0.5}));
  if (name == "trine-povm") return povm_to_json(povms::trine());
  if (name == "qutrit-fourier-povm") return povm_to_json(povms::qutrit_fourier());
  if (name == "random-povm") return povm_to_json(povms::random(o.d1, 3, rng));
  if (name == "swap-scheme") {
    return scheme_to_json(swap_scheme(povms::computational(o.d1), basis_vector(o.d1, 0)));
  }
  if (name == "product-scheme") {
    const ComplexMatrix v = haar_unitary(o.d1, rng);
    const ComplexMatrix w = haar_unitary(o.d2, rng);
    return scheme_to_json(make_scheme(o.d1, o.d2, basis_vector(o.d2, 0), tensor_product(v, w),
                                      povms::computational(o.d2)));
  }
  if (name == "identity-scheme") {
    return scheme_to_json(make_scheme(o.d1, o.d2, basis_vector(o.d2, 0), identity(space.dim()),
                                      povms::computational(o.d2)));
  }
  if (name == "basis-state") return named(matrix_to_json(basis_vector(o.d1, 0)), name);
  if (name == "plus-state") {
    ComplexVector v = ComplexVector::Ones(o.d1) / std::sqrt(static_cast<double>(o.d1));
    return named(matrix_to_json(v), name);
  }
  if (name == "random-state") return named(matrix_to_json(random_state(o.d1, rng)), name);

  throw UnknownFixtureError("unknown fixture '" + name + "'");
}

}  // namespace nonent
