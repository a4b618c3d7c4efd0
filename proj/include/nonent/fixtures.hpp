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

#ifndef NONENT_FIXTURES_HPP
#define NONENT_FIXTURES_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "nonent/io.hpp"
#include "nonent/linalg.hpp"

namespace nonent {

class UnknownFixtureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct FixtureOptions {
  Eigen::Index d1 = 2;
  Eigen::Index d2 = 2;
  Seed seed = 0xB05C;
};

/// Names accepted by make_fixture, in display order.
const std::vector<std::string>& fixture_names();

/// Deterministic JSON fixture per (name, dims, seed). Unitaries and states
/// use the Matrix format with an extra "name" field; POVMs and schemes use
/// their own formats. Throws UnknownFixtureError or DimensionError.
Json make_fixture(const std::string& name, const FixtureOptions& opts);

/// exp(i A) (x) exp(i B) for seeded Hermitian A, B whose spectra lie in
/// (-pi/2, pi/2), so that the principal logarithm of the product is exactly
/// A (x) I + I (x) B.
ComplexMatrix local_generator_product(Eigen::Index d1, Eigen::Index d2, Seed seed);

/// The local generator A (x) I + I (x) B behind local_generator_product.
ComplexMatrix local_generator(Eigen::Index d1, Eigen::Index d2, Seed seed);

}  // namespace nonent

#endif  // NONENT_FIXTURES_HPP
