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

// The invariant corpus behind `nonent verify`.

#ifndef NONENT_VERIFY_HPP
#define NONENT_VERIFY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "nonent/io.hpp"
#include "nonent/linalg.hpp"

namespace nonent {

struct VerifyConfig {
  Tolerance tol;
  Seed seed = 0xB05C;
  std::size_t samples = 200;  // random inputs per brute-force oracle call
  std::size_t n_steps = 64;   // grid intervals for path suites
  std::size_t states = 32;    // random states per no-info/no-disturbance check
};

/// Smallest eps the suites accept; anything below cannot be resolved in
/// double precision at the dimensions used here.
inline constexpr double kMinimumResolvableEps = 1e-14;

struct SuiteResult {
  std::string name;
  std::string claim;
  bool passed = false;
  std::size_t instances = 0;
  Json worst = Json::object();  // worst observed deviations, by key
  std::vector<std::string> diagnostics;
};

struct VerifyReport {
  VerifyConfig config;
  std::vector<SuiteResult> suites;

  bool passed() const;
  Json to_json() const;
};

VerifyReport run_verification(const VerifyConfig& cfg);

// Individual suites, exposed for the tests.
SuiteResult verify_prob_reproducibility(const VerifyConfig& cfg);
SuiteResult verify_classification_oracle(const VerifyConfig& cfg);
SuiteResult verify_equal_dimension(const VerifyConfig& cfg);
SuiteResult verify_slice_consistency(const VerifyConfig& cfg);
SuiteResult verify_trivial_observable(const VerifyConfig& cfg);
SuiteResult verify_no_info_no_disturbance(const VerifyConfig& cfg);
SuiteResult verify_swap_obstruction(const VerifyConfig& cfg);
SuiteResult verify_local_generator_null(const VerifyConfig& cfg);

/// Entropy of sqrt(SWAP) (e0+e1)/sqrt2 (x) e0 at dimension d, with
/// sqrt(SWAP) = P_sym + i P_anti built directly from the symmetric and
/// antisymmetric projectors.
double sqrt_swap_midpoint_oracle(Eigen::Index d);

}  // namespace nonent

#endif  // NONENT_VERIFY_HPP
