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

#include "nonent/verify.hpp"

#include <gtest/gtest.h>

namespace nonent {
namespace {

TEST(VerifyTest, DefaultConfigPasses) {
  const VerifyReport r = run_verification(VerifyConfig{});
  ASSERT_EQ(r.suites.size(), 8u);
  for (const SuiteResult& s : r.suites) {
    EXPECT_TRUE(s.passed) << s.name << ": "
                          << (s.diagnostics.empty() ? "" : s.diagnostics.front());
    EXPECT_GT(s.instances, 0u) << s.name;
  }
  EXPECT_TRUE(r.passed());
}

TEST(VerifyTest, ReportIsDeterministic) {
  VerifyConfig cfg;
  cfg.seed = 123;
  EXPECT_EQ(run_verification(cfg).to_json().dump(), run_verification(cfg).to_json().dump());
}

TEST(VerifyTest, ReportShape) {
  const Json j = run_verification(VerifyConfig{}).to_json();
  EXPECT_EQ(j["claim"], "verify");
  EXPECT_EQ(j["seed"], 0xB05C);
  EXPECT_TRUE(j["passed"].get<bool>());
  for (const Json& s : j["suites"]) {
    EXPECT_TRUE(s.contains("worst"));
    EXPECT_TRUE(s["claim"].is_string());
  }
}

TEST(VerifyTest, ImpossibleToleranceFailsEverySuite) {
  VerifyConfig cfg;
  cfg.tol = Tolerance{1e-30};
  const VerifyReport r = run_verification(cfg);
  EXPECT_FALSE(r.passed());
  for (const SuiteResult& s : r.suites) {
    EXPECT_FALSE(s.passed) << s.name;
    ASSERT_FALSE(s.diagnostics.empty());
    EXPECT_NE(s.diagnostics.front().find("tolerance-misconfiguration"), std::string::npos);
  }
}

TEST(VerifyTest, CorpusSizes) {
  const VerifyConfig cfg;
  EXPECT_GE(verify_classification_oracle(cfg).instances, 1000u);
  EXPECT_GE(verify_equal_dimension(cfg).instances, 200u);
  EXPECT_GE(verify_slice_consistency(cfg).instances, 200u);
  EXPECT_GE(verify_trivial_observable(cfg).instances, 200u);
  EXPECT_GE(verify_local_generator_null(cfg).instances, 50u);
}

TEST(VerifyTest, MidpointOracle) {
  EXPECT_NEAR(sqrt_swap_midpoint_oracle(2), 0.35457890266527, 1e-12);
  EXPECT_NEAR(sqrt_swap_midpoint_oracle(3), 0.35457890266527, 1e-12);
}

}  // namespace
}  // namespace nonent
