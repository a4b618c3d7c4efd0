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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <utility>

#include "nonent/bipartite.hpp"
#include "nonent/classifier.hpp"
#include "nonent/dynamics.hpp"
#include "nonent/fixtures.hpp"
#include "nonent/measurement.hpp"

namespace nonent {

namespace {

constexpr std::size_t kMaxDiagnostics = 12;

struct LabeledUnitary {
  ComplexMatrix u;
  Eigen::Index d1;
  Eigen::Index d2;
  std::string family;
  std::optional<Verdict> expected;
};

const std::vector<std::pair<Eigen::Index, Eigen::Index>>& corpus_dims() {
  static const std::vector<std::pair<Eigen::Index, Eigen::Index>> dims = {
      {2, 2}, {3, 3}, {4, 4}, {2, 3}, {3, 2}, {2, 4}, {4, 2}};
  return dims;
}

std::string dims_label(Eigen::Index d1, Eigen::Index d2) {
  return std::to_string(d1) + "x" + std::to_string(d2);
}

void note(SuiteResult& r, std::string msg) {
  if (r.diagnostics.size() < kMaxDiagnostics) r.diagnostics.push_back(std::move(msg));
}

void track(SuiteResult& r, const std::string& key, double value) {
  auto it = r.worst.find(key);
  if (it == r.worst.end() || value > it->get<double>()) r.worst[key] = value;
}

bool tolerance_usable(const VerifyConfig& cfg, SuiteResult& r) {
  if (cfg.tol.eps >= kMinimumResolvableEps) return true;
  note(r, "tolerance-misconfiguration: eps = " + Json(cfg.tol.eps).dump() +
              " is below the double-precision resolution floor " +
              Json(kMinimumResolvableEps).dump());
  return false;
}

template <typename Body>
SuiteResult run_suite(const VerifyConfig& cfg, std::string name, std::string claim, Body body) {
  SuiteResult r;
  r.name = std::move(name);
  r.claim = std::move(claim);
  const bool usable = tolerance_usable(cfg, r);
  try {
    r.passed = body(r) && usable;
  } catch (const std::exception& e) {
    note(r, std::string("exception: ") + e.what());
    r.passed = false;
  }
  return r;
}

std::vector<LabeledUnitary> unitary_corpus(Seed seed) {
  auto rng = make_engine(derive_seed(seed, "verify.corpus"));
  std::vector<LabeledUnitary> out;
  const double angles[] = {std::numbers::pi / 4.0, std::numbers::pi / 2.0,
                           2.0 * std::numbers::pi / 3.0, std::numbers::pi};
  for (const auto& [d1, d2] : corpus_dims()) {
    const Eigen::Index n = d1 * d2;
    for (int k = 0; k < 60; ++k) {
      out.push_back({tensor_product(haar_unitary(d1, rng), haar_unitary(d2, rng)), d1, d2,
                     "haar-product", Verdict::kProduct});
    }
    for (int k = 0; k < 50; ++k) {
      out.push_back({haar_unitary(n, rng), d1, d2, "haar-generic", Verdict::kEntangling});
    }
    if (d1 == d2) {
      for (int k = 0; k < 40; ++k) {
        out.push_back({tensor_product(haar_unitary(d1, rng), haar_unitary(d2, rng)) *
                           swap_operator(d1, d2),
                       d1, d2, "dressed-swap", Verdict::kSwap});
      }
    }
    for (int k = 0; k < 20; ++k) {
      const double theta = angles[k % 4];
      const ComplexMatrix left = tensor_product(haar_unitary(d1, rng), haar_unitary(d2, rng));
      const ComplexMatrix right = tensor_product(haar_unitary(d1, rng), haar_unitary(d2, rng));
      out.push_back({left * gates::controlled_phase(d1, d2, theta) * right, d1, d2,
                     "dressed-controlled-phase", Verdict::kEntangling});
    }
    out.push_back({identity(n), d1, d2, "identity", Verdict::kProduct});
    if (d1 == d2) {
      out.push_back({swap_operator(d1, d2), d1, d2, "swap", Verdict::kSwap});
    } else {
      out.push_back({swap_operator(d1, d2), d1, d2, "index-flip", std::nullopt});
    }
    for (double theta : angles) {
      out.push_back({gates::controlled_phase(d1, d2, theta), d1, d2, "controlled-phase",
                     Verdict::kEntangling});
    }
  }
  out.push_back({gates::cnot(), 2, 2, "cnot", Verdict::kEntangling});
  out.push_back({gates::cnot_reversed(), 2, 2, "cnot-reversed", Verdict::kEntangling});
  return out;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

double max_effect_distance(const Povm& a, const Povm& b) {
  double m = 0.0;
  for (std::size_t x = 0; x < a.size(); ++x) m = std::max(m, (a.effects[x] - b.effects[x]).norm());
  return m;
}

}  // namespace

double sqrt_swap_midpoint_oracle(Eigen::Index d) {
  const ComplexMatrix s = swap_operator(d, d);
  const ComplexMatrix id = identity(d * d);
  const ComplexMatrix root = 0.5 * (id + s) + Complex(0.0, 1.0) * 0.5 * (id - s);
  const ComplexVector plus = (basis_vector(d, 0) + basis_vector(d, 1)) / std::numbers::sqrt2;
  const ComplexVector image = root * tensor_product(plus, basis_vector(d, 0));
  return entanglement_entropy(PureState(BipartiteSpace(d, d), image));
}

SuiteResult verify_prob_reproducibility(const VerifyConfig& cfg) {
  return run_suite(cfg, "prob-reproducibility", "prob-reproducibility", [&](SuiteResult& r) {
    auto rng = make_engine(derive_seed(cfg.seed, "verify.reproducibility"));
    const Eigen::Index dims[] = {2, 3, 4};
    for (int k = 0; k < 100; ++k) {
      const Eigen::Index d = dims[k % 3];
      const Povm e = povms::random(d, 2 + static_cast<std::size_t>(k % 3), rng);
      const ComplexVector phi0 = random_state(d, rng);
      const ComplexVector phi = random_state(d, rng);
      const MeasurementScheme s = swap_scheme(e, phi0, cfg.tol);
      const OutcomeDistribution p = outcome_probabilities(s, phi, cfg.tol);
      std::vector<double> born;
      for (const ComplexMatrix& eff : e.effects) born.push_back(phi.dot(eff * phi).real());
      track(r, "max_probability_deviation", max_abs_diff(p.probabilities, born));
      ++r.instances;
    }
    const double dev = r.worst["max_probability_deviation"].get<double>();
    if (dev >= 1e-10) note(r, "probability reproducibility deviation exceeds 1e-10");
    return dev < 1e-10;
  });
}

SuiteResult verify_classification_oracle(const VerifyConfig& cfg) {
  return run_suite(cfg, "theorem-classification", "theorem-classification", [&](SuiteResult& r) {
    const Seed classify_seed = derive_seed(cfg.seed, "verify.classify");
    std::size_t disagreements = 0;
    std::size_t construction_mismatches = 0;
    r.worst["max_reconstruction_error"] = 0.0;
    for (const LabeledUnitary& item : unitary_corpus(cfg.seed)) {
      ++r.instances;
      const NonEntanglingForm form =
          classify_unitary(item.u, item.d1, item.d2, cfg.tol, classify_seed);
      const Verdict v = verdict_of(form);
      const BruteForceResult oracle = brute_force_non_entangling(
          item.u, item.d1, item.d2, cfg.tol, classify_seed, cfg.samples);
      if ((v != Verdict::kEntangling) != oracle.non_entangling) {
        ++disagreements;
        note(r, "oracle disagreement: " + item.family + " " + dims_label(item.d1, item.d2) +
                    " classified " + std::string(verdict_name(v)));
      }
      if (item.expected && *item.expected != v) {
        ++construction_mismatches;
        note(r, "construction mismatch: " + item.family + " " + dims_label(item.d1, item.d2) +
                    " classified " + std::string(verdict_name(v)));
      }
      if (auto rebuilt = reassemble(form)) {
        track(r, "max_reconstruction_error", (item.u - *rebuilt).norm());
      }
    }
    r.worst["oracle_disagreements"] = disagreements;
    r.worst["construction_mismatches"] = construction_mismatches;
    const bool recon_ok = r.worst["max_reconstruction_error"].get<double>() <= 1e-8;
    if (!recon_ok) note(r, "reconstruction error exceeds 1e-8");
    return disagreements == 0 && construction_mismatches == 0 && recon_ok && r.instances >= 1000;
  });
}

SuiteResult verify_equal_dimension(const VerifyConfig& cfg) {
  return run_suite(cfg, "equal-dimension", "theorem-classification", [&](SuiteResult& r) {
    const Seed classify_seed = derive_seed(cfg.seed, "verify.classify");
    std::size_t swap_verdicts = 0;
    for (const LabeledUnitary& item : unitary_corpus(cfg.seed)) {
      if (item.d1 == item.d2) continue;
      ++r.instances;
      const Verdict v =
          verdict_of(classify_unitary(item.u, item.d1, item.d2, cfg.tol, classify_seed));
      if (v == Verdict::kSwap) {
        ++swap_verdicts;
        note(r, "swap verdict at unequal dimensions " + dims_label(item.d1, item.d2));
      }
    }
    r.worst["swap_verdicts"] = swap_verdicts;
    return swap_verdicts == 0 && r.instances >= 200;
  });
}

SuiteResult verify_slice_consistency(const VerifyConfig& cfg) {
  return run_suite(cfg, "prop1-slice", "prop1-slice", [&](SuiteResult& r) {
    auto rng = make_engine(derive_seed(cfg.seed, "verify.slice"));
    const Seed classify_seed = derive_seed(cfg.seed, "verify.classify");
    std::size_t form_mismatches = 0;
    r.worst["max_isometry_phase_distance"] = 0.0;
    for (int k = 0; k < 240; ++k) {
      const auto& [d1, d2] = corpus_dims()[static_cast<std::size_t>(k) % corpus_dims().size()];
      const bool swap_case = d1 == d2 && (k / 7) % 2 == 1;
      ComplexMatrix u = tensor_product(haar_unitary(d1, rng), haar_unitary(d2, rng));
      if (swap_case) u = u * swap_operator(d1, d2);
      const ComplexVector phi0 = random_state(d2, rng);
      ++r.instances;

      const NonEntanglingForm form = classify_unitary(u, d1, d2, cfg.tol, classify_seed);
      const SliceForm slice = classify_slice(u, d1, d2, phi0, cfg.tol);
      if (const auto* p = std::get_if<ProductForm>(&form)) {
        const auto* l = std::get_if<LocalOnObject>(&slice);
        if (!l) {
          ++form_mismatches;
          note(r, "product unitary gave transfer_to_probe at " + dims_label(d1, d2));
          continue;
        }
        track(r, "max_isometry_phase_distance", phase_aligned_distance(l->v, p->v));
      } else if (const auto* s = std::get_if<SwapForm>(&form)) {
        const auto* t = std::get_if<TransferToProbe>(&slice);
        if (!t) {
          ++form_mismatches;
          note(r, "swap unitary gave local_on_object at " + dims_label(d1, d2));
          continue;
        }
        track(r, "max_isometry_phase_distance", phase_aligned_distance(t->w12, s->w12));
      } else {
        ++form_mismatches;
        note(r, "non-entangling construction classified entangling");
      }
    }
    r.worst["form_mismatches"] = form_mismatches;
    const double dist = r.worst["max_isometry_phase_distance"].get<double>();
    if (dist > 1e-8) note(r, "slice isometry differs from classifier factor beyond 1e-8");
    return form_mismatches == 0 && dist <= 1e-8 && r.instances >= 200;
  });
}

SuiteResult verify_trivial_observable(const VerifyConfig& cfg) {
  return run_suite(cfg, "trivial-observable", "prob-reproducibility", [&](SuiteResult& r) {
    auto rng = make_engine(derive_seed(cfg.seed, "verify.trivial"));
    const Eigen::Index dims[] = {2, 3, 4};
    r.worst["max_triviality_deviation"] = 0.0;
    r.worst["max_swap_pointer_distance"] = 0.0;
    for (int k = 0; k < 210; ++k) {
      const Eigen::Index d = dims[k % 3];
      const Povm e = povms::random(d, 2 + static_cast<std::size_t>(k % 4), rng);
      const ComplexVector phi0 = random_state(d, rng);
      const ComplexMatrix coupling = tensor_product(haar_unitary(d, rng), haar_unitary(d, rng));
      const MeasurementScheme product = make_scheme(d, d, phi0, coupling, e, cfg.tol);
      const TrivialityResult triv = is_trivial_povm(measured_observable(product, cfg.tol),
                                                    Tolerance{1e-9});
      track(r, "max_triviality_deviation", triv.max_deviation);
      const MeasurementScheme swapped = swap_scheme(e, phi0, cfg.tol);
      track(r, "max_swap_pointer_distance",
            max_effect_distance(measured_observable(swapped, cfg.tol), e));
      ++r.instances;
    }
    const bool triv_ok = r.worst["max_triviality_deviation"].get<double>() <= 1e-9;
    const bool swap_ok = r.worst["max_swap_pointer_distance"].get<double>() <= 1e-10;
    if (!triv_ok) note(r, "product coupling produced a non-trivial observable");
    if (!swap_ok) note(r, "swap coupling failed to reproduce the pointer");
    return triv_ok && swap_ok;
  });
}

SuiteResult verify_no_info_no_disturbance(const VerifyConfig& cfg) {
  return run_suite(cfg, "no-info-no-disturbance", "no-info-no-disturbance", [&](SuiteResult& r) {
    auto rng = make_engine(derive_seed(cfg.seed, "verify.disturbance"));
    const Seed state_seed = derive_seed(cfg.seed, "verify.disturbance.states");
    std::size_t violations = 0;
    r.worst["identity_max_disturbance"] = 0.0;
    r.worst["identity_max_triviality_deviation"] = 0.0;
    r.worst["informative_min_disturbance"] = 1.0;
    const Eigen::Index dims[] = {2, 3, 4};
    for (int k = 0; k < 60; ++k) {
      const Eigen::Index d = dims[k % 3];
      const Povm e = povms::random(d, 2 + static_cast<std::size_t>(k % 3), rng);
      const ComplexVector phi0 = random_state(d, rng);
      const int family = (k / 3) % 4;
      ComplexMatrix coupling;
      if (family == 0) coupling = swap_operator(d, d);
      if (family == 1) coupling = tensor_product(haar_unitary(d, rng), haar_unitary(d, rng));
      if (family == 2) coupling = identity(d * d);
      if (family == 3) coupling = haar_unitary(d * d, rng);
      const MeasurementScheme s = make_scheme(d, d, phi0, coupling, e, cfg.tol);
      const NoInfoNoDisturbanceReport rep =
          no_info_no_disturbance_check(s, cfg.tol, state_seed, cfg.states);
      ++r.instances;
      if (!rep.implication_holds) {
        ++violations;
        note(r, "undisturbed scheme with non-trivial observable");
      }
      if (rep.triviality_deviation > 1e-6) {
        r.worst["informative_min_disturbance"] =
            std::min(r.worst["informative_min_disturbance"].get<double>(), rep.max_disturbance);
        if (rep.max_disturbance <= 1e-8) {
          ++violations;
          note(r, "informative scheme without a disturbed sample state");
        }
      }
      if (family == 2) {
        track(r, "identity_max_disturbance", rep.max_disturbance);
        track(r, "identity_max_triviality_deviation", rep.triviality_deviation);
        if (rep.max_disturbance >= 1e-12 || !rep.trivial) {
          ++violations;
          note(r, "identity coupling disturbed the object or measured information");
        }
      }
    }
    r.worst["violations"] = violations;
    return violations == 0;
  });
}

SuiteResult verify_swap_obstruction(const VerifyConfig& cfg) {
  return run_suite(cfg, "swap-obstruction", "swap-obstruction", [&](SuiteResult& r) {
    bool ok = true;
    for (Eigen::Index d : {2, 3}) {
      const UnitaryPath path = UnitaryPath::geodesic(swap_operator(d, d), d, d, cfg.tol);
      const EntanglementProfile prof =
          entanglement_profile(path, basis_vector(d, 0), cfg.n_steps, cfg.seed, 16, cfg.tol);
      const PathMaximum best = max_path_entanglement(prof);
      ++r.instances;
      const std::string tag = "d" + std::to_string(d);
      r.worst[tag + "_max_entropy_bits"] = best.entropy_bits;
      r.worst[tag + "_argmax_t"] = best.t;
      const bool witnessed = swap_obstruction_witnessed(prof);
      r.worst[tag + "_obstruction_witnessed"] = witnessed;
      if (!witnessed || best.entropy_bits <= 0.5) {
        ok = false;
        note(r, "swap path at d=" + std::to_string(d) + " lacks an entangling interior point");
      }
      if (cfg.n_steps % 2 == 0) {
        const ComplexMatrix mid = path.at(0.5);
        const ComplexVector plus = (basis_vector(d, 0) + basis_vector(d, 1)) / std::numbers::sqrt2;
        const double h = entanglement_entropy(
            PureState(BipartiteSpace(d, d), mid * tensor_product(plus, basis_vector(d, 0))));
        const double dev = std::abs(h - sqrt_swap_midpoint_oracle(d));
        r.worst[tag + "_midpoint_oracle_deviation"] = dev;
        if (dev > 1e-6) {
          ok = false;
          note(r, "midpoint entropy disagrees with the sqrt(SWAP) oracle");
        }
      }
    }
    // Locally dressed swaps: every continuous path to them must entangle.
    auto rng = make_engine(derive_seed(cfg.seed, "verify.obstruction"));
    r.worst["dressed_min_max_entropy_bits"] = 1.0;
    for (int k = 0; k < 6; ++k) {
      const Eigen::Index d = 2 + k % 2;
      const ComplexMatrix u =
          tensor_product(haar_unitary(d, rng), haar_unitary(d, rng)) * swap_operator(d, d);
      const UnitaryPath path = UnitaryPath::geodesic(u, d, d, cfg.tol);
      const EntanglementProfile prof =
          entanglement_profile(path, random_state(d, rng), cfg.n_steps, cfg.seed, 16, cfg.tol);
      ++r.instances;
      const double h = max_path_entanglement(prof).entropy_bits;
      r.worst["dressed_min_max_entropy_bits"] =
          std::min(r.worst["dressed_min_max_entropy_bits"].get<double>(), h);
      if (!swap_obstruction_witnessed(prof) || h <= 1e-3) {
        ok = false;
        note(r, "dressed swap path without interior entanglement");
      }
    }
    return ok;
  });
}

SuiteResult verify_local_generator_null(const VerifyConfig& cfg) {
  return run_suite(cfg, "local-generator-null", "swap-obstruction", [&](SuiteResult& r) {
    auto rng = make_engine(derive_seed(cfg.seed, "verify.local"));
    std::size_t non_product = 0;
    r.worst["max_entropy_bits"] = 0.0;
    for (int k = 0; k < 56; ++k) {
      const auto& [d1, d2] = corpus_dims()[static_cast<std::size_t>(k) % corpus_dims().size()];
      const Seed instance_seed = derive_seed(cfg.seed, "verify.local#" + std::to_string(k));
      const UnitaryPath path =
          UnitaryPath::from_generator(local_generator(d1, d2, instance_seed), d1, d2, cfg.tol);
      const EntanglementProfile prof =
          entanglement_profile(path, random_state(d2, rng), cfg.n_steps, cfg.seed, 8, cfg.tol);
      ++r.instances;
      for (const ProfilePoint& pt : prof.points) {
        track(r, "max_entropy_bits", pt.max_entropy_bits);
        if (pt.verdict != Verdict::kProduct) ++non_product;
      }
    }
    r.worst["non_product_points"] = non_product;
    const bool ok = r.worst["max_entropy_bits"].get<double>() < 1e-9 && non_product == 0;
    if (!ok) note(r, "local generator produced entanglement");
    return ok;
  });
}

bool VerifyReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed; });
}

Json VerifyReport::to_json() const {
  Json j;
  j["tool_version"] = kToolVersion;
  j["claim"] = "verify";
  j["tol"] = config.tol.eps;
  j["seed"] = config.seed;
  j["config"] = Json{{"samples", config.samples},
                     {"n_steps", config.n_steps},
                     {"states", config.states}};
  Json arr = Json::array();
  for (const SuiteResult& s : suites) {
    Json item;
    item["name"] = s.name;
    item["claim"] = s.claim;
    item["passed"] = s.passed;
    item["instances"] = s.instances;
    item["worst"] = s.worst;
    item["diagnostics"] = s.diagnostics;
    arr.push_back(std::move(item));
  }
  j["suites"] = std::move(arr);
  j["passed"] = passed();
  return j;
}

VerifyReport run_verification(const VerifyConfig& cfg) {
  VerifyReport report{cfg, {}};
  report.suites.push_back(verify_prob_reproducibility(cfg));
  report.suites.push_back(verify_classification_oracle(cfg));
  report.suites.push_back(verify_equal_dimension(cfg));
  report.suites.push_back(verify_slice_consistency(cfg));
  report.suites.push_back(verify_trivial_observable(cfg));
  report.suites.push_back(verify_no_info_no_disturbance(cfg));
  report.suites.push_back(verify_swap_obstruction(cfg));
  report.suites.push_back(verify_local_generator_null(cfg));
  return report;
}

}  // namespace nonent
