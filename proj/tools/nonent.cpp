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

// nonent: command-line front-end.
//
// Exit codes: 0 ok (an "entangling" verdict included), 1 verify failure or
// internal error, 2 malformed input, 3 non-unitary input, 4 slice hypothesis
// violation or invalid POVM.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nonent/bipartite.hpp"
#include "nonent/classifier.hpp"
#include "nonent/dynamics.hpp"
#include "nonent/errors.hpp"
#include "nonent/fixtures.hpp"
#include "nonent/io.hpp"
#include "nonent/measurement.hpp"
#include "nonent/verify.hpp"

namespace {

using nonent::ComplexMatrix;
using nonent::ComplexVector;
using nonent::Json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitNotUnitary = 3;
constexpr int kExitHypothesis = 4;

struct RunConfig {
  double tol = nonent::Tolerance{}.eps;
  nonent::Seed seed = 0xB05C;
  std::vector<Eigen::Index> dims;
  std::size_t steps = 64;
  std::size_t samples = 200;
  std::string out;
  std::string format = "json";

  // Subcommand inputs.
  std::string input;
  std::string phi0_path;
  std::optional<Eigen::Index> phi0_index;
  std::string scheme_path;
  std::string state_path;
  std::string fixture;
  std::size_t states = 32;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

nonent::Tolerance tolerance(const RunConfig& c) { return nonent::Tolerance{c.tol}; }

void emit(const RunConfig& c, const std::string& content) {
  if (c.out.empty()) {
    std::cout << content;
  } else {
    nonent::write_file_atomic(c.out, content);
  }
}

void require_format(const RunConfig& c, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (c.format == f) return;
  throw UsageError("--format " + c.format + " is not supported by this command");
}

// Dims from --dims, else the square root of the matrix dimension.
std::pair<Eigen::Index, Eigen::Index> resolve_dims(const RunConfig& c, Eigen::Index n) {
  if (!c.dims.empty()) {
    if (c.dims.size() != 2 || c.dims[0] < 1 || c.dims[1] < 1) {
      throw nonent::DimensionError("--dims takes two positive integers");
    }
    if (c.dims[0] * c.dims[1] != n) {
      throw nonent::DimensionError("--dims " + std::to_string(c.dims[0]) + " " +
                                   std::to_string(c.dims[1]) + " does not match matrix size " +
                                   std::to_string(n));
    }
    return {c.dims[0], c.dims[1]};
  }
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(n))));
  if (d * d != n) {
    throw nonent::DimensionError("matrix size " + std::to_string(n) +
                                 " is not a square; pass --dims d1 d2");
  }
  return {d, d};
}

ComplexMatrix read_square_matrix(const std::string& path) {
  const ComplexMatrix u = nonent::matrix_from_json(nonent::read_json_file(path));
  if (u.rows() != u.cols()) {
    throw nonent::DimensionError("expected a square matrix, got " + std::to_string(u.rows()) +
                                 "x" + std::to_string(u.cols()));
  }
  return u;
}

Json input_name(const std::string& path) {
  const Json j = nonent::read_json_file(path);
  auto it = j.find("name");
  return (it != j.end() && it->is_string()) ? *it : Json(nullptr);
}

int cmd_classify(const RunConfig& c) {
  require_format(c, {"json", "text"});
  const ComplexMatrix u = read_square_matrix(c.input);
  const auto [d1, d2] = resolve_dims(c, u.rows());
  const nonent::NonEntanglingForm form =
      nonent::classify_unitary(u, d1, d2, tolerance(c), c.seed);
  if (c.format == "text") {
    std::ostringstream os;
    os << "claim: theorem-classification\nverdict: "
       << nonent::verdict_name(nonent::verdict_of(form)) << "\n";
    if (auto r = nonent::reassemble(form)) {
      os << "reconstruction_error: " << Json((u - *r).norm()).dump() << "\n";
    } else {
      const auto& w = std::get<nonent::EntanglingWitness>(form);
      os << "witness_candidate: " << w.candidate
         << "\nsecond_schmidt_coefficient: " << Json(w.second_coefficient).dump() << "\n";
    }
    emit(c, os.str());
    return kExitOk;
  }
  Json report = nonent::classification_report(u, form, tolerance(c), c.seed);
  report["d1"] = d1;
  report["d2"] = d2;
  emit(c, nonent::dump(report));
  return kExitOk;
}

ComplexVector probe_state(const RunConfig& c, Eigen::Index d2) {
  if (!c.phi0_path.empty()) {
    const ComplexVector v = nonent::vector_from_json(nonent::read_json_file(c.phi0_path));
    if (v.size() != d2) {
      throw nonent::DimensionError("probe state has dimension " + std::to_string(v.size()) +
                                   ", expected " + std::to_string(d2));
    }
    return v;
  }
  const Eigen::Index k = c.phi0_index.value_or(0);
  if (k < 0 || k >= d2) throw nonent::DimensionError("--phi0-index out of range");
  return nonent::basis_vector(d2, k);
}

int cmd_slice(const RunConfig& c) {
  require_format(c, {"json", "text"});
  const ComplexMatrix u = read_square_matrix(c.input);
  const auto [d1, d2] = resolve_dims(c, u.rows());
  const ComplexVector phi0 = probe_state(c, d2);
  const nonent::SliceForm form = nonent::classify_slice(u, d1, d2, phi0, tolerance(c));
  Json report = nonent::slice_report(form, tolerance(c), c.seed);
  report["input_name"] = input_name(c.input);
  report["probe_init"] = nonent::matrix_to_json(phi0);
  if (c.format == "text") {
    std::ostringstream os;
    os << "claim: prop1-slice\nform: " << report["form"].get<std::string>()
       << "\nisometry_defect: " << report["isometry_defect"].dump() << "\n";
    emit(c, os.str());
    return kExitOk;
  }
  emit(c, nonent::dump(report));
  return kExitOk;
}

int cmd_measure(const RunConfig& c) {
  require_format(c, {"json", "text"});
  const nonent::Tolerance tol = tolerance(c);
  const nonent::MeasurementScheme s =
      nonent::scheme_from_json(nonent::read_json_file(c.scheme_path));
  const nonent::PovmReport pointer_report = nonent::validate_povm(s.pointer, tol);
  if (!pointer_report.valid) {
    Json j;
    j["tool_version"] = nonent::kToolVersion;
    j["claim"] = "prob-reproducibility";
    j["error"] = "invalid pointer POVM";
    j["povm_report"] = nonent::povm_report_to_json(pointer_report);
    std::cout << nonent::dump(j);
    throw nonent::InvalidPovmError("pointer POVM fails validation");
  }
  nonent::validate_scheme(s, tol);
  const ComplexVector phi = nonent::vector_from_json(nonent::read_json_file(c.state_path));
  if (phi.size() != s.object_dim) {
    throw nonent::DimensionError("state has dimension " + std::to_string(phi.size()) +
                                 ", scheme object dimension is " + std::to_string(s.object_dim));
  }
  const nonent::OutcomeDistribution p = nonent::outcome_probabilities(s, phi, tol);
  const nonent::Povm observed = nonent::measured_observable(s, tol);
  const nonent::TrivialityResult triv = nonent::is_trivial_povm(observed, tol);
  double pointer_distance = 0.0;
  if (s.object_dim == s.probe_dim) {
    for (std::size_t x = 0; x < observed.size(); ++x) {
      pointer_distance =
          std::max(pointer_distance, (observed.effects[x] - s.pointer.effects[x]).norm());
    }
  }
  const double dist = nonent::disturbance(s, nonent::DensityOperator::pure(phi, tol), tol);

  if (c.format == "text") {
    std::ostringstream os;
    os << "claim: prob-reproducibility\n";
    for (std::size_t x = 0; x < p.labels.size(); ++x) {
      os << "p(" << p.labels[x] << ") = " << Json(p.probabilities[x]).dump() << "\n";
    }
    os << "trivial: " << (triv.trivial ? "true" : "false") << "\ndisturbance: "
       << Json(dist).dump() << "\n";
    emit(c, os.str());
    return kExitOk;
  }
  Json j;
  j["tool_version"] = nonent::kToolVersion;
  j["claim"] = "prob-reproducibility";
  j["object_dim"] = s.object_dim;
  j["probe_dim"] = s.probe_dim;
  j["outcomes"] = p.labels;
  j["probabilities"] = p.probabilities;
  j["measured_observable"] = nonent::povm_to_json(observed);
  if (s.object_dim == s.probe_dim) {
    j["observable_pointer_distance"] = pointer_distance;
  } else {
    j["observable_pointer_distance"] = nullptr;
  }
  j["trivial"] = triv.trivial;
  j["triviality_deviation"] = triv.max_deviation;
  j["disturbance"] = dist;
  j["disturbance_claim"] = "no-info-no-disturbance";
  j["tol"] = c.tol;
  j["seed"] = c.seed;
  emit(c, nonent::dump(j));
  return kExitOk;
}

int cmd_path(const RunConfig& c) {
  require_format(c, {"json", "csv", "text"});
  const nonent::Tolerance tol = tolerance(c);
  const ComplexMatrix u = read_square_matrix(c.input);
  const auto [d1, d2] = resolve_dims(c, u.rows());
  const ComplexVector phi0 = probe_state(c, d2);
  const nonent::UnitaryPath path = nonent::UnitaryPath::geodesic(u, d1, d2, tol);
  const nonent::EntanglementProfile prof =
      nonent::entanglement_profile(path, phi0, c.steps, c.seed, 16, tol);
  const nonent::PathMaximum best = nonent::max_path_entanglement(prof);
  const bool witnessed = nonent::swap_obstruction_witnessed(prof);

  Json j;
  j["tool_version"] = nonent::kToolVersion;
  j["claim"] = "swap-obstruction";
  j["n_steps"] = c.steps;
  j["max_entropy_bits"] = best.entropy_bits;
  j["argmax_t"] = best.t;
  j["argmax_input_id"] = best.input_id;
  j["obstruction_witnessed"] = witnessed;
  j["profile"] = nonent::profile_to_json(prof);
  j["tol"] = c.tol;
  j["seed"] = c.seed;

  std::ostringstream summary;
  summary << "max_entropy_bits=" << Json(best.entropy_bits).dump()
          << " t=" << Json(best.t).dump() << " input=" << best.input_id
          << " obstruction_witnessed=" << (witnessed ? "true" : "false") << "\n";

  if (!c.out.empty()) {
    nonent::write_file_atomic(c.out + ".csv", nonent::profile_to_csv(prof));
    nonent::write_file_atomic(c.out + ".json", nonent::dump(j));
    std::cout << summary.str();
    return kExitOk;
  }
  if (c.format == "csv") {
    std::cout << nonent::profile_to_csv(prof);
    std::cerr << summary.str();
  } else if (c.format == "text") {
    std::cout << summary.str();
  } else {
    std::cout << nonent::dump(j);
    std::cerr << summary.str();
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& c) {
  require_format(c, {"json", "text"});
  nonent::VerifyConfig cfg;
  cfg.tol = tolerance(c);
  cfg.seed = c.seed;
  cfg.samples = c.samples;
  cfg.n_steps = c.steps;
  cfg.states = c.states;
  const nonent::VerifyReport report = nonent::run_verification(cfg);
  if (c.format == "text") {
    std::ostringstream os;
    for (const nonent::SuiteResult& s : report.suites) {
      os << (s.passed ? "PASS " : "FAIL ") << s.name << " [" << s.claim
         << "] instances=" << s.instances << "\n";
      for (const std::string& d : s.diagnostics) os << "  " << d << "\n";
    }
    os << (report.passed() ? "all suites passed\n" : "some suites failed\n");
    emit(c, os.str());
  } else {
    emit(c, nonent::dump(report.to_json()));
  }
  return report.passed() ? kExitOk : kExitFailure;
}

int cmd_gen(const RunConfig& c) {
  require_format(c, {"json"});
  nonent::FixtureOptions opts;
  if (!c.dims.empty()) {
    if (c.dims.size() != 2) throw nonent::DimensionError("--dims takes two positive integers");
    opts.d1 = c.dims[0];
    opts.d2 = c.dims[1];
  }
  opts.seed = c.seed;
  emit(c, nonent::dump(nonent::make_fixture(c.fixture, opts)));
  return kExitOk;
}

int report_error(int code, const std::string& msg) {
  std::cerr << "nonent: error: " << msg << "\n";
  return code;
}

// Maps library exceptions onto the exit-code contract.
template <typename Fn>
int guarded(Fn fn) {
  try {
    return fn();
  } catch (const nonent::NotUnitaryError& e) {
    return report_error(kExitNotUnitary,
                        std::string(e.what()) + " (unitarity defect " +
                            Json(e.defect()).dump() + ")");
  } catch (const nonent::SliceHypothesisError& e) {
    std::string where = "basis index " + std::to_string(e.index());
    if (e.partner() != nonent::SliceHypothesisError::kNoPartner) {
      where = "superposition of basis indices " + std::to_string(e.index()) + " and " +
              std::to_string(e.partner());
    }
    return report_error(kExitHypothesis, std::string(e.what()) + " [" + where + "]");
  } catch (const nonent::InvalidPovmError& e) {
    return report_error(kExitHypothesis, e.what());
  } catch (const nonent::ParseError& e) {
    return report_error(kExitBadInput, e.what());
  } catch (const std::invalid_argument& e) {
    // DimensionError, NotNormalizedError, NotHermitianError, UnknownFixtureError, usage.
    return report_error(kExitBadInput, e.what());
  } catch (const std::exception& e) {
    return report_error(kExitFailure, e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-entangling bipartite unitaries: classification, slices, measurement "
               "schemes and entanglement profiles."};
  app.set_version_flag("--version", std::string(nonent::kToolVersion));
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig c;
  app.add_option("--tol", c.tol, "Absolute tolerance")->capture_default_str();
  app.add_option("--seed", c.seed, "Seed (decimal or 0x-hex)")->capture_default_str();
  app.add_option("--dims", c.dims, "Subsystem dimensions d1 d2")->expected(2);
  app.add_option("--steps", c.steps, "Path grid intervals")->capture_default_str();
  app.add_option("--samples", c.samples, "Random samples for the brute-force oracle")
      ->capture_default_str();
  app.add_option("--out", c.out, "Output path (path: file prefix)");
  app.add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();

  auto* classify = app.add_subcommand("classify", "Classify a bipartite unitary");
  classify->add_option("unitary", c.input, "Matrix JSON")->required();

  auto* slice = app.add_subcommand("slice", "Form of the slice phi -> U(phi (x) phi0)");
  slice->add_option("unitary", c.input, "Matrix JSON")->required();
  auto* phi0_file = slice->add_option("--phi0", c.phi0_path, "Probe state (vector JSON)");
  slice->add_option("--phi0-index", c.phi0_index, "Probe basis index")->excludes(phi0_file);

  auto* measure = app.add_subcommand("measure", "Run a measurement scheme on a state");
  measure->add_option("--scheme", c.scheme_path, "Scheme JSON")->required();
  measure->add_option("--state", c.state_path, "Object state (vector JSON)")->required();

  auto* path = app.add_subcommand("path", "Entanglement profile along exp(i t H)");
  path->add_option("unitary", c.input, "Endpoint matrix JSON")->required();
  auto* path_phi0 = path->add_option("--phi0", c.phi0_path, "Probe state (vector JSON)");
  path->add_option("--phi0-index", c.phi0_index, "Probe basis index")->excludes(path_phi0);

  auto* verify = app.add_subcommand("verify", "Run the invariant suites");
  verify->add_option("--states", c.states, "Random states per disturbance check")
      ->capture_default_str();

  auto* gen = app.add_subcommand("gen", "Emit a named fixture");
  gen->add_option("name", c.fixture, "Fixture name")->required();
  gen->add_flag_callback(
      "--list",
      [] {
        for (const std::string& n : nonent::fixture_names()) std::cout << n << "\n";
        throw CLI::Success();
      },
      "List fixture names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  if (*classify) return guarded([&] { return cmd_classify(c); });
  if (*slice) return guarded([&] { return cmd_slice(c); });
  if (*measure) return guarded([&] { return cmd_measure(c); });
  if (*path) return guarded([&] { return cmd_path(c); });
  if (*verify) return guarded([&] { return cmd_verify(c); });
  return guarded([&] { return cmd_gen(c); });
}
