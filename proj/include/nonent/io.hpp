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

// JSON and CSV formats.
//
//   Matrix:  {"rows": n, "cols": m, "re": [...], "im": [...]}  (row-major;
//            an optional "name" is carried through but not required)
//   State:   {"d1": n, "d2": m, "vec": <Matrix>}
//   POVM:    {"dim": d, "outcomes": [...], "effects": [<Matrix>, ...]}
//   Scheme:  {"object_dim", "probe_dim", "probe_init", "coupling", "pointer"}
//
// Objects keep insertion order; doubles print as the shortest decimal that
// round-trips (at most 17 significant digits).

#ifndef NONENT_IO_HPP
#define NONENT_IO_HPP

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"
#include "nonent/bipartite.hpp"
#include "nonent/classifier.hpp"
#include "nonent/dynamics.hpp"
#include "nonent/linalg.hpp"
#include "nonent/measurement.hpp"

namespace nonent {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = NONENT_VERSION;

Json matrix_to_json(const ComplexMatrix& m);
/// Throws ParseError on missing fields, wrong lengths or non-finite entries.
ComplexMatrix matrix_from_json(const Json& j);
/// Like matrix_from_json but requires cols == 1.
ComplexVector vector_from_json(const Json& j);

Json pure_state_to_json(const PureState& psi);
PureState pure_state_from_json(const Json& j, Tolerance tol = {});

Json schmidt_to_json(const SchmidtDecomposition& sd);

Json povm_to_json(const Povm& e);
Povm povm_from_json(const Json& j);
Json povm_report_to_json(const PovmReport& r);

Json scheme_to_json(const MeasurementScheme& s);
/// Parses without validating; call validate_scheme afterwards.
MeasurementScheme scheme_from_json(const Json& j);

Json witness_to_json(const EntanglingWitness& w);

/// {"tool_version", "claim", "verdict", "factors", "reconstruction_error",
///  "witness", "tol", "seed"}.
Json classification_report(const ComplexMatrix& u, const NonEntanglingForm& form,
                           Tolerance tol, Seed seed);

/// {"tool_version", "claim", "form", "isometry", "phi_prime",
///  "isometry_defect", "tol", "seed"}.
Json slice_report(const SliceForm& form, Tolerance tol, Seed seed);

Json profile_to_json(const EntanglementProfile& profile);
/// Columns: t,max_entropy_bits,op_schmidt_rank,verdict,maximizing_input_id.
std::string profile_to_csv(const EntanglementProfile& profile);

/// Parses JSON text, converting library exceptions to ParseError.
Json parse_json(const std::string& text);
Json read_json_file(const std::filesystem::path& path);

/// Indented dump with a trailing newline.
std::string dump(const Json& j);

/// Writes to a sibling temporary file and renames it over `path`, so a
/// failed write never leaves a partial file behind.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace nonent

#endif  // NONENT_IO_HPP
