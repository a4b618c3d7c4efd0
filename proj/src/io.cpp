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

#include "nonent/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include "nonent/errors.hpp"

namespace nonent {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected a JSON object with '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

Eigen::Index positive_int(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw ParseError(std::string("field '") + key + "' must be a positive integer");
  }
  return static_cast<Eigen::Index>(v.get<long long>());
}

std::vector<double> real_array(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw ParseError(std::string("field '") + key + "' must be an array");
  std::vector<double> out;
  out.reserve(v.size());
  for (const Json& x : v) {
    if (!x.is_number()) throw ParseError(std::string("field '") + key + "' has a non-number");
    const double d = x.get<double>();
    if (!std::isfinite(d)) throw ParseError(std::string("field '") + key + "' is not finite");
    out.push_back(d);
  }
  return out;
}

std::string number(double x) { return Json(x).dump(); }

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
  Json re = Json::array();
  Json im = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      re.push_back(m(i, k).real());
      im.push_back(m(i, k).imag());
    }
  }
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j;
}

ComplexMatrix matrix_from_json(const Json& j) {
  const Eigen::Index rows = positive_int(j, "rows");
  const Eigen::Index cols = positive_int(j, "cols");
  const std::vector<double> re = real_array(j, "re");
  const std::vector<double> im = real_array(j, "im");
  const auto n = static_cast<std::size_t>(rows * cols);
  if (re.size() != n || im.size() != n) {
    throw ParseError("matrix: expected " + std::to_string(n) + " entries in 're' and 'im', got " +
                     std::to_string(re.size()) + " and " + std::to_string(im.size()));
  }
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index k = 0; k < cols; ++k) {
      const auto idx = static_cast<std::size_t>(i * cols + k);
      m(i, k) = Complex(re[idx], im[idx]);
    }
  return m;
}

ComplexVector vector_from_json(const Json& j) {
  ComplexMatrix m = matrix_from_json(j);
  if (m.cols() != 1) throw ParseError("expected a vector (cols == 1)");
  return m.col(0);
}

Json pure_state_to_json(const PureState& psi) {
  Json j;
  j["d1"] = psi.space().d1;
  j["d2"] = psi.space().d2;
  j["vec"] = matrix_to_json(psi.vec());
  return j;
}

PureState pure_state_from_json(const Json& j, Tolerance tol) {
  const Eigen::Index d1 = positive_int(j, "d1");
  const Eigen::Index d2 = positive_int(j, "d2");
  return PureState(BipartiteSpace(d1, d2), vector_from_json(field(j, "vec")), tol);
}

Json schmidt_to_json(const SchmidtDecomposition& sd) {
  Json coeffs = Json::array();
  Json left = Json::array();
  Json right = Json::array();
  for (Eigen::Index k = 0; k < sd.rank(); ++k) {
    coeffs.push_back(sd.coeffs(k));
    left.push_back(matrix_to_json(sd.left.col(k)));
    right.push_back(matrix_to_json(sd.right.col(k)));
  }
  Json j;
  j["coeffs"] = std::move(coeffs);
  j["left"] = std::move(left);
  j["right"] = std::move(right);
  return j;
}

Json povm_to_json(const Povm& e) {
  Json effects = Json::array();
  for (const ComplexMatrix& m : e.effects) effects.push_back(matrix_to_json(m));
  Json j;
  j["dim"] = e.dim;
  j["outcomes"] = e.outcomes;
  j["effects"] = std::move(effects);
  return j;
}

Povm povm_from_json(const Json& j) {
  Povm e;
  e.dim = positive_int(j, "dim");
  const Json& outcomes = field(j, "outcomes");
  const Json& effects = field(j, "effects");
  if (!outcomes.is_array() || !effects.is_array()) {
    throw ParseError("POVM: 'outcomes' and 'effects' must be arrays");
  }
  for (const Json& o : outcomes) {
    if (o.is_string()) {
      e.outcomes.push_back(o.get<std::string>());
    } else if (o.is_number_integer()) {
      e.outcomes.push_back(std::to_string(o.get<long long>()));
    } else {
      throw ParseError("POVM: outcome labels must be strings");
    }
  }
  for (const Json& m : effects) e.effects.push_back(matrix_from_json(m));
  return e;
}

Json povm_report_to_json(const PovmReport& r) {
  Json j;
  j["valid"] = r.valid;
  j["max_hermiticity_defect"] = r.max_hermiticity_defect;
  j["min_eigenvalue"] = r.min_eigenvalue;
  j["completeness_defect"] = r.completeness_defect;
  j["violations"] = r.violations;
  return j;
}

Json scheme_to_json(const MeasurementScheme& s) {
  Json j;
  j["object_dim"] = s.object_dim;
  j["probe_dim"] = s.probe_dim;
  j["probe_init"] = matrix_to_json(s.probe_init);
  j["coupling"] = matrix_to_json(s.coupling);
  j["pointer"] = povm_to_json(s.pointer);
  return j;
}

MeasurementScheme scheme_from_json(const Json& j) {
  MeasurementScheme s;
  s.object_dim = positive_int(j, "object_dim");
  s.probe_dim = positive_int(j, "probe_dim");
  s.probe_init = vector_from_json(field(j, "probe_init"));
  s.coupling = matrix_from_json(field(j, "coupling"));
  s.pointer = povm_from_json(field(j, "pointer"));
  return s;
}

Json witness_to_json(const EntanglingWitness& w) {
  Json j;
  j["candidate"] = w.candidate;
  j["input_left"] = matrix_to_json(w.input_left);
  j["input_right"] = matrix_to_json(w.input_right);
  j["image"] = matrix_to_json(w.image);
  j["second_schmidt_coefficient"] = w.second_coefficient;
  return j;
}

Json classification_report(const ComplexMatrix& u, const NonEntanglingForm& form,
                           Tolerance tol, Seed seed) {
  Json j;
  j["tool_version"] = kToolVersion;
  j["claim"] = "theorem-classification";
  j["verdict"] = std::string(verdict_name(verdict_of(form)));
  if (const auto* p = std::get_if<ProductForm>(&form)) {
    j["factors"] = Json{{"V", matrix_to_json(p->v)}, {"W", matrix_to_json(p->w)}};
  } else if (const auto* s = std::get_if<SwapForm>(&form)) {
    j["factors"] = Json{{"V21", matrix_to_json(s->v21)}, {"W12", matrix_to_json(s->w12)}};
  } else {
    j["factors"] = nullptr;
  }
  if (auto r = reassemble(form)) {
    j["reconstruction_error"] = (u - *r).norm();
  } else {
    j["reconstruction_error"] = nullptr;
  }
  if (const auto* w = std::get_if<EntanglingWitness>(&form)) {
    j["witness"] = witness_to_json(*w);
  } else {
    j["witness"] = nullptr;
  }
  j["tol"] = tol.eps;
  j["seed"] = seed;
  return j;
}

Json slice_report(const SliceForm& form, Tolerance tol, Seed seed) {
  Json j;
  j["tool_version"] = kToolVersion;
  j["claim"] = "prop1-slice";
  const ComplexMatrix& iso = slice_isometry(form);
  if (const auto* l = std::get_if<LocalOnObject>(&form)) {
    j["form"] = "local_on_object";
    j["isometry_name"] = "V";
    j["isometry"] = matrix_to_json(l->v);
    j["phi_prime"] = matrix_to_json(l->phi_prime);
  } else {
    const auto& t = std::get<TransferToProbe>(form);
    j["form"] = "transfer_to_probe";
    j["isometry_name"] = "W12";
    j["isometry"] = matrix_to_json(t.w12);
    j["phi_prime"] = matrix_to_json(t.phi_prime);
  }
  j["isometry_defect"] = (iso.adjoint() * iso - identity(iso.cols())).norm();
  j["tol"] = tol.eps;
  j["seed"] = seed;
  return j;
}

Json profile_to_json(const EntanglementProfile& profile) {
  Json inputs = Json::array();
  for (const ProductInput& in : profile.inputs) {
    Json item;
    item["id"] = in.id;
    item["object"] = matrix_to_json(in.object);
    item["probe"] = matrix_to_json(in.probe);
    inputs.push_back(std::move(item));
  }
  Json points = Json::array();
  for (const ProfilePoint& pt : profile.points) {
    Json item;
    item["t"] = pt.t;
    item["max_entropy_bits"] = pt.max_entropy_bits;
    item["op_schmidt_rank"] = pt.op_schmidt_rank;
    item["verdict"] = std::string(verdict_name(pt.verdict));
    item["maximizing_input_id"] = profile.inputs.at(pt.maximizing_input).id;
    points.push_back(std::move(item));
  }
  Json j;
  j["d1"] = profile.space.d1;
  j["d2"] = profile.space.d2;
  j["inputs"] = std::move(inputs);
  j["points"] = std::move(points);
  return j;
}

std::string profile_to_csv(const EntanglementProfile& profile) {
  std::ostringstream os;
  os << "t,max_entropy_bits,op_schmidt_rank,verdict,maximizing_input_id\n";
  for (const ProfilePoint& pt : profile.points) {
    os << number(pt.t) << ',' << number(pt.max_entropy_bits) << ',' << pt.op_schmidt_rank << ','
       << verdict_name(pt.verdict) << ",\"" << profile.inputs.at(pt.maximizing_input).id
       << "\"\n";
  }
  return os.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_json(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw std::runtime_error("failed writing " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace nonent
