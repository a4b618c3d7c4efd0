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

// Python bindings. Matrices cross as complex128 numpy arrays; structured
// results come back as dicts.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nonent/bipartite.hpp"
#include "nonent/classifier.hpp"
#include "nonent/dynamics.hpp"
#include "nonent/errors.hpp"
#include "nonent/io.hpp"
#include "nonent/linalg.hpp"
#include "nonent/measurement.hpp"
#include "nonent/verify.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

using nonent::ComplexMatrix;
using nonent::ComplexVector;
using nonent::Tolerance;

constexpr nonent::Seed kDefaultSeed = 0xB05C;

py::object from_json(const nonent::Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::dict classify(const ComplexMatrix& u, Eigen::Index d1, Eigen::Index d2, double tol,
                  nonent::Seed seed) {
  const nonent::NonEntanglingForm form = nonent::classify_unitary(u, d1, d2, Tolerance{tol}, seed);
  py::dict out;
  out["verdict"] = std::string(nonent::verdict_name(nonent::verdict_of(form)));
  if (const auto* p = std::get_if<nonent::ProductForm>(&form)) {
    out["V"] = p->v;
    out["W"] = p->w;
  } else if (const auto* s = std::get_if<nonent::SwapForm>(&form)) {
    out["V21"] = s->v21;
    out["W12"] = s->w12;
  } else {
    const auto& w = std::get<nonent::EntanglingWitness>(form);
    out["witness"] = py::dict("input_left"_a = ComplexVector(w.input_left),
                              "input_right"_a = ComplexVector(w.input_right),
                              "image"_a = ComplexVector(w.image),
                              "second_coefficient"_a = w.second_coefficient,
                              "candidate"_a = w.candidate);
  }
  if (auto r = nonent::reassemble(form)) out["reconstruction_error"] = (u - *r).norm();
  return out;
}

py::dict slice(const ComplexMatrix& u, Eigen::Index d1, Eigen::Index d2,
               const ComplexVector& phi0, double tol) {
  const nonent::SliceForm form = nonent::classify_slice(u, d1, d2, phi0, Tolerance{tol});
  py::dict out;
  if (const auto* l = std::get_if<nonent::LocalOnObject>(&form)) {
    out["form"] = "local_on_object";
    out["V"] = l->v;
    out["phi_prime"] = l->phi_prime;
  } else {
    const auto& t = std::get<nonent::TransferToProbe>(form);
    out["form"] = "transfer_to_probe";
    out["W12"] = t.w12;
    out["phi_prime"] = t.phi_prime;
  }
  return out;
}

nonent::MeasurementScheme scheme(Eigen::Index object_dim, Eigen::Index probe_dim,
                                 const ComplexVector& phi0, const ComplexMatrix& coupling,
                                 const std::vector<ComplexMatrix>& effects, double tol) {
  nonent::Povm e;
  e.dim = probe_dim;
  e.effects = effects;
  for (std::size_t x = 0; x < effects.size(); ++x) e.outcomes.push_back(std::to_string(x));
  return nonent::make_scheme(object_dim, probe_dim, phi0, coupling, std::move(e), Tolerance{tol});
}

py::dict profile(const ComplexMatrix& endpoint, Eigen::Index d1, Eigen::Index d2,
                 const ComplexVector& phi0, std::size_t n_steps, nonent::Seed seed, double tol) {
  const nonent::UnitaryPath path = nonent::UnitaryPath::geodesic(endpoint, d1, d2, Tolerance{tol});
  const nonent::EntanglementProfile prof =
      nonent::entanglement_profile(path, phi0, n_steps, seed, 16, Tolerance{tol});
  std::vector<double> t, h;
  std::vector<std::string> verdicts;
  for (const nonent::ProfilePoint& pt : prof.points) {
    t.push_back(pt.t);
    h.push_back(pt.max_entropy_bits);
    verdicts.emplace_back(nonent::verdict_name(pt.verdict));
  }
  return py::dict("t"_a = t, "max_entropy_bits"_a = h, "verdict"_a = verdicts,
                  "obstruction_witnessed"_a = nonent::swap_obstruction_witnessed(prof));
}

}  // namespace

PYBIND11_MODULE(nonent, m) {
  m.doc() = "Non-entangling bipartite unitaries";
  m.attr("__version__") = nonent::kToolVersion;

  py::register_exception<nonent::NotUnitaryError>(m, "NotUnitaryError", PyExc_ValueError);
  py::register_exception<nonent::NotNormalizedError>(m, "NotNormalizedError", PyExc_ValueError);
  py::register_exception<nonent::DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<nonent::SliceHypothesisError>(m, "SliceHypothesisError",
                                                       PyExc_RuntimeError);
  py::register_exception<nonent::InvalidPovmError>(m, "InvalidPovmError", PyExc_ValueError);

  m.def("haar_unitary", py::overload_cast<Eigen::Index, nonent::Seed>(&nonent::haar_unitary),
        "d"_a, "seed"_a = kDefaultSeed);
  m.def("random_state", py::overload_cast<Eigen::Index, nonent::Seed>(&nonent::random_state),
        "d"_a, "seed"_a = kDefaultSeed);
  m.def("swap_operator", &nonent::swap_operator, "d1"_a, "d2"_a);
  m.def("tensor_product",
        py::overload_cast<const ComplexMatrix&, const ComplexMatrix&>(&nonent::tensor_product),
        "a"_a, "b"_a);

  m.def(
      "schmidt_coefficients",
      [](const ComplexVector& v, Eigen::Index d1, Eigen::Index d2) {
        return nonent::RealVector(
            nonent::schmidt_coefficients(nonent::PureState(nonent::BipartiteSpace(d1, d2), v)));
      },
      "psi"_a, "d1"_a, "d2"_a);
  m.def(
      "entanglement_entropy",
      [](const ComplexVector& v, Eigen::Index d1, Eigen::Index d2) {
        return nonent::entanglement_entropy(
            nonent::PureState(nonent::BipartiteSpace(d1, d2), v));
      },
      "psi"_a, "d1"_a, "d2"_a, "Entropy of the reduced state, in bits.");

  m.def("realign", &nonent::realign, "u"_a, "d1"_a, "d2"_a);
  m.def(
      "operator_schmidt_rank",
      [](const ComplexMatrix& u, Eigen::Index d1, Eigen::Index d2, double tol) {
        return nonent::operator_schmidt_rank(u, d1, d2, Tolerance{tol});
      },
      "u"_a, "d1"_a, "d2"_a, "tol"_a = 1e-9);
  m.def("classify", &classify, "u"_a, "d1"_a, "d2"_a, "tol"_a = 1e-9, "seed"_a = kDefaultSeed,
        "Classify u as product, swap or entangling.");
  m.def(
      "brute_force_non_entangling",
      [](const ComplexMatrix& u, Eigen::Index d1, Eigen::Index d2, double tol, nonent::Seed seed,
         std::size_t n_samples) {
        return nonent::brute_force_non_entangling(u, d1, d2, Tolerance{tol}, seed, n_samples)
            .non_entangling;
      },
      "u"_a, "d1"_a, "d2"_a, "tol"_a = 1e-9, "seed"_a = kDefaultSeed, "n_samples"_a = 200);
  m.def("slice", &slice, "u"_a, "d1"_a, "d2"_a, "phi0"_a, "tol"_a = 1e-9);

  m.def(
      "measured_observable",
      [](const ComplexMatrix& coupling, Eigen::Index object_dim, Eigen::Index probe_dim,
         const ComplexVector& phi0, const std::vector<ComplexMatrix>& effects, double tol) {
        return nonent::measured_observable(
                   scheme(object_dim, probe_dim, phi0, coupling, effects, tol), Tolerance{tol})
            .effects;
      },
      "coupling"_a, "object_dim"_a, "probe_dim"_a, "phi0"_a, "effects"_a, "tol"_a = 1e-9);
  m.def(
      "outcome_probabilities",
      [](const ComplexMatrix& coupling, Eigen::Index object_dim, Eigen::Index probe_dim,
         const ComplexVector& phi0, const std::vector<ComplexMatrix>& effects,
         const ComplexVector& phi, double tol) {
        return nonent::outcome_probabilities(
                   scheme(object_dim, probe_dim, phi0, coupling, effects, tol), phi,
                   Tolerance{tol})
            .probabilities;
      },
      "coupling"_a, "object_dim"_a, "probe_dim"_a, "phi0"_a, "effects"_a, "phi"_a,
      "tol"_a = 1e-9);
  m.def(
      "is_trivial_povm",
      [](const std::vector<ComplexMatrix>& effects, double tol) {
        nonent::Povm e;
        e.dim = effects.empty() ? 0 : effects.front().rows();
        e.effects = effects;
        for (std::size_t x = 0; x < effects.size(); ++x) e.outcomes.push_back(std::to_string(x));
        return nonent::is_trivial_povm(e, Tolerance{tol}).trivial;
      },
      "effects"_a, "tol"_a = 1e-9);

  m.def("entanglement_profile", &profile, "endpoint"_a, "d1"_a, "d2"_a, "phi0"_a,
        "n_steps"_a = 64, "seed"_a = kDefaultSeed, "tol"_a = 1e-9);

  m.def(
      "verify",
      [](nonent::Seed seed, double tol) {
        nonent::VerifyConfig cfg;
        cfg.seed = seed;
        cfg.tol = Tolerance{tol};
        return from_json(nonent::run_verification(cfg).to_json());
      },
      "seed"_a = kDefaultSeed, "tol"_a = 1e-9, "Runs every suite; returns the report dict.");
}
