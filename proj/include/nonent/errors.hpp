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

#ifndef NONENT_ERRORS_HPP
#define NONENT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nonent {

/// Shape or dimension disagreement between arguments.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input that must be unitary is not, within the requested tolerance.
class NotUnitaryError : public std::invalid_argument {
 public:
  NotUnitaryError(const std::string& what, double defect)
      : std::invalid_argument(what), defect_(defect) {}
  double defect() const { return defect_; }

 private:
  double defect_;
};

/// A vector that must be a unit vector is not.
class NotNormalizedError : public std::invalid_argument {
 public:
  NotNormalizedError(const std::string& what, double norm)
      : std::invalid_argument(what), norm_(norm) {}
  double norm() const { return norm_; }

 private:
  double norm_;
};

/// Input matrix is not Hermitian within tolerance.
class NotHermitianError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A decomposition was requested for a unitary that does not have the
/// required form (e.g. decompose_product on an entangling unitary).
class FormMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The slice map u(. (x) phi0) does not send every object vector to a
/// product state. `index` names the offending basis vector; for a failing
/// superposition (e_i + e_j)/sqrt(2), `partner` holds j.
class SliceHypothesisError : public std::runtime_error {
 public:
  static constexpr std::size_t kNoPartner = static_cast<std::size_t>(-1);

  SliceHypothesisError(const std::string& what, std::size_t index,
                       std::size_t partner = kNoPartner)
      : std::runtime_error(what), index_(index), partner_(partner) {}
  std::size_t index() const { return index_; }
  std::size_t partner() const { return partner_; }

 private:
  std::size_t index_;
  std::size_t partner_;
};

/// Numerical breakdown: the data fits neither admissible pattern even though
/// every sampled image is a product.
class InconsistentPatternError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No entangling witness was found in the full deterministic candidate list.
/// Indicates a misconfigured tolerance.
class WitnessSearchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// POVM or measurement scheme fails its invariants.
class InvalidPovmError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed serialized input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nonent

#endif  // NONENT_ERRORS_HPP
