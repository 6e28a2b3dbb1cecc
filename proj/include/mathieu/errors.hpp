// Copyright 2026 The Mathieu Series Authors
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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mathieu {

// Argument outside the mathematical domain of a function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Series parameters violate a convergence or validity constraint.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A caller-supplied promise (e.g. monotonicity of b_n) was observed to fail.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A fixed-size table ran out (e.g. Bernoulli numbers).
class CapacityError : public std::length_error {
 public:
  CapacityError(const std::string& what, int required_index)
      : std::length_error(what), required_index_(required_index) {}
  int required_index() const noexcept { return required_index_; }

 private:
  int required_index_;
};

// A term cap was reached before the tail bound met the requested tolerance.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::int64_t cap, double achieved_bound)
      : std::runtime_error(what), cap_(cap), achieved_bound_(achieved_bound) {}
  std::int64_t cap() const noexcept { return cap_; }
  double achieved_bound() const noexcept { return achieved_bound_; }

 private:
  std::int64_t cap_;
  double achieved_bound_;
};

// Iteration or quadrature failed to converge.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operation intentionally not supported for the given parameters.
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace mathieu
