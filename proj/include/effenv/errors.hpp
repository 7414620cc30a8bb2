// Copyright 2026 The effenv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace effenv {

// Mismatched or otherwise unusable matrix dimensions.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// tau_r = 0 collapses the kernel to a delta function: pointwise values are
// undefined and callers must use the integrated closed forms instead.
class DeltaKernelError : public DomainError {
 public:
  using DomainError::DomainError;
};

// The accumulated rate went negative (decay above 1); the one-qubit dilation
// does not exist in this regime.
class NonCpRegimeError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Adaptive quadrature ran out of subdivisions before reaching the requested
// tolerance. Carries the error estimate that was actually achieved.
class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(const std::string& msg, double achieved)
      : std::runtime_error(msg), achieved_tolerance(achieved) {}

  double achieved_tolerance;
};

}  // namespace effenv
