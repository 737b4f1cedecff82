// Copyright 2026 The lsfactors Authors
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

#ifndef LSF_ERRORS_HPP
#define LSF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lsf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input, mismatched shapes, out-of-range ranks.  CLI exit code 2.
class BadInput : public Error {
 public:
  using Error::Error;
};

/// A well-formed request outside the domain of an operation.  CLI exit code 3.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Exact and Approx coefficients combined without a concrete q.
class ModeMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Some 1 - chi(a_alpha)^2 vanishes: chi is not regular for w.
class NonRegular : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace lsf

#endif  // LSF_ERRORS_HPP
