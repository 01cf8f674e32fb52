// Copyright 2026 The cpmorita Authors
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

#ifndef CPMORITA_ERRORS_HPP_
#define CPMORITA_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace cpmorita {

// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand shapes (or a permutation) do not match.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Input failed the Hermiticity pre-check of the eigensolver.
class NotHermitianError : public Error {
 public:
  using Error::Error;
};

// The eigensolver exhausted its sweep budget.
class NoConvergenceError : public Error {
 public:
  using Error::Error;
};

// A matrix required to be positive semidefinite has an eigenvalue below
// the negative tolerance.
class NotPsdError : public Error {
 public:
  using Error::Error;
};

// A superoperator does not describe a completely positive map.
class NotCpError : public Error {
 public:
  using Error::Error;
};

// A channel or matrix file failed validation.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace cpmorita

#endif  // CPMORITA_ERRORS_HPP_
