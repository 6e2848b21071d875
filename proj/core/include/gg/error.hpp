// Copyright 2026 The globalgate Authors
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

#include <stdexcept>
#include <string>

namespace gg {

// Base of every exception thrown by the toolkit. The subclasses mirror the
// failure categories callers dispatch on (the CLI maps them to exit codes).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Qubit count, lattice dimension or memory guard violated.
class SizeError : public Error {
 public:
  using Error::Error;
};

// Qubit or site index out of range, or coinciding where distinct is required.
class IndexError : public Error {
 public:
  using Error::Error;
};

// Input violates a mathematical precondition (non-unitary, non-Hermitian, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Mismatched lengths or qubit counts between operands.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Malformed argument that is none of the above.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Requested feature outside the supported range (e.g. moments t > 2).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// Iterative method failed to converge or produced non-finite values.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Malformed or unreadable file.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace gg
