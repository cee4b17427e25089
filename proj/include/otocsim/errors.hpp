// Copyright 2026 The otocsim Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace otocsim {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Register size, matrix dimension or vector length mismatch.
class SizeError : public Error {
   public:
    using Error::Error;
};

/// Qubit index out of range, or control/target overlap.
class IndexError : public Error {
   public:
    using Error::Error;
};

/// A matrix that must be unitary is not (max |U^dagger U - I| above tolerance).
class UnitarityError : public Error {
   public:
    using Error::Error;
};

/// A matrix that must be Hermitian is not.
class SymmetryError : public Error {
   public:
    using Error::Error;
};

/// Argument outside the documented domain.
class ArgumentError : public Error {
   public:
    using Error::Error;
};

/// Requested feature is valid in principle but not supported by this build.
class CapabilityError : public Error {
   public:
    using Error::Error;
};

/// A circuit op cannot be written in the QASM subset.
class EmissionError : public Error {
   public:
    using Error::Error;
};

/// Parse failure with a 1-based source location.
class SyntaxError : public Error {
   public:
    SyntaxError(const std::string &message, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

   private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace otocsim
