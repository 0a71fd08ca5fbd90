// Copyright 2026 The fockc Authors
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

namespace fockc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Shape mismatch: non-square input, size not a power of two, zero modes.
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// Numerical precondition violated (non-unitary, non-Hermitian, non-finite).
class ValidationError : public Error {
  public:
    ValidationError(const std::string &what, double deviation = 0.0)
        : Error(what), deviation_(deviation) {}

    [[nodiscard]] double deviation() const noexcept { return deviation_; }

  private:
    double deviation_;
};

/// Occupation number that does not fit the qubit register.
class EncodingError : public Error {
  public:
    using Error::Error;
};

/// Input beyond a fixed computational guard (permanent size, qubit ceiling).
class SizeError : public Error {
  public:
    using Error::Error;
};

/// Sub-circuits that do not fit the target register layout.
class AssemblyError : public Error {
  public:
    using Error::Error;
};

/// Malformed circuit or unitary file.
class ParseError : public Error {
  public:
    using Error::Error;
};

/// File could not be opened, read or written.
class IoError : public Error {
  public:
    using Error::Error;
};

} // namespace fockc
