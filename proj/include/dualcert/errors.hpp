// Copyright 2026 The dualcert Authors
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

#ifndef DUALCERT_ERRORS_HPP
#define DUALCERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dualcert {

// Base class for all dualcert failures. Subclasses name the violated
// precondition; messages name the offending value where practical.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidArgument : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct NotHermitianError : Error {
  using Error::Error;
};

struct NotABasisError : Error {
  using Error::Error;
};

struct NotOrthonormalError : Error {
  using Error::Error;
};

struct ZeroLambdaError : Error {
  using Error::Error;
};

struct WrongBasisKindError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace dualcert

#endif
