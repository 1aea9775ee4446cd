// Copyright 2026 The wideknap Authors
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

namespace wideknap {

// Base of every error raised by the core. The C API maps the concrete type
// to a status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// A documented search budget ran out before an answer was reached.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed; indicates a bug or an input that
// breaks an assumption the caller promised.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace wideknap
