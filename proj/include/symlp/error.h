// Copyright 2026 The symlp Authors
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

#ifndef SYMLP_ERROR_H_
#define SYMLP_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symlp {

// Base class for every error the library raises on bad input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Malformed text. line/column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line = 0,
             std::size_t column = 0);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& bare_message() const { return bare_; }

 private:
  std::string bare_;
  std::size_t line_;
  std::size_t column_;
};

class InvalidProblem : public Error {
 public:
  using Error::Error;
};

// Image array that is not a bijection, or operands over different n.
class InvalidPermutation : public Error {
 public:
  using Error::Error;
};

class ClosureLimitExceeded : public Error {
 public:
  explicit ClosureLimitExceeded(std::size_t limit);
  std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
};

class NotSignedPermutation : public Error {
 public:
  using Error::Error;
};

class DimensionTooLarge : public Error {
 public:
  DimensionTooLarge(std::size_t n, std::size_t cap);
};

class UtilityNotOrbitConstant : public Error {
 public:
  using Error::Error;
};

class InfeasiblePoint : public Error {
 public:
  using Error::Error;
};

}  // namespace symlp

#endif  // SYMLP_ERROR_H_
