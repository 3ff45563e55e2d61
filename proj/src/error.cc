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

#include "symlp/error.h"

namespace symlp {
namespace {

std::string WithPosition(const std::string& message, std::size_t line,
                         std::size_t column) {
  if (line == 0) return message;
  std::string out = "line " + std::to_string(line);
  if (column != 0) out += ", column " + std::to_string(column);
  return out + ": " + message;
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t line,
                       std::size_t column)
    : Error(WithPosition(message, line, column)),
      bare_(message),
      line_(line),
      column_(column) {}

ClosureLimitExceeded::ClosureLimitExceeded(std::size_t limit)
    : Error("group closure exceeds limit of " + std::to_string(limit) +
            " elements"),
      limit_(limit) {}

DimensionTooLarge::DimensionTooLarge(std::size_t n, std::size_t cap)
    : Error("dimension " + std::to_string(n) +
            " exceeds the full-detection cap of " + std::to_string(cap) +
            "; supply generators instead") {}

}  // namespace symlp
