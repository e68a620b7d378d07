// Copyright 2026 The lazysearch Authors
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

#ifndef LAZYSEARCH_FORMAT_HPP
#define LAZYSEARCH_FORMAT_HPP

#include <charconv>
#include <string>

#include "lazysearch/cost.hpp"

namespace lazysearch {

/// Shortest decimal text that parses back to the same double; "inf" for
/// infinity.
inline std::string format_number(double value) {
  if (value == kInfinity) return "inf";
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, result.ptr);
}

}  // namespace lazysearch

#endif  // LAZYSEARCH_FORMAT_HPP
