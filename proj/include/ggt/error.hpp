// Copyright 2026 The ggt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GGT_ERROR_HPP_
#define GGT_ERROR_HPP_

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ggt {

enum class ErrorCode {
  usage,          // missing or inconsistent arguments
  input,          // malformed presentation, word or file
  precondition,   // an operation was called outside its domain
  resource,       // a configured cap was exceeded
  inconsistency,  // user-asserted constants contradicted by a computation
  oracle,         // requested oracle does not apply to this group
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::usage:
      return "usage";
    case ErrorCode::input:
      return "input";
    case ErrorCode::precondition:
      return "precondition";
    case ErrorCode::resource:
      return "resource";
    case ErrorCode::inconsistency:
      return "inconsistency";
    case ErrorCode::oracle:
      return "oracle";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string const& message)
      : std::runtime_error(message), _code(code) {}

  ErrorCode code() const noexcept { return _code; }

 private:
  ErrorCode _code;
};

inline constexpr std::size_t default_max_states = 1'000'000;

// Caps shared by every search in the library. Exceeding one throws an
// Error with ErrorCode::resource; results are never silently truncated.
struct Limits {
  std::size_t max_states = default_max_states;
  std::size_t max_geodesics = 100'000;
};

// Reads GGT_MAX_STATES, falling back to `fallback` when unset.
inline Limits limits_from_environment(Limits fallback = {}) {
  if (char const* env = std::getenv("GGT_MAX_STATES")) {
    char* end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || value == 0) {
      throw Error(ErrorCode::usage,
                  "GGT_MAX_STATES must be a positive integer, got '"
                      + std::string(env) + "'");
    }
    fallback.max_states = static_cast<std::size_t>(value);
  }
  return fallback;
}

[[noreturn]] inline void resource_exceeded(std::string_view what,
                                           std::size_t cap) {
  throw Error(ErrorCode::resource, std::string(what) + " exceeded cap of "
                                       + std::to_string(cap));
}

}  // namespace ggt

#endif  // GGT_ERROR_HPP_
