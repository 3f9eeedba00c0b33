// Copyright 2026 The xeq Authors.
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

#ifndef XEQ_ERROR_H_
#define XEQ_ERROR_H_

#include <stdexcept>
#include <string>

namespace xeq {

// Malformed input: dimension mismatch, invalid distribution, bad JSON, ...
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A materialization or group-closure size cap was exceeded.
class CapExceeded : public InputError {
 public:
  using InputError::InputError;
};

// A postcondition that the theory guarantees failed at runtime. Seeing one
// of these means a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

#define XEQ_REQUIRE(cond, msg)                 \
  do {                                         \
    if (!(cond)) throw ::xeq::InputError(msg); \
  } while (0)

#define XEQ_ASSERT(cond, msg)                                          \
  do {                                                                 \
    if (!(cond))                                                       \
      throw ::xeq::InternalError(std::string(__FILE__) + ":" +         \
                                 std::to_string(__LINE__) + ": " + msg); \
  } while (0)

}  // namespace xeq

#endif  // XEQ_ERROR_H_
