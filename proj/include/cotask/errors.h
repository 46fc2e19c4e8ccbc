// Copyright 2026 The Cotask Authors
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

#ifndef COTASK_ERRORS_H_
#define COTASK_ERRORS_H_

#include <stdexcept>
#include <string>

namespace cotask {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text (map files, scenario files, cache files).
struct ParseError : Error {
  using Error::Error;
};

// A configured size limit would be exceeded (trajectory enumeration,
// brute-force search). The caller should shrink the instance or raise
// the limit explicitly.
struct LimitError : Error {
  using Error::Error;
};

}  // namespace cotask

#endif  // COTASK_ERRORS_H_
