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

#ifndef COTASK_VALUE_H_
#define COTASK_VALUE_H_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace cotask {

// Exact fixed-point quantity (six decimal places) used for task values,
// scores, and utilities. Sums and differences of config-file values are
// exact integer arithmetic, so potential-function identities can be
// asserted with operator== instead of a floating-point tolerance.
class Value {
 public:
  static constexpr std::int64_t kScale = 1'000'000;

  constexpr Value() = default;

  static constexpr Value from_micros(std::int64_t micros) {
    Value v;
    v.micros_ = micros;
    return v;
  }
  static constexpr Value from_int(std::int64_t units) {
    return from_micros(units * kScale);
  }

  // Parses a decimal literal such as "3", "2.5" or "0.000125". At most six
  // fractional digits; anything else is a ParseError.
  static Value parse(std::string_view text);

  constexpr std::int64_t micros() const { return micros_; }
  double as_double() const { return static_cast<double>(micros_) / kScale; }

  // Canonical decimal rendering with no trailing zeros: "3", "2.5", "-0.25".
  std::string str() const;

  constexpr Value& operator+=(Value o) {
    micros_ += o.micros_;
    return *this;
  }
  constexpr Value& operator-=(Value o) {
    micros_ -= o.micros_;
    return *this;
  }
  friend constexpr Value operator+(Value a, Value b) { return a += b; }
  friend constexpr Value operator-(Value a, Value b) { return a -= b; }
  friend constexpr Value operator-(Value a) { return from_micros(-a.micros_); }

  friend constexpr auto operator<=>(Value, Value) = default;

 private:
  std::int64_t micros_ = 0;
};

std::ostream& operator<<(std::ostream& os, Value v);

}  // namespace cotask

#endif  // COTASK_VALUE_H_
