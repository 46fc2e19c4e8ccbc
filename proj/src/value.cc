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

#include "cotask/value.h"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <ostream>

#include "cotask/errors.h"

namespace cotask {

Value Value::parse(std::string_view text) {
  const std::string shown(text);
  if (text.empty()) throw ParseError("empty decimal value");

  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty() || !std::isdigit(static_cast<unsigned char>(text.front())))
    throw ParseError("malformed decimal value '" + shown + "'");

  std::int64_t whole = 0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, whole);
  if (ec == std::errc::result_out_of_range)
    throw ParseError("decimal value '" + shown + "' out of range");
  if (ec != std::errc())
    throw ParseError("malformed decimal value '" + shown + "'");

  std::int64_t frac = 0;
  if (ptr != end) {
    if (*ptr != '.')
      throw ParseError("malformed decimal value '" + shown + "'");
    ++ptr;
    int digits = 0;
    for (; ptr != end; ++ptr, ++digits) {
      if (!std::isdigit(static_cast<unsigned char>(*ptr)))
        throw ParseError("malformed decimal value '" + shown + "'");
      if (digits >= 6)
        throw ParseError("decimal value '" + shown +
                         "' has more than 6 fractional digits");
      frac = frac * 10 + (*ptr - '0');
    }
    if (digits == 0)
      throw ParseError("malformed decimal value '" + shown + "'");
    for (; digits < 6; ++digits) frac *= 10;
  }

  constexpr std::int64_t kMaxWhole = INT64_MAX / kScale - 1;
  if (whole > kMaxWhole)
    throw ParseError("decimal value '" + shown + "' out of range");

  std::int64_t micros = whole * kScale + frac;
  return from_micros(negative ? -micros : micros);
}

std::string Value::str() const {
  std::int64_t m = micros_;
  std::string sign;
  if (m < 0) {
    sign = "-";
    m = -m;
  }
  std::int64_t whole = m / kScale;
  std::int64_t frac = m % kScale;
  if (frac == 0) return sign + std::to_string(whole);

  char buf[8];
  std::snprintf(buf, sizeof buf, "%06lld", static_cast<long long>(frac));
  std::string digits(buf);
  while (digits.back() == '0') digits.pop_back();
  return sign + std::to_string(whole) + "." + digits;
}

std::ostream& operator<<(std::ostream& os, Value v) { return os << v.str(); }

}  // namespace cotask
