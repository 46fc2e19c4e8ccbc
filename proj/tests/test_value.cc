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

#include "doctest.h"

#include "cotask/errors.h"

using cotask::ParseError;
using cotask::Value;

TEST_SUITE("value") {

TEST_CASE("parse exact decimals") {
  CHECK(Value::parse("3").micros() == 3'000'000);
  CHECK(Value::parse("2.5").micros() == 2'500'000);
  CHECK(Value::parse("0.000125").micros() == 125);
  CHECK(Value::parse("1.50") == Value::parse("1.5"));
  CHECK(Value::parse("-0.25").micros() == -250'000);
  CHECK(Value::parse("+4").micros() == 4'000'000);
  CHECK(Value::parse("0") == Value{});
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(Value::parse(""), ParseError);
  CHECK_THROWS_AS(Value::parse("abc"), ParseError);
  CHECK_THROWS_AS(Value::parse("1."), ParseError);
  CHECK_THROWS_AS(Value::parse(".5"), ParseError);
  CHECK_THROWS_AS(Value::parse("1.2345678"), ParseError);  // 7 digits
  CHECK_THROWS_AS(Value::parse("1,5"), ParseError);
  CHECK_THROWS_AS(Value::parse("99999999999999999999"), ParseError);
}

TEST_CASE("canonical rendering") {
  CHECK(Value::parse("3").str() == "3");
  CHECK(Value::parse("2.50").str() == "2.5");
  CHECK(Value::parse("0.000125").str() == "0.000125");
  CHECK(Value::parse("-1.200000").str() == "-1.2");
  CHECK(Value{}.str() == "0");
}

TEST_CASE("sums of decimal fractions are exact") {
  // The whole point of fixed-point values: no 0.1 + 0.2 != 0.3.
  CHECK(Value::parse("0.1") + Value::parse("0.2") == Value::parse("0.3"));
  Value acc;
  for (int i = 0; i < 10; ++i) acc += Value::parse("0.1");
  CHECK(acc == Value::parse("1"));
  CHECK((Value::parse("3") - Value::parse("2.999999")).micros() == 1);
}

TEST_CASE("ordering follows the number line") {
  CHECK(Value::parse("-1") < Value{});
  CHECK(Value::parse("2.5") < Value::parse("2.500001"));
  CHECK(Value::parse("10") > Value::parse("9.999999"));
}

}  // TEST_SUITE
