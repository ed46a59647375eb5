// Copyright 2026 The Granule Authors
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

#include <stdexcept>

#include "doctest.h"
#include "granule/algebra.hpp"
#include "granule/billing.hpp"
#include "granule/errors.hpp"
#include "granule/text.hpp"

using namespace granule;

namespace {

const Chronology kLine = Chronology::unbounded("Year");

std::string eval(const char* text) {
  return render(evaluate(parse_expression(text, kLine)), kLine);
}

}  // namespace

TEST_CASE("parse and render intervals") {
  for (const char* s : {"(1914,1918)", "[3,7)", "]2,7[", "-,1918)", "(1918,-", "-,-", "(5)", "[5]",
                        "[5)", "(5]", "EMPTY", "]4,-"}) {
    CHECK(render(parse_interval(s, kLine), kLine) == s);
  }
  CHECK(render(parse_interval(" ( 1914 , 1918 ) ", kLine), kLine) == "(1914,1918)");
  CHECK(parse_interval("[5,5]", kLine) == parse_interval("[5]", kLine));

  Chronology days = day_chronology();
  auto i = parse_interval("[03/13, 03/17]", days);
  CHECK(i == GranuleInterval::of(71, EndpointKind::included, 75, EndpointKind::included));
  CHECK(render(i, days) == "[03/13,03/17]");

  Chronology years = Chronology::finite("Year", 200, 1850);
  CHECK(render(parse_interval("(1914,1918)", years), years) == "(1914,1918)");
}

TEST_CASE("parse errors carry a position") {
  try {
    parse_interval("[3,7", kLine);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() != std::string::npos);
  }
  CHECK_THROWS_AS(parse_interval("3,7]", kLine), ParseError);
  CHECK_THROWS_AS(parse_interval("[3,7] junk", kLine), ParseError);
  CHECK_THROWS_AS(parse_interval("(-,7)", kLine), ParseError);
  CHECK_THROWS_AS(parse_interval("[a,7]", kLine), ParseError);
  CHECK_THROWS_AS(parse_interval("[02/30,03/01]", day_chronology()), std::domain_error);
  CHECK_THROWS_AS(parse_expression("(3,5) &", kLine), ParseError);
  CHECK_THROWS_AS(parse_expression("between((1,2))", kLine), ParseError);
  CHECK_THROWS_AS(parse_expression("((1,2]", kLine), ParseError);
}

TEST_CASE("eval") {
  CHECK(eval("between((1914,1918),(1939,1945))") == "(1918,1939)");
  CHECK(eval("~ -,1918)") == "(1918,-");
  CHECK(eval("(3,5) & (5,9)") == "{ (5) ; EMPTY }");
  CHECK(eval("-,5) | (5,-") == "{ -,5) (+) (5,- ; -,5)(5,- ; -,- }");
  CHECK(eval("~(1918,1939)") == "-,1918) (+) (1939,-");
  CHECK(eval("(1918,- & -,1939)") == "(1918,1939)");
  CHECK(eval("~ -,1918) & ~ (1939,-") == "(1918,1939)");
  CHECK(eval("[1,3] | [5,7] & [6,9]") == "[1,3] (+) [6,7]");
  CHECK(eval("([1,3] | [5,7]) & [2,9]") == "[2,3] (+) [5,7]");
  CHECK(eval("EMPTY | [2,4]") == "[2,4]");
  CHECK(eval("~EMPTY") == "-,-");
  CHECK(eval("~~[2,4]") == "[2,4]");
}

TEST_CASE("render qualitative endpoints") {
  QualitativeEndpoint q;
  q.first = 3;
  q.last = 5;
  q.kinds = {EndpointKind::included, EndpointKind::partial};
  q.exclusions = {{3, EndpointKind::included}};
  CHECK(render(q, Side::left, kLine) == "{ [4..5 ; (3..5 }");
  QualitativeEndpoint exact;
  exact.first = exact.last = 7;
  exact.kinds = {EndpointKind::included};
  CHECK(render(exact, Side::right, kLine) == "7]");
  QualitativeEndpoint ray;
  ray.unbounded = true;
  CHECK(render(ray, Side::right, kLine) == "-");
}
