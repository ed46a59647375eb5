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

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "granule/billing.hpp"
#include "granule/errors.hpp"

using namespace granule;

namespace {

const Chronology kDays = day_chronology();

std::vector<StayRecord> fixture(const char* name) {
  std::ifstream in(std::string(GRANULE_DATA_DIR) + "/" + name);
  REQUIRE(in);
  return load_stays(in, kDays);
}

}  // namespace

TEST_CASE("hospital bed 13") {
  auto stays = fixture("stays.csv");
  REQUIRE(stays.size() == 3);
  auto r = bill(stays, "13");
  CHECK(r.fair == 12);
  CHECK(r.closed == 14);
  CHECK(r.open == 9);
  // The paper's closing remark says 13; its own table adds up to 11.
  CHECK(r.closed_open == 11);
  CHECK(r.total(BillingPolicy::fair) == 12);
  CHECK(r.stays.front().name == "George");
  CHECK(r.stays.back().name == "Jack");

  CHECK(shares(stays, "13", kDays.parse_label("03/13")) == 3);
  CHECK(shares(stays, "13", kDays.parse_label("03/10")) == 1);
  CHECK(shares(stays, "13", kDays.parse_label("03/20")) == 0);
  CHECK(r.shares.at(kDays.parse_label("03/13")) == 3);
}

TEST_CASE("billing invariants") {
  auto r = bill(fixture("stays.csv"), "13");
  CHECK(r.fair <= r.closed);
  CHECK(r.open <= r.closed_open);
  CHECK(r.closed_open <= r.closed);
  Granule span = r.shares.rbegin()->first - r.shares.begin()->first + 1;
  CHECK(span == r.fair);
  for (const auto& [g, n] : r.shares) CHECK(n >= 1);
}

TEST_CASE("closed stays break the one-patient rule") {
  auto stays = fixture("stays_closed.csv");
  CHECK_THROWS_AS(bill(stays, "13"), ContradictionError);
  CHECK_THROWS_AS(shares(stays, "13", 0), ContradictionError);
  try {
    bill(stays, "13");
  } catch (const ContradictionError& e) {
    std::string what = e.what();
    CHECK(what.find("Karl") != std::string::npos);
    CHECK(what.find("George") != std::string::npos);
  }
}

TEST_CASE("stays with gaps") {
  std::istringstream in(
      "bed,name,admit,exit,admit_partial,exit_partial\n"
      "1,A,01/01,01/03,false,false\n"
      "1,B,01/05,01/06,true,false\n"
      "2,C,01/01,01/01,false,false\n");
  auto stays = load_stays(in, kDays);
  auto r = bill(stays, "1");
  CHECK(r.fair == 5);
  CHECK(r.shares.at(3) == 0);
  CHECK(r.closed == 5);
  CHECK(bill(stays, "2").fair == 1);
  CHECK_THROWS_AS(bill(stays, "9"), std::invalid_argument);
}

TEST_CASE("CSV errors") {
  std::istringstream short_row("bed,name,admit,exit,admit_partial,exit_partial\n1,A,01/01\n");
  CHECK_THROWS_AS(load_stays(short_row, kDays), ParseError);
  std::istringstream bad_flag("bed,name,admit,exit,admit_partial,exit_partial\n1,A,01/01,01/02,yes,no\n");
  CHECK_THROWS_AS(load_stays(bad_flag, kDays), ParseError);
  std::istringstream bad_date("bed,name,admit,exit,admit_partial,exit_partial\n1,A,13/01,01/02,true,true\n");
  CHECK_THROWS_AS(load_stays(bad_date, kDays), std::domain_error);
  std::istringstream backwards("1,A,01/05,01/02,true,true\n");
  CHECK_THROWS_AS(load_stays(backwards, kDays), ParseError);
  CHECK_THROWS_AS(parse_policy("cheap"), ParseError);
  CHECK(parse_policy("closed-open") == BillingPolicy::closed_open);
}
