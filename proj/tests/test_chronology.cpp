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

#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "granule/calendar.hpp"
#include "granule/chronology.hpp"
#include "granule/errors.hpp"

using namespace granule;

TEST_CASE("children of a coarse granule") {
  AtomicCalendar months("Year", "Month", std::vector<Granule>(5, 12));
  CHECK(months.children(0) == GranuleRange{0, 12});
  // year 2002 -> [January2002, December2002] with years counted from 2000
  CHECK(months.children(2) == GranuleRange{24, 36});

  AtomicCalendar runs("C", "F", {2, 3});
  CHECK(runs.children(1) == GranuleRange{2, 5});
  CHECK(runs.children(0).last == runs.children(1).first);
  CHECK_THROWS_AS(runs.children(2), std::domain_error);
  CHECK_THROWS_AS(runs.children(-1), std::domain_error);
}

TEST_CASE("parent of a fine granule") {
  AtomicCalendar months("Year", "Month", {}, {12});
  Chronology years = Chronology::unbounded("Year", 2000);
  // June2000 -> 2000
  CHECK(years.label(months.parent(5)) == "2000");
  CHECK(months.parent(12 * 7 + 3) == 7);

  AtomicCalendar identity("A", "B", {}, {1});
  for (Granule f = 0; f < 50; ++f) CHECK(identity.parent(f) == f);

  AtomicCalendar runs("C", "F", {2, 3});
  CHECK(runs.parent(4) == 1);
  CHECK(runs.parent(1) == 0);
  CHECK_THROWS_AS(runs.parent(5), std::domain_error);
}

TEST_CASE("partition properties on a prefix") {
  AtomicCalendar months("Year", "Month", {1, 2}, {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31});
  Granule last_parent = 0;
  for (Granule f = 0; f < 2000; ++f) {
    Granule c = months.parent(f);
    CHECK(months.children(c).contains(f));
    CHECK(c >= last_parent);
    CHECK(c - last_parent <= 1);  // surjective: no coarse granule skipped
    last_parent = c;
  }
  Granule sum = 0;
  for (Granule c = 0; c < 40; ++c) {
    CHECK(months.offset_of(c) == sum);
    sum += months.run_length(c);
  }
  CHECK(months.run_length(2) == 31);
  CHECK(months.run_length(3) == 28);
  CHECK(months.run_length(14) == 31);
}

TEST_CASE("chronology labels and domain") {
  Chronology years = Chronology::finite("Year", 100, 1900);
  CHECK(years.label(14) == "1914");
  CHECK(years.parse_label("1914") == 14);
  CHECK_THROWS_AS(years.parse_label("2000"), std::domain_error);
  CHECK_THROWS_AS(years.parse_label("nineteen"), ParseError);
  CHECK_THROWS_AS(years.require(100), std::domain_error);
  CHECK(years.contains(99));
  CHECK_FALSE(years.contains(-1));

  Chronology days = Chronology::labelled("Day", {"a", "b", "c"});
  CHECK(days.size() == 3);
  CHECK(days.parse_label("c") == 2);
  CHECK_THROWS_AS(days.parse_label("d"), std::domain_error);
}

namespace {

Calendar three_level(std::vector<Granule> year_days) {
  return Calendar({Chronology::finite("Year", 2), Chronology::finite("Month", 4),
                   Chronology::finite("Day", 12)},
                  {AtomicCalendar("Year", "Month", {2, 2}), AtomicCalendar("Month", "Day", {3, 3, 3, 3}),
                   AtomicCalendar("Year", "Day", std::move(year_days))});
}

}  // namespace

TEST_CASE("validate") {
  SUBCASE("single chronology, no edges") {
    CHECK(validate(Calendar({Chronology::finite("Day", 7)}, {})).empty());
  }
  SUBCASE("run length 0 names the edge") {
    auto v = validate(Calendar({Chronology::finite("Month", 2), Chronology::finite("Day", 3)},
                               {AtomicCalendar("Month", "Day", {3, 0})}));
    REQUIRE(v.size() == 1);
    CHECK(v[0].message.find("Month") != std::string::npos);
    CHECK(v[0].message.find("Day") != std::string::npos);
  }
  SUBCASE("agreeing paths") { CHECK(validate(three_level({6, 6})).empty()); }
  SUBCASE("mismatched paths Day->Month->Year vs Day->Year") {
    auto v = validate(three_level({5, 7}));
    CHECK(v.size() == 1);
  }
  SUBCASE("cycle") {
    auto v = validate(Calendar({Chronology::unbounded("A"), Chronology::unbounded("B")},
                               {AtomicCalendar("A", "B", {}, {1}), AtomicCalendar("B", "A", {}, {1})}));
    CHECK(v.size() == 1);
  }
  SUBCASE("runs not tiling the fine domain") {
    auto v = validate(Calendar({Chronology::finite("Month", 2), Chronology::finite("Day", 10)},
                               {AtomicCalendar("Month", "Day", {3, 4})}));
    CHECK(v.size() == 1);
  }
  SUBCASE("unbounded unit without cycle") {
    auto v = validate(Calendar({Chronology::unbounded("Month"), Chronology::unbounded("Day")},
                               {AtomicCalendar("Month", "Day", {30})}));
    CHECK(v.size() == 1);
  }
  SUBCASE("duplicate and empty units") {
    CHECK(validate(Calendar({Chronology::finite("Day", 7), Chronology::finite("Day", 3)}, {})).size() == 1);
    CHECK(validate(Calendar({Chronology::finite("", 7)}, {})).size() == 1);
    CHECK(validate(Calendar({Chronology("Day", Granule{0}, 0, {})}, {})).size() == 1);
  }
}

TEST_CASE("multi-hop composition") {
  Calendar cal = three_level({6, 6});
  auto path = cal.path("Year", "Day");
  REQUIRE(path);
  CHECK(compose_children(*path, 1) == GranuleRange{6, 12});
  CHECK(compose_parent(*path, 7) == 1);
  CHECK(cal.all_paths("Year", "Day").size() == 2);
  CHECK_FALSE(cal.path("Day", "Year"));
}

TEST_CASE("load calendar JSON") {
  std::istringstream in(R"({
    "chronologies": [
      {"unit": "Year", "domain": "unbounded", "label_offset": 1900},
      {"unit": "Month", "domain": "unbounded"}
    ],
    "edges": [{"coarse": "Year", "fine": "Month", "run_lengths": [], "cycle": [12]}]
  })");
  Calendar cal = load_calendar(in);
  CHECK(validate(cal).empty());
  CHECK(cal.chronology("Year").label(18) == "1918");
  CHECK(cal.path("Year", "Month"));

  std::istringstream bad("{\"chronologies\": 3}");
  CHECK_THROWS_AS(load_calendar(bad), ConfigError);
  std::istringstream junk("not json");
  CHECK_THROWS_AS(load_calendar(junk), ConfigError);
  CHECK_THROWS_AS(load_calendar_file("/nonexistent/calendar.json"), ConfigError);
}
