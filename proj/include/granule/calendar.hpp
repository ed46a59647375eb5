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

#ifndef GRANULE_CALENDAR_HPP_
#define GRANULE_CALENDAR_HPP_

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "granule/chronology.hpp"

namespace granule {

struct Violation {
  std::string message;
  friend bool operator==(const Violation&, const Violation&) = default;
};

// A set of chronologies linked by atomic calendars (coarse -> fine edges).
// Well-formed calendars are directed acyclic graphs in which every pair of
// paths between the same two units induces the same parent mapping; call
// validate() to check.
class Calendar {
 public:
  Calendar() = default;
  Calendar(std::vector<Chronology> chronologies, std::vector<AtomicCalendar> edges)
      : chronologies_(std::move(chronologies)), edges_(std::move(edges)) {}

  const std::vector<Chronology>& chronologies() const { return chronologies_; }
  const std::vector<AtomicCalendar>& edges() const { return edges_; }

  // Throws std::out_of_range for unknown units.
  const Chronology& chronology(const std::string& unit) const;
  bool has_unit(const std::string& unit) const;

  // Edges of one coarse -> fine path (coarse first), or nullopt. Picks the
  // first path found; validate() guarantees all paths agree.
  std::optional<std::vector<const AtomicCalendar*>> path(const std::string& coarse,
                                                         const std::string& fine) const;
  // Every coarse -> fine path.
  std::vector<std::vector<const AtomicCalendar*>> all_paths(const std::string& coarse,
                                                            const std::string& fine) const;

 private:
  std::vector<Chronology> chronologies_;
  std::vector<AtomicCalendar> edges_;
};

// Parent of fine granule f through a coarse-first path of edges.
Granule compose_parent(const std::vector<const AtomicCalendar*>& path, Granule f);
// Fine granules below coarse granule c through a coarse-first path.
GranuleRange compose_children(const std::vector<const AtomicCalendar*>& path, Granule c);

// Empty iff the calendar is well formed. Violations are data, never thrown.
std::vector<Violation> validate(const Calendar& calendar);

// Reads the JSON calendar file format:
//   {"chronologies": [{"unit": "Day", "domain": 365 | "unbounded",
//                      "label_offset": 0, "labels": ["01/01", ...]}],
//    "edges": [{"coarse": "Month", "fine": "Day",
//               "run_lengths": [31, 28, ...], "cycle": [...]}]}
// Throws ConfigError on malformed input. Does not call validate().
Calendar load_calendar(std::istream& in);
Calendar load_calendar_file(const std::string& path);

}  // namespace granule

#endif  // GRANULE_CALENDAR_HPP_
