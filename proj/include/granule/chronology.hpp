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

#ifndef GRANULE_CHRONOLOGY_HPP_
#define GRANULE_CHRONOLOGY_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace granule {

// 0-based index of a granule inside a chronology.
using Granule = std::int64_t;

// Half-open run [first, last) of granule indices.
struct GranuleRange {
  Granule first = 0;
  Granule last = 0;

  Granule size() const { return last - first; }
  bool contains(Granule g) const { return first <= g && g < last; }
  friend bool operator==(const GranuleRange&, const GranuleRange&) = default;
};

// A time unit together with its domain of granules: either the finite
// ordinal n = {0, ..., n-1} or the unbounded ordinal omega.
//
// Granules are displayed either through a label table (one label per
// granule, finite domains only) or as `label_offset + index`.
class Chronology {
 public:
  static Chronology finite(std::string unit, Granule size, Granule label_offset = 0);
  static Chronology unbounded(std::string unit, Granule label_offset = 0);
  static Chronology labelled(std::string unit, std::vector<std::string> labels);

  // Unchecked constructor; use validate() (calendar.hpp) to find violations.
  Chronology(std::string unit, std::optional<Granule> size, Granule label_offset,
             std::vector<std::string> labels);

  const std::string& unit() const { return unit_; }
  bool is_finite() const { return size_.has_value(); }
  // Number of granules; nullopt for omega.
  std::optional<Granule> size() const { return size_; }
  Granule label_offset() const { return label_offset_; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool contains(Granule g) const;
  // Throws std::domain_error naming the unit when g is outside the domain.
  void require(Granule g) const;

  std::string label(Granule g) const;
  // Inverse of label(). Throws std::domain_error for unknown labels or
  // indices outside the domain, ParseError for text that is not a label.
  Granule parse_label(std::string_view text) const;

 private:
  std::string unit_;
  std::optional<Granule> size_;
  Granule label_offset_ = 0;
  std::vector<std::string> labels_;
  std::map<std::string, Granule, std::less<>> label_index_;
};

// Partition morphism from the granules of a coarse unit onto contiguous runs
// of granules of a fine unit. Coarse granule c owns the fine run of length
// run_length(c); runs follow each other without gaps starting at fine 0.
//
// Run lengths are a finite prefix optionally followed by a cycle repeated
// forever, which is how unbounded calendars (weeks of days, years of months)
// are written.
class AtomicCalendar {
 public:
  AtomicCalendar(std::string coarse_unit, std::string fine_unit,
                 std::vector<Granule> run_lengths, std::vector<Granule> cycle = {});

  const std::string& coarse_unit() const { return coarse_unit_; }
  const std::string& fine_unit() const { return fine_unit_; }
  const std::vector<Granule>& run_lengths() const { return run_lengths_; }
  const std::vector<Granule>& cycle() const { return cycle_; }

  bool is_periodic() const { return !cycle_.empty(); }
  // Coarse granules described by the runs; nullopt when periodic.
  std::optional<Granule> coarse_extent() const;
  // Fine granules covered by the runs; nullopt when periodic.
  std::optional<Granule> fine_extent() const;

  Granule run_length(Granule c) const;
  // Fine granules of coarse granule c. Throws std::domain_error when c has
  // no run.
  GranuleRange children(Granule c) const;
  // Coarse granule whose run contains fine granule f. Throws
  // std::domain_error when f is not covered by any run.
  Granule parent(Granule f) const;

  // Sum of the run lengths of coarse granules [0, c).
  Granule offset_of(Granule c) const;

 private:
  std::string coarse_unit_;
  std::string fine_unit_;
  std::vector<Granule> run_lengths_;
  std::vector<Granule> cycle_;
  std::vector<Granule> prefix_offsets_;  // size run_lengths_ + 1
  Granule cycle_total_ = 0;
};

}  // namespace granule

#endif  // GRANULE_CHRONOLOGY_HPP_
