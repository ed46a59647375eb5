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

#include "granule/chronology.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <utility>

#include "granule/errors.hpp"

namespace granule {

Chronology Chronology::finite(std::string unit, Granule size, Granule label_offset) {
  return Chronology(std::move(unit), size, label_offset, {});
}

Chronology Chronology::unbounded(std::string unit, Granule label_offset) {
  return Chronology(std::move(unit), std::nullopt, label_offset, {});
}

Chronology Chronology::labelled(std::string unit, std::vector<std::string> labels) {
  auto n = static_cast<Granule>(labels.size());
  return Chronology(std::move(unit), n, 0, std::move(labels));
}

Chronology::Chronology(std::string unit, std::optional<Granule> size, Granule label_offset,
                       std::vector<std::string> labels)
    : unit_(std::move(unit)),
      size_(size),
      label_offset_(label_offset),
      labels_(std::move(labels)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    label_index_.emplace(labels_[i], static_cast<Granule>(i));
  }
}

bool Chronology::contains(Granule g) const {
  return g >= 0 && (!size_ || g < *size_);
}

void Chronology::require(Granule g) const {
  if (!contains(g)) {
    throw std::domain_error("granule " + std::to_string(g) + " is outside the domain of " +
                            unit_);
  }
}

std::string Chronology::label(Granule g) const {
  if (!labels_.empty() && g >= 0 && g < static_cast<Granule>(labels_.size())) {
    return labels_[static_cast<std::size_t>(g)];
  }
  return std::to_string(g + label_offset_);
}

Granule Chronology::parse_label(std::string_view text) const {
  if (!labels_.empty()) {
    auto it = label_index_.find(text);
    if (it != label_index_.end()) return it->second;
  }
  Granule value = 0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    if (!labels_.empty()) {
      throw std::domain_error("unknown " + unit_ + " label '" + std::string(text) + "'");
    }
    throw ParseError("'" + std::string(text) + "' is not a granule label of " + unit_);
  }
  Granule g = value - label_offset_;
  require(g);
  return g;
}

AtomicCalendar::AtomicCalendar(std::string coarse_unit, std::string fine_unit,
                               std::vector<Granule> run_lengths, std::vector<Granule> cycle)
    : coarse_unit_(std::move(coarse_unit)),
      fine_unit_(std::move(fine_unit)),
      run_lengths_(std::move(run_lengths)),
      cycle_(std::move(cycle)) {
  prefix_offsets_.reserve(run_lengths_.size() + 1);
  prefix_offsets_.push_back(0);
  for (Granule len : run_lengths_) prefix_offsets_.push_back(prefix_offsets_.back() + len);
  for (Granule len : cycle_) cycle_total_ += len;
}

std::optional<Granule> AtomicCalendar::coarse_extent() const {
  if (is_periodic()) return std::nullopt;
  return static_cast<Granule>(run_lengths_.size());
}

std::optional<Granule> AtomicCalendar::fine_extent() const {
  if (is_periodic()) return std::nullopt;
  return prefix_offsets_.back();
}

Granule AtomicCalendar::run_length(Granule c) const {
  if (c < 0) throw std::domain_error("negative " + coarse_unit_ + " granule");
  auto n = static_cast<Granule>(run_lengths_.size());
  if (c < n) return run_lengths_[static_cast<std::size_t>(c)];
  if (!is_periodic()) {
    throw std::domain_error(coarse_unit_ + " granule " + std::to_string(c) +
                            " has no run towards " + fine_unit_);
  }
  auto k = static_cast<Granule>(cycle_.size());
  return cycle_[static_cast<std::size_t>((c - n) % k)];
}

Granule AtomicCalendar::offset_of(Granule c) const {
  auto n = static_cast<Granule>(run_lengths_.size());
  if (c <= n) return prefix_offsets_[static_cast<std::size_t>(c)];
  Granule rest = c - n;
  auto k = static_cast<Granule>(cycle_.size());
  Granule offset = prefix_offsets_.back() + (rest / k) * cycle_total_;
  for (Granule i = 0; i < rest % k; ++i) offset += cycle_[static_cast<std::size_t>(i)];
  return offset;
}

GranuleRange AtomicCalendar::children(Granule c) const {
  Granule len = run_length(c);  // validates c
  Granule first = offset_of(c);
  return {first, first + len};
}

Granule AtomicCalendar::parent(Granule f) const {
  if (f < 0) throw std::domain_error("negative " + fine_unit_ + " granule");
  if (f < prefix_offsets_.back()) {
    // Last prefix offset <= f; zero-length runs are skipped by upper_bound.
    auto it = std::upper_bound(prefix_offsets_.begin(), prefix_offsets_.end(), f);
    return static_cast<Granule>(it - prefix_offsets_.begin()) - 1;
  }
  if (!is_periodic() || cycle_total_ <= 0) {
    throw std::domain_error(fine_unit_ + " granule " + std::to_string(f) +
                            " is not covered by any " + coarse_unit_);
  }
  Granule rest = f - prefix_offsets_.back();
  auto k = static_cast<Granule>(cycle_.size());
  Granule c = static_cast<Granule>(run_lengths_.size()) + (rest / cycle_total_) * k;
  rest %= cycle_total_;
  for (Granule len : cycle_) {
    if (rest < len) return c;
    rest -= len;
    ++c;
  }
  return c;  // unreachable for positive cycle totals
}

}  // namespace granule
