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

#include "granule/billing.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "granule/algebra.hpp"
#include "granule/errors.hpp"

namespace granule {

GranuleInterval StayRecord::period() const {
  auto kind = [](bool partial) { return partial ? EndpointKind::partial : EndpointKind::included; };
  return GranuleInterval::of(admission, kind(admission_partial), exit, kind(exit_partial));
}

namespace {

std::string trim(std::string s) {
  auto blank = [](unsigned char c) { return std::isspace(c) != 0; };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), blank));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), blank).base(), s.end());
  return s;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

bool parse_flag(const std::string& s, int line) {
  if (s == "true" || s == "1") return true;
  if (s == "false" || s == "0" || s.empty()) return false;
  throw ParseError("line " + std::to_string(line) + ": expected true/false, got '" + s + "'");
}

std::string describe(const StayRecord& s) { return s.name + " (bed " + s.bed + ")"; }

std::vector<StayRecord> bed_stays(const std::vector<StayRecord>& stays, const std::string& bed) {
  std::vector<StayRecord> out;
  for (const auto& s : stays) {
    if (s.bed == bed) out.push_back(s);
  }
  auto key = [](const StayRecord& s) {
    GranuleInterval c = canonicalize(s.period());
    return std::pair(left_cut(*c.left()), right_cut(*c.right()));
  };
  std::stable_sort(out.begin(), out.end(),
                   [&](const StayRecord& a, const StayRecord& b) { return key(a) < key(b); });
  return out;
}

// Two stays fit one bed when some scenario keeps them apart with a gap.
void check_rule(const std::vector<StayRecord>& stays) {
  std::vector<std::string> conflicts;
  for (std::size_t a = 0; a < stays.size(); ++a) {
    for (std::size_t b = a + 1; b < stays.size(); ++b) {
      PossibilitySet u = unite(stays[a].period(), stays[b].period());
      bool ok = std::any_of(u.alternatives().begin(), u.alternatives().end(), disjoint_with_gaps);
      if (!ok) conflicts.push_back(describe(stays[a]) + " and " + describe(stays[b]));
    }
  }
  if (conflicts.empty()) return;
  std::string msg = "one patient per bed cannot hold:";
  for (const auto& c : conflicts) msg += "\n  " + c + " share an instant";
  throw ContradictionError(msg);
}

}  // namespace

std::vector<StayRecord> load_stays(std::istream& in, const Chronology& days) {
  std::vector<StayRecord> out;
  std::string line;
  int number = 0;
  bool header = true;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty() || trim(line)[0] == '#') continue;
    auto cells = split(line);
    if (header) {
      header = false;
      if (cells.size() >= 4 && cells[0] == "bed") continue;
    }
    if (cells.size() != 4 && cells.size() != 6) {
      throw ParseError("line " + std::to_string(number) + ": expected 6 columns, got " +
                       std::to_string(cells.size()));
    }
    StayRecord s;
    s.bed = cells[0];
    s.name = cells[1];
    try {
      s.admission = days.parse_label(cells[2]);
      s.exit = days.parse_label(cells[3]);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(number) + ": " + e.what());
    }
    if (cells.size() == 6) {
      s.admission_partial = parse_flag(cells[4], number);
      s.exit_partial = parse_flag(cells[5], number);
    }
    if (s.exit < s.admission) {
      throw ParseError("line " + std::to_string(number) + ": exit precedes admission");
    }
    out.push_back(std::move(s));
  }
  return out;
}

BillingPolicy parse_policy(const std::string& name) {
  if (name == "fair") return BillingPolicy::fair;
  if (name == "closed") return BillingPolicy::closed;
  if (name == "open") return BillingPolicy::open;
  if (name == "closed_open" || name == "closed-open") return BillingPolicy::closed_open;
  throw ParseError("unknown billing policy '" + name + "'");
}

const char* policy_name(BillingPolicy p) {
  switch (p) {
    case BillingPolicy::fair: return "fair";
    case BillingPolicy::closed: return "closed";
    case BillingPolicy::open: return "open";
    case BillingPolicy::closed_open: return "closed_open";
  }
  return "?";
}

Granule BillingReport::total(BillingPolicy p) const {
  switch (p) {
    case BillingPolicy::fair: return fair;
    case BillingPolicy::closed: return closed;
    case BillingPolicy::open: return open;
    case BillingPolicy::closed_open: return closed_open;
  }
  return 0;
}

BillingReport bill(const std::vector<StayRecord>& stays, const std::string& bed) {
  BillingReport r;
  r.bed = bed;
  r.stays = bed_stays(stays, bed);
  if (r.stays.empty()) throw std::invalid_argument("no stays recorded for bed " + bed);
  check_rule(r.stays);

  for (const auto& s : r.stays) {
    Granule x = s.admission;
    Granule y = s.exit;
    r.closed += y - x + 1;
    r.open += std::max<Granule>(0, y - x - 1);
    r.closed_open += y - x;
    GranuleInterval c = closure(canonicalize(s.period()));
    for (Granule g = c.left()->granule; g <= c.right()->granule; ++g) {
      if (coverage(s.period(), g) != GranuleCoverage::none) ++r.shares[g];
    }
  }
  // Every granule some stay touches is billed once.
  r.fair = static_cast<Granule>(r.shares.size());
  Granule first = r.shares.begin()->first;
  Granule last = r.shares.rbegin()->first;
  for (Granule g = first; g <= last; ++g) r.shares.try_emplace(g, 0);
  return r;
}

int shares(const std::vector<StayRecord>& stays, const std::string& bed, Granule g) {
  auto mine = bed_stays(stays, bed);
  check_rule(mine);
  int n = 0;
  for (const auto& s : mine) {
    if (coverage(s.period(), g) != GranuleCoverage::none) ++n;
  }
  return n;
}

Chronology day_chronology() {
  static const int month_days[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  std::vector<std::string> labels;
  for (int m = 0; m < 12; ++m) {
    for (int d = 1; d <= month_days[m]; ++d) {
      char buf[16];
      std::snprintf(buf, sizeof buf, "%02d/%02d", m + 1, d);
      labels.emplace_back(buf);
    }
  }
  return Chronology::labelled("Day", std::move(labels));
}

}  // namespace granule
