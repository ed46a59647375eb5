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

#ifndef GRANULE_BILLING_HPP_
#define GRANULE_BILLING_HPP_

#include <istream>
#include <map>
#include <string>
#include <vector>

#include "granule/chronology.hpp"
#include "granule/interval.hpp"

namespace granule {

struct StayRecord {
  std::string bed;
  std::string name;
  Granule admission = 0;
  Granule exit = 0;
  bool admission_partial = false;
  bool exit_partial = false;

  // Included ends unless flagged partial.
  GranuleInterval period() const;
};

// Columns bed,name,admit,exit,admit_partial,exit_partial with a header row.
// Throws ParseError naming the line, std::domain_error for unknown labels.
std::vector<StayRecord> load_stays(std::istream& in, const Chronology& days);

enum class BillingPolicy { fair, closed, open, closed_open };

BillingPolicy parse_policy(const std::string& name);
const char* policy_name(BillingPolicy p);

struct BillingReport {
  std::string bed;
  std::vector<StayRecord> stays;  // sorted by period
  Granule fair = 0;
  Granule closed = 0;       // sum of y-x+1
  Granule open = 0;         // sum of max{0,y-x-1}
  Granule closed_open = 0;  // sum of y-x
  // Granules of the occupied span mapped to how many stays touch them.
  std::map<Granule, int> shares;

  Granule total(BillingPolicy p) const;
};

// Checks the one-patient-per-bed rule (every two stays disjoint with an
// uncovered stretch between them) and computes the totals. Throws
// ContradictionError naming the conflicting stays, std::invalid_argument
// when the bed has no stays.
BillingReport bill(const std::vector<StayRecord>& stays, const std::string& bed);

// Number of the bed's stays touching granule g. Applies the same rule.
int shares(const std::vector<StayRecord>& stays, const std::string& bed, Granule g);

// 365 days labelled MM/DD, January 1st at index 0.
Chronology day_chronology();

}  // namespace granule

#endif  // GRANULE_BILLING_HPP_
