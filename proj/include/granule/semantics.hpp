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

#ifndef GRANULE_SEMANTICS_HPP_
#define GRANULE_SEMANTICS_HPP_

#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "granule/algebra.hpp"
#include "granule/chronology.hpp"
#include "granule/interval.hpp"

// Brute-force denotational model. Each granule of a bounded domain is split
// into sub-units and every partial end is placed at every admissible cut;
// set operations are then plain bitset operations. Nothing here reasons about
// the qualitative algebra, so its outcomes can be used to check it.
namespace granule::semantics {

// Resolution k offers k distinct cut positions strictly inside each granule,
// so a granule is made of k + 1 sub-units and two partial ends sharing a
// granule can fall before, on, or after each other as soon as k >= 2.
struct Resolution {
  int cuts = 2;
  int width() const { return cuts + 1; }
};

// A concrete realisation of a period: the covered sub-units of a domain of
// `granules` granules.
struct SubGranuleDenotation {
  Resolution resolution;
  Granule granules = 0;
  boost::dynamic_bitset<> members;

  bool empty() const { return members.none(); }
  friend bool operator==(const SubGranuleDenotation& a, const SubGranuleDenotation& b) {
    return a.resolution.cuts == b.resolution.cuts && a.granules == b.granules &&
           a.members == b.members;
  }
};

// One denotation per admissible placement of the partial ends ("-" sides
// reach the domain edges). Empty yields the single empty denotation.
std::vector<SubGranuleDenotation> realizations(const GranuleInterval& i, Granule granules,
                                               Resolution k);

// Qualitative interval (canonical kinds, bounded) whose realisations include
// d. Throws std::invalid_argument when d is not contiguous.
GranuleInterval classify(const SubGranuleDenotation& d);

enum class SetOp { unite, intersect, complement };

// Applies op to every pair of realisations of i and j (j unused for
// complement), splits results into pieces and collects the distinct
// outcomes. Union pieces that touch strictly inside a granule without
// sharing a sub-unit meet; those separated by uncovered sub-units are
// disjoint. Pieces are bounded (no "-").
PossibilitySet oracle_op(SetOp op, const GranuleInterval& i, const GranuleInterval& j,
                         Granule granules, Resolution k);

std::vector<AllenRelation> oracle_allen(const GranuleInterval& i, const GranuleInterval& j,
                                        Granule granules, Resolution k);

// Replaces "-" by explicit domain bounds in every piece and member.
Outcome clip(const Outcome& o, const Chronology& domain);
PossibilitySet clip(const PossibilitySet& p, const Chronology& domain);

// Coarse readings of a fine interval (every realisation classified at the
// coarse unit). Requires a non-periodic calendar.
std::vector<GranuleInterval> oracle_coarsen(const GranuleInterval& fine,
                                            const AtomicCalendar& calendar, Resolution k);

// Fine left and right endpoints reachable by realising a coarse interval.
std::pair<std::vector<Endpoint>, std::vector<Endpoint>> oracle_refine(
    const GranuleInterval& coarse, const AtomicCalendar& calendar, Resolution k);

}  // namespace granule::semantics

#endif  // GRANULE_SEMANTICS_HPP_
