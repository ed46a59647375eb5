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

#ifndef GRANULE_CONVERSION_HPP_
#define GRANULE_CONVERSION_HPP_

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "granule/calendar.hpp"
#include "granule/chronology.hpp"
#include "granule/interval.hpp"

namespace granule {

// A refined endpoint whose exact position the coarse interval does not
// determine: any (granule in [first, last], kind in kinds) except the listed
// exclusions. A "-" side refines to an unbounded endpoint.
struct QualitativeEndpoint {
  bool unbounded = false;
  Granule first = 0;
  Granule last = 0;
  std::vector<EndpointKind> kinds;
  std::vector<Endpoint> exclusions;

  bool is_exact() const;
  bool admits(const Endpoint& e) const;
  // Every admitted endpoint, ordered by granule then kind.
  std::vector<Endpoint> candidates() const;
};

struct Refinement {
  QualitativeEndpoint left;
  QualitativeEndpoint right;
  // The fine interval when both ends are exact.
  std::optional<GranuleInterval> exact() const;
};

// Fine -> coarse along one atomic calendar. An Included end stays Included
// only when it is aligned with the coarse granule (first child on the left,
// last child on the right); every other end becomes Partial. Excluded ends
// are canonicalised first. Throws std::domain_error for granules outside the
// fine domain.
GranuleInterval coarsen(const GranuleInterval& i, const AtomicCalendar& calendar);

// Coarse -> fine along one atomic calendar. Included ends are exact
// (aligned children); a Partial end may land Included or Partial on any
// child except Included on the aligned one.
Refinement refine(const GranuleInterval& i, const AtomicCalendar& calendar);

// Some realisation of refine(coarsen(i)) reproduces i's canonical form.
bool roundtrip_check(const GranuleInterval& i, const AtomicCalendar& calendar);

// Multi-hop forms: a coarse-first path of edges.
GranuleInterval coarsen(const GranuleInterval& i, const std::vector<const AtomicCalendar*>& path);
Refinement refine(const GranuleInterval& i, const std::vector<const AtomicCalendar*>& path);

using Conversion = std::variant<GranuleInterval, Refinement>;

// Converts between two units of a calendar, coarsening or refining depending
// on which way the path runs. Throws std::invalid_argument when the units
// are unknown or not linked, std::domain_error for out-of-domain granules.
Conversion convert(const Calendar& calendar, const std::string& from, const std::string& to,
                   const GranuleInterval& i);

}  // namespace granule

#endif  // GRANULE_CONVERSION_HPP_
