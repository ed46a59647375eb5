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

#ifndef GRANULE_INTERVAL_HPP_
#define GRANULE_INTERVAL_HPP_

#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "granule/chronology.hpp"

namespace granule {

// How an end-granule belongs to a period. Partial means only a proper
// section of the granule is taken: a finishing section on the left, a
// beginning section on the right. Nothing is said about how large it is.
enum class EndpointKind { included, partial, excluded };

enum class Side { left, right };

// A typed end-granule. The side is given by the position in the interval.
struct Endpoint {
  Granule granule = 0;
  EndpointKind kind = EndpointKind::included;

  friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

// `nullopt` marks an open-ended side, written "-" ("-,1918)", "(1939,-").
// A left "-" starts at the beginning of the timeline (granule 0); a right
// "-" runs to the end of the domain.
using Bound = std::optional<Endpoint>;

// Position of an interval boundary on the underlying timeline: either the
// instant where `granule` begins (`inside == false`) or an unknown instant
// strictly inside `granule`. (g, false) < (g, true) < (g + 1, false).
struct Cut {
  Granule granule = 0;
  bool inside = false;

  friend auto operator<=>(const Cut&, const Cut&) = default;
};

Cut left_cut(const Endpoint& e);
Cut right_cut(const Endpoint& e);

// The nine-type granule interval (plus open-ended rays), or Empty.
//
// Endpoint kinds are kept exactly as written; canonicalize() gives the
// normal form used for comparisons. Empty is its own value and never stored
// as crossed endpoints.
class GranuleInterval {
 public:
  // Empty.
  GranuleInterval() = default;

  static GranuleInterval empty() { return GranuleInterval(); }
  // Returns Empty when the bounds denote no stretch of time, e.g. ]5,6[.
  static GranuleInterval from(Bound left, Bound right);
  static GranuleInterval of(Granule left, EndpointKind left_kind, Granule right,
                            EndpointKind right_kind) {
    return from(Endpoint{left, left_kind}, Endpoint{right, right_kind});
  }
  // Domain-checked construction; throws std::domain_error.
  static GranuleInterval make(const Chronology& chronology, Granule left,
                              EndpointKind left_kind, Granule right, EndpointKind right_kind);

  bool is_empty() const { return empty_; }
  // Both sides bounded.
  bool is_bounded() const { return !empty_ && left_ && right_; }
  const Bound& left() const { return left_; }
  const Bound& right() const { return right_; }

  friend bool operator==(const GranuleInterval&, const GranuleInterval&) = default;
  friend auto operator<=>(const GranuleInterval&, const GranuleInterval&) = default;

 private:
  GranuleInterval(Bound left, Bound right) : empty_(false), left_(left), right_(right) {}

  bool empty_ = true;
  Bound left_;
  Bound right_;
};

// Does a period with these bounds cover any stretch of time?
bool denotes_time(const Bound& left, const Bound& right);

// Rewrites Excluded ends onto the neighbouring granule as Included:
// ]a -> [a+1, b[ -> b-1]. Partial and Included ends are untouched.
GranuleInterval canonicalize(const GranuleInterval& i);

// Canonical form that also identifies "[0" with "-" on the left (the
// timeline starts at granule 0). Two intervals denote the same period iff
// their normal forms are equal.
GranuleInterval normal_form(const GranuleInterval& i);

// Replaces "-" sides by the explicit first/last granule of a finite domain.
GranuleInterval clip(const GranuleInterval& i, const Chronology& domain);

// The endpoint of the adjacent period meeting this one at the same boundary:
// [x,- <-> -,x[   (x,- <-> -,x)   ]x,- <-> -,x].
// Returns the kind of the complementary endpoint (which sits on the other
// side, same granule).
EndpointKind complement_kind(EndpointKind kind);
Endpoint complement_endpoint(const Endpoint& e);

// Up to two maximal intervals of `domain` disjoint from i, ordered in time.
// Outer sides are written "-"; use clip() to spell the domain bounds.
std::vector<GranuleInterval> complement(const GranuleInterval& i, const Chronology& domain);

// All kinds become Excluded / Included, granules unchanged.
GranuleInterval opening(const GranuleInterval& i);
GranuleInterval closure(const GranuleInterval& i);

// How an interval meets one granule.
enum class GranuleCoverage {
  none,
  full,           // [g]
  left_aligned,   // [g)  beginning section
  interior,       // (g)  strict inner section
  right_aligned,  // (g]  finishing section
};

GranuleCoverage coverage(const GranuleInterval& i, Granule g);

// Number of granules of the closure of the canonical form; 0 for Empty.
// Throws std::domain_error for open-ended intervals.
Granule length(const GranuleInterval& i);

struct GranuleCounts {
  Granule full = 0;
  Granule partial = 0;
  friend bool operator==(const GranuleCounts&, const GranuleCounts&) = default;
};

// Full and partially covered granules. Throws std::domain_error for
// open-ended intervals.
GranuleCounts counts(const GranuleInterval& i);

}  // namespace granule

#endif  // GRANULE_INTERVAL_HPP_
