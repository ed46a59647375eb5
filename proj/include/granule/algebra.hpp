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

#ifndef GRANULE_ALGEBRA_HPP_
#define GRANULE_ALGEBRA_HPP_

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "granule/interval.hpp"

namespace granule {

// How two consecutive pieces of a union scenario relate. Pieces that overlap,
// or touch exactly on a granule boundary, are coalesced into one piece and
// never produce a junction.
enum class Junction {
  gap_disjoint,  // an uncovered stretch lies between them:  -,g) (+) (g,-
  meets,         // they touch strictly inside a granule:    -,g)(g,-
};

struct Piece {
  GranuleInterval interval;  // never Empty
  // Operand periods of a union that make up this piece (one per period that
  // was merged in). Empty for pieces produced by intersection or complement.
  std::vector<GranuleInterval> members;
};

// One exact result: Empty (no pieces), a single interval, or a union scenario
// of time-ordered disjoint pieces.
class Outcome {
 public:
  Outcome() = default;
  Outcome(std::vector<Piece> pieces, std::vector<Junction> junctions);
  static Outcome empty() { return Outcome(); }
  static Outcome of(const GranuleInterval& i);

  const std::vector<Piece>& pieces() const { return pieces_; }
  const std::vector<Junction>& junctions() const { return junctions_; }
  bool is_empty() const { return pieces_.empty(); }
  bool is_interval() const { return pieces_.size() == 1; }
  // The single piece; throws std::logic_error otherwise.
  const GranuleInterval& interval() const;

  // Same pieces (as periods), junctions and members.
  friend bool operator==(const Outcome& a, const Outcome& b);
  // Display order: more pieces first, gaps before meets, then by period.
  friend bool operator<(const Outcome& a, const Outcome& b);

 private:
  std::vector<Piece> pieces_;
  std::vector<Junction> junctions_;
};

// Same pieces and junctions, ignoring members.
bool same_shape(const Outcome& a, const Outcome& b);

// Non-empty, duplicate-free set of exact outcomes. Deterministic results are
// singletons.
class PossibilitySet {
 public:
  PossibilitySet() = default;
  explicit PossibilitySet(std::vector<Outcome> alternatives);
  static PossibilitySet single(Outcome o) { return PossibilitySet({std::move(o)}); }

  const std::vector<Outcome>& alternatives() const { return alternatives_; }
  std::size_t size() const { return alternatives_.size(); }
  bool is_deterministic() const { return alternatives_.size() == 1; }
  bool contains(const Outcome& o) const;

  friend bool operator==(const PossibilitySet&, const PossibilitySet&) = default;

 private:
  std::vector<Outcome> alternatives_;  // sorted, unique
};

// Alternatives compared with same_shape().
bool same_shapes(const PossibilitySet& a, const PossibilitySet& b);

// Expression over periods. Every operand is a distinct period; the partial
// ends of different operands are independent unknown instants, while the
// same operand keeps its instants wherever it is reused (~A shares A's
// boundary, so A & ~A is Empty and A | ~A meets A).
class Expr {
 public:
  enum class Op { operand, unite, intersect, complement, between };

  static Expr operand(const GranuleInterval& i);
  static Expr operand(const Outcome& o);
  static Expr unite(Expr a, Expr b);
  static Expr unite(std::vector<Expr> parts);
  static Expr intersect(Expr a, Expr b);
  static Expr complement(Expr a);
  static Expr between(Expr a, Expr b);

  Op op() const;
  const std::vector<Expr>& args() const;
  const Outcome& value() const;  // operand only

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// All outcomes over every ordering of the unknown partial instants. The
// domain bounds complements; without one, time is unbounded on the right.
// Throws PreconditionError from between().
PossibilitySet evaluate(const Expr& e, const Chronology* domain = nullptr);

PossibilitySet intersect(const GranuleInterval& i, const GranuleInterval& j);
PossibilitySet unite(const GranuleInterval& i, const GranuleInterval& j);
// Joint union of n periods: every ordering of all their partial instants.
PossibilitySet unite_all(const std::vector<GranuleInterval>& periods);

// Endpoint tables: unions/intersections of two rays sharing granule x, e.g.
// endpoint_union({left, partial}, {right, partial}) is "(x,- u -,x)".
struct RayEnd {
  Side side = Side::left;
  EndpointKind kind = EndpointKind::included;
  friend bool operator==(const RayEnd&, const RayEnd&) = default;
};
GranuleInterval ray(const RayEnd& end, Granule x);
PossibilitySet endpoint_union(const RayEnd& a, const RayEnd& b, Granule x = 0);
PossibilitySet endpoint_intersection(const RayEnd& a, const RayEnd& b, Granule x = 0);

// Keeps the alternatives accepted by the rule. Throws ContradictionError
// when nothing is left.
PossibilitySet resolve(const PossibilitySet& p, const std::function<bool(const Outcome&)>& rule);

// Scenario rule for shared resources (one patient per bed): no two periods
// share an instant and consecutive periods are separated by a gap.
bool disjoint_with_gaps(const Outcome& o);

// The period strictly between a and b: (~ right end of a) & (~ left end of b).
// Requires a to end before b starts under every reading of partial ends;
// throws PreconditionError otherwise.
GranuleInterval between(const GranuleInterval& a, const GranuleInterval& b);

enum class AllenRelation {
  before, meets, overlaps, starts, during, finishes, equals,
  after, met_by, overlapped_by, started_by, contains, finished_by,
};

AllenRelation inverse(AllenRelation r);
const char* name(AllenRelation r);

// Relations realisable under some placement of the partial instants.
// Throws PreconditionError for Empty operands.
std::vector<AllenRelation> allen_relations(const GranuleInterval& i, const GranuleInterval& j);

}  // namespace granule

#endif  // GRANULE_ALGEBRA_HPP_
