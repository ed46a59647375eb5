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

#include "granule/algebra.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "granule/errors.hpp"

namespace granule {

// ---------------------------------------------------------------------------
// Outcome / PossibilitySet
// ---------------------------------------------------------------------------

Outcome::Outcome(std::vector<Piece> pieces, std::vector<Junction> junctions)
    : pieces_(std::move(pieces)), junctions_(std::move(junctions)) {
  if (!pieces_.empty() && junctions_.size() + 1 != pieces_.size()) {
    throw std::invalid_argument("a scenario needs one junction between consecutive pieces");
  }
  for (const auto& p : pieces_) {
    if (p.interval.is_empty()) throw std::invalid_argument("scenario piece is Empty");
  }
}

Outcome Outcome::of(const GranuleInterval& i) {
  if (i.is_empty()) return Outcome();
  return Outcome({Piece{i, {}}}, {});
}

const GranuleInterval& Outcome::interval() const {
  if (pieces_.size() != 1) throw std::logic_error("outcome is not a single interval");
  return pieces_.front().interval;
}

namespace {

struct OutcomeKey {
  std::size_t pieces = 0;
  std::vector<Junction> junctions;
  std::vector<GranuleInterval> periods;
  std::vector<std::vector<GranuleInterval>> members;
};

OutcomeKey key_of(const Outcome& o, bool with_members) {
  OutcomeKey k;
  k.pieces = o.pieces().size();
  k.junctions = o.junctions();
  for (const auto& p : o.pieces()) {
    k.periods.push_back(normal_form(p.interval));
    if (with_members) {
      std::vector<GranuleInterval> m;
      for (const auto& i : p.members) m.push_back(normal_form(i));
      std::sort(m.begin(), m.end());
      k.members.push_back(std::move(m));
    }
  }
  return k;
}

bool key_less(const OutcomeKey& a, const OutcomeKey& b) {
  // More pieces first so that Empty is listed last.
  return std::tie(b.pieces, a.junctions, a.periods, a.members) <
         std::tie(a.pieces, b.junctions, b.periods, b.members);
}

bool key_equal(const OutcomeKey& a, const OutcomeKey& b) {
  return std::tie(a.pieces, a.junctions, a.periods, a.members) ==
         std::tie(b.pieces, b.junctions, b.periods, b.members);
}

}  // namespace

bool operator==(const Outcome& a, const Outcome& b) {
  return key_equal(key_of(a, true), key_of(b, true));
}

bool operator<(const Outcome& a, const Outcome& b) {
  return key_less(key_of(a, true), key_of(b, true));
}

bool same_shape(const Outcome& a, const Outcome& b) {
  return key_equal(key_of(a, false), key_of(b, false));
}

PossibilitySet::PossibilitySet(std::vector<Outcome> alternatives)
    : alternatives_(std::move(alternatives)) {
  std::stable_sort(alternatives_.begin(), alternatives_.end());
  alternatives_.erase(std::unique(alternatives_.begin(), alternatives_.end()),
                      alternatives_.end());
}

bool PossibilitySet::contains(const Outcome& o) const {
  return std::find(alternatives_.begin(), alternatives_.end(), o) != alternatives_.end();
}

bool same_shapes(const PossibilitySet& a, const PossibilitySet& b) {
  auto covered = [](const PossibilitySet& x, const PossibilitySet& y) {
    for (const auto& o : x.alternatives()) {
      bool found = false;
      for (const auto& p : y.alternatives()) found = found || same_shape(o, p);
      if (!found) return false;
    }
    return true;
  };
  return covered(a, b) && covered(b, a);
}

// ---------------------------------------------------------------------------
// Expression tree
// ---------------------------------------------------------------------------

struct Expr::Node {
  Op op = Op::operand;
  std::vector<Expr> args;
  Outcome value;
};

Expr Expr::operand(const GranuleInterval& i) { return operand(Outcome::of(i)); }

Expr Expr::operand(const Outcome& o) {
  auto n = std::make_shared<Node>();
  n->value = o;
  return Expr(std::move(n));
}

Expr Expr::unite(Expr a, Expr b) { return unite(std::vector<Expr>{std::move(a), std::move(b)}); }

Expr Expr::unite(std::vector<Expr> parts) {
  if (parts.empty()) throw std::invalid_argument("union of nothing");
  auto n = std::make_shared<Node>();
  n->op = Op::unite;
  n->args = std::move(parts);
  return Expr(std::move(n));
}

Expr Expr::intersect(Expr a, Expr b) {
  auto n = std::make_shared<Node>();
  n->op = Op::intersect;
  n->args = {std::move(a), std::move(b)};
  return Expr(std::move(n));
}

Expr Expr::complement(Expr a) {
  auto n = std::make_shared<Node>();
  n->op = Op::complement;
  n->args = {std::move(a)};
  return Expr(std::move(n));
}

Expr Expr::between(Expr a, Expr b) {
  auto n = std::make_shared<Node>();
  n->op = Op::between;
  n->args = {std::move(a), std::move(b)};
  return Expr(std::move(n));
}

Expr::Op Expr::op() const { return node_->op; }
const std::vector<Expr>& Expr::args() const { return node_->args; }
const Outcome& Expr::value() const {
  if (node_->op != Op::operand) throw std::logic_error("not an operand");
  return node_->value;
}

// ---------------------------------------------------------------------------
// Cut-order engine
//
// Every partial end of an operand is an unknown instant strictly inside its
// granule. Instants in different granules are ordered by their granules;
// instants sharing a granule may come in any order, ties included, subject to
// the constraints of their operand (a period's start precedes its end, a gap
// junction separates, a meets junction coincides). The engine enumerates all
// weak orders per granule, evaluates the expression on each concrete order
// and collects the distinct qualitative outcomes.
// ---------------------------------------------------------------------------

namespace {

constexpr Granule kForever = std::numeric_limits<Granule>::max();

// Concrete instant: start of granule g (sub == 0) or the (sub-1)-th distinct
// inner instant of g.
struct Key {
  Granule g = 0;
  int sub = 0;
  friend auto operator<=>(const Key&, const Key&) = default;
};

struct LeafEnd {
  Bound written;
  Cut cut;
  int id = -1;  // >= 0 for inner instants
};

struct LeafPiece {
  LeafEnd left;
  LeafEnd right;
  int member = -1;
};

struct Leaf {
  std::vector<LeafPiece> pieces;
  std::vector<Junction> junctions;
};

enum class Rel { less, equal };

struct Constraint {
  int a;
  int b;
  Rel rel;
};

struct CPiece {
  Key s;
  Key e;
  Bound lw;
  Bound rw;
  std::vector<int> members;
};

struct Value {
  std::vector<CPiece> pieces;
  std::vector<Junction> junctions;
};

class CutSpace {
 public:
  CutSpace(const Expr& root, const Chronology* domain) : domain_(domain) { collect(root); }

  // Calls f(rank) for every admissible assignment of ranks to instants.
  template <class F>
  void for_each_order(F&& f) const {
    std::vector<std::vector<std::vector<int>>> choices;  // per granule, per option, ranks
    std::vector<const std::vector<int>*> groups;
    for (const auto& [g, ids] : groups_) {
      std::vector<std::vector<int>> options;
      std::vector<int> ranks(ids.size(), 0);
      enumerate(ids, (1u << ids.size()) - 1, 0, ranks, options);
      if (options.empty()) return;  // contradictory operands: no realisation
      choices.push_back(std::move(options));
      groups.push_back(&ids);
    }
    std::vector<int> rank(granule_of_.size(), 0);
    std::vector<std::size_t> pick(choices.size(), 0);
    while (true) {
      for (std::size_t k = 0; k < choices.size(); ++k) {
        const auto& ids = *groups[k];
        const auto& r = choices[k][pick[k]];
        for (std::size_t i = 0; i < ids.size(); ++i) rank[static_cast<std::size_t>(ids[i])] = r[i];
      }
      f(rank);
      std::size_t k = 0;
      for (; k < choices.size(); ++k) {
        if (++pick[k] < choices[k].size()) break;
        pick[k] = 0;
      }
      if (k == choices.size()) break;
    }
  }

  Value eval(const Expr& e, const std::vector<int>& rank) const {
    switch (e.op()) {
      case Expr::Op::operand: return leaf_value(leaf_index_.at(e_id(e)), rank);
      case Expr::Op::unite: {
        std::vector<CPiece> atoms;
        for (const auto& a : e.args()) {
          Value v = eval(a, rank);
          for (auto& p : v.pieces) atoms.push_back(std::move(p));
        }
        return assemble(std::move(atoms));
      }
      case Expr::Op::intersect: return meet(eval(e.args()[0], rank), eval(e.args()[1], rank));
      case Expr::Op::complement: return complement_of(eval(e.args()[0], rank));
      case Expr::Op::between: return gap_between(eval(e.args()[0], rank), eval(e.args()[1], rank));
    }
    return {};
  }

  Outcome to_outcome(const Value& v) const {
    std::vector<Piece> pieces;
    for (const auto& p : v.pieces) {
      GranuleInterval i = GranuleInterval::from(p.lw, p.rw);
      if (i.is_empty()) throw std::logic_error("engine produced an empty piece");
      Piece piece{i, {}};
      for (int m : p.members) piece.members.push_back(members_[static_cast<std::size_t>(m)]);
      pieces.push_back(std::move(piece));
    }
    return Outcome(std::move(pieces), v.junctions);
  }

  Key key_of(const LeafEnd& end, Side side, const std::vector<int>& rank) const {
    if (!end.written) return side == Side::left ? Key{0, 0} : domain_end();
    if (end.id >= 0) return {end.cut.granule, 1 + rank[static_cast<std::size_t>(end.id)]};
    return {end.cut.granule, 0};
  }

  const Leaf& leaf(const Expr& e) const { return leaves_[leaf_index_.at(e_id(e))]; }

 private:
  static const void* e_id(const Expr& e) { return &e.value(); }

  Key domain_end() const {
    if (domain_ && domain_->size()) return {*domain_->size(), 0};
    return {kForever, 0};
  }

  void collect(const Expr& e) {
    if (e.op() != Expr::Op::operand) {
      for (const auto& a : e.args()) collect(a);
      return;
    }
    const void* id = e_id(e);
    if (leaf_index_.count(id)) return;  // same operand reused
    leaf_index_[id] = leaves_.size();
    Leaf leaf;
    const Outcome& o = e.value();
    for (const auto& p : o.pieces()) {
      LeafPiece lp;
      lp.left = make_end(p.interval.left(), Side::left);
      lp.right = make_end(p.interval.right(), Side::right);
      lp.member = static_cast<int>(members_.size());
      members_.push_back(p.interval);
      if (lp.left.id >= 0 && lp.right.id >= 0 && lp.left.cut.granule == lp.right.cut.granule) {
        constraints_.push_back({lp.left.id, lp.right.id, Rel::less});
      }
      leaf.pieces.push_back(lp);
    }
    leaf.junctions = o.junctions();
    for (std::size_t j = 0; j < leaf.junctions.size(); ++j) {
      const LeafEnd& a = leaf.pieces[j].right;
      const LeafEnd& b = leaf.pieces[j + 1].left;
      if (a.id < 0 || b.id < 0 || a.cut.granule != b.cut.granule) continue;
      constraints_.push_back(
          {a.id, b.id, leaf.junctions[j] == Junction::meets ? Rel::equal : Rel::less});
    }
    leaves_.push_back(std::move(leaf));
  }

  LeafEnd make_end(const Bound& b, Side side) {
    LeafEnd end;
    end.written = b;
    if (!b) return end;
    end.cut = side == Side::left ? left_cut(*b) : right_cut(*b);
    if (end.cut.inside) {
      end.id = static_cast<int>(granule_of_.size());
      granule_of_.push_back(end.cut.granule);
      groups_[end.cut.granule].push_back(end.id);
    }
    return end;
  }

  // Ordered set partitions of ids (as rank vectors) satisfying constraints.
  void enumerate(const std::vector<int>& ids, unsigned remaining, int next_rank,
                 std::vector<int>& ranks, std::vector<std::vector<int>>& out) const {
    if (remaining == 0) {
      if (admissible(ids, ranks)) out.push_back(ranks);
      return;
    }
    for (unsigned sub = remaining; sub != 0; sub = (sub - 1) & remaining) {
      for (std::size_t i = 0; i < ids.size(); ++i) {
        if (sub & (1u << i)) ranks[i] = next_rank;
      }
      enumerate(ids, remaining & ~sub, next_rank + 1, ranks, out);
    }
  }

  bool admissible(const std::vector<int>& ids, const std::vector<int>& ranks) const {
    auto rank_of = [&](int id) -> int {
      for (std::size_t i = 0; i < ids.size(); ++i) {
        if (ids[i] == id) return ranks[i];
      }
      return -1;
    };
    for (const auto& c : constraints_) {
      int ra = rank_of(c.a);
      int rb = rank_of(c.b);
      if (ra < 0 || rb < 0) continue;
      if (c.rel == Rel::less && !(ra < rb)) return false;
      if (c.rel == Rel::equal && ra != rb) return false;
    }
    return true;
  }

  Value leaf_value(std::size_t index, const std::vector<int>& rank) const {
    const Leaf& leaf = leaves_[index];
    Value v;
    for (const auto& p : leaf.pieces) {
      v.pieces.push_back({key_of(p.left, Side::left, rank), key_of(p.right, Side::right, rank),
                          p.left.written, p.right.written, {p.member}});
    }
    v.junctions = leaf.junctions;
    return v;
  }

  // Sweeps atoms in time order: overlapping atoms and atoms touching on a
  // granule boundary coalesce; atoms touching strictly inside a granule
  // meet; others leave a gap.
  static Value assemble(std::vector<CPiece> atoms) {
    std::stable_sort(atoms.begin(), atoms.end(),
                     [](const CPiece& a, const CPiece& b) { return a.s < b.s; });
    Value out;
    for (auto& a : atoms) {
      if (out.pieces.empty()) {
        out.pieces.push_back(std::move(a));
        continue;
      }
      CPiece& cur = out.pieces.back();
      if (a.s < cur.e || (a.s == cur.e && a.s.sub == 0)) {
        if (cur.e < a.e) {
          cur.e = a.e;
          cur.rw = a.rw;
        }
        cur.members.insert(cur.members.end(), a.members.begin(), a.members.end());
        std::sort(cur.members.begin(), cur.members.end());
        continue;
      }
      out.junctions.push_back(a.s == cur.e ? Junction::meets : Junction::gap_disjoint);
      out.pieces.push_back(std::move(a));
    }
    return out;
  }

  static Value meet(const Value& a, const Value& b) {
    std::vector<CPiece> atoms;
    for (const auto& pa : a.pieces) {
      for (const auto& pb : b.pieces) {
        CPiece c;
        if (pb.s > pa.s) {
          c.s = pb.s;
          c.lw = pb.lw;
        } else {
          c.s = pa.s;
          c.lw = pa.lw;
        }
        if (pb.e < pa.e) {
          c.e = pb.e;
          c.rw = pb.rw;
        } else {
          c.e = pa.e;
          c.rw = pa.rw;
        }
        if (c.s < c.e) atoms.push_back(std::move(c));
      }
    }
    return assemble(std::move(atoms));
  }

  Value complement_of(const Value& v) const {
    Value out;
    Key from{0, 0};
    Bound from_written;  // "-" at the start of time
    bool open = true;
    auto emit = [&](Key to, Bound to_written) {
      if (!(from < to)) return;
      if (!out.pieces.empty()) out.junctions.push_back(Junction::gap_disjoint);
      out.pieces.push_back({from, to, from_written, to_written, {}});
    };
    for (const auto& p : v.pieces) {
      emit(p.s, p.lw ? Bound(complement_endpoint(*p.lw)) : Bound());
      if (!p.rw) {
        open = false;
        break;
      }
      from = p.e;
      from_written = complement_endpoint(*p.rw);
    }
    if (open) emit(domain_end(), Bound());
    return out;
  }

  static Value gap_between(const Value& a, const Value& b) {
    if (a.pieces.size() != 1 || b.pieces.size() != 1) {
      throw PreconditionError("between() needs two single non-empty periods");
    }
    const CPiece& pa = a.pieces.front();
    const CPiece& pb = b.pieces.front();
    if (!pa.rw || !pb.lw) {
      throw PreconditionError("between() needs the first period to end and the second to start");
    }
    if (pb.s < pa.e) {
      throw PreconditionError(
          "between() needs the first period to end no later than the second starts under every "
          "reading of their partial ends");
    }
    Value out;
    // Adjacent periods leave nothing between them.
    if (pa.e < pb.s) {
      out.pieces.push_back({pa.e, pb.s, complement_endpoint(*pa.rw), complement_endpoint(*pb.lw), {}});
    }
    return out;
  }

  const Chronology* domain_;
  std::vector<Leaf> leaves_;
  std::unordered_map<const void*, std::size_t> leaf_index_;
  std::vector<GranuleInterval> members_;
  std::vector<Granule> granule_of_;
  std::map<Granule, std::vector<int>> groups_;
  std::vector<Constraint> constraints_;
};

}  // namespace

PossibilitySet evaluate(const Expr& e, const Chronology* domain) {
  CutSpace space(e, domain);
  std::vector<Outcome> found;
  space.for_each_order([&](const std::vector<int>& rank) {
    Outcome o = space.to_outcome(space.eval(e, rank));
    if (std::find(found.begin(), found.end(), o) == found.end()) found.push_back(std::move(o));
  });
  return PossibilitySet(std::move(found));
}

PossibilitySet intersect(const GranuleInterval& i, const GranuleInterval& j) {
  return evaluate(Expr::intersect(Expr::operand(i), Expr::operand(j)));
}

PossibilitySet unite(const GranuleInterval& i, const GranuleInterval& j) {
  return evaluate(Expr::unite(Expr::operand(i), Expr::operand(j)));
}

PossibilitySet unite_all(const std::vector<GranuleInterval>& periods) {
  std::vector<Expr> parts;
  for (const auto& p : periods) parts.push_back(Expr::operand(p));
  if (parts.empty()) return PossibilitySet::single(Outcome::empty());
  return evaluate(Expr::unite(std::move(parts)));
}

GranuleInterval ray(const RayEnd& end, Granule x) {
  Endpoint e{x, end.kind};
  return end.side == Side::left ? GranuleInterval::from(e, std::nullopt)
                                : GranuleInterval::from(std::nullopt, e);
}

PossibilitySet endpoint_union(const RayEnd& a, const RayEnd& b, Granule x) {
  return unite(ray(a, x), ray(b, x));
}

PossibilitySet endpoint_intersection(const RayEnd& a, const RayEnd& b, Granule x) {
  return intersect(ray(a, x), ray(b, x));
}

PossibilitySet resolve(const PossibilitySet& p, const std::function<bool(const Outcome&)>& rule) {
  std::vector<Outcome> kept;
  for (const auto& o : p.alternatives()) {
    if (rule(o)) kept.push_back(o);
  }
  if (kept.empty()) {
    throw ContradictionError("no scenario is consistent with the domain rule");
  }
  return PossibilitySet(std::move(kept));
}

bool disjoint_with_gaps(const Outcome& o) {
  for (Junction j : o.junctions()) {
    if (j != Junction::gap_disjoint) return false;
  }
  for (const auto& p : o.pieces()) {
    if (p.members.size() > 1) return false;
  }
  return true;
}

GranuleInterval between(const GranuleInterval& a, const GranuleInterval& b) {
  PossibilitySet p = evaluate(Expr::between(Expr::operand(a), Expr::operand(b)));
  const Outcome& o = p.alternatives().front();
  return o.is_empty() ? GranuleInterval::empty() : o.interval();
}

AllenRelation inverse(AllenRelation r) {
  switch (r) {
    case AllenRelation::before: return AllenRelation::after;
    case AllenRelation::meets: return AllenRelation::met_by;
    case AllenRelation::overlaps: return AllenRelation::overlapped_by;
    case AllenRelation::starts: return AllenRelation::started_by;
    case AllenRelation::during: return AllenRelation::contains;
    case AllenRelation::finishes: return AllenRelation::finished_by;
    case AllenRelation::equals: return AllenRelation::equals;
    case AllenRelation::after: return AllenRelation::before;
    case AllenRelation::met_by: return AllenRelation::meets;
    case AllenRelation::overlapped_by: return AllenRelation::overlaps;
    case AllenRelation::started_by: return AllenRelation::starts;
    case AllenRelation::contains: return AllenRelation::during;
    case AllenRelation::finished_by: return AllenRelation::finishes;
  }
  return r;
}

const char* name(AllenRelation r) {
  switch (r) {
    case AllenRelation::before: return "before";
    case AllenRelation::meets: return "meets";
    case AllenRelation::overlaps: return "overlaps";
    case AllenRelation::starts: return "starts";
    case AllenRelation::during: return "during";
    case AllenRelation::finishes: return "finishes";
    case AllenRelation::equals: return "equals";
    case AllenRelation::after: return "after";
    case AllenRelation::met_by: return "met-by";
    case AllenRelation::overlapped_by: return "overlapped-by";
    case AllenRelation::started_by: return "started-by";
    case AllenRelation::contains: return "contains";
    case AllenRelation::finished_by: return "finished-by";
  }
  return "?";
}

namespace {

template <class K>
AllenRelation relate(const K& s1, const K& e1, const K& s2, const K& e2) {
  if (e1 < s2) return AllenRelation::before;
  if (e1 == s2) return AllenRelation::meets;
  if (e2 < s1) return AllenRelation::after;
  if (e2 == s1) return AllenRelation::met_by;
  if (s1 == s2 && e1 == e2) return AllenRelation::equals;
  if (s1 == s2) return e1 < e2 ? AllenRelation::starts : AllenRelation::started_by;
  if (e1 == e2) return s1 > s2 ? AllenRelation::finishes : AllenRelation::finished_by;
  if (s1 > s2 && e1 < e2) return AllenRelation::during;
  if (s1 < s2 && e1 > e2) return AllenRelation::contains;
  return s1 < s2 ? AllenRelation::overlaps : AllenRelation::overlapped_by;
}

}  // namespace

std::vector<AllenRelation> allen_relations(const GranuleInterval& i, const GranuleInterval& j) {
  if (i.is_empty() || j.is_empty()) {
    throw PreconditionError("Allen relations need two non-empty periods");
  }
  Expr a = Expr::operand(i);
  Expr b = Expr::operand(j);
  Expr both = Expr::unite(a, b);
  CutSpace space(both, nullptr);
  const LeafPiece& pi = space.leaf(a).pieces.front();
  const LeafPiece& pj = space.leaf(b).pieces.front();
  std::vector<AllenRelation> out;
  space.for_each_order([&](const std::vector<int>& rank) {
    AllenRelation r = relate(space.key_of(pi.left, Side::left, rank),
                             space.key_of(pi.right, Side::right, rank),
                             space.key_of(pj.left, Side::left, rank),
                             space.key_of(pj.right, Side::right, rank));
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace granule
