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

#include "granule/semantics.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>

namespace granule::semantics {

namespace {

// Sub-unit offsets of granule starts; starts[n] is the domain size.
struct Layout {
  std::vector<std::size_t> starts;

  static Layout uniform(Granule granules, Resolution k) {
    Layout l;
    for (Granule g = 0; g <= granules; ++g) {
      l.starts.push_back(static_cast<std::size_t>(g) * static_cast<std::size_t>(k.width()));
    }
    return l;
  }

  Granule granules() const { return static_cast<Granule>(starts.size()) - 1; }
  std::size_t total() const { return starts.back(); }
  std::size_t begin(Granule g) const { return starts.at(static_cast<std::size_t>(g)); }
  std::size_t end(Granule g) const { return starts.at(static_cast<std::size_t>(g) + 1); }

  Granule granule_of(std::size_t unit) const {
    auto it = std::upper_bound(starts.begin(), starts.end(), unit);
    return static_cast<Granule>(it - starts.begin()) - 1;
  }
};

// Sub-unit positions where a bound may place the start (left) or the
// exclusive end (right) of a period.
std::vector<std::size_t> placements(const Bound& b, Side side, const Layout& layout) {
  if (!b) return {side == Side::left ? std::size_t{0} : layout.total()};
  Granule g = b->granule;
  if (g < 0 || g >= layout.granules()) {
    throw std::domain_error("granule " + std::to_string(g) + " is outside the oracle domain");
  }
  switch (b->kind) {
    case EndpointKind::included: return {side == Side::left ? layout.begin(g) : layout.end(g)};
    case EndpointKind::excluded: return {side == Side::left ? layout.end(g) : layout.begin(g)};
    case EndpointKind::partial: {
      std::vector<std::size_t> out;
      for (std::size_t p = layout.begin(g) + 1; p < layout.end(g); ++p) out.push_back(p);
      return out;
    }
  }
  return {};
}

struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;  // exclusive
};

std::vector<Span> spans(const GranuleInterval& i, const Layout& layout) {
  if (i.is_empty()) return {Span{}};
  std::vector<Span> out;
  for (std::size_t s : placements(i.left(), Side::left, layout)) {
    for (std::size_t e : placements(i.right(), Side::right, layout)) {
      if (s < e) out.push_back({s, e});
    }
  }
  // A ray starting past the domain end denotes nothing inside it.
  if (out.empty()) out.push_back(Span{});
  return out;
}

boost::dynamic_bitset<> bits(const Span& s, std::size_t total) {
  boost::dynamic_bitset<> b(total);
  for (std::size_t u = s.begin; u < s.end; ++u) b.set(u);
  return b;
}

Endpoint classify_start(std::size_t start, const Layout& layout) {
  Granule g = layout.granule_of(start);
  return {g, start == layout.begin(g) ? EndpointKind::included : EndpointKind::partial};
}

Endpoint classify_end(std::size_t end, const Layout& layout) {
  Granule g = layout.granule_of(end - 1);
  return {g, end == layout.end(g) ? EndpointKind::included : EndpointKind::partial};
}

GranuleInterval classify_span(const Span& s, const Layout& layout) {
  return GranuleInterval::from(classify_start(s.begin, layout), classify_end(s.end, layout));
}

// Maximal runs of set bits.
std::vector<Span> runs(const boost::dynamic_bitset<>& b) {
  std::vector<Span> out;
  std::size_t u = b.find_first();
  while (u != boost::dynamic_bitset<>::npos) {
    std::size_t v = u;
    while (v + 1 < b.size() && b.test(v + 1)) ++v;
    out.push_back({u, v + 1});
    u = b.find_next(v);
  }
  return out;
}

bool is_granule_start(std::size_t unit, const Layout& layout) {
  return std::binary_search(layout.starts.begin(), layout.starts.end(), unit);
}

}  // namespace

std::vector<SubGranuleDenotation> realizations(const GranuleInterval& i, Granule granules,
                                               Resolution k) {
  Layout layout = Layout::uniform(granules, k);
  std::vector<SubGranuleDenotation> out;
  for (const Span& s : spans(i, layout)) {
    out.push_back({k, granules, bits(s, layout.total())});
  }
  return out;
}

GranuleInterval classify(const SubGranuleDenotation& d) {
  auto r = runs(d.members);
  if (r.empty()) return GranuleInterval::empty();
  if (r.size() > 1) throw std::invalid_argument("denotation is not an interval");
  return classify_span(r.front(), Layout::uniform(d.granules, d.resolution));
}

PossibilitySet oracle_op(SetOp op, const GranuleInterval& i, const GranuleInterval& j,
                         Granule granules, Resolution k) {
  Layout layout = Layout::uniform(granules, k);
  std::size_t total = layout.total();
  std::vector<Span> si = spans(i, layout);
  std::vector<Span> sj = op == SetOp::complement ? std::vector<Span>{Span{}} : spans(j, layout);
  std::vector<Outcome> found;
  for (const Span& a : si) {
    for (const Span& b : sj) {
      auto A = bits(a, total);
      auto B = bits(b, total);
      boost::dynamic_bitset<> result;
      switch (op) {
        case SetOp::unite: result = A | B; break;
        case SetOp::intersect: result = A & B; break;
        case SetOp::complement: result = ~A; break;
      }
      std::vector<Span> pieces;
      std::vector<Junction> junctions;
      for (const Span& run : runs(result)) {
        if (!pieces.empty()) junctions.push_back(Junction::gap_disjoint);
        Span cur{run.begin, run.begin};
        for (std::size_t p = run.begin + 1; p < run.end; ++p) {
          // Operands touch at p without either of them crossing it.
          bool crossed = (A.test(p - 1) && A.test(p)) || (B.test(p - 1) && B.test(p));
          if (op == SetOp::unite && !crossed && !is_granule_start(p, layout)) {
            cur.end = p;
            pieces.push_back(cur);
            junctions.push_back(Junction::meets);
            cur.begin = p;
          }
        }
        cur.end = run.end;
        pieces.push_back(cur);
      }
      std::vector<Piece> out;
      for (const Span& s : pieces) {
        Piece piece{classify_span(s, layout), {}};
        if (op == SetOp::unite) {
          auto P = bits(s, total);
          if (P.intersects(A)) piece.members.push_back(i);
          if (P.intersects(B)) piece.members.push_back(j);
        }
        out.push_back(std::move(piece));
      }
      Outcome o(std::move(out), std::move(junctions));
      if (std::find(found.begin(), found.end(), o) == found.end()) found.push_back(std::move(o));
    }
  }
  return PossibilitySet(std::move(found));
}

std::vector<AllenRelation> oracle_allen(const GranuleInterval& i, const GranuleInterval& j,
                                        Granule granules, Resolution k) {
  Layout layout = Layout::uniform(granules, k);
  std::vector<AllenRelation> out;
  auto add = [&](AllenRelation r) {
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  };
  for (const Span& a : spans(i, layout)) {
    for (const Span& b : spans(j, layout)) {
      if (a.end < b.begin) {
        add(AllenRelation::before);
      } else if (a.end == b.begin) {
        add(AllenRelation::meets);
      } else if (b.end < a.begin) {
        add(AllenRelation::after);
      } else if (b.end == a.begin) {
        add(AllenRelation::met_by);
      } else if (a.begin == b.begin) {
        if (a.end == b.end) add(AllenRelation::equals);
        else add(a.end < b.end ? AllenRelation::starts : AllenRelation::started_by);
      } else if (a.end == b.end) {
        add(a.begin > b.begin ? AllenRelation::finishes : AllenRelation::finished_by);
      } else if (b.begin < a.begin && a.end < b.end) {
        add(AllenRelation::during);
      } else if (a.begin < b.begin && b.end < a.end) {
        add(AllenRelation::contains);
      } else {
        add(a.begin < b.begin ? AllenRelation::overlaps : AllenRelation::overlapped_by);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Outcome clip(const Outcome& o, const Chronology& domain) {
  std::vector<Piece> pieces;
  for (const auto& p : o.pieces()) {
    Piece q{granule::clip(p.interval, domain), {}};
    for (const auto& m : p.members) q.members.push_back(granule::clip(m, domain));
    pieces.push_back(std::move(q));
  }
  return Outcome(std::move(pieces), o.junctions());
}

PossibilitySet clip(const PossibilitySet& p, const Chronology& domain) {
  std::vector<Outcome> out;
  for (const auto& o : p.alternatives()) out.push_back(clip(o, domain));
  return PossibilitySet(std::move(out));
}

namespace {

Layout coarse_layout(const AtomicCalendar& calendar, const Layout& fine) {
  auto n = calendar.coarse_extent();
  if (!n) throw std::invalid_argument("conversion oracle needs a finite calendar");
  Layout l;
  for (Granule c = 0; c < *n; ++c) l.starts.push_back(fine.begin(calendar.children(c).first));
  l.starts.push_back(fine.total());
  return l;
}

Layout fine_layout(const AtomicCalendar& calendar, Resolution k) {
  auto n = calendar.fine_extent();
  if (!n) throw std::invalid_argument("conversion oracle needs a finite calendar");
  return Layout::uniform(*n, k);
}

}  // namespace

std::vector<GranuleInterval> oracle_coarsen(const GranuleInterval& fine,
                                            const AtomicCalendar& calendar, Resolution k) {
  Layout fl = fine_layout(calendar, k);
  Layout cl = coarse_layout(calendar, fl);
  std::vector<GranuleInterval> out;
  for (const Span& s : spans(fine, fl)) {
    GranuleInterval c = classify_span(s, cl);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  return out;
}

std::pair<std::vector<Endpoint>, std::vector<Endpoint>> oracle_refine(
    const GranuleInterval& coarse, const AtomicCalendar& calendar, Resolution k) {
  Layout fl = fine_layout(calendar, k);
  Layout cl = coarse_layout(calendar, fl);
  std::vector<Endpoint> lefts;
  std::vector<Endpoint> rights;
  for (const Span& s : spans(coarse, cl)) {
    Endpoint l = classify_start(s.begin, fl);
    Endpoint r = classify_end(s.end, fl);
    if (std::find(lefts.begin(), lefts.end(), l) == lefts.end()) lefts.push_back(l);
    if (std::find(rights.begin(), rights.end(), r) == rights.end()) rights.push_back(r);
  }
  std::sort(lefts.begin(), lefts.end());
  std::sort(rights.begin(), rights.end());
  return {lefts, rights};
}

}  // namespace granule::semantics
