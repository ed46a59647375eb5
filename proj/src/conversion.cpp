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

#include "granule/conversion.hpp"

#include <algorithm>
#include <stdexcept>

namespace granule {

bool QualitativeEndpoint::is_exact() const {
  return !unbounded && first == last && kinds.size() == 1 && exclusions.empty();
}

bool QualitativeEndpoint::admits(const Endpoint& e) const {
  if (unbounded) return false;
  if (e.granule < first || e.granule > last) return false;
  if (std::find(kinds.begin(), kinds.end(), e.kind) == kinds.end()) return false;
  return std::find(exclusions.begin(), exclusions.end(), e) == exclusions.end();
}

std::vector<Endpoint> QualitativeEndpoint::candidates() const {
  std::vector<Endpoint> out;
  if (unbounded) return out;
  for (Granule g = first; g <= last; ++g) {
    for (EndpointKind k : kinds) {
      Endpoint e{g, k};
      if (admits(e)) out.push_back(e);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<GranuleInterval> Refinement::exact() const {
  auto bound = [](const QualitativeEndpoint& q) -> std::optional<Bound> {
    if (q.unbounded) return Bound();
    if (!q.is_exact()) return std::nullopt;
    return Bound(Endpoint{q.first, q.kinds.front()});
  };
  auto l = bound(left);
  auto r = bound(right);
  if (!l || !r) return std::nullopt;
  return GranuleInterval::from(*l, *r);
}

namespace {

void require_fine(const AtomicCalendar& edge, Granule f) {
  if (auto n = edge.fine_extent(); f < 0 || (n && f >= *n)) {
    throw std::domain_error(edge.fine_unit() + " granule " + std::to_string(f) +
                            " is outside the calendar");
  }
}

Bound coarsen_bound(const Bound& b, Side side, const AtomicCalendar& edge) {
  if (!b) return b;
  require_fine(edge, b->granule);
  Granule parent = edge.parent(b->granule);
  if (b->kind == EndpointKind::partial) return Endpoint{parent, EndpointKind::partial};
  GranuleRange run = edge.children(parent);
  bool aligned = side == Side::left ? b->granule == run.first : b->granule == run.last - 1;
  return Endpoint{parent, aligned ? EndpointKind::included : EndpointKind::partial};
}

QualitativeEndpoint refine_bound(const Bound& b, Side side, const GranuleRange& below) {
  QualitativeEndpoint q;
  if (!b) {
    q.unbounded = true;
    return q;
  }
  Granule aligned = side == Side::left ? below.first : below.last - 1;
  if (b->kind == EndpointKind::included) {
    q.first = q.last = aligned;
    q.kinds = {EndpointKind::included};
    return q;
  }
  // Partial: the boundary lies strictly inside the coarse granule.
  q.first = below.first;
  q.last = below.last - 1;
  q.kinds = {EndpointKind::included, EndpointKind::partial};
  q.exclusions = {Endpoint{aligned, EndpointKind::included}};
  return q;
}

}  // namespace

GranuleInterval coarsen(const GranuleInterval& i, const AtomicCalendar& calendar) {
  GranuleInterval c = canonicalize(i);
  if (c.is_empty()) return c;
  return GranuleInterval::from(coarsen_bound(c.left(), Side::left, calendar),
                               coarsen_bound(c.right(), Side::right, calendar));
}

GranuleInterval coarsen(const GranuleInterval& i, const std::vector<const AtomicCalendar*>& path) {
  GranuleInterval out = i;
  for (auto it = path.rbegin(); it != path.rend(); ++it) out = coarsen(out, **it);
  return out;
}

Refinement refine(const GranuleInterval& i, const std::vector<const AtomicCalendar*>& path) {
  GranuleInterval c = canonicalize(i);
  if (c.is_empty()) throw std::invalid_argument("cannot refine the empty interval");
  Refinement r;
  auto below = [&](const Bound& b) {
    return b ? compose_children(path, b->granule) : GranuleRange{};
  };
  r.left = refine_bound(c.left(), Side::left, below(c.left()));
  r.right = refine_bound(c.right(), Side::right, below(c.right()));
  return r;
}

Refinement refine(const GranuleInterval& i, const AtomicCalendar& calendar) {
  return refine(i, std::vector<const AtomicCalendar*>{&calendar});
}

bool roundtrip_check(const GranuleInterval& i, const AtomicCalendar& calendar) {
  GranuleInterval c = canonicalize(i);
  if (c.is_empty()) return true;
  Refinement r = refine(coarsen(c, calendar), calendar);
  auto fits = [](const QualitativeEndpoint& q, const Bound& b) {
    return b ? q.admits(*b) : q.unbounded;
  };
  return fits(r.left, c.left()) && fits(r.right, c.right());
}

Conversion convert(const Calendar& calendar, const std::string& from, const std::string& to,
                   const GranuleInterval& i) {
  if (!calendar.has_unit(from) || !calendar.has_unit(to)) {
    throw std::invalid_argument("unknown unit '" + (calendar.has_unit(from) ? to : from) + "'");
  }
  if (from == to) return i;
  const Chronology& source = calendar.chronology(from);
  if (!i.is_empty()) {
    if (i.left()) source.require(i.left()->granule);
    if (i.right()) source.require(i.right()->granule);
  }
  if (auto down = calendar.path(from, to)) return refine(i, *down);
  if (auto up = calendar.path(to, from)) return coarsen(i, *up);
  throw std::invalid_argument("no calendar path links " + from + " and " + to);
}

}  // namespace granule
