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

#include "granule/interval.hpp"

#include <stdexcept>
#include <string>

namespace granule {

Cut left_cut(const Endpoint& e) {
  switch (e.kind) {
    case EndpointKind::included: return {e.granule, false};
    case EndpointKind::partial: return {e.granule, true};
    case EndpointKind::excluded: return {e.granule + 1, false};
  }
  return {};
}

Cut right_cut(const Endpoint& e) {
  switch (e.kind) {
    case EndpointKind::included: return {e.granule + 1, false};
    case EndpointKind::partial: return {e.granule, true};
    case EndpointKind::excluded: return {e.granule, false};
  }
  return {};
}

bool denotes_time(const Bound& left, const Bound& right) {
  if (!right) return true;
  Cut start = left ? left_cut(*left) : Cut{0, false};
  Cut end = right_cut(*right);
  // Two partial ends in one granule belong to the same period, so the start
  // cut lies before the end cut: (g,g) is an inner section of g.
  return start < end || (start == end && start.inside);
}

GranuleInterval GranuleInterval::from(Bound left, Bound right) {
  if (!denotes_time(left, right)) return GranuleInterval();
  return GranuleInterval(left, right);
}

GranuleInterval GranuleInterval::make(const Chronology& chronology, Granule left,
                                      EndpointKind left_kind, Granule right,
                                      EndpointKind right_kind) {
  chronology.require(left);
  chronology.require(right);
  return of(left, left_kind, right, right_kind);
}

GranuleInterval canonicalize(const GranuleInterval& i) {
  if (i.is_empty()) return i;
  Bound left = i.left();
  Bound right = i.right();
  if (left && left->kind == EndpointKind::excluded) {
    left = Endpoint{left->granule + 1, EndpointKind::included};
  }
  if (right && right->kind == EndpointKind::excluded) {
    right = Endpoint{right->granule - 1, EndpointKind::included};
  }
  return GranuleInterval::from(left, right);
}

GranuleInterval normal_form(const GranuleInterval& i) {
  GranuleInterval c = canonicalize(i);
  if (c.is_empty()) return c;
  Bound left = c.left();
  if (left && left->granule <= 0 && left->kind == EndpointKind::included) left.reset();
  return GranuleInterval::from(left, c.right());
}

GranuleInterval clip(const GranuleInterval& i, const Chronology& domain) {
  if (i.is_empty()) return i;
  Bound left = i.left();
  Bound right = i.right();
  if (!left) left = Endpoint{0, EndpointKind::included};
  if (!right && domain.size()) right = Endpoint{*domain.size() - 1, EndpointKind::included};
  return GranuleInterval::from(left, right);
}

EndpointKind complement_kind(EndpointKind kind) {
  switch (kind) {
    case EndpointKind::included: return EndpointKind::excluded;
    case EndpointKind::partial: return EndpointKind::partial;
    case EndpointKind::excluded: return EndpointKind::included;
  }
  return kind;
}

Endpoint complement_endpoint(const Endpoint& e) {
  return {e.granule, complement_kind(e.kind)};
}

std::vector<GranuleInterval> complement(const GranuleInterval& i, const Chronology& domain) {
  std::vector<GranuleInterval> out;
  if (i.is_empty()) {
    out.push_back(GranuleInterval::from(std::nullopt, std::nullopt));
    return out;
  }
  if (i.left()) {
    auto before = GranuleInterval::from(std::nullopt, complement_endpoint(*i.left()));
    if (!before.is_empty()) out.push_back(before);
  }
  if (i.right()) {
    Endpoint start = complement_endpoint(*i.right());
    bool inside_domain = !domain.size() || left_cut(start) < Cut{*domain.size(), false};
    if (inside_domain) out.push_back(GranuleInterval::from(start, std::nullopt));
  }
  return out;
}

namespace {

Bound with_kind(const Bound& b, EndpointKind kind) {
  if (!b) return b;
  return Endpoint{b->granule, kind};
}

}  // namespace

GranuleInterval opening(const GranuleInterval& i) {
  if (i.is_empty()) return i;
  return GranuleInterval::from(with_kind(i.left(), EndpointKind::excluded),
                               with_kind(i.right(), EndpointKind::excluded));
}

GranuleInterval closure(const GranuleInterval& i) {
  if (i.is_empty()) return i;
  return GranuleInterval::from(with_kind(i.left(), EndpointKind::included),
                               with_kind(i.right(), EndpointKind::included));
}

GranuleCoverage coverage(const GranuleInterval& i, Granule g) {
  GranuleInterval c = canonicalize(i);
  if (c.is_empty()) return GranuleCoverage::none;
  const Bound& l = c.left();
  const Bound& r = c.right();
  if ((l && g < l->granule) || (r && g > r->granule)) return GranuleCoverage::none;
  bool starts_inside = l && l->granule == g && l->kind == EndpointKind::partial;
  bool ends_inside = r && r->granule == g && r->kind == EndpointKind::partial;
  if (starts_inside && ends_inside) return GranuleCoverage::interior;
  if (starts_inside) return GranuleCoverage::right_aligned;
  if (ends_inside) return GranuleCoverage::left_aligned;
  return GranuleCoverage::full;
}

namespace {

void require_bounded(const GranuleInterval& i, const char* what) {
  if (!i.is_empty() && !i.is_bounded()) {
    throw std::domain_error(std::string(what) + " of an open-ended interval is unbounded");
  }
}

}  // namespace

Granule length(const GranuleInterval& i) {
  require_bounded(i, "length");
  GranuleInterval c = closure(canonicalize(i));
  if (c.is_empty()) return 0;
  return c.right()->granule - c.left()->granule + 1;
}

GranuleCounts counts(const GranuleInterval& i) {
  require_bounded(i, "granule count");
  GranuleInterval c = canonicalize(i);
  GranuleCounts out;
  if (c.is_empty()) return out;
  for (Granule g = c.left()->granule; g <= c.right()->granule; ++g) {
    if (coverage(c, g) == GranuleCoverage::full) {
      ++out.full;
    } else {
      ++out.partial;
    }
  }
  return out;
}

}  // namespace granule
