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

// Shared fixtures for the unit tests.

#ifndef GRANULE_TESTS_FIXTURES_HPP_
#define GRANULE_TESTS_FIXTURES_HPP_

#include <vector>

#include "granule/interval.hpp"

namespace granule::testing {

inline constexpr EndpointKind kKinds[] = {EndpointKind::included, EndpointKind::partial,
                                          EndpointKind::excluded};

// Every non-empty bounded interval with both ends in [0, n).
inline std::vector<GranuleInterval> bounded_intervals(Granule n) {
  std::vector<GranuleInterval> out;
  for (Granule a = 0; a < n; ++a) {
    for (Granule b = a; b < n; ++b) {
      for (EndpointKind lk : kKinds) {
        for (EndpointKind rk : kKinds) {
          auto i = GranuleInterval::of(a, lk, b, rk);
          if (!i.is_empty()) out.push_back(i);
        }
      }
    }
  }
  return out;
}

// Bounded intervals plus every ray and the whole line.
inline std::vector<GranuleInterval> all_intervals(Granule n) {
  auto out = bounded_intervals(n);
  out.push_back(GranuleInterval::from(std::nullopt, std::nullopt));
  for (Granule g = 0; g < n; ++g) {
    for (EndpointKind k : kKinds) {
      auto l = GranuleInterval::from(Endpoint{g, k}, std::nullopt);
      auto r = GranuleInterval::from(std::nullopt, Endpoint{g, k});
      if (!l.is_empty()) out.push_back(l);
      if (!r.is_empty()) out.push_back(r);
    }
  }
  return out;
}

inline constexpr auto I = EndpointKind::included;
inline constexpr auto P = EndpointKind::partial;
inline constexpr auto X = EndpointKind::excluded;

}  // namespace granule::testing

#endif  // GRANULE_TESTS_FIXTURES_HPP_
