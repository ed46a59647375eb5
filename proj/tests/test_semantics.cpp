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

#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "fixtures.hpp"
#include "granule/algebra.hpp"
#include "granule/semantics.hpp"
#include "granule/tables.hpp"
#include "granule/text.hpp"

using namespace granule;
using namespace granule::semantics;
using namespace granule::testing;

namespace {

const Chronology kLine = Chronology::unbounded("U");

GranuleInterval iv(const char* text) { return parse_interval(text, kLine); }

boost::dynamic_bitset<> set_bits(std::size_t size, std::size_t first, std::size_t last) {
  boost::dynamic_bitset<> b(size);
  for (std::size_t n = first; n < last; ++n) b.set(n);
  return b;
}

}  // namespace

// Resolution k means k cut positions inside a granule, so a granule holds
// k + 1 sub-units.

TEST_CASE("realizations") {
  auto r = realizations(iv("[2,3]"), 5, Resolution{2});
  REQUIRE(r.size() == 1);
  CHECK(r[0].members == set_bits(15, 6, 12));

  r = realizations(iv("(2,2)"), 5, Resolution{3});
  CHECK(r.size() == 3);
  for (const auto& d : r) {
    auto count = d.members.count();
    CHECK((count == 1 || count == 2));
    CHECK_FALSE(d.members.test(8));   // first sub-unit of granule 2
    CHECK_FALSE(d.members.test(11));  // last sub-unit of granule 2
  }

  r = realizations(GranuleInterval::empty(), 5, Resolution{2});
  REQUIRE(r.size() == 1);
  CHECK(r[0].empty());

  CHECK(realizations(iv("(1,3)"), 5, Resolution{4}).size() == 16);
}

TEST_CASE("classify") {
  SubGranuleDenotation d{Resolution{2}, 5, set_bits(15, 6, 12)};
  CHECK(classify(d) == iv("[2,3]"));
  // proper suffix of granule 5 through granule 7
  SubGranuleDenotation e{Resolution{3}, 10, set_bits(40, 21, 32)};
  CHECK(classify(e) == iv("(5,7]"));
  SubGranuleDenotation none{Resolution{2}, 5, boost::dynamic_bitset<>(15)};
  CHECK(classify(none).is_empty());
  auto split = set_bits(15, 0, 3) | set_bits(15, 9, 12);
  CHECK_THROWS_AS(classify(SubGranuleDenotation{Resolution{2}, 5, split}), std::invalid_argument);
}

TEST_CASE("classify is a left inverse of realization") {
  for (int k : {2, 3}) {
    for (const auto& i : bounded_intervals(6)) {
      for (const auto& d : realizations(i, 6, Resolution{k})) CHECK(classify(d) == canonicalize(i));
    }
  }
}

TEST_CASE("oracle_op examples") {
  auto in = oracle_op(SetOp::intersect, iv("(5,-"), iv("-,5)"), 11, Resolution{3});
  CHECK(render(in, kLine) == "{ (5) ; EMPTY }");
  auto whole = oracle_op(SetOp::unite, iv("[5,-"), iv("-,5]"), 11, Resolution{3});
  CHECK(render(whole, kLine) == "[0,10]");
  auto three = oracle_op(SetOp::unite, iv("-,5)"), iv("(5,-"), 11, Resolution{4});
  CHECK(render(three, kLine) == "{ [0,5) (+) (5,10] ; [0,5)(5,10] ; [0,10] }");
  auto comp = oracle_op(SetOp::complement, iv("[3,5]"), GranuleInterval::empty(), 10, Resolution{2});
  // the oracle reports canonical forms: [0,2] is [0,3[ and [6,9] is ]5,9]
  CHECK(render(comp, kLine) == "[0,2] (+) [6,9]");
}

TEST_CASE("oracle tables do not depend on the resolution") {
  for (auto op : {SetOp::unite, SetOp::intersect}) {
    auto k2 = tables::oracle_table(op, tables::extended_forms(), Resolution{2});
    CHECK(k2 == tables::oracle_table(op, tables::extended_forms(), Resolution{3}));
    CHECK(k2 == tables::oracle_table(op, tables::extended_forms(), Resolution{4}));
  }
}

TEST_CASE("algebra equals oracle for boundary offsets -2..2 (10 granules)") {
  Chronology ten = Chronology::finite("U", 10);
  int pairs = 0;
  for (auto ilk : kKinds) {
    for (auto irk : kKinds) {
      auto i = GranuleInterval::of(3, ilk, 6, irk);
      for (Granule dl = -2; dl <= 2; ++dl) {
        for (Granule dr = -2; dr <= 2; ++dr) {
          for (auto jlk : kKinds) {
            for (auto jrk : kKinds) {
              auto j = GranuleInterval::of(3 + dl, jlk, 6 + dr, jrk);
              for (int k : {2, 4}) {
                CHECK(clip(unite(i, j), ten) == oracle_op(SetOp::unite, i, j, 10, Resolution{k}));
                CHECK(clip(intersect(i, j), ten) ==
                      oracle_op(SetOp::intersect, i, j, 10, Resolution{k}));
              }
              ++pairs;
            }
          }
        }
      }
    }
  }
  CHECK(pairs == 9 * 25 * 9);
}

TEST_CASE("algebra equals oracle on rays and single granules") {
  Chronology ten = Chronology::finite("U", 10);
  std::vector<GranuleInterval> shapes;
  for (auto k : kKinds) {
    shapes.push_back(GranuleInterval::from(Endpoint{5, k}, std::nullopt));
    shapes.push_back(GranuleInterval::from(std::nullopt, Endpoint{5, k}));
  }
  for (auto lk : {I, P}) {
    for (auto rk : {I, P}) shapes.push_back(GranuleInterval::of(5, lk, 5, rk));
  }
  shapes.push_back(GranuleInterval::of(4, P, 6, P));
  for (const auto& i : shapes) {
    for (const auto& j : shapes) {
      // members are rays on both sides, so both are spelled out
      CHECK(clip(unite(i, j), ten) == clip(oracle_op(SetOp::unite, i, j, 10, Resolution{4}), ten));
      CHECK(clip(intersect(i, j), ten) ==
            clip(oracle_op(SetOp::intersect, i, j, 10, Resolution{4}), ten));
    }
  }
}

TEST_CASE("complement equals oracle (10 granules)") {
  Chronology ten = Chronology::finite("U", 10);
  for (const auto& i : all_intervals(10)) {
    auto algebra = clip(evaluate(Expr::complement(Expr::operand(i)), &ten), ten);
    CHECK(same_shapes(algebra, oracle_op(SetOp::complement, i, GranuleInterval::empty(), 10,
                                         Resolution{3})));
  }
}

TEST_CASE("allen relations equal the oracle (5 granules, k=4)") {
  auto all = bounded_intervals(5);
  for (std::size_t n = 0; n < all.size(); n += 1) {
    for (std::size_t m = 0; m < all.size(); m += 3) {
      auto a = allen_relations(all[n], all[m]);
      auto o = oracle_allen(all[n], all[m], 5, Resolution{4});
      std::sort(a.begin(), a.end());
      std::sort(o.begin(), o.end());
      CHECK(a == o);
    }
  }
}
