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

// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "granule/algebra.hpp"
#include "granule/billing.hpp"
#include "granule/conversion.hpp"
#include "granule/semantics.hpp"
#include "granule/tables.hpp"
#include "granule/text.hpp"

using namespace granule;

namespace {

constexpr EndpointKind kKinds[] = {EndpointKind::included, EndpointKind::partial,
                                   EndpointKind::excluded};

struct Check {
  bool ok = true;
  std::string detail;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

const Chronology kLine = Chronology::unbounded("Year");
const Chronology kDays = day_chronology();

Check inter_war() {
  Check c;
  auto r = between(parse_interval("(1914,1918)", kLine), parse_interval("(1939,1945)", kLine));
  c.expect(r == parse_interval("(1918,1939)", kLine), "got " + render(r, kLine));
  auto e = evaluate(parse_expression("between((1914,1918),(1939,1945))", kLine));
  c.expect(render(e, kLine) == "(1918,1939)", "expression gave " + render(e, kLine));
  return c;
}

std::vector<StayRecord> hospital() {
  std::ifstream in(std::string(GRANULE_DATA_DIR) + "/stays.csv");
  return load_stays(in, kDays);
}

Check hospital_billing() {
  Check c;
  auto stays = hospital();
  auto r = bill(stays, "13");
  c.expect(r.fair == 12, "fair " + std::to_string(r.fair));
  c.expect(r.closed == 14, "closed " + std::to_string(r.closed));
  c.expect(r.open == 9, "open " + std::to_string(r.open));
  c.expect(r.closed_open == 11, "closed_open " + std::to_string(r.closed_open));
  int n = shares(stays, "13", kDays.parse_label("03/13"));
  c.expect(n == 3, "shares(03/13) " + std::to_string(n));
  return c;
}

Check scenario_count() {
  Check c;
  std::vector<GranuleInterval> periods;
  for (const auto& s : hospital()) periods.push_back(s.period());
  auto all = unite_all(periods);
  c.expect(all.size() == 9, std::to_string(all.size()) + " scenarios before resolution");
  auto one = resolve(all, disjoint_with_gaps);
  c.expect(one.size() == 1, std::to_string(one.size()) + " scenarios after resolution");
  c.expect(render(one, kDays) == "(03/06,03/13) (+) (03/13) (+) (03/13,03/17)",
           "resolved to " + render(one, kDays));
  return c;
}

Check table_conformance() {
  using semantics::SetOp;
  Check c;
  const auto& forms = tables::extended_forms();
  for (auto op : {SetOp::unite, SetOp::intersect}) {
    auto algebra = tables::algebra_table(op, forms);
    for (int k : {2, 3, 4}) {
      auto oracle = tables::oracle_table(op, forms, semantics::Resolution{k});
      int cells = 0;
      for (std::size_t r = 0; r < forms.size(); ++r) {
        for (std::size_t col = 0; col < forms.size(); ++col) cells += oracle[r][col] == algebra[r][col];
      }
      c.expect(cells == 36, std::to_string(cells) + "/36 cells agree at k=" + std::to_string(k));
    }
    c.expect(tables::algebra_table(op, tables::classical_forms()) == tables::printed_table(op, false),
             "classical table differs from the printed one");
  }
  std::set<std::pair<std::string, std::string>> documented = {
      {"(x,-", "-,x["}, {"]x,-", "-,x["}, {"-,x)", "-,x["}, {"-,x[", "-,x["}};
  std::set<std::pair<std::string, std::string>> found;
  for (const auto& e : tables::errata(SetOp::unite, tables::algebra_table(SetOp::unite, forms))) {
    found.emplace(tables::form_name(e.row), tables::form_name(e.col));
  }
  c.expect(found == documented, "union errata differ from the documented cells");
  c.expect(tables::errata(SetOp::intersect, tables::algebra_table(SetOp::intersect, forms)).empty(),
           "unexpected intersection errata");
  return c;
}

Check properties() {
  Check c;
  for (auto k : kKinds) {
    for (Side side : {Side::left, Side::right}) {
      GranuleInterval ray = side == Side::left ? GranuleInterval::from(Endpoint{4, k}, std::nullopt)
                                               : GranuleInterval::from(std::nullopt, Endpoint{4, k});
      auto once = complement(ray, kLine);
      c.expect(once.size() == 1 && complement(once[0], kLine) == std::vector{ray},
               "complement is not an involution on " + render(ray, kLine));
    }
  }

  std::vector<GranuleInterval> bounded;
  for (Granule a = 0; a < 10; ++a) {
    for (Granule b = 0; b < 10; ++b) {
      for (auto lk : kKinds) {
        for (auto rk : kKinds) bounded.push_back(GranuleInterval::of(a, lk, b, rk));
      }
    }
  }
  auto denotation = [](const GranuleInterval& i) {
    std::set<std::string> out;
    for (const auto& d : semantics::realizations(i, 10, semantics::Resolution{4})) {
      std::string s;
      boost::to_string(d.members, s);
      out.insert(s);
    }
    return out;
  };
  for (const auto& i : bounded) {
    c.expect(closure(closure(i)) == closure(i), "closure not idempotent on " + render(i, kLine));
    c.expect(opening(opening(i)) == opening(i), "opening not idempotent on " + render(i, kLine));
    c.expect(denotation(canonicalize(i)) == denotation(i),
             "canonicalize changes the denotation of " + render(i, kLine));
  }

  for (const auto& a : tables::extended_forms()) {
    for (const auto& b : tables::extended_forms()) {
      c.expect(same_shapes(endpoint_union(a, b), endpoint_union(b, a)),
               "union not commutative on " + tables::form_name(a) + " " + tables::form_name(b));
      c.expect(endpoint_intersection(a, b) == endpoint_intersection(b, a),
               "intersection not commutative on " + tables::form_name(a) + " " + tables::form_name(b));
    }
  }

  std::vector<GranuleInterval> six;
  for (const auto& i : bounded) {
    if (!i.is_empty() && i.right()->granule < 6) six.push_back(i);
  }
  for (const auto& i : six) {
    for (const auto& j : six) {
      auto ij = allen_relations(i, j);
      auto ji = allen_relations(j, i);
      for (auto& r : ij) r = inverse(r);
      std::sort(ij.begin(), ij.end());
      std::sort(ji.begin(), ji.end());
      c.expect(ij == ji, "allen inverse-symmetry fails on " + render(i, kLine) + " " + render(j, kLine));
    }
  }
  return c;
}

Check conversion() {
  Check c;
  AtomicCalendar toy("Month", "Day", {3, 4, 5});
  for (const auto& col : tables::conversion_table()) {
    std::string name = tables::bracket(col.side, col.kind);
    std::set<EndpointKind> refined, coarsened;
    for (Granule m = 0; m < 3; ++m) {
      auto i = col.side == Side::left ? GranuleInterval::of(m, col.kind, 2, EndpointKind::included)
                                      : GranuleInterval::of(0, EndpointKind::included, m, col.kind);
      auto r = refine(i, toy);
      for (const auto& e : (col.side == Side::left ? r.left : r.right).candidates()) {
        refined.insert(e.kind);
      }
    }
    for (Granule d = 0; d < 12; ++d) {
      auto i = col.side == Side::left ? GranuleInterval::of(d, col.kind, 11, EndpointKind::included)
                                      : GranuleInterval::of(0, EndpointKind::included, d, col.kind);
      auto out = coarsen(i, toy);
      coarsened.insert(col.side == Side::left ? out.left()->kind : out.right()->kind);
    }
    c.expect(refined == std::set<EndpointKind>(col.refine.begin(), col.refine.end()),
             "refine of \"" + name + "\" differs from the table");
    c.expect(coarsened == std::set<EndpointKind>(col.coarsen.begin(), col.coarsen.end()),
             "coarsen of \"" + name + "\" differs from the table");
  }
  int checked = 0;
  for (Granule a = 0; a < 12; ++a) {
    for (Granule b = a; b < 12; ++b) {
      for (auto lk : kKinds) {
        for (auto rk : kKinds) {
          auto i = GranuleInterval::of(a, lk, b, rk);
          if (i.is_empty()) continue;
          c.expect(roundtrip_check(i, toy), "roundtrip fails on " + render(i, kLine));
          ++checked;
        }
      }
    }
  }
  c.expect(checked > 500, "too few intervals checked");
  return c;
}

Check war_coverage() {
  Check c;
  auto war = parse_interval("(1914,1918)", kLine);
  const GranuleCoverage expected[] = {GranuleCoverage::right_aligned, GranuleCoverage::full,
                                      GranuleCoverage::full, GranuleCoverage::full,
                                      GranuleCoverage::left_aligned};
  for (Granule y = 1914; y <= 1918; ++y) {
    c.expect(coverage(war, y) == expected[y - 1914], "coverage of " + std::to_string(y));
  }
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Check()> run;
  };
  const Criterion criteria[] = {
      {"AC1 inter-war between((1914,1918),(1939,1945)) = (1918,1939)", inter_war},
      {"AC2 hospital bed 13: fair 12, closed 14, open 9, closed-open 11, shares(03/13) 3",
       hospital_billing},
      {"AC3 hospital fold: 9 scenarios, 1 after the one-patient rule", scenario_count},
      {"AC4 extended tables equal the oracle at k=2,3,4; classical tables; errata", table_conformance},
      {"AC5 properties: involution, idempotence, canonical denotation, commutativity, Allen",
       properties},
      {"AC6 conversion table on the 12-day/3-month calendar; roundtrip", conversion},
      {"AC7 coverage of (1914,1918) is (g] [g] [g] [g] [g)", war_coverage},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Check result;
    try {
      result = c.run();
    } catch (const std::exception& e) {
      result.ok = false;
      result.detail = std::string("threw: ") + e.what();
    }
    std::cout << (result.ok ? "PASS " : "FAIL ") << c.name;
    if (!result.ok) std::cout << "  (" << result.detail << ")";
    std::cout << "\n";
    failed += result.ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
