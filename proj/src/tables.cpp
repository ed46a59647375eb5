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

#include "granule/tables.hpp"

#include <optional>

namespace granule::tables {

namespace {

constexpr Granule kX = 5;
constexpr Granule kSpan = 11;  // oracle domain 0..10, x in the middle

using K = EndpointKind;

std::string position(Granule g, Granule x) {
  if (g == x) return "x";
  return g < x ? "x-" + std::to_string(x - g) : "x+" + std::to_string(g - x);
}

// Rays come back from the oracle clipped to the domain.
GranuleInterval unclip(const GranuleInterval& i, Granule span) {
  if (i.is_empty()) return i;
  Bound l = i.left();
  Bound r = i.right();
  if (l && l->granule == 0 && l->kind == K::included) l.reset();
  if (r && r->granule == span - 1 && r->kind == K::included) r.reset();
  return GranuleInterval::from(l, r);
}

std::string interval_x(const GranuleInterval& raw, Granule x) {
  if (raw.is_empty()) return "EMPTY";
  GranuleInterval i = canonicalize(raw);
  const Bound& l = i.left();
  const Bound& r = i.right();
  if (l && r && l->granule == r->granule) {
    return bracket(Side::left, l->kind).substr(0, 1) + position(l->granule, x) +
           bracket(Side::right, r->kind);
  }
  std::string left = "-";
  if (l) {
    left = l->kind == K::included && l->granule == x + 1
               ? "]x"
               : bracket(Side::left, l->kind) + position(l->granule, x);
  }
  std::string right = "-";
  if (r) {
    right = r->kind == K::included && r->granule == x - 1
                ? "x["
                : position(r->granule, x) + bracket(Side::right, r->kind);
  }
  return left + "," + right;
}

std::string outcome_x(const Outcome& o, Granule x) {
  if (o.is_empty()) return "EMPTY";
  std::string out;
  for (std::size_t n = 0; n < o.pieces().size(); ++n) {
    if (n > 0 && o.junctions()[n - 1] == Junction::gap_disjoint) out += " (+) ";
    out += interval_x(o.pieces()[n].interval, x);
  }
  return out;
}

Outcome unclip(const Outcome& o, Granule span) {
  std::vector<Piece> pieces;
  for (const auto& p : o.pieces()) pieces.push_back({unclip(p.interval, span), p.members});
  return Outcome(std::move(pieces), o.junctions());
}

// Printed cells, already in this module's notation. "uuu" and "ui" are the
// paper's abbreviations.
const char* kUUU = "{ -,x) (+) (x,- ; -,x)(x,- ; -,- }";
const char* kUI = "{ (x) ; EMPTY }";

const std::vector<std::vector<std::string>>& printed_extended_union() {
  static const std::vector<std::vector<std::string>> t = {
      {"[x,-", "[x,-", "[x,-", "-,-", "-,-", "-,-"},
      {"[x,-", "(x,-", "(x,-", "-,-", kUUU, "-,x[ (+) ]x,-"},
      {"[x,-", "(x,-", "]x,-", "-,-", "-,x) (+) ]x,-", "-,x[ (+) (x,-"},
      {"-,-", "-,-", "-,-", "-,x]", "-,x]", "-,x]"},
      {"-,-", kUUU, "-,x) (+) ]x,-", "-,x]", "-,x)", "-,x["},
      {"-,-", "-,x[ (+) (x,-", "-,x[ (+) ]x,-", "-,x]", "-,x)", "-,x)"},
  };
  return t;
}

const std::vector<std::vector<std::string>>& printed_extended_intersection() {
  static const std::vector<std::vector<std::string>> t = {
      {"[x,-", "(x,-", "]x,-", "[x]", "[x)", "EMPTY"},
      {"(x,-", "(x,-", "]x,-", "(x]", kUI, "EMPTY"},
      {"]x,-", "]x,-", "]x,-", "EMPTY", "EMPTY", "EMPTY"},
      {"[x]", "(x]", "EMPTY", "-,x]", "-,x)", "-,x["},
      {"[x)", kUI, "EMPTY", "-,x)", "-,x)", "-,x["},
      {"EMPTY", "EMPTY", "EMPTY", "-,x[", "-,x[", "-,x["},
  };
  return t;
}

const std::vector<std::vector<std::string>>& printed_classical_union() {
  static const std::vector<std::vector<std::string>> t = {
      {"[x,-", "[x,-", "-,-", "-,-"},
      {"[x,-", "]x,-", "-,-", "-,x[ (+) ]x,-"},
      {"-,-", "-,-", "-,x]", "-,x]"},
      {"-,-", "-,x[ (+) ]x,-", "-,x]", "-,x["},
  };
  return t;
}

const std::vector<std::vector<std::string>>& printed_classical_intersection() {
  static const std::vector<std::vector<std::string>> t = {
      {"[x,-", "]x,-", "[x]", "EMPTY"},
      {"]x,-", "]x,-", "EMPTY", "EMPTY"},
      {"[x]", "EMPTY", "-,x]", "-,x["},
      {"EMPTY", "EMPTY", "-,x[", "-,x["},
  };
  return t;
}

}  // namespace

const std::vector<RayEnd>& extended_forms() {
  static const std::vector<RayEnd> forms = {
      {Side::left, K::included},  {Side::left, K::partial},  {Side::left, K::excluded},
      {Side::right, K::included}, {Side::right, K::partial}, {Side::right, K::excluded},
  };
  return forms;
}

const std::vector<RayEnd>& classical_forms() {
  static const std::vector<RayEnd> forms = {
      {Side::left, K::included},
      {Side::left, K::excluded},
      {Side::right, K::included},
      {Side::right, K::excluded},
  };
  return forms;
}

std::string bracket(Side side, EndpointKind k) {
  switch (k) {
    case K::included: return side == Side::left ? "[" : "]";
    case K::partial: return side == Side::left ? "(" : ")";
    case K::excluded: return side == Side::left ? "]" : "[";
  }
  return "?";
}

std::string form_name(const RayEnd& e) {
  return e.side == Side::left ? bracket(Side::left, e.kind) + "x,-"
                              : "-,x" + bracket(Side::right, e.kind);
}

std::string x_notation(const PossibilitySet& p, Granule x) {
  std::vector<std::string> shown;
  for (const Outcome& o : p.alternatives()) {
    std::string s = outcome_x(o, x);
    bool seen = false;
    for (const auto& t : shown) seen = seen || t == s;
    if (!seen) shown.push_back(s);
  }
  if (shown.size() == 1) return shown.front();
  std::string out = "{ ";
  for (std::size_t n = 0; n < shown.size(); ++n) out += (n ? " ; " : "") + shown[n];
  return out + " }";
}

Table oracle_table(semantics::SetOp op, const std::vector<RayEnd>& forms, semantics::Resolution k) {
  Table t;
  for (const auto& a : forms) {
    auto& row = t.emplace_back();
    for (const auto& b : forms) {
      PossibilitySet p = semantics::oracle_op(op, ray(a, kX), ray(b, kX), kSpan, k);
      std::vector<Outcome> alts;
      for (const auto& o : p.alternatives()) alts.push_back(unclip(o, kSpan));
      row.push_back(x_notation(PossibilitySet(std::move(alts)), kX));
    }
  }
  return t;
}

Table algebra_table(semantics::SetOp op, const std::vector<RayEnd>& forms) {
  Table t;
  for (const auto& a : forms) {
    auto& row = t.emplace_back();
    for (const auto& b : forms) {
      PossibilitySet p = op == semantics::SetOp::unite ? endpoint_union(a, b, kX)
                                                       : endpoint_intersection(a, b, kX);
      row.push_back(x_notation(p, kX));
    }
  }
  return t;
}

Table printed_table(semantics::SetOp op, bool extended) {
  bool u = op == semantics::SetOp::unite;
  if (extended) return u ? printed_extended_union() : printed_extended_intersection();
  return u ? printed_classical_union() : printed_classical_intersection();
}

std::vector<Erratum> errata(semantics::SetOp op, const Table& derived) {
  Table printed = printed_table(op, true);
  const auto& forms = extended_forms();
  std::vector<Erratum> out;
  for (std::size_t r = 0; r < forms.size(); ++r) {
    for (std::size_t c = 0; c < forms.size(); ++c) {
      if (printed[r][c] != derived[r][c]) {
        out.push_back({op, forms[r], forms[c], printed[r][c], derived[r][c]});
      }
    }
  }
  return out;
}

const std::vector<ConversionColumn>& conversion_table() {
  static const std::vector<ConversionColumn> t = {
      {Side::left, K::included, {K::included}, {K::partial, K::included}},
      {Side::left, K::partial, {K::partial, K::included}, {K::partial}},
      {Side::right, K::included, {K::included}, {K::partial, K::included}},
      {Side::right, K::partial, {K::partial, K::included}, {K::partial}},
  };
  return t;
}

}  // namespace granule::tables
