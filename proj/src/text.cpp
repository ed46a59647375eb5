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

#include "granule/text.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "granule/errors.hpp"

namespace granule {

namespace {

bool is_label_char(char c) {
  if (std::isspace(static_cast<unsigned char>(c))) return false;
  switch (c) {
    case ',': case '(': case ')': case '[': case ']':
    case '{': case '}': case ';': case '&': case '|': case '~':
      return false;
    default:
      return true;
  }
}

class Parser {
 public:
  Parser(std::string_view text, const Chronology& chronology)
      : text_(text), chron_(chronology) {}

  GranuleInterval interval_only() {
    skip();
    GranuleInterval i;
    if (keyword("EMPTY")) {
      i = GranuleInterval::empty();
    } else if (auto parsed = try_interval()) {
      i = *parsed;
    } else {
      fail("expected an interval");
    }
    finish();
    return i;
  }

  Expr expression_only() {
    Expr e = expr();
    finish();
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool eat(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void finish() {
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

  std::string_view label() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_label_char(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  bool keyword(std::string_view word) {
    skip();
    std::size_t save = pos_;
    if (label() == word) return true;
    pos_ = save;
    return false;
  }

  Granule resolve(std::string_view text, std::size_t at) {
    try {
      return chron_.parse_label(text);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), at);
    }
  }

  // Returns nullopt (position restored) when the text here is not an
  // interval; errors inside the labels still throw.
  std::optional<GranuleInterval> try_interval() {
    std::size_t save = pos_;
    auto rewind = [&]() -> std::optional<GranuleInterval> {
      pos_ = save;
      return std::nullopt;
    };
    skip();
    if (pos_ >= text_.size()) return rewind();

    std::optional<EndpointKind> lk;
    switch (text_[pos_]) {
      case '[': lk = EndpointKind::included; ++pos_; break;
      case '(': lk = EndpointKind::partial; ++pos_; break;
      case ']': lk = EndpointKind::excluded; ++pos_; break;
      default: break;
    }
    skip();
    std::size_t a_at = pos_;
    std::string_view a = label();
    if (a.empty()) return rewind();
    if ((a == "-") == lk.has_value()) return rewind();

    if (!eat(',')) {
      // single granule "[g]" style
      if (!lk || *lk == EndpointKind::excluded) return rewind();
      std::optional<EndpointKind> rk = right_kind();
      if (!rk || *rk == EndpointKind::excluded) return rewind();
      Granule g = resolve(a, a_at);
      return GranuleInterval::make(chron_, g, *lk, g, *rk);
    }

    skip();
    std::size_t b_at = pos_;
    std::string_view b = label();
    if (b.empty()) return rewind();
    Bound left;
    if (lk) left = Endpoint{resolve(a, a_at), *lk};
    Bound right;
    if (b != "-") {
      std::optional<EndpointKind> rk = right_kind();
      if (!rk) return rewind();
      right = Endpoint{resolve(b, b_at), *rk};
    }
    if (left) chron_.require(left->granule);
    if (right) chron_.require(right->granule);
    return GranuleInterval::from(left, right);
  }

  std::optional<EndpointKind> right_kind() {
    skip();
    if (pos_ >= text_.size()) return std::nullopt;
    switch (text_[pos_]) {
      case ']': ++pos_; return EndpointKind::included;
      case ')': ++pos_; return EndpointKind::partial;
      case '[': ++pos_; return EndpointKind::excluded;
      default: return std::nullopt;
    }
  }

  Expr expr() {
    std::vector<Expr> parts{term()};
    while (eat('|')) parts.push_back(term());
    return parts.size() == 1 ? parts.front() : Expr::unite(std::move(parts));
  }

  Expr term() {
    Expr e = unary();
    while (eat('&')) e = Expr::intersect(e, unary());
    return e;
  }

  Expr unary() {
    if (eat('~')) return Expr::complement(unary());
    return primary();
  }

  Expr primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    std::size_t save = pos_;
    if (keyword("between")) {
      if (!eat('(')) fail("expected '(' after between");
      Expr a = expr();
      if (!eat(',')) fail("expected ',' in between(A,B)");
      Expr b = expr();
      if (!eat(')')) fail("expected ')' closing between");
      return Expr::between(a, b);
    }
    pos_ = save;
    if (keyword("EMPTY")) return Expr::operand(GranuleInterval::empty());
    if (auto i = try_interval()) return Expr::operand(*i);
    if (eat('(')) {
      Expr e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    fail("expected an interval, '~', '(' or between");
  }

  std::string_view text_;
  const Chronology& chron_;
  std::size_t pos_ = 0;
};

char left_bracket(EndpointKind k) {
  switch (k) {
    case EndpointKind::included: return '[';
    case EndpointKind::partial: return '(';
    case EndpointKind::excluded: return ']';
  }
  return '?';
}

char right_bracket(EndpointKind k) {
  switch (k) {
    case EndpointKind::included: return ']';
    case EndpointKind::partial: return ')';
    case EndpointKind::excluded: return '[';
  }
  return '?';
}

std::string granule_range(Granule a, Granule b, const Chronology& chron) {
  return a == b ? chron.label(a) : chron.label(a) + ".." + chron.label(b);
}

}  // namespace

GranuleInterval parse_interval(std::string_view text, const Chronology& chronology) {
  return Parser(text, chronology).interval_only();
}

Expr parse_expression(std::string_view text, const Chronology& chronology) {
  return Parser(text, chronology).expression_only();
}

const char* kind_name(EndpointKind k) {
  switch (k) {
    case EndpointKind::included: return "included";
    case EndpointKind::partial: return "partial";
    case EndpointKind::excluded: return "excluded";
  }
  return "?";
}

std::string render(const Endpoint& e, Side side, const Chronology& chronology) {
  if (side == Side::left) return left_bracket(e.kind) + chronology.label(e.granule);
  return chronology.label(e.granule) + right_bracket(e.kind);
}

std::string render(const GranuleInterval& i, const Chronology& chronology) {
  if (i.is_empty()) return "EMPTY";
  const Bound& l = i.left();
  const Bound& r = i.right();
  if (l && r && l->granule == r->granule && l->kind != EndpointKind::excluded &&
      r->kind != EndpointKind::excluded) {
    return left_bracket(l->kind) + chronology.label(l->granule) + right_bracket(r->kind);
  }
  std::string out = l ? render(*l, Side::left, chronology) : "-";
  out += ',';
  out += r ? render(*r, Side::right, chronology) : "-";
  return out;
}

std::string render(const Outcome& o, const Chronology& chronology) {
  if (o.is_empty()) return "EMPTY";
  std::string out;
  for (std::size_t n = 0; n < o.pieces().size(); ++n) {
    if (n > 0 && o.junctions()[n - 1] == Junction::gap_disjoint) out += " (+) ";
    out += render(o.pieces()[n].interval, chronology);
  }
  return out;
}

std::string render(const PossibilitySet& p, const Chronology& chronology) {
  std::vector<const Outcome*> shown;
  for (const Outcome& o : p.alternatives()) {
    bool seen = false;
    for (const Outcome* s : shown) seen = seen || same_shape(*s, o);
    if (!seen) shown.push_back(&o);
  }
  if (shown.size() == 1) return render(*shown.front(), chronology);
  std::string out = "{ ";
  for (std::size_t n = 0; n < shown.size(); ++n) {
    if (n > 0) out += " ; ";
    out += render(*shown[n], chronology);
  }
  return out + " }";
}

std::string render(const QualitativeEndpoint& q, Side side, const Chronology& chronology) {
  if (q.unbounded) return "-";
  std::vector<std::string> options;
  for (EndpointKind k : q.kinds) {
    std::optional<Granule> lo, hi;
    for (Granule g = q.first; g <= q.last; ++g) {
      if (!q.admits(Endpoint{g, k})) continue;
      if (!lo) lo = g;
      hi = g;
    }
    if (!lo) continue;
    std::string range = granule_range(*lo, *hi, chronology);
    options.push_back(side == Side::left ? left_bracket(k) + range : range + right_bracket(k));
  }
  if (options.size() == 1) return options.front();
  std::string out = "{ ";
  for (std::size_t n = 0; n < options.size(); ++n) out += (n ? " ; " : "") + options[n];
  return out + " }";
}

}  // namespace granule
