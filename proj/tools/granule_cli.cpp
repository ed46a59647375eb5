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

// granule: command line front end for the granule interval algebra.
//
//   granule eval "between((1914,1918),(1939,1945))"
//   granule bill data/stays.csv --bed 13 --policy fair
//   granule --calendar cal.json convert --from Day --to Month "[3,10]"
//
// Exit codes: 0 success, 2 parse or configuration error, 3 contradiction.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "granule/algebra.hpp"
#include "granule/billing.hpp"
#include "granule/calendar.hpp"
#include "granule/conversion.hpp"
#include "granule/errors.hpp"
#include "granule/tables.hpp"
#include "granule/text.hpp"
#include "json.hpp"

namespace {

using granule::Chronology;
using granule::GranuleInterval;
using nlohmann::json;

constexpr int kExitParse = 2;
constexpr int kExitContradiction = 3;

struct Options {
  std::string calendar_path;
  std::string unit;
  std::string format = "text";
};

bool as_json(const Options& o) { return o.format == "json"; }

std::optional<granule::Calendar> load_calendar(const Options& o) {
  if (o.calendar_path.empty()) return std::nullopt;
  granule::Calendar cal = granule::load_calendar_file(o.calendar_path);
  auto violations = granule::validate(cal);
  if (!violations.empty()) {
    throw granule::ConfigError("invalid calendar: " + violations.front().message);
  }
  return cal;
}

// Unit used to read intervals: --chronology inside --calendar, or a default.
Chronology pick_chronology(const Options& o, const Chronology& fallback) {
  auto cal = load_calendar(o);
  if (!cal) {
    if (!o.unit.empty() && o.unit != fallback.unit()) {
      throw granule::ConfigError("unit '" + o.unit + "' needs a --calendar that defines it");
    }
    return fallback;
  }
  if (o.unit.empty()) return cal->chronologies().front();
  if (!cal->has_unit(o.unit)) throw granule::ConfigError("calendar has no unit '" + o.unit + "'");
  return cal->chronology(o.unit);
}

json bound_json(const granule::Bound& b, const Chronology& c) {
  if (!b) return nullptr;
  return {{"granule", c.label(b->granule)}, {"index", b->granule},
          {"kind", granule::kind_name(b->kind)}};
}

json interval_json(const GranuleInterval& i, const Chronology& c) {
  json j = {{"text", granule::render(i, c)}, {"empty", i.is_empty()}};
  if (!i.is_empty()) {
    j["left"] = bound_json(i.left(), c);
    j["right"] = bound_json(i.right(), c);
  }
  return j;
}

json possibilities_json(const granule::PossibilitySet& p, const Chronology& c) {
  json alts = json::array();
  for (const auto& o : p.alternatives()) {
    json pieces = json::array();
    for (const auto& piece : o.pieces()) {
      json members = json::array();
      for (const auto& m : piece.members) members.push_back(granule::render(m, c));
      pieces.push_back({{"interval", interval_json(piece.interval, c)}, {"members", members}});
    }
    json junctions = json::array();
    for (auto j : o.junctions()) junctions.push_back(j == granule::Junction::meets ? "meets" : "gap");
    alts.push_back({{"text", granule::render(o, c)}, {"pieces", pieces}, {"junctions", junctions}});
  }
  return {{"text", granule::render(p, c)},
          {"deterministic", p.is_deterministic()},
          {"alternatives", alts}};
}

int run_eval(const Options& o, const std::vector<std::string>& words) {
  std::string text;
  for (const auto& w : words) text += (text.empty() ? "" : " ") + w;
  Chronology c = pick_chronology(o, Chronology::unbounded("Unit"));
  granule::Expr e = granule::parse_expression(text, c);
  granule::PossibilitySet p = granule::evaluate(e, c.is_finite() ? &c : nullptr);
  if (as_json(o)) {
    json j = possibilities_json(p, c);
    j["expression"] = text;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << granule::render(p, c) << "\n";
  }
  return 0;
}

int run_between(const Options& o, const std::string& a, const std::string& b) {
  Chronology c = pick_chronology(o, Chronology::unbounded("Unit"));
  GranuleInterval r = granule::between(granule::parse_interval(a, c), granule::parse_interval(b, c));
  if (as_json(o)) {
    std::cout << interval_json(r, c).dump(2) << "\n";
  } else {
    std::cout << granule::render(r, c) << "\n";
  }
  return 0;
}

int run_convert(const Options& o, const std::string& from, const std::string& to,
                const std::string& text) {
  auto cal = load_calendar(o);
  if (!cal) throw granule::ConfigError("convert needs --calendar");
  if (!cal->has_unit(from)) throw granule::ConfigError("calendar has no unit '" + from + "'");
  if (!cal->has_unit(to)) throw granule::ConfigError("calendar has no unit '" + to + "'");
  const Chronology& source = cal->chronology(from);
  const Chronology& target = cal->chronology(to);
  GranuleInterval i = granule::parse_interval(text, source);
  granule::Conversion r;
  try {
    r = granule::convert(*cal, from, to, i);
  } catch (const granule::PreconditionError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw granule::ConfigError(e.what());
  }
  if (auto* exact = std::get_if<GranuleInterval>(&r)) {
    if (as_json(o)) {
      std::cout << json{{"exact", true}, {"interval", interval_json(*exact, target)}}.dump(2) << "\n";
    } else {
      std::cout << granule::render(*exact, target) << "\n";
    }
    return 0;
  }
  const auto& refined = std::get<granule::Refinement>(r);
  if (auto exact = refined.exact()) {
    if (as_json(o)) {
      std::cout << json{{"exact", true}, {"interval", interval_json(*exact, target)}}.dump(2) << "\n";
    } else {
      std::cout << granule::render(*exact, target) << "\n";
    }
    return 0;
  }
  auto side_json = [&](const granule::QualitativeEndpoint& q, granule::Side side) {
    json cands = json::array();
    for (const auto& e : q.candidates()) cands.push_back(granule::render(e, side, target));
    return json{{"text", granule::render(q, side, target)}, {"unbounded", q.unbounded},
                {"candidates", cands}};
  };
  if (as_json(o)) {
    std::cout << json{{"exact", false},
                      {"left", side_json(refined.left, granule::Side::left)},
                      {"right", side_json(refined.right, granule::Side::right)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "left:  " << granule::render(refined.left, granule::Side::left, target) << "\n"
              << "right: " << granule::render(refined.right, granule::Side::right, target) << "\n";
  }
  return 0;
}

std::vector<granule::StayRecord> read_stays(const std::string& path, const Chronology& days) {
  std::ifstream in(path);
  if (!in) throw granule::ConfigError("cannot open stays file '" + path + "'");
  return granule::load_stays(in, days);
}

int run_bill(const Options& o, const std::string& path, const std::string& bed,
             const std::string& policy_text) {
  Chronology days = pick_chronology(o, granule::day_chronology());
  granule::BillingPolicy policy = granule::parse_policy(policy_text);
  auto report = granule::bill(read_stays(path, days), bed);
  if (as_json(o)) {
    json stays = json::array();
    for (const auto& s : report.stays) {
      stays.push_back({{"name", s.name}, {"period", granule::render(s.period(), days)},
                       {"length", granule::length(s.period())}});
    }
    json shares = json::object();
    for (const auto& [g, n] : report.shares) shares[days.label(g)] = n;
    std::cout << json{{"bed", report.bed},
                      {"policy", granule::policy_name(policy)},
                      {"total", report.total(policy)},
                      {"fair", report.fair},
                      {"closed", report.closed},
                      {"open", report.open},
                      {"closed_open", report.closed_open},
                      {"stays", stays},
                      {"shares", shares}}
                     .dump(2)
              << "\n";
    return 0;
  }
  std::cout << "bed " << report.bed << " " << granule::policy_name(policy) << ": "
            << report.total(policy) << "\n";
  std::cout << "  fair " << report.fair << ", closed " << report.closed << ", open "
            << report.open << ", closed_open " << report.closed_open << "\n";
  for (const auto& s : report.stays) {
    std::cout << "  " << s.name << " " << granule::render(s.period(), days) << "\n";
  }
  for (const auto& [g, n] : report.shares) {
    if (n > 1) std::cout << "  " << days.label(g) << " shared by " << n << "\n";
  }
  return 0;
}

int run_shares(const Options& o, const std::string& path, const std::string& bed,
               const std::string& day) {
  Chronology days = pick_chronology(o, granule::day_chronology());
  granule::Granule g = days.parse_label(day);
  int n = granule::shares(read_stays(path, days), bed, g);
  if (as_json(o)) {
    std::cout << json{{"bed", bed}, {"granule", day}, {"shares", n}}.dump(2) << "\n";
  } else {
    std::cout << n << "\n";
  }
  return 0;
}

int run_validate(const Options& o, const std::string& positional) {
  std::string path = positional.empty() ? o.calendar_path : positional;
  if (path.empty()) throw granule::ConfigError("validate needs a calendar file");
  auto violations = granule::validate(granule::load_calendar_file(path));
  if (as_json(o)) {
    json list = json::array();
    for (const auto& v : violations) list.push_back(v.message);
    std::cout << json{{"valid", violations.empty()}, {"violations", list}}.dump(2) << "\n";
  } else if (violations.empty()) {
    std::cout << "ok\n";
  } else {
    for (const auto& v : violations) std::cout << v.message << "\n";
  }
  return violations.empty() ? 0 : kExitParse;
}

void print_table(const std::string& title, const std::vector<granule::RayEnd>& forms,
                 const granule::tables::Table& t) {
  std::vector<std::size_t> width(forms.size() + 1, 0);
  for (std::size_t r = 0; r < forms.size(); ++r) {
    width[0] = std::max(width[0], granule::tables::form_name(forms[r]).size());
    for (std::size_t c = 0; c < forms.size(); ++c) {
      width[c + 1] = std::max({width[c + 1], t[r][c].size(), granule::tables::form_name(forms[c]).size()});
    }
  }
  auto cell = [&](const std::string& text, std::size_t col) {
    return text + std::string(width[col] - text.size(), ' ');
  };
  // last column is padded too; strip it
  auto emit = [](std::string line) {
    line.erase(line.find_last_not_of(' ') + 1);
    std::cout << line << "\n";
  };
  std::string head = cell("", 0);
  for (std::size_t c = 0; c < forms.size(); ++c) {
    head += " | " + cell(granule::tables::form_name(forms[c]), c + 1);
  }
  std::cout << title << "\n";
  emit(head);
  for (std::size_t r = 0; r < forms.size(); ++r) {
    std::string line = cell(granule::tables::form_name(forms[r]), 0);
    for (std::size_t c = 0; c < forms.size(); ++c) line += " | " + cell(t[r][c], c + 1);
    emit(line);
  }
}

int run_dump_tables(const Options& o, int k) {
  using granule::semantics::SetOp;
  namespace tables = granule::tables;
  if (k < 2) throw granule::ConfigError("--k must be at least 2");
  const auto& forms = tables::extended_forms();
  json out = json::object();
  bool agree = true;
  for (SetOp op : {SetOp::unite, SetOp::intersect}) {
    const char* name = op == SetOp::unite ? "union" : "intersection";
    auto derived = tables::oracle_table(op, forms, granule::semantics::Resolution{k});
    bool same = derived == tables::algebra_table(op, forms);
    agree = agree && same;
    auto errata = tables::errata(op, derived);
    if (as_json(o)) {
      json cells = json::array();
      for (std::size_t r = 0; r < forms.size(); ++r) {
        for (std::size_t c = 0; c < forms.size(); ++c) {
          cells.push_back({{"row", tables::form_name(forms[r])},
                           {"col", tables::form_name(forms[c])},
                           {"value", derived[r][c]}});
        }
      }
      json diff = json::array();
      for (const auto& e : errata) {
        diff.push_back({{"row", tables::form_name(e.row)}, {"col", tables::form_name(e.col)},
                        {"printed", e.printed}, {"derived", e.derived}});
      }
      out[name] = {{"cells", cells}, {"algebra_agrees", same}, {"errata", diff}};
      continue;
    }
    std::string title = std::string("extended ") + name + " (oracle, k=" + std::to_string(k) + ")";
    print_table(title, forms, derived);
    std::cout << "  algebra agrees: " << (same ? "yes" : "NO") << "\n";
    std::cout << "errata against the printed " << name << " table: " << errata.size() << "\n";
    for (const auto& e : errata) {
      std::cout << "  " << tables::form_name(e.row) << "  " << tables::form_name(e.col)
                << "  printed " << e.printed << "  derived " << e.derived << "\n";
    }
    std::cout << "\n";
  }
  if (as_json(o)) {
    out["k"] = k;
    std::cout << out.dump(2) << "\n";
  }
  return agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interval algebra over time granules with partially included endpoints"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--calendar", opt.calendar_path, "Calendar configuration (JSON)");
  app.add_option("--chronology", opt.unit, "Unit used to read granule labels");
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> expr_words;
  auto* eval = app.add_subcommand("eval", "Evaluate an expression (& | ~ between)");
  eval->add_option("expression", expr_words, "Expression")->required();

  std::string a, b;
  auto* between = app.add_subcommand("between", "Period strictly between two periods");
  between->add_option("first", a)->required();
  between->add_option("second", b)->required();

  std::string from, to, interval;
  auto* convert = app.add_subcommand("convert", "Convert an interval between units");
  convert->add_option("--from", from)->required();
  convert->add_option("--to", to)->required();
  convert->add_option("interval", interval)->required();

  std::string stays, bed, policy = "fair", day;
  auto* bill = app.add_subcommand("bill", "Bill one bed from stay records");
  bill->add_option("stays", stays, "CSV: bed,name,admit,exit,admit_partial,exit_partial")
      ->required();
  bill->add_option("--bed", bed)->required();
  bill->add_option("--policy", policy, "fair, closed, open or closed_open");

  auto* share = app.add_subcommand("shares", "Stays touching one granule of a bed");
  share->add_option("stays", stays)->required();
  share->add_option("--bed", bed)->required();
  share->add_option("granule", day)->required();

  std::string calendar_file;
  auto* validate = app.add_subcommand("validate", "Check a calendar configuration");
  validate->add_option("file", calendar_file);

  int k = 3;
  auto* oracle = app.add_subcommand("oracle", "Sub-granule oracle");
  oracle->require_subcommand(1);
  auto* dump = oracle->add_subcommand("dump-tables", "Derived 6x6 tables and errata");
  dump->add_option("--k", k, "Cut positions per granule");

  // A left ray such as "-,1918)" looks like a short option to CLI11, and
  // "[a,b]" like its list syntax. The interval grammar skips leading
  // blanks, so hide the first character behind one.
  std::vector<std::string> args;
  for (int n = argc - 1; n > 0; --n) {
    std::string arg = argv[n];
    bool ray = arg.size() > 1 && arg[0] == '-' &&
               (arg[1] == ',' || std::isspace(static_cast<unsigned char>(arg[1])));
    if (ray || (!arg.empty() && arg[0] == '[')) {
      arg.insert(arg.begin(), ' ');
    }
    args.push_back(std::move(arg));
  }

  try {
    app.parse(std::move(args));
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*eval) return run_eval(opt, expr_words);
    if (*between) return run_between(opt, a, b);
    if (*convert) return run_convert(opt, from, to, interval);
    if (*bill) return run_bill(opt, stays, bed, policy);
    if (*share) return run_shares(opt, stays, bed, day);
    if (*validate) return run_validate(opt, calendar_file);
    if (*dump) return run_dump_tables(opt, k);
  } catch (const granule::ContradictionError& e) {
    std::cerr << "contradiction: " << e.what() << "\n";
    return kExitContradiction;
  } catch (const granule::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const granule::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
