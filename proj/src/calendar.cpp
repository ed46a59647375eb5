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

#include "granule/calendar.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "json.hpp"

#include "granule/errors.hpp"

namespace granule {

namespace {

std::string edge_name(const AtomicCalendar& e) {
  return "edge " + e.coarse_unit() + "->" + e.fine_unit();
}

// Prefix of the fine domain on which path agreement is checked when the
// fine chronology is unbounded.
constexpr Granule kConsistencyPrefix = 1 << 16;

}  // namespace

const Chronology& Calendar::chronology(const std::string& unit) const {
  for (const auto& c : chronologies_) {
    if (c.unit() == unit) return c;
  }
  throw std::out_of_range("unknown unit '" + unit + "'");
}

bool Calendar::has_unit(const std::string& unit) const {
  for (const auto& c : chronologies_) {
    if (c.unit() == unit) return true;
  }
  return false;
}

std::vector<std::vector<const AtomicCalendar*>> Calendar::all_paths(
    const std::string& coarse, const std::string& fine) const {
  std::vector<std::vector<const AtomicCalendar*>> out;
  std::vector<const AtomicCalendar*> current;
  std::set<std::string> on_stack;
  std::function<void(const std::string&)> walk = [&](const std::string& unit) {
    if (unit == fine && !current.empty()) {
      out.push_back(current);
      return;
    }
    if (!on_stack.insert(unit).second) return;  // cycle guard
    for (const auto& e : edges_) {
      if (e.coarse_unit() != unit) continue;
      current.push_back(&e);
      walk(e.fine_unit());
      current.pop_back();
    }
    on_stack.erase(unit);
  };
  walk(coarse);
  return out;
}

std::optional<std::vector<const AtomicCalendar*>> Calendar::path(const std::string& coarse,
                                                                const std::string& fine) const {
  auto paths = all_paths(coarse, fine);
  if (paths.empty()) return std::nullopt;
  return paths.front();
}

Granule compose_parent(const std::vector<const AtomicCalendar*>& path, Granule f) {
  for (auto it = path.rbegin(); it != path.rend(); ++it) f = (*it)->parent(f);
  return f;
}

GranuleRange compose_children(const std::vector<const AtomicCalendar*>& path, Granule c) {
  GranuleRange range{c, c + 1};
  for (const auto* edge : path) {
    GranuleRange lo = edge->children(range.first);
    GranuleRange hi = edge->children(range.last - 1);
    range = {lo.first, hi.last};
  }
  return range;
}

std::vector<Violation> validate(const Calendar& calendar) {
  std::vector<Violation> out;
  auto report = [&](std::string message) { out.push_back({std::move(message)}); };

  std::set<std::string> units;
  for (const auto& c : calendar.chronologies()) {
    if (c.unit().empty()) report("chronology with an empty unit label");
    if (!units.insert(c.unit()).second) report("duplicate unit '" + c.unit() + "'");
    if (c.size() && *c.size() < 1) {
      report("chronology " + c.unit() + " has an empty finite domain");
    }
    if (!c.labels().empty() && (!c.size() || *c.size() != static_cast<Granule>(c.labels().size()))) {
      report("chronology " + c.unit() + " has a label table that does not match its domain");
    }
  }

  std::set<const AtomicCalendar*> usable;
  std::set<std::pair<std::string, std::string>> seen_edges;
  for (const auto& e : calendar.edges()) {
    if (!calendar.has_unit(e.coarse_unit()) || !calendar.has_unit(e.fine_unit())) {
      report(edge_name(e) + " references an unknown unit");
      continue;
    }
    if (e.coarse_unit() == e.fine_unit()) {
      report(edge_name(e) + " links a unit to itself");
      continue;
    }
    if (!seen_edges.emplace(e.coarse_unit(), e.fine_unit()).second) {
      report("duplicate " + edge_name(e));
      continue;
    }
    bool positive = true;
    for (Granule len : e.run_lengths()) positive = positive && len >= 1;
    for (Granule len : e.cycle()) positive = positive && len >= 1;
    if (!positive) {
      report(edge_name(e) + " has a run length below 1");
      continue;
    }
    const Chronology& coarse = calendar.chronology(e.coarse_unit());
    const Chronology& fine = calendar.chronology(e.fine_unit());
    if (!coarse.size()) {
      if (!e.is_periodic()) {
        report(edge_name(e) + " needs a non-empty cycle for the unbounded unit " +
               coarse.unit());
        continue;
      }
      if (fine.size()) {
        report(edge_name(e) + " maps an unbounded unit into the finite unit " + fine.unit());
        continue;
      }
    } else {
      Granule n = *coarse.size();
      auto runs = static_cast<Granule>(e.run_lengths().size());
      if (runs < n && !e.is_periodic()) {
        report(edge_name(e) + " gives " + std::to_string(runs) + " runs for " +
               std::to_string(n) + " " + coarse.unit() + " granules");
        continue;
      }
      if (runs > n) {
        report(edge_name(e) + " gives more runs than " + coarse.unit() + " has granules");
        continue;
      }
      if (!fine.size()) {
        report(edge_name(e) + " cannot tile the unbounded unit " + fine.unit() +
               " with finitely many runs");
        continue;
      }
      if (e.offset_of(n) != *fine.size()) {
        report(edge_name(e) + " covers " + std::to_string(e.offset_of(n)) + " " + fine.unit() +
               " granules, domain has " + std::to_string(*fine.size()));
        continue;
      }
    }
    usable.insert(&e);
  }

  // Cycle detection over units.
  std::map<std::string, int> state;  // 0 new, 1 on stack, 2 done
  bool cyclic = false;
  std::function<void(const std::string&)> dfs = [&](const std::string& unit) {
    state[unit] = 1;
    for (const auto& e : calendar.edges()) {
      if (e.coarse_unit() != unit) continue;
      int s = state[e.fine_unit()];
      if (s == 1) {
        cyclic = true;
      } else if (s == 0) {
        dfs(e.fine_unit());
      }
    }
    state[unit] = 2;
  };
  for (const auto& c : calendar.chronologies()) {
    if (state[c.unit()] == 0) dfs(c.unit());
  }
  if (cyclic) {
    report("the edges contain a cycle; a calendar must be a directed acyclic graph");
    return out;
  }

  // Path agreement: every coarse -> fine path induces the same parent map.
  for (const auto& coarse : calendar.chronologies()) {
    for (const auto& fine : calendar.chronologies()) {
      if (coarse.unit() == fine.unit()) continue;
      auto paths = calendar.all_paths(coarse.unit(), fine.unit());
      if (paths.size() < 2) continue;
      bool all_usable = true;
      for (const auto& p : paths) {
        for (const auto* e : p) all_usable = all_usable && usable.count(e) > 0;
      }
      if (!all_usable) continue;
      Granule bound = fine.size().value_or(kConsistencyPrefix);
      for (std::size_t p = 1; p < paths.size(); ++p) {
        for (Granule f = 0; f < bound; ++f) {
          Granule a = compose_parent(paths[0], f);
          Granule b = compose_parent(paths[p], f);
          if (a != b) {
            report("paths " + coarse.unit() + "->" + fine.unit() + " disagree: " + fine.unit() +
                   " " + std::to_string(f) + " maps to " + std::to_string(a) + " and " +
                   std::to_string(b));
            break;
          }
        }
      }
    }
  }
  return out;
}

namespace {

std::vector<Granule> read_lengths(const nlohmann::json& edge, const char* key) {
  std::vector<Granule> out;
  if (!edge.contains(key)) return out;
  const auto& arr = edge.at(key);
  if (!arr.is_array()) throw ConfigError(std::string("'") + key + "' must be an array");
  for (const auto& v : arr) {
    if (!v.is_number_integer()) throw ConfigError(std::string("'") + key + "' must hold integers");
    out.push_back(v.get<Granule>());
  }
  return out;
}

}  // namespace

Calendar load_calendar(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("calendar is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("chronologies") || !doc.at("chronologies").is_array()) {
    throw ConfigError("calendar needs a 'chronologies' array");
  }
  try {
    std::vector<Chronology> chronologies;
    for (const auto& c : doc.at("chronologies")) {
      auto unit = c.at("unit").get<std::string>();
      std::optional<Granule> size;
      const auto& domain = c.at("domain");
      if (domain.is_string()) {
        if (domain.get<std::string>() != "unbounded") {
          throw ConfigError("domain of " + unit + " must be a count or \"unbounded\"");
        }
      } else if (domain.is_number_integer()) {
        size = domain.get<Granule>();
      } else {
        throw ConfigError("domain of " + unit + " must be a count or \"unbounded\"");
      }
      Granule offset = c.value("label_offset", Granule{0});
      std::vector<std::string> labels = c.value("labels", std::vector<std::string>{});
      chronologies.emplace_back(std::move(unit), size, offset, std::move(labels));
    }
    std::vector<AtomicCalendar> edges;
    if (doc.contains("edges")) {
      for (const auto& e : doc.at("edges")) {
        edges.emplace_back(e.at("coarse").get<std::string>(), e.at("fine").get<std::string>(),
                           read_lengths(e, "run_lengths"), read_lengths(e, "cycle"));
      }
    }
    return Calendar(std::move(chronologies), std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed calendar: ") + e.what());
  }
}

Calendar load_calendar_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open calendar file '" + path + "'");
  return load_calendar(in);
}

}  // namespace granule
