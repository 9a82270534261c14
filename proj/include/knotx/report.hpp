#pragma once

// Text and JSON renderings of harness reports. The JSON field names are a
// stable schema consumed by scripts and the acceptance suite.

#include "knotx/harness.hpp"

#include <json.hpp>

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace knotx {

inline nlohmann::ordered_json to_json(const SweepOutcome &o) {
  nlohmann::ordered_json j;
  j["crossing"] = o.crossing;
  j["sign"] = o.sign;
  j["via_mirror"] = o.via_mirror;
  j["target"] = o.matches.empty() ? nlohmann::ordered_json(nullptr)
                                  : nlohmann::ordered_json(o.target_name());
  auto matches = nlohmann::ordered_json::array();
  for (const auto &m : o.matches)
    matches.push_back({{"name", m.name}, {"chirality", to_string(m.chirality)}});
  j["matches"] = matches;
  j["exact"] = o.exact;
  j["alternating"] = o.target_alternating ? nlohmann::ordered_json(*o.target_alternating)
                                          : nlohmann::ordered_json(nullptr);
  j["c_source"] = o.c_source;
  j["c_target"] = o.c_target ? nlohmann::ordered_json(*o.c_target) : nlohmann::ordered_json(nullptr);
  j["span_source"] = o.span_source;
  j["span_target"] = o.span_target;
  j["span_drop"] = o.span_drop;
  j["verdict"] = to_string(o.verdict);
  j["changed_pd"] = o.changed_pd;
  return j;
}

inline nlohmann::ordered_json to_json(const SweepReport &r) {
  nlohmann::ordered_json j;
  j["source"] = r.source;
  j["c_source"] = r.c_source;
  j["span_source"] = r.span_source;
  auto outcomes = nlohmann::ordered_json::array();
  for (const auto &o : r.outcomes)
    outcomes.push_back(to_json(o));
  j["outcomes"] = outcomes;
  return j;
}

inline nlohmann::ordered_json to_json(const CheckReport &r) {
  auto checks = nlohmann::ordered_json::array();
  for (const auto &c : r.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"passed", r.passed()}, {"checks", checks}};
}

inline std::string to_text(const SweepReport &r) {
  std::ostringstream out;
  out << "source " << r.source << " c=" << r.c_source << " span=" << r.span_source << "\n";
  for (const auto &o : r.outcomes) {
    out << "  crossing " << o.crossing << " sign " << (o.sign > 0 ? "+1" : "-1")
        << (o.via_mirror ? " (mirrored)" : "") << " -> " << o.target_name();
    if (o.exact)
      out << " (" << to_string(o.matches.front().chirality) << ")";
    if (o.target_alternating)
      out << (*o.target_alternating ? " alternating" : " non-alternating");
    if (o.c_target)
      out << " c=" << *o.c_target << " drop=" << (o.c_source - *o.c_target);
    out << " span_drop=" << o.span_drop << " verdict=" << to_string(o.verdict) << "\n";
  }
  return out.str();
}

inline std::string to_text(const CheckReport &r) {
  std::ostringstream out;
  for (const auto &c : r.checks) {
    out << "  " << (c.passed ? "ok   " : "FAIL ") << c.name;
    if (!c.passed && !c.detail.empty())
      out << "  [" << c.detail << "]";
    out << "\n";
  }
  return out.str();
}

/// Verdict counts and a histogram of crossing-number drops per verdict.
inline std::string sweep_summary(const std::vector<SweepReport> &reports) {
  std::map<std::string, int> verdicts;
  std::map<int, int> drops_alt, drops_non;
  int outcomes = 0;
  for (const auto &r : reports)
    for (const auto &o : r.outcomes) {
      ++outcomes;
      ++verdicts[to_string(o.verdict)];
      if (o.c_target)
        ++(o.target_alternating.value_or(false) ? drops_alt : drops_non)[o.c_source - *o.c_target];
    }
  std::ostringstream out;
  out << "summary: " << reports.size() << " diagrams, " << outcomes << " crossing changes\n";
  for (const auto &[v, n] : verdicts)
    out << "  " << v << ": " << n << "\n";
  out << "  crossing-number drop (alternating targets):";
  for (const auto &[d, n] : drops_alt)
    out << " " << d << "x" << n;
  out << "\n  crossing-number drop (non-alternating targets):";
  for (const auto &[d, n] : drops_non)
    out << " " << d << "x" << n;
  out << "\n";
  return out.str();
}

} // namespace knotx
