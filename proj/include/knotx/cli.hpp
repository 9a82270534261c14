#pragma once

// Command-line front end. `run` is the whole program minus process setup so
// tests can drive it in-process.

#include "knotx/knotx.hpp"
#include "knotx/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifndef KNOTX_DEFAULT_TABLE
#define KNOTX_DEFAULT_TABLE ""
#endif

namespace knotx::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

struct CliConfig {
  std::string pd;
  std::string file;
  std::string table;
  int max_crossings = 20;
  std::string output = "text";
  unsigned workers = 1;
  std::optional<int> crossing;
  bool all = false;
  std::string kind = "B";
  bool reduced = false;
  std::string name;
  bool proof_relations = false;
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline Diagram load_diagram(const CliConfig &cfg) {
  if (!cfg.pd.empty() && !cfg.file.empty())
    throw UsageError("give either --pd or --file, not both");
  if (!cfg.file.empty()) {
    std::ifstream in(cfg.file);
    if (!in)
      throw UsageError("cannot open '" + cfg.file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_pd(buf.str());
  }
  if (cfg.pd.empty())
    throw UsageError("a diagram is required: use --pd or --file");
  return parse_pd(cfg.pd);
}

inline bool has_diagram(const CliConfig &cfg) { return !cfg.pd.empty() || !cfg.file.empty(); }

inline std::string table_path(const CliConfig &cfg) {
  if (!cfg.table.empty())
    return cfg.table;
  if (const char *env = std::getenv("KNOTX_TABLE"); env && *env)
    return env;
  if (*KNOTX_DEFAULT_TABLE)
    return KNOTX_DEFAULT_TABLE;
  throw UsageError("no knot table: use --table or set KNOTX_TABLE");
}

inline StateOptions state_options(const CliConfig &cfg) {
  return {cfg.max_crossings, cfg.workers};
}

// Table validation recomputes every stored Jones polynomial, independent of
// the per-command limit; the limit then filters which records are used.
inline StateOptions table_options(const StateOptions &opts) {
  return {StateOptions{}.max_crossings, opts.workers};
}

inline bool json(const CliConfig &cfg) { return cfg.output == "json"; }

} // namespace detail

/// Runs one command. Output goes to `out`, diagnostics to `err`.
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"knotx: exact Kauffman bracket / Jones polynomial engine for PD link diagrams"};
  app.fallthrough();
  app.require_subcommand(1);
  CliConfig cfg;

  app.add_option("--pd", cfg.pd, "Inline PD code, e.g. \"X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]\"");
  app.add_option("--file", cfg.file, "File holding a PD code");
  app.add_option("--table", cfg.table, "Knot table TSV (default: $KNOTX_TABLE)");
  app.add_option("--max-crossings", cfg.max_crossings,
                 "State-sum crossing limit; also filters table-wide commands")
      ->check(CLI::PositiveNumber);
  app.add_option("--output", cfg.output, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);

  auto *bracket = app.add_subcommand("bracket", "Kauffman bracket <D>");
  auto *xpoly = app.add_subcommand("xpoly", "Writhe-normalised X polynomial");
  auto *jones_cmd = app.add_subcommand("jones", "Jones polynomial");
  auto *span = app.add_subcommand("span", "Span of the X polynomial");
  auto *writhe = app.add_subcommand("writhe", "Writhe");
  auto *predicates = app.add_subcommand("predicates", "Alternating / split / reduced tests");
  auto *change = app.add_subcommand("change", "Crossing change; prints the new PD code");
  change->add_option("--crossing", cfg.crossing, "Crossing id (0-based)")->required();
  auto *stategraph = app.add_subcommand("stategraph", "All-A or all-B state graph");
  stategraph->add_option("--kind", cfg.kind, "A or B")->check(CLI::IsMember({"A", "B"}));
  stategraph->add_flag("--reduced", cfg.reduced, "Collapse parallel edges");
  auto *skein = app.add_subcommand("skein-check", "Check both skein relations");
  auto *skein_crossing = skein->add_option("--crossing", cfg.crossing, "Crossing id (0-based)");
  skein->add_flag("--all", cfg.all, "Every crossing (default)")->excludes(skein_crossing);
  auto *identify_cmd = app.add_subcommand("identify", "Identify a diagram by Jones polynomial");
  auto *lemma = app.add_subcommand("lemma-suite", "Coefficient and span properties");
  lemma->add_flag("--proof-relations", cfg.proof_relations,
                  "Also check the smoothing relations at every crossing");
  auto *verify = app.add_subcommand("verify-theorem", "Crossing-change sweep");
  verify->add_option("--name", cfg.name, "Single table record");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const auto opts = detail::state_options(cfg);
  const bool as_json = detail::json(cfg);
  auto diagram = [&] {
    Diagram d = detail::load_diagram(cfg);
    check_limit(d, opts);
    return d;
  };
  try {
    if (bracket->parsed() || xpoly->parsed() || jones_cmd->parsed() || span->parsed()) {
      const Diagram d = diagram();
      std::string text;
      if (bracket->parsed())
        text = render(kauffman_bracket(d, opts));
      else if (xpoly->parsed())
        text = render(x_polynomial(d, opts));
      else if (jones_cmd->parsed())
        text = render(jones(d, opts));
      else
        text = std::to_string(span_x(d, opts));
      if (as_json)
        out << nlohmann::ordered_json{{"value", text}}.dump() << "\n";
      else
        out << text << "\n";
      return kExitOk;
    }
    if (writhe->parsed()) {
      const Diagram d = diagram();
      out << d.writhe() << "\n";
      return kExitOk;
    }
    if (predicates->parsed()) {
      const Diagram d = diagram();
      const bool split = is_split_diagram(d);
      const bool alternating = is_alternating_diagram(d);
      std::optional<bool> reduced;
      if (!split)
        reduced = is_reduced(d);
      if (as_json) {
        nlohmann::ordered_json j{{"crossings", d.crossing_count()},
                                 {"components", d.component_count()},
                                 {"alternating", alternating},
                                 {"split", split}};
        j["reduced"] = reduced ? nlohmann::ordered_json(*reduced) : nlohmann::ordered_json(nullptr);
        out << j.dump() << "\n";
      } else {
        out << "crossings: " << d.crossing_count() << "\n"
            << "components: " << d.component_count() << "\n"
            << "alternating: " << (alternating ? "yes" : "no") << "\n"
            << "split: " << (split ? "yes" : "no") << "\n"
            << "reduced: " << (reduced ? (*reduced ? "yes" : "no") : "n/a (split diagram)") << "\n";
      }
      return kExitOk;
    }
    if (change->parsed()) {
      const Diagram d = diagram();
      out << crossing_change(d, *cfg.crossing).to_pd() << "\n";
      return kExitOk;
    }
    if (stategraph->parsed()) {
      const Diagram d = diagram();
      const auto g = state_graph(d, cfg.kind == "A" ? Splice::A : Splice::B);
      out << (cfg.reduced ? render_graph(reduce_graph(g)) : render_graph(g));
      return kExitOk;
    }
    if (skein->parsed()) {
      std::vector<std::pair<std::string, Diagram>> work;
      if (detail::has_diagram(cfg)) {
        work.emplace_back("diagram", diagram());
      } else {
        const KnotTable table = load_table(detail::table_path(cfg), detail::table_options(opts));
        for (const auto &r : table.records())
          if (r.diagram.crossing_count() >= 1 && r.diagram.crossing_count() <= cfg.max_crossings)
            work.emplace_back(r.name, r.diagram);
      }
      bool ok = true;
      auto rows = nlohmann::ordered_json::array();
      for (const auto &[name, d] : work) {
        std::vector<int> sites;
        if (cfg.crossing)
          sites.push_back(d.check(*cfg.crossing));
        else
          for (int c = 0; c < d.crossing_count(); ++c)
            sites.push_back(c);
        for (const int c : sites) {
          const LaurentA a = check_skein(d, c, opts);
          const QuarterLaurentT t = check_t_skein(d, c, opts);
          const bool zero = a.is_zero() && t.is_zero();
          ok = ok && zero;
          if (as_json)
            rows.push_back({{"diagram", name},
                            {"crossing", c},
                            {"a_form", render(a)},
                            {"t_form", render(t)},
                            {"passed", zero}});
          else
            out << name << " crossing " << c << ": a-form=" << render(a)
                << " t-form=" << render(t) << (zero ? " ok" : " FAIL") << "\n";
        }
      }
      if (as_json)
        out << rows.dump(1) << "\n";
      return ok ? kExitOk : kExitFailed;
    }
    if (identify_cmd->parsed()) {
      const Diagram d = diagram();
      const KnotTable table = load_table(detail::table_path(cfg), detail::table_options(opts));
      const auto id = identify(table, d, opts);
      if (as_json) {
        auto matches = nlohmann::ordered_json::array();
        for (const auto &m : id.matches)
          matches.push_back({{"name", m.name}, {"chirality", to_string(m.chirality)}});
        out << nlohmann::ordered_json{{"matches", matches}, {"exact", id.exact}}.dump() << "\n";
      } else if (id.matches.empty()) {
        out << "no match\n";
      } else {
        for (const auto &m : id.matches)
          out << m.name << " " << to_string(m.chirality) << "\n";
        if (!id.exact)
          out << "ambiguous: " << id.matches.size() << " matches\n";
      }
      return kExitOk;
    }
    if (lemma->parsed()) {
      std::vector<std::pair<std::string, Diagram>> work;
      if (detail::has_diagram(cfg)) {
        work.emplace_back("diagram", diagram());
      } else {
        const KnotTable table = load_table(detail::table_path(cfg), detail::table_options(opts));
        for (const auto &r : table.records())
          if (r.alternating && r.crossing_number >= 1 && r.crossing_number <= cfg.max_crossings)
            work.emplace_back(r.name, r.diagram);
      }
      bool ok = true;
      auto rows = nlohmann::ordered_json::array();
      for (const auto &[name, d] : work) {
        const CheckReport lemma_report = lemma_suite(d, opts);
        ok = ok && lemma_report.passed();
        nlohmann::ordered_json row{{"diagram", name}, {"lemmas", to_json(lemma_report)}};
        if (!as_json)
          out << name << ": " << (lemma_report.passed() ? "pass" : "FAIL") << "\n"
              << (lemma_report.passed() ? "" : to_text(lemma_report));
        if (cfg.proof_relations) {
          auto relations = nlohmann::ordered_json::array();
          const Diagram mirror = mirror_of(d);
          for (int c = 0; c < d.crossing_count(); ++c) {
            const bool flip = d.sign(c) > 0;
            const CheckReport rel = proof_relations(flip ? mirror : d, c, opts);
            ok = ok && rel.passed();
            relations.push_back(
                {{"crossing", c}, {"via_mirror", flip}, {"report", to_json(rel)}});
            if (!as_json)
              out << "  crossing " << c << (flip ? " (mirrored)" : "") << ": "
                  << (rel.passed() ? "relations hold" : "FAIL") << "\n"
                  << (rel.passed() ? "" : to_text(rel));
          }
          row["proof_relations"] = relations;
        }
        rows.push_back(row);
      }
      if (as_json)
        out << rows.dump(1) << "\n";
      return ok ? kExitOk : kExitFailed;
    }
    if (verify->parsed()) {
      const KnotTable table = load_table(detail::table_path(cfg), detail::table_options(opts));
      std::vector<SweepReport> reports;
      if (!cfg.name.empty())
        reports.push_back(theorem_sweep(table, cfg.name, opts));
      else
        reports = sweep_table(table, cfg.max_crossings, cfg.workers, opts);
      bool ok = true;
      for (const auto &r : reports)
        ok = ok && !r.failed();
      if (as_json) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto &r : reports)
          arr.push_back(to_json(r));
        out << arr.dump(1) << "\n";
      } else {
        for (const auto &r : reports)
          out << to_text(r);
        out << sweep_summary(reports);
        if (!ok) {
          out << "violations:\n";
          for (const auto &r : reports)
            for (const auto &o : r.outcomes)
              if (o.verdict == Verdict::Violated || o.verdict == Verdict::Anomaly)
                out << "  " << r.source << " crossing " << o.crossing << " -> "
                    << o.target_name() << " " << to_string(o.verdict) << "\n";
        }
      }
      return ok ? kExitOk : kExitFailed;
    }
  } catch (const std::exception &e) {
    // Malformed input, unknown ids, limits and unmet preconditions.
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

} // namespace knotx::cli
