#pragma once

// Knot table: TSV records of prime knots with PD codes, checked against this
// library's own Jones computation at load time. Identification is by Jones
// polynomial up to mirror image.

#include "knotx/bracket.hpp"
#include "knotx/diagram.hpp"
#include "knotx/laurent.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace knotx {

inline constexpr const char *kTableHeader = "name\tcrossing_number\talternating\tpd\tjones";

class TableError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct KnotRecord {
  std::string name;
  int crossing_number = 0;
  bool alternating = false;
  std::string pd;
  std::string jones_canonical;

  Diagram diagram;
  QuarterLaurentT jones;
};

enum class Chirality { Same, Mirrored };

inline const char *to_string(Chirality c) { return c == Chirality::Same ? "same" : "mirrored"; }

struct IdentificationResult {
  struct Match {
    std::string name;
    Chirality chirality = Chirality::Same;
  };
  std::vector<Match> matches;
  bool exact = false;
};

class KnotTable {
public:
  const std::vector<KnotRecord> &records() const { return records_; }
  bool empty() const { return records_.empty(); }
  std::size_t size() const { return records_.size(); }

  const KnotRecord *find(const std::string &name) const {
    auto it = index_.find(name);
    return it == index_.end() ? nullptr : &records_[it->second];
  }
  const KnotRecord &at(const std::string &name) const {
    if (const auto *r = find(name))
      return *r;
    throw std::out_of_range("unknown knot '" + name + "'");
  }

  void add(KnotRecord r) {
    if (index_.count(r.name))
      throw TableError("duplicate record '" + r.name + "'");
    index_.emplace(r.name, records_.size());
    records_.push_back(std::move(r));
  }

private:
  std::vector<KnotRecord> records_;
  std::map<std::string, std::size_t> index_;
};

namespace detail {

inline std::vector<std::string> split_tabs(const std::string &line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos)
      break;
    start = tab + 1;
  }
  return fields;
}

} // namespace detail

/// Reads the TSV table; `source` names the stream in error messages.
inline KnotTable parse_table(std::istream &in, const std::string &source = "<table>",
                             const StateOptions &opts = {}) {
  KnotTable table;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string &msg) {
    throw TableError(source + ":" + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (lineno == 1) {
      if (line != kTableHeader)
        fail("expected header '" + std::string(kTableHeader) + "'");
      continue;
    }
    if (line.empty())
      continue;
    const auto f = detail::split_tabs(line);
    if (f.size() != 5)
      fail("expected 5 tab-separated fields, found " + std::to_string(f.size()));

    KnotRecord r;
    r.name = f[0];
    if (r.name.empty())
      fail("empty name");
    try {
      std::size_t used = 0;
      r.crossing_number = std::stoi(f[1], &used);
      if (used != f[1].size() || r.crossing_number < 0)
        throw std::invalid_argument("bad");
    } catch (const std::exception &) {
      fail("crossing_number '" + f[1] + "' is not a non-negative integer");
    }
    if (f[2] != "0" && f[2] != "1")
      fail("alternating must be 0 or 1, found '" + f[2] + "'");
    r.alternating = f[2] == "1";
    r.pd = f[3];
    r.jones_canonical = f[4];

    try {
      r.diagram = parse_pd(r.pd);
      parse_jones(r.jones_canonical);
    } catch (const std::invalid_argument &e) {
      fail(std::string("record ") + r.name + ": " + e.what());
    }
    if (r.alternating && r.diagram.crossing_count() != r.crossing_number)
      fail("record " + r.name + ": crossing_number " + std::to_string(r.crossing_number) +
           " differs from the PD crossing count " + std::to_string(r.diagram.crossing_count()));
    r.jones = jones(r.diagram, opts);
    const std::string computed = render(r.jones);
    if (computed != r.jones_canonical)
      fail("record " + r.name + ": stored Jones '" + r.jones_canonical +
           "' does not match the computed '" + computed + "'");
    try {
      table.add(std::move(r));
    } catch (const TableError &e) {
      fail(e.what());
    }
  }
  return table;
}

inline KnotTable load_table(const std::string &path, const StateOptions &opts = {}) {
  std::ifstream in(path);
  if (!in)
    throw TableError("cannot open table '" + path + "'");
  return parse_table(in, path, opts);
}

inline std::string table_row(const KnotRecord &r) {
  return r.name + "\t" + std::to_string(r.crossing_number) + "\t" + (r.alternating ? "1" : "0") +
         "\t" + r.pd + "\t" + r.jones_canonical;
}

/// Records whose Jones equals the query's, or the query's under t -> 1/t.
inline IdentificationResult identify(const KnotTable &table, const QuarterLaurentT &query) {
  IdentificationResult result;
  const QuarterLaurentT mirrored = query.inverted();
  for (const auto &r : table.records()) {
    if (r.jones == query)
      result.matches.push_back({r.name, Chirality::Same});
    else if (r.jones == mirrored)
      result.matches.push_back({r.name, Chirality::Mirrored});
  }
  result.exact = result.matches.size() == 1;
  return result;
}

inline IdentificationResult identify(const KnotTable &table, const Diagram &d,
                                     const StateOptions &opts = {}) {
  return identify(table, jones(d, opts));
}

inline int crossing_number_of(const KnotTable &table, const std::string &name) {
  return table.at(name).crossing_number;
}

inline bool is_alternating_knot(const KnotTable &table, const std::string &name) {
  return table.at(name).alternating;
}

} // namespace knotx
