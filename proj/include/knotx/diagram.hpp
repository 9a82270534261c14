#pragma once

// Oriented link diagrams in planar-diagram (PD) notation.
//
// Convention: X[a,b,c,d] lists the four arc labels counterclockwise starting
// at the incoming under-strand a. The under-strand runs a -> c; the over-strand
// direction follows from the component orientation. A crossing is positive
// when the over-strand runs d -> b and negative when it runs b -> d.
//
// The A-splice joins (a,b) and (c,d); the B-splice joins (a,d) and (b,c).

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace knotx {

enum class Splice : std::uint8_t { A, B };

inline char to_char(Splice s) { return s == Splice::A ? 'A' : 'B'; }

class PdSyntaxError : public std::invalid_argument {
public:
  PdSyntaxError(const std::string &msg, std::size_t pos)
      : std::invalid_argument("PD syntax error at position " + std::to_string(pos) + ": " + msg),
        position(pos) {}
  std::size_t position;
};

class PdValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class PreconditionError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Position of an arc end inside the crossing list.
struct ArcEnd {
  int crossing = -1;
  int slot = -1;
  friend bool operator==(const ArcEnd &, const ArcEnd &) = default;
};

namespace detail {

class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

private:
  std::vector<int> parent_;
};

enum class EndDir : std::uint8_t { Unknown, In, Out };

struct RawEnd {
  int label = 0;
  EndDir dir = EndDir::Unknown;
};

using RawCrossing = std::array<RawEnd, 4>;

enum class BuildMode {
  Strict,  // parsed input: orientation must follow from under-strands
  Lenient, // derived diagrams: explicit end directions win, conflicts allowed
};

} // namespace detail

class Diagram;
namespace detail {
Diagram build_diagram(std::vector<RawCrossing> raw, int free_circles, BuildMode mode, bool relabel);
}

class Diagram {
public:
  using Tuple = std::array<int, 4>;

  Diagram() = default;

  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int arc_count() const { return 2 * crossing_count(); }
  int free_circles() const { return free_circles_; }
  /// Link components, including crossing-free circles.
  int component_count() const { return static_cast<int>(components_.size()) + free_circles_; }
  const std::vector<Tuple> &crossings() const { return crossings_; }
  const Tuple &tuple(int c) const { return crossings_.at(check(c)); }
  /// Arc labels of each crossing-carrying component in orientation order.
  const std::vector<std::vector<int>> &components() const { return components_; }

  /// Slot (1 or 3) of the incoming over-strand arc at crossing c.
  int over_in_slot(int c) const { return over_in_.at(check(c)); }

  int sign(int c) const { return over_in_slot(c) == 3 ? +1 : -1; }

  int writhe() const {
    int w = 0;
    for (int c = 0; c < crossing_count(); ++c)
      w += sign(c);
    return w;
  }

  /// The crossing end where arc `label` terminates (enters a crossing).
  ArcEnd head(int label) const { return head_.at(label); }
  ArcEnd tail(int label) const { return tail_.at(label); }

  /// Slot pairs joined by a splice at any crossing.
  static std::array<std::pair<int, int>, 2> splice_slots(Splice s) {
    if (s == Splice::A)
      return {{{0, 1}, {2, 3}}};
    return {{{0, 3}, {1, 2}}};
  }

  /// Splice whose result respects the strand orientations at crossing c.
  Splice oriented_splice(int c) const { return sign(c) > 0 ? Splice::A : Splice::B; }

  std::string to_pd() const {
    std::ostringstream out;
    bool first = true;
    for (const auto &t : crossings_) {
      out << (first ? "" : " ") << "X[" << t[0] << "," << t[1] << "," << t[2] << "," << t[3] << "]";
      first = false;
    }
    for (int i = 0; i < free_circles_; ++i) {
      out << (first ? "" : " ") << "O[" << (arc_count() + i + 1) << "]";
      first = false;
    }
    return out.str();
  }

  friend bool operator==(const Diagram &a, const Diagram &b) {
    return a.crossings_ == b.crossings_ && a.over_in_ == b.over_in_ &&
           a.free_circles_ == b.free_circles_;
  }

  int check(int c) const {
    if (c < 0 || c >= crossing_count())
      throw std::out_of_range("unknown crossing id " + std::to_string(c) + " (diagram has " +
                              std::to_string(crossing_count()) + " crossings)");
    return c;
  }

  /// Raw form with every end's direction made explicit.
  std::vector<detail::RawCrossing> oriented_raw() const {
    std::vector<detail::RawCrossing> raw(crossings_.size());
    for (std::size_t c = 0; c < crossings_.size(); ++c) {
      const int over_in = over_in_[c];
      for (int s = 0; s < 4; ++s) {
        const bool in = s == 0 || s == over_in;
        raw[c][s] = {crossings_[c][s], in ? detail::EndDir::In : detail::EndDir::Out};
      }
    }
    return raw;
  }

private:
  friend Diagram detail::build_diagram(std::vector<detail::RawCrossing>, int, detail::BuildMode,
                                       bool);

  std::vector<Tuple> crossings_;
  std::vector<std::uint8_t> over_in_;
  std::vector<std::vector<int>> components_;
  std::vector<ArcEnd> head_, tail_; // indexed by label, slot 0 unused
  int free_circles_ = 0;
};

namespace detail {

inline Diagram build_diagram(std::vector<RawCrossing> raw, int free_circles, BuildMode mode,
                             bool relabel) {
  const int n = static_cast<int>(raw.size());
  if (n == 0 && free_circles == 0)
    throw PdValidationError("diagram has no crossings and no circles");

  // Occurrence table.
  std::map<int, std::vector<ArcEnd>> where;
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) {
      if (raw[c][s].label <= 0)
        throw PdValidationError("arc label " + std::to_string(raw[c][s].label) +
                                " is not a positive integer");
      where[raw[c][s].label].push_back({c, s});
    }
  for (const auto &[label, ends] : where)
    if (ends.size() > 2)
      throw PdValidationError("arc " + std::to_string(label) + " appears " +
                              std::to_string(ends.size()) + " times (expected exactly 2)");
  for (const auto &[label, ends] : where)
    if (ends.size() < 2)
      throw PdValidationError("arc " + std::to_string(label) + " appears once (expected exactly 2)");
  if (mode == BuildMode::Strict) {
    int expect = 1;
    for (const auto &[label, ends] : where) {
      if (label != expect)
        throw PdValidationError("arc labels must be 1.." + std::to_string(2 * n) + "; arc " +
                                std::to_string(expect) + " is missing");
      ++expect;
    }
  }

  auto partner = [&](ArcEnd e) {
    const auto &ends = where.at(raw[e.crossing][e.slot].label);
    return ends[0] == e ? ends[1] : ends[0];
  };

  std::vector<std::array<bool, 4>> seen(n, {false, false, false, false});
  std::vector<std::array<EndDir, 4>> dir(n);
  std::vector<std::vector<ArcEnd>> cycles; // out-ends of each cycle in orientation order

  for (int c0 = 0; c0 < n; ++c0)
    for (int s0 = 0; s0 < 4; ++s0) {
      if (seen[c0][s0])
        continue;
      // Forward traversal: leave through e, travel the arc, enter at partner(e).
      std::vector<ArcEnd> outs, ins;
      ArcEnd e{c0, s0};
      do {
        const ArcEnd p = partner(e);
        outs.push_back(e);
        ins.push_back(p);
        seen[e.crossing][e.slot] = seen[p.crossing][p.slot] = true;
        e = {p.crossing, p.slot ^ 2};
      } while (!(e == ArcEnd{c0, s0}));

      // Votes: +1 keeps this traversal direction, -1 reverses it.
      std::optional<int> explicit_vote, under_vote;
      bool under_conflict = false;
      int conflict_label = 0;
      for (std::size_t k = 0; k < outs.size(); ++k) {
        for (const auto &[end, forward_dir] :
             {std::pair{outs[k], EndDir::Out}, std::pair{ins[k], EndDir::In}}) {
          const RawEnd &r = raw[end.crossing][end.slot];
          if (!explicit_vote && r.dir != EndDir::Unknown)
            explicit_vote = r.dir == forward_dir ? 1 : -1;
        }
        // Under-strand enters at slot 0 and leaves at slot 2.
        const ArcEnd in = ins[k];
        if (in.slot == 0 || in.slot == 2) {
          const int v = in.slot == 0 ? 1 : -1;
          if (under_vote && *under_vote != v && !under_conflict) {
            under_conflict = true;
            conflict_label = raw[in.crossing][in.slot].label;
          }
          if (!under_vote)
            under_vote = v;
        }
      }

      int vote = 0;
      if (mode == BuildMode::Strict && under_conflict)
        throw PdValidationError("inconsistent orientation: under-strands disagree along arc " +
                                std::to_string(conflict_label));
      if (explicit_vote)
        vote = *explicit_vote;
      else if (under_vote)
        vote = *under_vote;
      else {
        // No under-passages: orient by increasing arc labels.
        auto ascents = [&](bool forward) {
          int count = 0;
          const std::size_t m = outs.size();
          for (std::size_t k = 0; k < m; ++k) {
            const ArcEnd a = forward ? outs[k] : outs[(m - k) % m];
            const ArcEnd b = forward ? outs[(k + 1) % m] : outs[(2 * m - k - 1) % m];
            count += raw[b.crossing][b.slot].label == raw[a.crossing][a.slot].label + 1;
          }
          return count;
        };
        vote = ascents(true) >= ascents(false) ? 1 : -1;
      }

      if (vote < 0) {
        // Reverse: ins become outs. Keep the starting arc first.
        std::vector<ArcEnd> rev;
        rev.reserve(ins.size());
        rev.push_back(ins[0]);
        for (std::size_t k = ins.size(); k-- > 1;)
          rev.push_back(ins[k]);
        for (const ArcEnd &x : outs)
          dir[x.crossing][x.slot] = EndDir::In;
        for (const ArcEnd &x : ins)
          dir[x.crossing][x.slot] = EndDir::Out;
        cycles.push_back(std::move(rev));
      } else {
        for (const ArcEnd &x : outs)
          dir[x.crossing][x.slot] = EndDir::Out;
        for (const ArcEnd &x : ins)
          dir[x.crossing][x.slot] = EndDir::In;
        cycles.push_back(std::move(outs));
      }
    }

  // Label map (identity unless relabelling along components).
  std::map<int, int> new_label;
  std::vector<std::vector<int>> components;
  int next = 1;
  for (const auto &cyc : cycles) {
    std::vector<int> comp;
    for (const ArcEnd &e : cyc) {
      const int old = raw[e.crossing][e.slot].label;
      const int lab = relabel ? next++ : old;
      new_label[old] = lab;
      comp.push_back(lab);
    }
    components.push_back(std::move(comp));
  }

  Diagram d;
  d.free_circles_ = free_circles;
  d.components_ = std::move(components);
  d.crossings_.resize(n);
  d.over_in_.resize(n);
  d.head_.assign(2 * n + 1, ArcEnd{});
  d.tail_.assign(2 * n + 1, ArcEnd{});
  for (int c = 0; c < n; ++c) {
    // Rotate by two when the under-strand enters at slot 2.
    const int shift = dir[c][0] == EndDir::In ? 0 : 2;
    for (int s = 0; s < 4; ++s) {
      const int from = (s + shift) % 4;
      const int lab = new_label.at(raw[c][from].label);
      d.crossings_[c][s] = lab;
      if (lab < 1 || lab > 2 * n)
        throw PdValidationError("arc label " + std::to_string(lab) + " out of range");
      const bool in = dir[c][from] == EndDir::In;
      (in ? d.head_ : d.tail_)[lab] = {c, s};
      if (s % 2 == 1 && in)
        d.over_in_[c] = static_cast<std::uint8_t>(s);
    }
  }
  return d;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Parsing

/// Parses whitespace-separated `X[a,b,c,d]` and `O[n]` terms; `#` starts a
/// comment running to the end of the line.
inline Diagram parse_pd(std::string_view text) {
  std::vector<detail::RawCrossing> raw;
  int circles = 0;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
      else if (text[i] == '#')
        while (i < text.size() && text[i] != '\n')
          ++i;
      else
        break;
    }
  };
  auto expect = [&](char ch) {
    skip();
    if (i >= text.size() || text[i] != ch)
      throw PdSyntaxError(std::string("expected '") + ch + "'", i);
    ++i;
  };
  auto number = [&] {
    skip();
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw PdSyntaxError("expected a positive integer", i);
    long long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i++] - '0');
      if (v > 1'000'000)
        throw PdSyntaxError("arc label too large", i);
    }
    if (v == 0)
      throw PdSyntaxError("arc labels start at 1", i);
    return static_cast<int>(v);
  };

  while (true) {
    skip();
    if (i >= text.size())
      break;
    const char head = text[i];
    if (head == 'X') {
      ++i;
      expect('[');
      detail::RawCrossing c;
      for (int k = 0; k < 4; ++k) {
        if (k)
          expect(',');
        c[k].label = number();
      }
      expect(']');
      raw.push_back(c);
    } else if (head == 'O') {
      ++i;
      expect('[');
      number();
      expect(']');
      ++circles;
    } else {
      throw PdSyntaxError(std::string("unexpected character '") + head + "'", i);
    }
  }
  return detail::build_diagram(std::move(raw), circles, detail::BuildMode::Strict, false);
}

/// The crossing-free unknot diagram `O[1]`.
inline Diagram unknot_diagram(int circles = 1) {
  return detail::build_diagram({}, circles, detail::BuildMode::Strict, false);
}

// ---------------------------------------------------------------------------
// Crossing-level operations

namespace detail {

/// Rotates crossing c's ends so the former over-strand becomes the under-strand.
inline void flip_crossing(std::vector<RawCrossing> &raw, const Diagram &d, int c) {
  const RawCrossing old = raw[c];
  const int step = d.over_in_slot(c); // new slot k takes old slot (k + step) % 4
  for (int k = 0; k < 4; ++k)
    raw[c][k] = old[(k + step) % 4];
}

} // namespace detail

inline Diagram crossing_change(const Diagram &d, int c) {
  d.check(c);
  auto raw = d.oriented_raw();
  detail::flip_crossing(raw, d, c);
  return detail::build_diagram(std::move(raw), d.free_circles(), detail::BuildMode::Lenient, false);
}

inline Diagram mirror_of(const Diagram &d) {
  auto raw = d.oriented_raw();
  for (int c = 0; c < d.crossing_count(); ++c)
    detail::flip_crossing(raw, d, c);
  return detail::build_diagram(std::move(raw), d.free_circles(), detail::BuildMode::Lenient, false);
}

/// Replaces crossing c by the chosen splice. Arcs are relabelled along the
/// components; closed loops with no crossings left become free circles.
inline Diagram smooth(const Diagram &d, int c, Splice kind) {
  d.check(c);
  auto raw = d.oriented_raw();
  const int labels = d.arc_count();
  detail::UnionFind uf(labels + 1);
  for (const auto &[s, t] : Diagram::splice_slots(kind))
    uf.unite(raw[c][s].label, raw[c][t].label);
  raw.erase(raw.begin() + c);

  std::vector<bool> used(labels + 1, false);
  for (auto &x : raw)
    for (auto &e : x) {
      e.label = uf.find(e.label);
      used[e.label] = true;
    }
  int circles = d.free_circles();
  std::vector<bool> counted(labels + 1, false);
  for (const int lab : d.tuple(c)) {
    const int root = uf.find(lab);
    if (!used[root] && !counted[root]) {
      counted[root] = true;
      ++circles;
    }
  }
  return detail::build_diagram(std::move(raw), circles, detail::BuildMode::Lenient, true);
}

inline Diagram oriented_smoothing(const Diagram &d, int c) {
  return smooth(d, c, d.oriented_splice(d.check(c)));
}

struct SkeinTriple {
  Diagram l_plus, l_minus, l_zero;
  int site = 0;
};

inline SkeinTriple skein_triple(const Diagram &d, int c) {
  SkeinTriple t;
  t.site = d.check(c);
  Diagram changed = crossing_change(d, c);
  if (d.sign(c) < 0) {
    t.l_minus = d;
    t.l_plus = std::move(changed);
  } else {
    t.l_plus = d;
    t.l_minus = std::move(changed);
  }
  t.l_zero = oriented_smoothing(d, c);
  return t;
}

/// Places `b` beside `a`, shifting b's arc labels past a's.
inline Diagram disjoint_union(const Diagram &a, const Diagram &b) {
  auto raw = a.oriented_raw();
  const int shift = a.arc_count();
  for (auto x : b.oriented_raw()) {
    for (auto &e : x)
      e.label += shift;
    raw.push_back(x);
  }
  return detail::build_diagram(std::move(raw), a.free_circles() + b.free_circles(),
                               detail::BuildMode::Lenient, false);
}

// ---------------------------------------------------------------------------
// Predicates

/// Over/under passages strictly alternate along every component.
inline bool is_alternating_diagram(const Diagram &d) {
  for (const auto &comp : d.components()) {
    const std::size_t m = comp.size();
    for (std::size_t k = 0; k < m; ++k) {
      const ArcEnd here = d.head(comp[k]);
      const ArcEnd next = d.head(comp[(k + 1) % m]);
      const bool under_here = here.slot == 0;
      const bool under_next = next.slot == 0;
      if (under_here == under_next)
        return false;
    }
  }
  return true;
}

/// Connected pieces of the projection: crossing clusters plus free circles.
inline int underlying_components(const Diagram &d) {
  const int n = d.crossing_count();
  detail::UnionFind uf(n);
  for (int lab = 1; lab <= d.arc_count(); ++lab)
    uf.unite(d.head(lab).crossing, d.tail(lab).crossing);
  int pieces = d.free_circles();
  for (int c = 0; c < n; ++c)
    pieces += uf.find(c) == c;
  return pieces;
}

inline bool is_split_diagram(const Diagram &d) { return underlying_components(d) >= 2; }

/// A crossing is nugatory when one of its splices disconnects the diagram.
inline bool is_nugatory(const Diagram &d, int c) {
  return is_split_diagram(smooth(d, c, Splice::A)) || is_split_diagram(smooth(d, c, Splice::B));
}

inline bool is_reduced(const Diagram &d) {
  if (is_split_diagram(d))
    throw PreconditionError("is_reduced requires a non-split diagram");
  for (int c = 0; c < d.crossing_count(); ++c)
    if (is_nugatory(d, c))
      return false;
  return true;
}

} // namespace knotx
