#pragma once

// Verification harness: skein identities, the alternating-link coefficient
// and span properties, the relations used when a negative crossing is
// smoothed, and the crossing-change sweep over a knot table.

#include "knotx/bracket.hpp"
#include "knotx/diagram.hpp"
#include "knotx/knotdb.hpp"
#include "knotx/laurent.hpp"
#include "knotx/stategraph.hpp"

#include <algorithm>
#include <future>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace knotx {

// ---------------------------------------------------------------------------
// Skein relations

/// A^4 X(L+) - A^-4 X(L-) + (A^2 - A^-2) X(L0); zero for every crossing.
inline LaurentA check_skein(const Diagram &d, int c, const StateOptions &opts = {}) {
  const SkeinTriple t = skein_triple(d, c);
  return LaurentA::monomial(1, 4) * x_polynomial(t.l_plus, opts) -
         LaurentA::monomial(1, -4) * x_polynomial(t.l_minus, opts) +
         (LaurentA::monomial(1, 2) - LaurentA::monomial(1, -2)) * x_polynomial(t.l_zero, opts);
}

/// t^-1 V(L+) - t V(L-) + (t^-1/2 - t^1/2) V(L0); zero for every crossing.
inline QuarterLaurentT check_t_skein(const Diagram &d, int c, const StateOptions &opts = {}) {
  const SkeinTriple t = skein_triple(d, c);
  return t_power(-1) * jones(t.l_plus, opts) - t_power(1) * jones(t.l_minus, opts) +
         (QuarterLaurentT::monomial(1, -2) - QuarterLaurentT::monomial(1, 2)) *
             jones(t.l_zero, opts);
}

// ---------------------------------------------------------------------------
// Check lists

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CheckReport {
  std::vector<Check> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.passed; });
  }
  void add(std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok, std::move(detail)});
  }
};

/// Slot i (degree min_deg + 4i) carries sign e*(-1)^i for a fixed e wherever
/// its coefficient is nonzero; vacant slots are skipped. Every degree must
/// share the residue of min_deg mod 4.
inline bool signs_alternate(const LaurentA &p) {
  if (p.is_zero())
    return true;
  const int base = p.min_deg();
  for (const auto &[d, c] : p.terms()) {
    if (((d - base) % 4 + 4) % 4 != 0)
      return false;
    const int parity = ((d - base) / 4) % 2 == 0 ? 1 : -1;
    if ((c > 0 ? 1 : -1) * parity != (p.coeff(base) > 0 ? 1 : -1))
      return false;
  }
  return true;
}

inline void require_reduced_alternating(const Diagram &d, const char *what) {
  if (d.crossing_count() == 0 || is_split_diagram(d) || !is_alternating_diagram(d) ||
      !is_reduced(d))
    throw PreconditionError(std::string(what) +
                            " requires a reduced, alternating, connected diagram with crossings");
}

/// Coefficient and span properties of a reduced alternating connected diagram.
inline CheckReport lemma_suite(const Diagram &d, const StateOptions &opts = {}) {
  require_reduced_alternating(d, "lemma_suite");
  CheckReport r;
  const LaurentA x = x_polynomial(d, opts);
  const int c = d.crossing_count();
  auto str = [](const auto &v) {
    std::ostringstream o;
    o << v;
    return o.str();
  };

  const Integer x0 = x.coeff_from_bottom(0), xh0 = x.coeff_from_top(0);
  r.add("end coefficients are +-1", abs(x0) == 1 && abs(xh0) == 1,
        "X_0=" + str(x0) + " Xhat_0=" + str(xh0));
  r.add("coefficient signs alternate", signs_alternate(x), render(x));
  r.add("span = 4c", x.span() == 4 * c,
        "span=" + std::to_string(x.span()) + " c=" + std::to_string(c));

  const int bottom = second_coeff_magnitude(d, DegreeEnd::Bottom);
  const int top = second_coeff_magnitude(d, DegreeEnd::Top);
  const Integer x1 = abs(x.coeff_from_bottom(1)), xh1 = abs(x.coeff_from_top(1));
  r.add("|X_1| = e(G(B)')-v(G(B)')+1", x1 == bottom,
        "|X_1|=" + str(x1) + " graph=" + std::to_string(bottom));
  r.add("|Xhat_1| = e(G(A)')-v(G(A)')+1", xh1 == top,
        "|Xhat_1|=" + str(xh1) + " graph=" + std::to_string(top));

  const int predicted = predicted_min_deg(d);
  r.add("min degree = -3w - c - 2|S_B| + 2", predicted == x.min_deg(),
        "predicted=" + std::to_string(predicted) + " actual=" + std::to_string(x.min_deg()));

  const int sa = all_state_loops(d, Splice::A), sb = all_state_loops(d, Splice::B);
  r.add("|S_A| + |S_B| = c + 2", sa + sb == c + 2,
        "|S_A|=" + std::to_string(sa) + " |S_B|=" + std::to_string(sb));

  const QuarterLaurentT v = substitute_A_to_quarter_t(x);
  const QuarterLaurentT vt = jones_via_tutte(d);
  r.add("Jones = Tutte identity", v == vt, render(v) + " vs " + render(vt));

  for (const Splice kind : {Splice::A, Splice::B}) {
    const StateMultigraph g = state_graph(d, kind);
    const QuarterLaurentT subset = thistlethwaite_sum(g);
    const QuarterLaurentT direct = tutte_eval(g, t_power(1, -1), t_power(-1, -1));
    r.add(std::string("subset sum = T_G") + to_char(kind) + "(-t,-1/t)", subset == direct,
          render(subset) + " vs " + render(direct));
  }
  return r;
}

/// Relations between L- = d and L0 = its oriented smoothing at negative
/// crossing c, including the bottom-end bookkeeping of
/// X(L+) = A^-8 X(L-) + (A^-6 - A^-2) X(L0).
inline CheckReport proof_relations(const Diagram &d, int c, const StateOptions &opts = {}) {
  require_reduced_alternating(d, "proof_relations");
  if (d.sign(c) != -1)
    throw PreconditionError("proof_relations requires a negative crossing");
  CheckReport r;
  const SkeinTriple t = skein_triple(d, c);
  const Diagram &lm = t.l_minus, &l0 = t.l_zero, &lp = t.l_plus;

  r.add("w(L-) = w(L0) - 1", lm.writhe() == l0.writhe() - 1,
        std::to_string(lm.writhe()) + " vs " + std::to_string(l0.writhe()));
  r.add("b(S_B-) = b(S_B0) + 1", lm.crossing_count() == l0.crossing_count() + 1);
  const int sbm = all_state_loops(lm, Splice::B), sb0 = all_state_loops(l0, Splice::B);
  r.add("|S_B-| = |S_B0|", sbm == sb0, std::to_string(sbm) + " vs " + std::to_string(sb0));
  r.add("L0 is alternating", is_alternating_diagram(l0));

  const LaurentA xm = x_polynomial(lm, opts), x0 = x_polynomial(l0, opts),
                 xp = x_polynomial(lp, opts);
  const LaurentA first = xm.shifted(-8);
  const LaurentA second = (LaurentA::monomial(1, -6) - LaurentA::monomial(1, -2)) * x0;
  r.add("X(L+) = A^-8 X(L-) + (A^-6 - A^-2) X(L0)", xp == first + second);
  r.add("mindeg A^-8 X(L-) = mindeg (A^-6 - A^-2) X(L0)", first.min_deg() == second.min_deg(),
        std::to_string(first.min_deg()) + " vs " + std::to_string(second.min_deg()));
  const Integer bm = xm.coeff_from_bottom(0), b0 = x0.coeff_from_bottom(0);
  r.add("X_0(L-) = -X_0(L0)", bm == -b0);
  r.add("mindeg X(L+) >= mindeg X(L-) - 4", xp.min_deg() >= xm.min_deg() - 4);

  const StateMultigraph gm = state_graph(lm, Splice::B), g0 = state_graph(l0, Splice::B);
  r.add("G(B)_0 isomorphic to G(B)_- minus e_0", are_isomorphic(g0, delete_edge(gm, c)));
  return r;
}

// ---------------------------------------------------------------------------
// Crossing-change sweep

enum class Verdict {
  TheoremHolds,
  NonAlternatingExcluded,
  Unidentified,
  Ambiguous,
  Violated,
  Anomaly,
};

inline const char *to_string(Verdict v) {
  switch (v) {
  case Verdict::TheoremHolds:
    return "theorem_holds";
  case Verdict::NonAlternatingExcluded:
    return "non_alternating_excluded";
  case Verdict::Unidentified:
    return "unidentified";
  case Verdict::Ambiguous:
    return "ambiguous";
  case Verdict::Violated:
    return "violated";
  case Verdict::Anomaly:
    return "anomaly";
  }
  return "?";
}

struct SweepOutcome {
  int crossing = 0;
  int sign = 0;
  bool via_mirror = false;
  std::vector<IdentificationResult::Match> matches;
  bool exact = false;
  std::optional<bool> target_alternating;
  int c_source = 0;
  std::optional<int> c_target;
  int span_source = 0;
  int span_target = 0;
  int span_drop = 0;
  Verdict verdict = Verdict::Unidentified;
  std::string changed_pd;

  std::string target_name() const {
    std::string s;
    for (const auto &m : matches)
      s += (s.empty() ? "" : "|") + m.name;
    return s.empty() ? "none" : s;
  }
};

struct SweepReport {
  std::string source;
  int c_source = 0;
  int span_source = 0;
  std::vector<SweepOutcome> outcomes;

  bool failed() const {
    return std::any_of(outcomes.begin(), outcomes.end(), [](const SweepOutcome &o) {
      return o.verdict == Verdict::Violated || o.verdict == Verdict::Anomaly;
    });
  }
};

/// Changes every crossing of the named alternating record in turn and
/// classifies the result. Positive crossings are processed on the mirror
/// diagram, where they become negative.
inline SweepReport theorem_sweep(const KnotTable &table, const std::string &name,
                                 const StateOptions &opts = {}) {
  const KnotRecord &rec = table.at(name);
  if (!rec.alternating)
    throw PreconditionError("theorem_sweep: " + name + " is not alternating");
  const Diagram &d = rec.diagram;
  require_reduced_alternating(d, "theorem_sweep");

  SweepReport report;
  report.source = name;
  report.c_source = rec.crossing_number;
  report.span_source = span_x(d, opts);
  const Diagram mirror = mirror_of(d);

  for (int c = 0; c < d.crossing_count(); ++c) {
    SweepOutcome o;
    o.crossing = c;
    o.sign = d.sign(c);
    o.via_mirror = o.sign > 0;
    o.c_source = report.c_source;
    o.span_source = report.span_source;

    const Diagram changed = crossing_change(o.via_mirror ? mirror : d, c);
    o.changed_pd = crossing_change(d, c).to_pd();
    const QuarterLaurentT v = jones(changed, opts);
    IdentificationResult id = identify(table, v);
    if (o.via_mirror)
      for (auto &m : id.matches)
        m.chirality = m.chirality == Chirality::Same ? Chirality::Mirrored : Chirality::Same;
    o.matches = id.matches;
    o.exact = id.exact;
    o.span_target = substitute_quarter_t_to_A(v).span();
    o.span_drop = o.span_source - o.span_target;

    int alternating = 0, non_alternating = 0, c_alt = 0, c_non = 1 << 20;
    for (const auto &m : o.matches) {
      const KnotRecord &t = table.at(m.name);
      if (t.alternating) {
        ++alternating;
        c_alt = std::max(c_alt, t.crossing_number);
      } else {
        ++non_alternating;
        c_non = std::min(c_non, t.crossing_number);
      }
    }
    if (o.matches.empty()) {
      o.verdict = Verdict::Unidentified;
    } else if (alternating && non_alternating) {
      o.verdict = Verdict::Ambiguous;
    } else if (alternating) {
      o.target_alternating = true;
      o.c_target = c_alt;
      const bool by_table = c_alt <= o.c_source - 2;
      const bool by_span = o.span_drop >= 8;
      o.verdict = by_table && by_span   ? Verdict::TheoremHolds
                  : by_table || by_span ? Verdict::Anomaly
                                        : Verdict::Violated;
    } else {
      o.target_alternating = false;
      o.c_target = c_non;
      o.verdict = Verdict::NonAlternatingExcluded;
    }
    report.outcomes.push_back(std::move(o));
  }
  return report;
}

/// Sweeps every alternating record with at most `max_crossings` crossings,
/// in table order. Records are processed on `workers` threads.
inline std::vector<SweepReport> sweep_table(const KnotTable &table, int max_crossings,
                                            unsigned workers = 1,
                                            const StateOptions &opts = {}) {
  std::vector<std::string> names;
  for (const auto &r : table.records())
    if (r.alternating && r.crossing_number >= 1 && r.crossing_number <= max_crossings)
      names.push_back(r.name);
  std::vector<SweepReport> reports(names.size());
  workers = std::max(1u, workers);
  std::vector<std::future<void>> jobs;
  for (unsigned w = 0; w < workers; ++w)
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < names.size(); i += workers)
        reports[i] = theorem_sweep(table, names[i], opts);
    }));
  for (auto &j : jobs)
    j.get();
  return reports;
}

} // namespace knotx
