#pragma once

// Kauffman bracket by exhaustive state enumeration, and the polynomials
// derived from it.

#include "knotx/diagram.hpp"
#include "knotx/laurent.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

namespace knotx {

class CrossingLimitError : public std::length_error {
public:
  CrossingLimitError(int crossings, int limit)
      : std::length_error("diagram has " + std::to_string(crossings) +
                          " crossings, above the state-sum limit of " + std::to_string(limit)),
        crossings(crossings), limit(limit) {}
  int crossings, limit;
};

struct StateOptions {
  int max_crossings = 20;
  /// Worker threads for the state sum; results are identical for any count.
  unsigned workers = 1;
};

struct StateResolution {
  std::vector<Splice> assignment;
  int a_count = 0;
  int b_count = 0;
  int loop_count = 0;
};

inline void check_limit(const Diagram &d, const StateOptions &opts) {
  if (opts.max_crossings < 1 || d.crossing_count() > std::min(opts.max_crossings, 62))
    throw CrossingLimitError(d.crossing_count(), std::min(opts.max_crossings, 62));
}

/// Loops of the state where crossing i is B-spliced iff bit i of `b_mask` is set.
inline int state_loop_count(const Diagram &d, std::uint64_t b_mask) {
  const int labels = d.arc_count();
  detail::UnionFind uf(labels + 1);
  int loops = labels;
  for (int c = 0; c < d.crossing_count(); ++c) {
    const auto &t = d.crossings()[c];
    const Splice s = (b_mask >> c) & 1u ? Splice::B : Splice::A;
    for (const auto &[x, y] : Diagram::splice_slots(s))
      loops -= uf.unite(t[x], t[y]);
  }
  return loops + d.free_circles();
}

/// All 2^c states, in binary-counter order (bit i set = B at crossing i).
inline std::vector<StateResolution> enumerate_states(const Diagram &d,
                                                     const StateOptions &opts = {}) {
  check_limit(d, opts);
  const int n = d.crossing_count();
  std::vector<StateResolution> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    StateResolution r;
    r.assignment.resize(n);
    for (int c = 0; c < n; ++c) {
      r.assignment[c] = (mask >> c) & 1u ? Splice::B : Splice::A;
      ++((mask >> c) & 1u ? r.b_count : r.a_count);
    }
    r.loop_count = state_loop_count(d, mask);
    out.push_back(std::move(r));
  }
  return out;
}

/// Number of states with a given (a(S) - b(S), |S|).
using StateHistogram = std::map<std::pair<int, int>, std::int64_t>;

inline StateHistogram state_histogram(const Diagram &d, const StateOptions &opts = {}) {
  check_limit(d, opts);
  const int n = d.crossing_count();
  const std::uint64_t total = std::uint64_t{1} << n;
  const unsigned workers =
      std::max(1u, std::min<unsigned>(opts.workers, static_cast<unsigned>(std::min<std::uint64_t>(total, 64))));

  auto run = [&](std::uint64_t begin, std::uint64_t end, StateHistogram &h) {
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      const int b = std::popcount(mask);
      ++h[{n - 2 * b, state_loop_count(d, mask)}];
    }
  };

  std::vector<StateHistogram> parts(workers);
  if (workers == 1) {
    run(0, total, parts[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back(run, total * w / workers, total * (w + 1) / workers, std::ref(parts[w]));
    for (auto &t : pool)
      t.join();
  }
  StateHistogram merged;
  for (const auto &p : parts)
    for (const auto &[k, v] : p)
      merged[k] += v;
  return merged;
}

/// The loop value -A^2 - A^{-2}.
inline LaurentA loop_value() { return LaurentA::monomial(-1, 2) + LaurentA::monomial(-1, -2); }

/// Sum over states of A^(a-b) (-A^2 - A^-2)^(|S|-1).
inline LaurentA kauffman_bracket(const Diagram &d, const StateOptions &opts = {}) {
  const StateHistogram hist = state_histogram(d, opts);
  std::map<int, LaurentA> loop_powers;
  LaurentA result;
  for (const auto &[key, count] : hist) {
    const auto [exponent, loops] = key;
    auto it = loop_powers.find(loops);
    if (it == loop_powers.end())
      it = loop_powers.emplace(loops, loop_value().pow(static_cast<unsigned>(loops - 1))).first;
    result += it->second.shifted(exponent) * LaurentA(static_cast<long long>(count));
  }
  return result;
}

/// Writhe-normalised bracket (-A^3)^{-w} <D>.
inline LaurentA x_polynomial(const Diagram &d, const StateOptions &opts = {}) {
  return mono_pow(-1, 3, -d.writhe()) * kauffman_bracket(d, opts);
}

inline QuarterLaurentT jones(const Diagram &d, const StateOptions &opts = {}) {
  return substitute_A_to_quarter_t(x_polynomial(d, opts));
}

inline int span_x(const Diagram &d, const StateOptions &opts = {}) {
  return x_polynomial(d, opts).span();
}

inline int all_state_loops(const Diagram &d, Splice kind) {
  const std::uint64_t mask =
      kind == Splice::A ? 0 : (d.crossing_count() == 64 ? ~0ull : (1ull << d.crossing_count()) - 1);
  return state_loop_count(d, mask);
}

/// Kauffman's lowest-degree prediction -3w - c - 2|S_B| + 2 for connected
/// alternating diagrams.
inline int predicted_min_deg(const Diagram &d) {
  if (d.crossing_count() == 0)
    throw PreconditionError("predicted_min_deg needs at least one crossing");
  if (!is_alternating_diagram(d) || is_split_diagram(d))
    throw PreconditionError("predicted_min_deg requires a connected alternating diagram");
  return -3 * d.writhe() - d.crossing_count() - 2 * all_state_loops(d, Splice::B) + 2;
}

/// Highest-degree counterpart: -3w + c + 2|S_A| - 2.
inline int predicted_max_deg(const Diagram &d) {
  if (d.crossing_count() == 0)
    throw PreconditionError("predicted_max_deg needs at least one crossing");
  if (!is_alternating_diagram(d) || is_split_diagram(d))
    throw PreconditionError("predicted_max_deg requires a connected alternating diagram");
  return -3 * d.writhe() + d.crossing_count() + 2 * all_state_loops(d, Splice::A) - 2;
}

} // namespace knotx
