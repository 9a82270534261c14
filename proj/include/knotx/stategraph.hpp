#pragma once

// State graphs of link diagrams: vertices are the loops of the all-A (or
// all-B) state, edges are crossings. Includes the Tutte polynomial by
// deletion-contraction and the subset expansion of T(-t, -1/t) over the
// simple reduction.

#include "knotx/bracket.hpp"
#include "knotx/diagram.hpp"
#include "knotx/laurent.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace knotx {

struct StateMultigraph {
  struct Edge {
    int u = 0, v = 0; // u <= v
    int crossing = -1;
    friend auto operator<=>(const Edge &, const Edge &) = default;
  };
  int vertex_count = 0;
  std::vector<Edge> edges;
};

struct SimpleReduction {
  int vertex_count = 0;
  /// Distinct vertex pairs (u <= v); a self-loop class survives as one (u, u).
  std::vector<std::pair<int, int>> simple_edges;
  /// Parallel multiplicity of each simple edge in the source multigraph.
  std::vector<int> multiplicity;
};

enum class DegreeEnd { Bottom, Top };

/// Loops of the all-`kind` state are numbered by their smallest arc label;
/// free circles follow as isolated vertices.
inline StateMultigraph state_graph(const Diagram &d, Splice kind) {
  const int labels = d.arc_count();
  detail::UnionFind uf(labels + 1);
  for (const auto &t : d.crossings())
    for (const auto &[x, y] : Diagram::splice_slots(kind))
      uf.unite(t[x], t[y]);

  std::vector<int> vertex_of(labels + 1, -1);
  StateMultigraph g;
  for (int lab = 1; lab <= labels; ++lab) {
    const int root = uf.find(lab);
    if (vertex_of[root] < 0)
      vertex_of[root] = g.vertex_count++;
    vertex_of[lab] = vertex_of[root];
  }
  g.vertex_count += d.free_circles();

  // Each splice pair lies on one loop; the crossing joins the two pairs' loops.
  const auto pairs = Diagram::splice_slots(kind);
  for (int c = 0; c < d.crossing_count(); ++c) {
    const auto &t = d.crossings()[c];
    int u = vertex_of[t[pairs[0].first]], v = vertex_of[t[pairs[1].first]];
    if (u > v)
      std::swap(u, v);
    g.edges.push_back({u, v, c});
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

inline SimpleReduction reduce_graph(const StateMultigraph &g) {
  std::map<std::pair<int, int>, int> classes;
  for (const auto &e : g.edges)
    ++classes[{e.u, e.v}];
  SimpleReduction r;
  r.vertex_count = g.vertex_count;
  for (const auto &[uv, m] : classes) {
    r.simple_edges.push_back(uv);
    r.multiplicity.push_back(m);
  }
  return r;
}

/// e(G') - v(G') + 1 of the B-graph (Bottom) or A-graph (Top).
inline int second_coeff_magnitude(const Diagram &d, DegreeEnd end) {
  if (!is_alternating_diagram(d) || is_split_diagram(d))
    throw PreconditionError("second_coeff_magnitude requires a connected alternating diagram");
  const auto r = reduce_graph(state_graph(d, end == DegreeEnd::Bottom ? Splice::B : Splice::A));
  return static_cast<int>(r.simple_edges.size()) - r.vertex_count + 1;
}

/// Connected components of the graph's vertex set.
inline int graph_components(int vertex_count, const std::vector<std::pair<int, int>> &edges) {
  detail::UnionFind uf(vertex_count);
  int k = vertex_count;
  for (const auto &[u, v] : edges)
    k -= uf.unite(u, v);
  return k;
}

inline std::string render_graph(const StateMultigraph &g) {
  std::ostringstream out;
  out << "v=" << g.vertex_count << "\n";
  for (const auto &e : g.edges)
    out << "e " << e.u << " " << e.v << " crossing=" << e.crossing << "\n";
  return out.str();
}

inline std::string render_graph(const SimpleReduction &r) {
  std::ostringstream out;
  out << "v=" << r.vertex_count << "\n";
  for (std::size_t i = 0; i < r.simple_edges.size(); ++i)
    out << "e " << r.simple_edges[i].first << " " << r.simple_edges[i].second
        << " multiplicity=" << r.multiplicity[i] << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Isomorphism of small multigraphs (edge identities ignored)

inline bool are_isomorphic(const StateMultigraph &a, const StateMultigraph &b) {
  if (a.vertex_count != b.vertex_count || a.edges.size() != b.edges.size())
    return false;
  const int n = a.vertex_count;
  auto matrix = [n](const StateMultigraph &g) {
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (const auto &e : g.edges) {
      ++m[e.u][e.v];
      if (e.u != e.v)
        ++m[e.v][e.u];
    }
    return m;
  };
  const auto ma = matrix(a), mb = matrix(b);
  auto signature = [n](const std::vector<std::vector<int>> &m, int v) {
    std::vector<int> row(m[v]);
    std::sort(row.begin(), row.end());
    row.push_back(m[v][v]);
    return row;
  };
  std::vector<std::vector<int>> sig_a(n), sig_b(n);
  for (int v = 0; v < n; ++v) {
    sig_a[v] = signature(ma, v);
    sig_b[v] = signature(mb, v);
  }
  {
    auto sa = sig_a, sb = sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb)
      return false;
  }

  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  auto extend = [&](auto &&self, int v) -> bool {
    if (v == n)
      return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || sig_a[v] != sig_b[w])
        continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        ok = ma[v][u] == mb[w][map[u]];
      if (!ok || ma[v][v] != mb[w][w])
        continue;
      map[v] = w;
      used[w] = true;
      if (self(self, v + 1))
        return true;
      used[w] = false;
    }
    map[v] = -1;
    return false;
  };
  return extend(extend, 0);
}

/// Removes one edge (by crossing id) from a state graph.
inline StateMultigraph delete_edge(StateMultigraph g, int crossing) {
  std::erase_if(g.edges, [crossing](const auto &e) { return e.crossing == crossing; });
  return g;
}

// ---------------------------------------------------------------------------
// Tutte polynomial

/// Integer polynomial in two commuting variables x, y.
class Bivariate {
public:
  using Terms = std::map<std::pair<int, int>, Integer>;

  Bivariate() = default;
  static Bivariate constant(Integer c) { return monomial(std::move(c), 0, 0); }
  static Bivariate monomial(Integer c, int i, int j) {
    Bivariate b;
    if (c != 0)
      b.terms_[{i, j}] = std::move(c);
    return b;
  }
  const Terms &terms() const { return terms_; }

  Bivariate &operator+=(const Bivariate &o) {
    for (const auto &[k, c] : o.terms_) {
      auto &slot = terms_[k];
      slot += c;
      if (slot == 0)
        terms_.erase(k);
    }
    return *this;
  }
  friend Bivariate operator+(Bivariate a, const Bivariate &b) { return a += b; }
  friend Bivariate operator*(const Bivariate &a, const Bivariate &b) {
    Bivariate r;
    for (const auto &[ka, ca] : a.terms_)
      for (const auto &[kb, cb] : b.terms_)
        r += monomial(ca * cb, ka.first + kb.first, ka.second + kb.second);
    return r;
  }
  friend bool operator==(const Bivariate &, const Bivariate &) = default;

  std::string str() const {
    if (terms_.empty())
      return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto &[k, c] : terms_) {
      out << (first ? "" : " + ") << c;
      if (k.first)
        out << "*x^" << k.first;
      if (k.second)
        out << "*y^" << k.second;
      first = false;
    }
    return out.str();
  }

private:
  Terms terms_;
};

namespace detail {

/// Loopless multigraph as a sorted list of (u, v, multiplicity), u < v.
struct TutteGraph {
  int n = 0;
  std::vector<std::tuple<int, int, int>> edges;
  auto operator<=>(const TutteGraph &) const = default;
};

class TutteSolver {
public:
  Bivariate solve(const StateMultigraph &g) {
    Bivariate result = Bivariate::constant(1);
    int loops = 0;
    std::map<std::pair<int, int>, int> mult;
    for (const auto &e : g.edges) {
      if (e.u == e.v)
        ++loops;
      else
        ++mult[{e.u, e.v}];
    }
    if (loops)
      result = Bivariate::monomial(1, 0, loops);
    TutteGraph t{g.vertex_count, {}};
    for (const auto &[uv, m] : mult)
      t.edges.emplace_back(uv.first, uv.second, m);
    return result * split(t);
  }

private:
  // Product over connected components.
  Bivariate split(const TutteGraph &g) {
    std::vector<std::pair<int, int>> plain;
    for (const auto &[u, v, m] : g.edges)
      plain.emplace_back(u, v);
    UnionFind uf(g.n);
    for (const auto &[u, v] : plain)
      uf.unite(u, v);
    std::map<int, std::vector<int>> members;
    for (int v = 0; v < g.n; ++v)
      members[uf.find(v)].push_back(v);
    Bivariate result = Bivariate::constant(1);
    for (const auto &[root, verts] : members) {
      if (verts.size() == 1)
        continue;
      std::vector<int> local(g.n, -1);
      for (std::size_t i = 0; i < verts.size(); ++i)
        local[verts[i]] = static_cast<int>(i);
      TutteGraph c{static_cast<int>(verts.size()), {}};
      for (const auto &[u, v, m] : g.edges)
        if (uf.find(u) == root)
          c.edges.emplace_back(local[u], local[v], m);
      result = result * connected(normalise(c));
    }
    return result;
  }

  // Deterministic relabelling by weighted degree; an exact memo key.
  static TutteGraph normalise(const TutteGraph &g) {
    std::vector<int> degree(g.n, 0);
    for (const auto &[u, v, m] : g.edges) {
      degree[u] += m;
      degree[v] += m;
    }
    std::vector<int> order(g.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return degree[a] > degree[b]; });
    std::vector<int> rank(g.n);
    for (int i = 0; i < g.n; ++i)
      rank[order[i]] = i;
    TutteGraph r{g.n, {}};
    for (const auto &[u, v, m] : g.edges) {
      const int a = rank[u], b = rank[v];
      r.edges.emplace_back(std::min(a, b), std::max(a, b), m);
    }
    std::sort(r.edges.begin(), r.edges.end());
    return r;
  }

  // 1 + y + ... + y^(m-1)
  static Bivariate y_series(int m) {
    Bivariate s;
    for (int j = 0; j < m; ++j)
      s += Bivariate::monomial(1, 0, j);
    return s;
  }

  static TutteGraph contract(const TutteGraph &g, int a, int b) {
    // Merge b into a, drop the a-b class, renumber vertices above b.
    std::map<std::pair<int, int>, int> mult;
    auto fix = [&](int v) {
      if (v == b)
        v = a;
      return v > b ? v - 1 : v;
    };
    for (const auto &[u, v, m] : g.edges) {
      if ((u == a && v == b) || (u == b && v == a))
        continue;
      int x = fix(u), y = fix(v);
      if (x > y)
        std::swap(x, y);
      mult[{x, y}] += m;
    }
    TutteGraph r{g.n - 1, {}};
    for (const auto &[uv, m] : mult)
      r.edges.emplace_back(uv.first, uv.second, m);
    return r;
  }

  Bivariate connected(const TutteGraph &g) {
    if (g.edges.empty())
      return Bivariate::constant(1);
    if (auto it = memo_.find(g); it != memo_.end())
      return it->second;

    // Branch on the class at the lowest-degree vertex.
    const auto [a, b, m] = g.edges.back();
    TutteGraph without = g;
    without.edges.pop_back();
    std::vector<std::pair<int, int>> plain;
    for (const auto &[u, v, k] : without.edges)
      plain.emplace_back(u, v);
    const bool bridge = graph_components(g.n, plain) > 1;

    Bivariate result;
    const TutteGraph merged = contract(g, a, b);
    if (bridge) {
      // (x + y + ... + y^(m-1)) T(G/e)
      Bivariate factor = Bivariate::monomial(1, 1, 0);
      for (int j = 1; j < m; ++j)
        factor += Bivariate::monomial(1, 0, j);
      result = factor * split(merged);
    } else {
      result = split(without) + y_series(m) * split(merged);
    }
    memo_.emplace(g, result);
    return result;
  }

  std::map<TutteGraph, Bivariate> memo_;
};

} // namespace detail

inline Bivariate tutte_polynomial(const StateMultigraph &g) {
  return detail::TutteSolver{}.solve(g);
}

/// T_G(x, y) for any commutative ring R constructible from Integer.
template <typename R> R tutte_eval(const StateMultigraph &g, const R &x, const R &y) {
  const Bivariate t = tutte_polynomial(g);
  std::map<int, R> xp{{0, R(Integer(1))}}, yp{{0, R(Integer(1))}};
  auto power = [](std::map<int, R> &cache, const R &base, int k) -> const R & {
    for (int i = static_cast<int>(cache.size()); i <= k; ++i)
      cache.emplace(i, cache.at(i - 1) * base);
    return cache.at(k);
  };
  R sum(Integer(0));
  for (const auto &[ij, c] : t.terms())
    sum = sum + R(c) * power(xp, x, ij.first) * power(yp, y, ij.second);
  return sum;
}

/// P(m) = 1 - t^-1 + t^-2 - ... +- t^(-m+1).
inline QuarterLaurentT alternating_sum_P(int m) {
  QuarterLaurentT p;
  for (int j = 0; j < m; ++j)
    p += t_power(-j, j % 2 ? -1 : 1);
  return p;
}

class SubsetLimitError : public std::length_error {
public:
  using std::length_error::length_error;
};

/// Subset expansion of T_G(-t, -1/t) over the simple edges of G' weighted by
/// P(multiplicity).
inline QuarterLaurentT thistlethwaite_sum(const StateMultigraph &g, int max_edges = 20) {
  const SimpleReduction r = reduce_graph(g);
  const int m = static_cast<int>(r.simple_edges.size());
  if (m > max_edges)
    throw SubsetLimitError("thistlethwaite_sum: " + std::to_string(m) +
                           " simple edges exceed the subset limit of " + std::to_string(max_edges));
  const QuarterLaurentT minus_t_minus_1 = t_power(1, -1) + t_power(0, -1);
  const QuarterLaurentT minus_inv_t_minus_1 = t_power(-1, -1) + t_power(0, -1);
  std::vector<QuarterLaurentT> weight;
  for (int k : r.multiplicity)
    weight.push_back(alternating_sum_P(k));

  std::map<int, QuarterLaurentT> pa, pb;
  auto power = [](std::map<int, QuarterLaurentT> &cache, const QuarterLaurentT &base,
                  int k) -> const QuarterLaurentT & {
    auto it = cache.find(k);
    if (it == cache.end())
      it = cache.emplace(k, base.pow(static_cast<unsigned>(k))).first;
    return it->second;
  };

  QuarterLaurentT total;
  const int v = r.vertex_count;
  for (std::uint32_t subset = 0; subset < (std::uint32_t{1} << m); ++subset) {
    std::vector<std::pair<int, int>> chosen;
    QuarterLaurentT product(1);
    for (int e = 0; e < m; ++e)
      if ((subset >> e) & 1u) {
        chosen.push_back(r.simple_edges[e]);
        product *= weight[e];
      }
    const int k = graph_components(v, chosen);
    const int nullity = static_cast<int>(chosen.size()) - v + k;
    total += power(pa, minus_t_minus_1, k - 1) * power(pb, minus_inv_t_minus_1, nullity) * product;
  }
  return total;
}

/// (-1)^w t^{(|S_A| - |S_B| + 3w)/4} T_{G(B)}(-t, -1/t).
inline QuarterLaurentT jones_via_tutte(const Diagram &d) {
  if (!is_alternating_diagram(d) || is_split_diagram(d))
    throw PreconditionError("jones_via_tutte requires a connected alternating diagram");
  const int w = d.writhe();
  const StateMultigraph gb = state_graph(d, Splice::B);
  const QuarterLaurentT value = tutte_eval(gb, t_power(1, -1), t_power(-1, -1));
  const int shift = all_state_loops(d, Splice::A) - all_state_loops(d, Splice::B) + 3 * w;
  return value.shifted(shift) * QuarterLaurentT(w % 2 ? -1 : 1);
}

} // namespace knotx
