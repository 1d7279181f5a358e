#include "tourneykit/hamiltonicity.hpp"

#include <algorithm>

namespace tourneykit {

Cycle canonical_cycle(VertexList vertices) {
  if (vertices.empty()) return Cycle{};
  auto it = std::min_element(vertices.begin(), vertices.end());
  std::rotate(vertices.begin(), it, vertices.end());
  return Cycle{std::move(vertices)};
}

bool validate_cycle(const Digraph& d, const Cycle& c, int expected_len,
                    int must_contain) {
  const auto& vs = c.vertices;
  if (vs.size() < 2) return false;
  if (expected_len >= 0 && static_cast<int>(vs.size()) != expected_len)
    return false;
  std::vector<char> seen(d.n(), 0);
  for (int v : vs) {
    if (v < 0 || v >= d.n() || seen[v]) return false;
    seen[v] = 1;
  }
  if (must_contain >= 0 && !seen[must_contain]) return false;
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (!d.has_arc(vs[i], vs[(i + 1) % vs.size()])) return false;
  return true;
}

NotStronglyConnectedError::NotStronglyConnectedError(Arc pair,
                                                     VertexList separator)
    : Error("NotStronglyConnected",
            "no path from " + std::to_string(pair.first) + " to " +
                std::to_string(pair.second) + " after deleting " +
                std::to_string(separator.size()) + " vertices"),
      witness_pair(pair),
      witness_separator(std::move(separator)) {}

namespace {

void require_strongly_connected(const Tournament& t) {
  auto comps = strongly_connected_components(t);
  if (comps.size() <= 1) return;
  // the first (sink) class cannot reach any later class
  throw NotStronglyConnectedError({comps.front()[0], comps.back()[0]}, {});
}

// Lowest 3-cycle through v: v -> o -> w -> v with o minimal, then w.
VertexList triangle_through(const Tournament& t, int v) {
  int best_o = -1, best_w = -1;
  t.out(v).for_each([&](int o) {
    if (best_o != -1) return;
    int w = t.out(o).lowest_and(t.in(v));
    if (w != -1) {
      best_o = o;
      best_w = w;
    }
  });
  if (best_o == -1)
    throw Error("InternalConsistency",
                "no 3-cycle through vertex " + std::to_string(v) +
                    " of a strongly connected tournament");
  return {v, best_o, best_w};
}

struct CycleGrower {
  const Tournament& t;
  VertexList cycle;
  Bits on_cycle;

  CycleGrower(const Tournament& tt, VertexList start)
      : t(tt), cycle(std::move(start)), on_cycle(tt.n()) {
    for (int v : cycle) on_cycle.set(v);
  }

  // Lowest outside vertex with both an in- and an out-neighbor on the
  // cycle, inserted at the first fitting position. Returns false when no
  // vertex is insertable.
  bool insert_round() {
    const int n = t.n();
    for (int u = 0; u < n; ++u) {
      if (on_cycle.test(u)) continue;
      if (!t.out(u).intersects(on_cycle) || !t.in(u).intersects(on_cycle))
        continue;
      const int m = static_cast<int>(cycle.size());
      for (int i = 0; i < m; ++i) {
        int a = cycle[i], b = cycle[(i + 1) % m];
        if (t.has_arc(a, u) && t.has_arc(u, b)) {
          cycle.insert(cycle.begin() + i + 1, u);
          on_cycle.set(u);
          return true;
        }
      }
      throw Error("InternalConsistency", "insertable vertex with no slot");
    }
    return false;
  }

  // Outside split: S beats the whole cycle, T is beaten by it. Strong
  // connectivity forces an arc t->s; lowest such arc.
  std::pair<int, int> dominating_arc() const {
    Bits s_side(t.n()), t_side(t.n());
    for (int u = 0; u < t.n(); ++u) {
      if (on_cycle.test(u)) continue;
      if (!t.in(u).intersects(on_cycle)) s_side.set(u);
      else if (!t.out(u).intersects(on_cycle)) t_side.set(u);
    }
    if (s_side.none() || t_side.none())
      throw Error("InternalConsistency",
                  "no insertable vertex but outside does not split");
    int best_t = -1, best_s = -1;
    t_side.for_each([&](int tv) {
      if (best_t != -1) return;
      int sv = t.out(tv).lowest_and(s_side);
      if (sv != -1) {
        best_t = tv;
        best_s = sv;
      }
    });
    if (best_t == -1)
      throw Error("InternalConsistency",
                  "dominated side sends no arc to dominating side");
    return {best_t, best_s};
  }

  int position_of_min() const {
    int pos = 0;
    for (std::size_t i = 1; i < cycle.size(); ++i)
      if (cycle[i] < cycle[pos]) pos = static_cast<int>(i);
    return pos;
  }
};

}  // namespace

Cycle camion_cycle(const Tournament& t) {
  if (t.n() < 3) throw Error("BadLength", "need n >= 3");
  require_strongly_connected(t);

  CycleGrower g(t, triangle_through(t, 0));
  while (static_cast<int>(g.cycle.size()) < t.n()) {
    if (g.insert_round()) continue;
    // splice t->s over the arc leaving the minimum cycle vertex
    auto [tv, sv] = g.dominating_arc();
    int i = g.position_of_min();
    g.cycle.insert(g.cycle.begin() + i + 1, {tv, sv});
    g.on_cycle.set(tv);
    g.on_cycle.set(sv);
  }
  Cycle c = canonical_cycle(std::move(g.cycle));
  if (!validate_cycle(t, c, t.n()))
    throw Error("InternalConsistency", "constructed cycle failed validation");
  return c;
}

Cycle moon_cycle(const Tournament& t, int v, int len) {
  if (v < 0 || v >= t.n()) throw Error("OutOfRange", "vertex outside range");
  if (len < 3 || len > t.n())
    throw Error("BadLength", "need 3 <= len <= n, got len = " +
                                 std::to_string(len));
  require_strongly_connected(t);

  CycleGrower g(t, triangle_through(t, v));
  while (static_cast<int>(g.cycle.size()) < len) {
    if (g.insert_round()) continue;
    // extend by exactly one: splice t->s while dropping the lowest cycle
    // vertex other than v
    auto [tv, sv] = g.dominating_arc();
    int drop = -1;
    for (std::size_t i = 0; i < g.cycle.size(); ++i)
      if (g.cycle[i] != v && (drop == -1 || g.cycle[i] < g.cycle[drop]))
        drop = static_cast<int>(i);
    int dropped = g.cycle[drop];
    g.cycle[drop] = tv;
    g.cycle.insert(g.cycle.begin() + drop + 1, sv);
    g.on_cycle.reset(dropped);
    g.on_cycle.set(tv);
    g.on_cycle.set(sv);
  }
  Cycle c = canonical_cycle(std::move(g.cycle));
  if (!validate_cycle(t, c, len, v))
    throw Error("InternalConsistency", "constructed cycle failed validation");
  return c;
}

TwoCycles two_cycle_partition(const Tournament& t, int v, int len) {
  const int n = t.n();
  if (v < 0 || v >= n) throw Error("OutOfRange", "vertex outside range");
  if (n < 6 || len < 3 || len > n - 3)
    throw Error("BadLength", "need n >= 6 and 3 <= len <= n-3");

  // first-cycle candidate sets {v} + (len-1)-combinations, lexicographic
  VertexList others;
  for (int u = 0; u < n; ++u)
    if (u != v) others.push_back(u);
  const int k = len - 1;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;

  const bool exhaustive = n <= 14;
  long long budget = exhaustive ? -1 : 200000;
  bool truncated = false;

  auto advance = [&]() -> bool {
    int i = k - 1;
    while (i >= 0 && idx[i] == static_cast<int>(others.size()) - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    return true;
  };

  TwoCycles result;
  do {
    if (budget == 0) {
      truncated = true;
      break;
    }
    if (budget > 0) --budget;
    VertexList first{v};
    for (int i = 0; i < k; ++i) first.push_back(others[idx[i]]);
    std::sort(first.begin(), first.end());
    std::vector<char> in_first(n, 0);
    for (int u : first) in_first[u] = 1;
    VertexList second;
    for (int u = 0; u < n; ++u)
      if (!in_first[u]) second.push_back(u);

    VertexList map1, map2;
    Tournament t1 = induced_subtournament(t, first, &map1);
    if (!is_strongly_connected(t1)) continue;
    Tournament t2 = induced_subtournament(t, second, &map2);
    if (!is_strongly_connected(t2)) continue;

    Cycle c1 = camion_cycle(t1), c2 = camion_cycle(t2);
    for (int& x : c1.vertices) x = map1[x];
    for (int& x : c2.vertices) x = map2[x];
    result.status = Status::Found;
    result.first = canonical_cycle(std::move(c1.vertices));
    result.second = canonical_cycle(std::move(c2.vertices));
    return result;
  } while (advance());

  result.status = truncated ? Status::Unknown : Status::CertifiedNo;
  return result;
}

}  // namespace tourneykit
