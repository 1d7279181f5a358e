#pragma once

// Test-only oracles. Each one is deliberately a different algorithm from the
// library path it cross-checks, so the two routes fail independently.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "tourneykit/digraph.hpp"
#include "tourneykit/factors.hpp"
#include "tourneykit/generators.hpp"
#include "tourneykit/hamiltonicity.hpp"
#include "tourneykit/pipeline.hpp"

namespace oracles {

using namespace tourneykit;

// Plain BFS reachability (no Tarjan, no flows).
inline bool reaches(const Digraph& d, int s, int t,
                    const std::vector<char>& deleted) {
  if (deleted[s] || deleted[t]) return false;
  std::vector<char> seen(d.n(), 0);
  std::vector<int> queue{s};
  seen[s] = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int u = queue[qi];
    if (u == t) return true;
    for (int w = 0; w < d.n(); ++w)
      if (d.has_arc(u, w) && !seen[w] && !deleted[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
  }
  return false;
}

inline bool strongly_connected_bfs(const Digraph& d) {
  if (d.n() == 0) return false;
  std::vector<char> none(d.n(), 0);
  for (int v = 1; v < d.n(); ++v)
    if (!reaches(d, 0, v, none) || !reaches(d, v, 0, none)) return false;
  return true;
}

// Pair k-connectivity by enumerating every candidate separator.
inline bool pair_k_connected_bruteforce(const Digraph& d, int u, int v,
                                        int k) {
  const int n = d.n();
  std::vector<int> others;
  for (int w = 0; w < n; ++w)
    if (w != u && w != v) others.push_back(w);
  const int max_size = std::min<int>(k - 1, static_cast<int>(others.size()));
  for (int size = 0; size <= max_size; ++size) {
    std::vector<int> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::vector<char> deleted(n, 0);
      for (int i : idx) deleted[others[i]] = 1;
      if (!reaches(d, u, v, deleted)) return false;
      int i = size - 1;
      while (i >= 0 && idx[i] == static_cast<int>(others.size()) - size + i)
        --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return true;
}

// (v,U) / (U,v) k-connectivity by separator enumeration.
inline bool set_k_connected_bruteforce(const Digraph& d, int v,
                                       const VertexList& u_set, int k,
                                       bool to_set) {
  for (int u : u_set)
    if (u == v) return true;
  const int n = d.n();
  std::vector<int> others;
  for (int w = 0; w < n; ++w)
    if (w != v) others.push_back(w);
  const int max_size = std::min<int>(k - 1, static_cast<int>(others.size()));
  for (int size = 0; size <= max_size; ++size) {
    std::vector<int> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::vector<char> deleted(n, 0);
      for (int i : idx) deleted[others[i]] = 1;
      bool ok = false;
      for (int u : u_set) {
        if (u < 0 || u >= n || deleted[u]) continue;
        if (to_set ? reaches(d, v, u, deleted) : reaches(d, u, v, deleted)) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
      int i = size - 1;
      while (i >= 0 && idx[i] == static_cast<int>(others.size()) - size + i)
        --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return true;
}

// Transitivity of an induced subtournament by trying every ordering.
inline bool transitive_by_permutations(const Tournament& t,
                                       const VertexList& verts) {
  VertexList order = verts;
  std::sort(order.begin(), order.end());
  do {
    bool ok = true;
    for (std::size_t i = 0; i < order.size() && ok; ++i)
      for (std::size_t j = i + 1; j < order.size() && ok; ++j)
        ok = t.has_arc(order[i], order[j]);
    if (ok) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

// The spec's factor oracle: enumerate set partitions into classes of the
// prescribed sizes, then test each class for a Hamiltonian cycle via camion.
inline bool factor_exists_partition_oracle(const Tournament& t,
                                           const FactorSpec& spec) {
  const int n = t.n();
  std::vector<int> assign(n, -1);
  std::vector<int> count(spec.lengths.size(), 0);
  for (auto [ci, v] : spec.prescribed) {
    assign[v] = ci;
    ++count[ci];
  }

  auto classes_ok = [&]() {
    for (std::size_t ci = 0; ci < spec.lengths.size(); ++ci) {
      VertexList members;
      for (int v = 0; v < n; ++v)
        if (assign[v] == static_cast<int>(ci)) members.push_back(v);
      Tournament sub = induced_subtournament(t, members);
      try {
        camion_cycle(sub);
      } catch (const Error&) {
        return false;
      }
    }
    return true;
  };

  // fill classes in order; combinations over the unassigned pool
  std::function<bool(std::size_t)> fill = [&](std::size_t ci) -> bool {
    if (ci == spec.lengths.size()) return classes_ok();
    VertexList pool;
    for (int v = 0; v < n; ++v)
      if (assign[v] == -1) pool.push_back(v);
    int need = spec.lengths[ci] - count[ci];
    if (need < 0 || need > static_cast<int>(pool.size())) return false;
    std::vector<int> idx(need);
    std::iota(idx.begin(), idx.end(), 0);
    if (need == 0) return fill(ci + 1);
    while (true) {
      for (int i : idx) assign[pool[i]] = static_cast<int>(ci);
      if (fill(ci + 1)) return true;
      for (int i : idx) assign[pool[i]] = -1;
      int i = need - 1;
      while (i >= 0 && idx[i] == static_cast<int>(pool.size()) - need + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < need; ++j) idx[j] = idx[j - 1] + 1;
    }
    return false;
  };
  return fill(0);
}

// Perfect-matching existence by trying all bijections (|A| <= 8).
inline bool matching_exists_bijection_oracle(const BipartiteGraph& g) {
  std::vector<int> perm(g.nb);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int a = 0; a < g.na && ok; ++a)
      ok = std::binary_search(g.adj[a].begin(), g.adj[a].end(), perm[a]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline bool hall_witness_genuine(const BipartiteGraph& g,
                                 const VertexList& witness) {
  if (witness.empty()) return false;
  std::vector<char> nbr(g.nb, 0);
  for (int a : witness)
    for (int b : g.adj[a]) nbr[b] = 1;
  int count = 0;
  for (char c : nbr) count += c;
  return count < static_cast<int>(witness.size());
}

// Floyd-Warshall diameter (vs the library's per-source BFS).
inline int diameter_floyd(const Digraph& d) {  // -1 = infinite
  const int n = d.n();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) dist[v][v] = 0;
  for (auto [u, v] : d.arcs()) dist[u][v] = 1;
  for (int m = 0; m < n; ++m)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        dist[i][j] = std::min(dist[i][j], dist[i][m] + dist[m][j]);
  int best = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (dist[i][j] >= inf) return -1;
      best = std::max(best, dist[i][j]);
    }
  return best;
}

// Random balanced bipartite graph; optionally resampled until it satisfies
// the degree condition d(a) + d(b) >= |A| for every (a,b).
inline BipartiteGraph random_bipartite(int n, std::uint64_t seed,
                                       bool force_degree_condition) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    SplitMix64 rng(seed + attempt * 0x9e37ull);
    std::vector<Arc> edges;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (rng.next() & 1) edges.emplace_back(a, b);
    BipartiteGraph g = BipartiteGraph::from_edges(n, n, edges);
    if (!force_degree_condition) return g;
    auto degb = g.degrees_b();
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        ok = g.degree_a(a) + degb[b] >= n;
    if (ok) return g;
  }
}

}  // namespace oracles
