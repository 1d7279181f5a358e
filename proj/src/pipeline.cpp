#include "tourneykit/pipeline.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tourneykit/dominating.hpp"

namespace tourneykit {

BipartiteGraph BipartiteGraph::from_edges(int na, int nb,
                                          const std::vector<Arc>& edges) {
  if (na < 0 || nb < 0) throw Error("BadSpec", "negative side size");
  BipartiteGraph g;
  g.na = na;
  g.nb = nb;
  g.adj.assign(na, {});
  for (auto [a, b] : edges) {
    if (a < 0 || a >= na || b < 0 || b >= nb)
      throw Error("OutOfRange", "bipartite edge endpoint outside its side");
    g.adj[a].push_back(b);
  }
  for (auto& row : g.adj) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return g;
}

std::vector<int> BipartiteGraph::degrees_b() const {
  std::vector<int> deg(nb, 0);
  for (const auto& row : adj)
    for (int b : row) ++deg[b];
  return deg;
}

namespace {

bool try_augment(const BipartiteGraph& g, int a, std::vector<int>& match_a,
                 std::vector<int>& match_b, std::vector<char>& visited_a,
                 std::vector<char>& visited_b) {
  visited_a[a] = 1;
  for (int b : g.adj[a]) {
    if (visited_b[b]) continue;
    visited_b[b] = 1;
    if (match_b[b] == -1 ||
        try_augment(g, match_b[b], match_a, match_b, visited_a, visited_b)) {
      match_a[a] = b;
      match_b[b] = a;
      return true;
    }
  }
  return false;
}

}  // namespace

namespace {

// Can a-side vertices from `from_a` on be matched into b-vertices not yet
// taken by the fixed prefix?
bool completable(const BipartiteGraph& g, const std::vector<int>& fixed,
                 int from_a) {
  std::vector<int> match_a(g.na, -1), match_b(g.nb, -1);
  for (int a = 0; a < from_a; ++a) {
    match_a[a] = fixed[a];
    match_b[fixed[a]] = a;
  }
  for (int a = from_a; a < g.na; ++a) {
    std::vector<char> va(g.na, 0), vb(g.nb, 0);
    // prefix b-vertices stay taken: mark them visited so they are skipped
    for (int i = 0; i < from_a; ++i) vb[fixed[i]] = 1;
    if (!try_augment(g, a, match_a, match_b, va, vb)) return false;
  }
  return true;
}

}  // namespace

HallResult hall_matching(const BipartiteGraph& g) {
  if (g.na != g.nb)
    throw Error("UnbalancedSides", "sides have sizes " + std::to_string(g.na) +
                                       " and " + std::to_string(g.nb));
  HallResult result;
  result.match_of_a.assign(g.na, -1);
  std::vector<int> match_b(g.nb, -1);
  for (int a = 0; a < g.na; ++a) {
    std::vector<char> va(g.na, 0), vb(g.nb, 0);
    if (!try_augment(g, a, result.match_of_a, match_b, va, vb)) {
      // the alternating tree from the stuck vertex is the Hall violator:
      // |N(S)| = |S| - 1 for S = visited a-side vertices
      for (int i = 0; i < g.na; ++i)
        if (va[i]) result.deficiency_witness.push_back(i);
      result.perfect = false;
      result.match_of_a.assign(g.na, -1);
      return result;
    }
  }

  // canonicalize to the lexicographically least perfect matching: fix each
  // a-vertex to the smallest neighbor that keeps the rest completable
  std::vector<int> fixed(g.na, -1);
  std::vector<char> taken(g.nb, 0);
  for (int a = 0; a < g.na; ++a) {
    for (int b : g.adj[a]) {
      if (taken[b]) continue;
      fixed[a] = b;
      if (completable(g, fixed, a + 1)) break;
      fixed[a] = -1;
    }
    if (fixed[a] == -1)
      throw Error("InternalConsistency",
                  "matching canonicalization lost feasibility");
    taken[fixed[a]] = 1;
  }
  result.perfect = true;
  result.match_of_a = fixed;
  return result;
}

DistributeResult distribute_vertices(const Digraph& d,
                                     const std::vector<VertexList>& seeds,
                                     int k, const std::vector<int>& targets) {
  const int t = static_cast<int>(seeds.size());
  if (static_cast<int>(targets.size()) != t)
    throw Error("BadSizes", "one target per seed required");
  std::vector<char> seeded(d.n(), 0);
  for (const auto& w : seeds)
    for (int v : w) {
      if (v < 0 || v >= d.n()) throw Error("OutOfRange", "seed vertex outside range");
      if (seeded[v]) throw Error("BadSpec", "seeds must be pairwise disjoint");
      seeded[v] = 1;
    }
  VertexList leftover;
  for (int v = 0; v < d.n(); ++v)
    if (!seeded[v]) leftover.push_back(v);
  long long slots = 0;
  for (int i = 0; i < t; ++i) {
    if (targets[i] < static_cast<int>(seeds[i].size()))
      throw Error("BadSizes", "target below seed size for part " +
                                  std::to_string(i));
    slots += targets[i] - static_cast<int>(seeds[i].size());
  }
  if (slots != static_cast<long long>(leftover.size()))
    throw Error("BadSizes",
                "targets must absorb exactly the leftover vertex count");

  // seed membership bitrows for the degree thresholds
  std::vector<Bits> seed_bits(t, Bits(d.n()));
  for (int i = 0; i < t; ++i)
    for (int v : seeds[i]) seed_bits[i].set(v);

  std::vector<Arc> edges;
  std::vector<int> slot_part;
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < targets[i] - static_cast<int>(seeds[i].size()); ++j)
      slot_part.push_back(i);
  for (std::size_t ai = 0; ai < leftover.size(); ++ai) {
    int x = leftover[ai];
    for (std::size_t bi = 0; bi < slot_part.size(); ++bi) {
      int i = slot_part[bi];
      if (d.out(x).count_and(seed_bits[i]) >= k &&
          d.in(x).count_and(seed_bits[i]) >= k)
        edges.emplace_back(static_cast<int>(ai), static_cast<int>(bi));
    }
  }

  DistributeResult result;
  BipartiteGraph g = BipartiteGraph::from_edges(
      static_cast<int>(leftover.size()), static_cast<int>(slot_part.size()),
      edges);
  HallResult match = hall_matching(g);
  if (!match.perfect) {
    result.status = Status::CertifiedNo;  // NoMatching
    for (int a : match.deficiency_witness)
      result.hall_witness.push_back(leftover[a]);
    return result;
  }
  result.status = Status::Found;
  result.parts.assign(t, {});
  for (int i = 0; i < t; ++i) result.parts[i] = seeds[i];
  for (std::size_t ai = 0; ai < leftover.size(); ++ai)
    result.parts[slot_part[match.match_of_a[ai]]].push_back(leftover[ai]);
  for (auto& part : result.parts) std::sort(part.begin(), part.end());

  for (int i = 0; i < t; ++i) {
    VertexList added;
    std::set<int> seed_set(seeds[i].begin(), seeds[i].end());
    for (int v : result.parts[i])
      if (!seed_set.count(v)) added.push_back(v);
    result.glue_certified.push_back(glue_check(d, seeds[i], added, k));
  }
  return result;
}

bool verify_partition_certificate(const Digraph& d,
                                  const PartitionCertificate& cert) {
  std::vector<char> seen(d.n(), 0);
  for (const auto& pc : cert.parts)
    for (int v : pc.part) {
      if (v < 0 || v >= d.n() || seen[v]) return false;
      seen[v] = 1;
    }
  for (int v = 0; v < d.n(); ++v)
    if (!seen[v]) return false;
  if (cert.sizes.size() != cert.parts.size()) return false;
  for (std::size_t i = 0; i < cert.parts.size(); ++i) {
    if (static_cast<int>(cert.parts[i].part.size()) != cert.sizes[i])
      return false;
    if (i < cert.pinned.size()) {
      std::set<int> members(cert.parts[i].part.begin(),
                            cert.parts[i].part.end());
      for (int q : cert.pinned[i])
        if (!members.count(q)) return false;
    }
    Induced ind = induced_subdigraph(d, cert.parts[i].part);
    if (!strongly_k_connected_fast(ind.graph, cert.k)) return false;
  }
  return true;
}

namespace {

PartitionCertificate build_certificate(const Digraph& d, int k,
                                       const std::vector<int>& sizes,
                                       const std::vector<VertexList>& pinned,
                                       const std::vector<VertexList>& parts) {
  PartitionCertificate cert;
  cert.k = k;
  cert.sizes = sizes;
  cert.pinned = pinned;
  for (const auto& part : parts) {
    PartCertificate pc;
    pc.part = part;
    Induced ind = induced_subdigraph(d, part);
    auto report = connectivity_report(ind.graph);
    pc.kappa = report.kappa;
    pc.k_connected = ind.graph.n() >= k + 1 && report.kappa >= k;
    cert.parts.push_back(std::move(pc));
  }
  return cert;
}

// Exhaustive assignment search (certifies NoPartition): vertices ascending,
// parts with free capacity, pins preassigned, full parts checked as soon as
// they fill.
struct PartitionSearch {
  const Digraph& d;
  int k;
  const std::vector<int>& sizes;
  std::vector<int> part_of;
  std::vector<int> count;

  bool part_ok(int i) const {
    VertexList members;
    for (int v = 0; v < d.n(); ++v)
      if (part_of[v] == i) members.push_back(v);
    Induced ind = induced_subdigraph(d, members);
    return strongly_k_connected_fast(ind.graph, k);
  }

  bool solve(int v) {
    while (v < d.n() && part_of[v] != -1) ++v;
    if (v == d.n()) return true;
    for (int i = 0; i < static_cast<int>(sizes.size()); ++i) {
      if (count[i] >= sizes[i]) continue;
      part_of[v] = i;
      ++count[i];
      bool ok = count[i] < sizes[i] || part_ok(i);
      if (ok && solve(v + 1)) return true;
      part_of[v] = -1;
      --count[i];
    }
    return false;
  }
};

}  // namespace

PartitionResult partition_k_connected(const Digraph& d, int t, int k,
                                      const std::vector<int>& sizes,
                                      const std::vector<VertexList>& pinned) {
  const int n = d.n();
  if (t < 1 || static_cast<int>(sizes.size()) != t)
    throw Error("BadSizes", "need one size per part");
  long long sum = std::accumulate(sizes.begin(), sizes.end(), 0ll);
  for (int a : sizes)
    if (a < 1) throw Error("BadSizes", "part sizes must be positive");
  if (sum > n)
    throw Error("BadSizes", "sizes sum to " + std::to_string(sum) +
                                " > n = " + std::to_string(n));
  std::vector<VertexList> pins = pinned;
  pins.resize(t);
  std::vector<char> pinned_flag(n, 0);
  for (int i = 0; i < t; ++i)
    for (int q : pins[i]) {
      if (q < 0 || q >= n) throw Error("PinConflict", "pin outside range");
      if (pinned_flag[q])
        throw Error("PinConflict",
                    "vertex " + std::to_string(q) + " pinned twice");
      pinned_flag[q] = 1;
    }

  // the surplus n - sum(a_i) is absorbed into part 1 (b_1 adjustment)
  std::vector<int> b = sizes;
  b[0] += static_cast<int>(n - sum);
  for (int i = 0; i < t; ++i)
    if (static_cast<int>(pins[i].size()) > b[i])
      throw Error("PinConflict", "more pins than room in part " +
                                     std::to_string(i));

  PartitionResult result;
  // a strongly k-connected part needs at least k+1 vertices
  for (int i = 0; i < t; ++i)
    if (b[i] < k + 1) {
      result.status = Status::CertifiedNo;
      return result;
    }

  // Phase A: dominating-anchored greedy seeds + matching distribution.
  for (int variant = 0; variant < 2; ++variant) {
    std::vector<VertexList> seeds(t);
    std::vector<char> used(n, 0);
    for (int i = 0; i < t; ++i) {
      seeds[i] = pins[i];
      for (int v : seeds[i]) used[v] = 1;
    }
    auto grow = [&](int i) -> bool {
      // greedy augmentation by min(in,out) degree into the seed
      Bits seed_bits(n);
      for (int v : seeds[i]) seed_bits.set(v);
      int cap = std::min(b[i], static_cast<int>(seeds[i].size()) + 3 * (k + 1));
      while (true) {
        Induced ind = induced_subdigraph(d, seeds[i]);
        if (!seeds[i].empty() && strongly_k_connected_fast(ind.graph, k))
          return true;
        if (static_cast<int>(seeds[i].size()) >= cap) return false;
        int best = -1, best_score = -1;
        for (int v = 0; v < n; ++v) {
          if (used[v]) continue;
          int score = std::min(d.out(v).count_and(seed_bits),
                               d.in(v).count_and(seed_bits));
          if (score > best_score) {
            best_score = score;
            best = v;
          }
        }
        if (best == -1) return false;
        seeds[i].push_back(best);
        std::sort(seeds[i].begin(), seeds[i].end());
        seed_bits.set(best);
        used[best] = 1;
      }
    };

    bool seeds_ok = true;
    for (int i = 0; i < t && seeds_ok; ++i) {
      if (variant == 0) {
        // dominating-structure anchors: a short A-path and B-path from the
        // part's anchor vertex, built on the unused remainder
        int anchor = -1;
        if (!seeds[i].empty()) anchor = seeds[i][0];
        else
          for (int v = 0; v < n && anchor == -1; ++v)
            if (!used[v]) anchor = v;
        if (anchor == -1) {
          seeds_ok = false;
          break;
        }
        VertexList exclude;
        for (int v = 0; v < n; ++v)
          if (used[v] && v != anchor) exclude.push_back(v);
        int c = std::min(k + 2, 4);
        auto sa = almost_dominating(d, anchor, c, DomKind::A, exclude);
        for (int v : sa.path)
          if (!used[v] && static_cast<int>(seeds[i].size()) < b[i]) {
            seeds[i].push_back(v);
            used[v] = 1;
          }
        exclude.clear();
        for (int v = 0; v < n; ++v)
          if (used[v] && v != anchor) exclude.push_back(v);
        auto sb = almost_dominating(d, anchor, c, DomKind::B, exclude);
        for (int v : sb.path)
          if (!used[v] && static_cast<int>(seeds[i].size()) < b[i]) {
            seeds[i].push_back(v);
            used[v] = 1;
          }
        std::sort(seeds[i].begin(), seeds[i].end());
      }
      if (seeds[i].empty()) {
        for (int v = 0; v < n && seeds[i].empty(); ++v)
          if (!used[v]) {
            seeds[i].push_back(v);
            used[v] = 1;
          }
      }
      seeds_ok = grow(i);
    }
    if (!seeds_ok) continue;

    DistributeResult dist = distribute_vertices(d, seeds, k, b);
    if (dist.status != Status::Found) continue;
    bool all_glued = true;
    for (bool g : dist.glue_certified) all_glued = all_glued && g;
    if (!all_glued) continue;

    PartitionCertificate cert = build_certificate(d, k, b, pins, dist.parts);
    if (verify_partition_certificate(d, cert)) {
      result.status = Status::Found;
      result.certificate = std::move(cert);
      return result;
    }
  }

  // Phase B: exhaustive fallback, certifying NoPartition for n <= 12.
  if (n <= 12) {
    PartitionSearch search{d, k, b, std::vector<int>(n, -1),
                           std::vector<int>(t, 0)};
    for (int i = 0; i < t; ++i)
      for (int q : pins[i]) {
        search.part_of[q] = i;
        ++search.count[i];
      }
    if (search.solve(0)) {
      std::vector<VertexList> parts(t);
      for (int v = 0; v < n; ++v) parts[search.part_of[v]].push_back(v);
      PartitionCertificate cert = build_certificate(d, k, b, pins, parts);
      if (!verify_partition_certificate(d, cert))
        throw Error("InternalConsistency",
                    "exhaustive partition failed re-verification");
      result.status = Status::Found;
      result.certificate = std::move(cert);
    } else {
      result.status = Status::CertifiedNo;
    }
    return result;
  }

  result.status = Status::Unknown;
  return result;
}

void PathLinkSpec::validate(int n) const {
  if (pairs.empty() || pairs.size() != lengths.size())
    throw Error("BadSpec", "need one length per pair");
  std::set<int> endpoints;
  long long sum = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [x, y] = pairs[i];
    if (x < 0 || x >= n || y < 0 || y >= n)
      throw Error("BadSpec", "endpoint outside range");
    if (!endpoints.insert(x).second || !endpoints.insert(y).second)
      throw Error("BadSpec", "the 2t endpoints must be distinct");
    if (lengths[i] < 2) throw Error("BadSpec", "path lengths must be >= 2");
    sum += lengths[i];
  }
  if (sum > n)
    throw Error("BadSpec", "lengths sum to " + std::to_string(sum) +
                               " > n = " + std::to_string(n));
}

namespace {

struct LinkedPathSearch {
  const Digraph& d;
  const PathLinkSpec& spec;
  std::vector<char> used, is_endpoint;
  std::vector<VertexList> found;
  long long budget;
  bool truncated = false;

  bool solve(std::size_t i) {
    if (i == spec.pairs.size()) return true;
    auto [x, y] = spec.pairs[i];
    VertexList path{x};
    used[x] = 1;
    bool ok = extend(i, path, y);
    used[x] = 0;
    return ok;
  }

  bool extend(std::size_t i, VertexList& path, int y) {
    if (budget-- <= 0) {
      truncated = true;
      return false;
    }
    const int need = spec.lengths[i];
    const int have = static_cast<int>(path.size());
    int at = path.back();
    if (have == need - 1) {
      // the final step must land exactly on y
      if (!d.has_arc(at, y) || used[y]) return false;
      used[y] = 1;
      path.push_back(y);
      found.push_back(path);
      if (solve(i + 1)) return true;
      found.pop_back();
      path.pop_back();
      used[y] = 0;
      return false;
    }
    bool ok = false;
    d.out(at).for_each([&](int w) {
      if (ok || used[w] || is_endpoint[w]) return;
      used[w] = 1;
      path.push_back(w);
      if (extend(i, path, y)) ok = true;
      else {
        path.pop_back();
        used[w] = 0;
      }
    });
    return ok;
  }
};

}  // namespace

LinkPathsResult linked_paths_with_lengths(const Digraph& d,
                                          const PathLinkSpec& spec) {
  spec.validate(d.n());
  LinkPathsResult result;
  result.paths.kind = PathSystem::Kind::FullyDisjoint;

  const bool exhaustive = d.n() <= 12;
  LinkedPathSearch search{d, spec, std::vector<char>(d.n(), 0),
                          std::vector<char>(d.n(), 0), {},
                          exhaustive ? (1ll << 62) : 5'000'000ll};
  for (auto [x, y] : spec.pairs) {
    search.is_endpoint[x] = 1;
    search.is_endpoint[y] = 1;
  }
  if (search.solve(0)) {
    result.status = Status::Found;
    result.paths.paths = search.found;
  } else {
    result.status = search.truncated ? Status::Unknown : Status::CertifiedNo;
  }
  return result;
}

}  // namespace tourneykit
