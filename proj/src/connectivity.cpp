#include "tourneykit/connectivity.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace tourneykit {

namespace {

// Unit-capacity flow network with BFS augmentation. Adjacency lists are
// built in ascending target order and BFS scans them in order, so shortest
// augmenting paths break ties toward the lowest index and every
// certificate is deterministic.
class FlowNet {
 public:
  explicit FlowNet(int nodes) : head_(nodes, -1) {}

  void add_edge(int u, int v, int cap) {
    edges_.push_back({v, cap, head_[u]});
    head_[u] = static_cast<int>(edges_.size()) - 1;
    edges_.push_back({u, 0, head_[v]});
    head_[v] = static_cast<int>(edges_.size()) - 1;
  }

  // Augment until `limit` flow units or saturation. Returns the flow value.
  int max_flow(int s, int t, int limit) {
    int flow = 0;
    while (flow < limit) {
      int pushed = augment(s, t, limit - flow);
      if (pushed == 0) break;
      flow += pushed;
    }
    return flow;
  }

  // Residual reachability from s (after max_flow).
  std::vector<char> residual_side(int s) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<int> queue{s};
    seen[s] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (int e = head_[u]; e != -1; e = edges_[e].next)
        if (edges_[e].cap > 0 && !seen[edges_[e].to]) {
          seen[edges_[e].to] = 1;
          queue.push_back(edges_[e].to);
        }
    }
    return seen;
  }

  int flow_on(int edge_id) const { return edges_[edge_id ^ 1].cap; }
  // Consumes one unit of flow out of `u`, returning the edge taken
  // (lowest edge first); -1 when none.
  int take_flow_edge(int u) {
    int found = -1;
    for (int e = head_[u]; e != -1; e = edges_[e].next)
      if (!(e & 1) && edges_[e ^ 1].cap > 0) found = e;  // last = lowest added
    if (found == -1) return -1;
    edges_[found ^ 1].cap -= 1;
    return found;
  }
  int edge_to(int e) const { return edges_[e].to; }

 private:
  struct Edge {
    int to, cap, next;
  };

  int augment(int s, int t, int room) {
    std::vector<int> parent_edge(head_.size(), -2);
    parent_edge[s] = -1;
    std::vector<int> queue{s};
    for (std::size_t qi = 0; qi < queue.size() && parent_edge[t] == -2; ++qi) {
      int u = queue[qi];
      // adjacency is a push-front list; walk it into a buffer so neighbors
      // are visited in insertion (ascending) order
      scratch_.clear();
      for (int e = head_[u]; e != -1; e = edges_[e].next) scratch_.push_back(e);
      for (auto it = scratch_.rbegin(); it != scratch_.rend(); ++it) {
        int e = *it;
        if (edges_[e].cap > 0 && parent_edge[edges_[e].to] == -2) {
          parent_edge[edges_[e].to] = e;
          queue.push_back(edges_[e].to);
        }
      }
    }
    if (parent_edge[t] == -2) return 0;
    int bottleneck = room;
    for (int v = t; v != s;) {
      int e = parent_edge[v];
      bottleneck = std::min(bottleneck, edges_[e].cap);
      v = edges_[e ^ 1].to;
    }
    for (int v = t; v != s;) {
      int e = parent_edge[v];
      edges_[e].cap -= bottleneck;
      edges_[e ^ 1].cap += bottleneck;
      v = edges_[e ^ 1].to;
    }
    return bottleneck;
  }

  std::vector<int> head_;
  std::vector<Edge> edges_;
  std::vector<int> scratch_;
};

constexpr int node_in(int v) { return 2 * v; }
constexpr int node_out(int v) { return 2 * v + 1; }

}  // namespace

std::vector<VertexList> strongly_connected_components(const Digraph& d) {
  // Iterative Tarjan; components complete in reverse topological order of
  // the condensation (sink classes first).
  const int n = d.n();
  std::vector<int> index(n, -1), low(n, 0), stack, comp_of(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<VertexList> comps;
  int counter = 0;

  struct Frame {
    int v;
    int next;  // next out-neighbor index to scan
  };
  std::vector<int> out_list;
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = d.out(v).to_list();

  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next < static_cast<int>(adj[f.v].size())) {
        int w = adj[f.v][f.next++];
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        int v = f.v;
        frames.pop_back();
        if (!frames.empty())
          low[frames.back().v] = std::min(low[frames.back().v], low[v]);
        if (low[v] == index[v]) {
          VertexList comp;
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp.push_back(w);
            if (w == v) break;
          }
          std::sort(comp.begin(), comp.end());
          comps.push_back(std::move(comp));
        }
      }
    }
  }
  return comps;
}

bool is_strongly_connected(const Digraph& d) {
  if (d.n() == 0) return false;
  return strongly_connected_components(d).size() == 1;
}

namespace {

// Shared network builder for the pair flow. Only the split arcs carry unit
// capacity; graph arcs get capacity limit+1 so they can never saturate and
// every min cut crosses split arcs alone (deleting vertices, never arcs).
// This also settles the direct u->v arc: no vertex set separates an
// arc-joined pair, so the pair is k-connected for every k.
FlowNet build_pair_net(const Digraph& d, int u, int v, int limit) {
  FlowNet net(2 * d.n());
  for (int w = 0; w < d.n(); ++w)
    if (w != u && w != v) net.add_edge(node_in(w), node_out(w), 1);
  for (int a = 0; a < d.n(); ++a) {
    if (a == v) continue;  // arcs out of the sink are useless
    d.out(a).for_each([&](int b) {
      if (b == u) return;  // arcs into the source are useless
      net.add_edge(node_out(a), node_in(b), limit + 1);
    });
  }
  return net;
}

std::vector<VertexList> decompose_paths(FlowNet& net, int u, int v,
                                        int flow) {
  std::vector<VertexList> paths;
  for (int i = 0; i < flow; ++i) {
    VertexList path{u};
    int node = node_out(u);
    while (node != node_in(v)) {
      int e = net.take_flow_edge(node);
      node = net.edge_to(e);
      if (node % 2 == 0 && node != node_in(v)) {
        path.push_back(node / 2);
        // skip over the split arc
        int e2 = net.take_flow_edge(node);
        node = net.edge_to(e2);
      }
    }
    path.push_back(v);
    paths.push_back(std::move(path));
  }
  return paths;
}

}  // namespace

PairConnectivity pair_k_connected(const Digraph& d, int u, int v, int k) {
  if (u == v) throw Error("BadSpec", "pair endpoints must differ");
  if (u < 0 || u >= d.n() || v < 0 || v >= d.n())
    throw Error("OutOfRange", "pair endpoint outside range");
  PairConnectivity result;
  if (k <= 0) {
    result.connected = true;
    return result;
  }
  FlowNet net = build_pair_net(d, u, v, k);
  int flow = net.max_flow(node_out(u), node_in(v), k);
  if (flow >= k) {
    result.connected = true;
    result.paths = decompose_paths(net, u, v, k);
  } else {
    result.connected = false;
    auto side = net.residual_side(node_out(u));
    for (int w = 0; w < d.n(); ++w)
      if (w != u && w != v && side[node_in(w)] && !side[node_out(w)])
        result.separator.push_back(w);
  }
  return result;
}

bool set_k_connected(const Digraph& d, int v, const VertexList& u_set, int k,
                     SetDirection direction) {
  if (v < 0 || v >= d.n()) throw Error("OutOfRange", "vertex outside range");
  for (int u : u_set)
    if (u == v) return true;  // v in U: trivially k-connected
  if (k <= 0) return true;
  std::set<int> members;
  for (int u : u_set)
    if (u >= 0 && u < d.n()) members.insert(u);
  if (members.empty()) return false;

  const int super = 2 * d.n();
  FlowNet net(2 * d.n() + 1);
  for (int w = 0; w < d.n(); ++w)
    if (w != v) net.add_edge(node_in(w), node_out(w), 1);

  // graph arcs never saturate (capacity k+1): cuts are vertex deletions
  if (direction == SetDirection::ToSet) {
    for (int a = 0; a < d.n(); ++a)
      d.out(a).for_each([&](int b) {
        if (b == v) return;
        net.add_edge(node_out(a), node_in(b), k + 1);
      });
    // a path ends at a member by consuming its capacity, so deleting the
    // member (saturating its split arc) also removes it as an endpoint
    for (int m : members) net.add_edge(node_out(m), super, 1);
    return net.max_flow(node_out(v), super, k) >= k;
  }
  for (int a = 0; a < d.n(); ++a) {
    if (a == v) continue;
    d.out(a).for_each(
        [&](int b) { net.add_edge(node_out(a), node_in(b), k + 1); });
  }
  for (int m : members) net.add_edge(super, node_in(m), 1);
  return net.max_flow(super, node_in(v), k) >= k;
}

namespace {

// Separator extraction for the failed set-flow: residual side crossing the
// split arcs, paired with a member of U it cuts off.
VertexList set_flow_separator(const Digraph& d, int v, const VertexList& u_set,
                              int k, SetDirection direction) {
  // re-run the flow keeping the network (set_k_connected is the public
  // boolean; this helper is only used to build failure witnesses)
  std::set<int> members;
  for (int u : u_set)
    if (u >= 0 && u < d.n() && u != v) members.insert(u);
  const int super = 2 * d.n();
  FlowNet net(2 * d.n() + 1);
  for (int w = 0; w < d.n(); ++w)
    if (w != v) net.add_edge(node_in(w), node_out(w), 1);
  if (direction == SetDirection::ToSet) {
    for (int a = 0; a < d.n(); ++a)
      d.out(a).for_each([&](int b) {
        if (b == v) return;
        net.add_edge(node_out(a), node_in(b), k + 1);
      });
    for (int m : members) net.add_edge(node_out(m), super, 1);
    net.max_flow(node_out(v), super, k);
    auto side = net.residual_side(node_out(v));
    VertexList sep;
    for (int w = 0; w < d.n(); ++w) {
      if (w == v) continue;
      // cut crosses the split arc, or a member's saturated sink arc
      if (side[node_in(w)] && !side[node_out(w)]) sep.push_back(w);
      else if (members.count(w) && side[node_out(w)]) sep.push_back(w);
    }
    return sep;
  }
  for (int a = 0; a < d.n(); ++a) {
    if (a == v) continue;
    d.out(a).for_each(
        [&](int b) { net.add_edge(node_out(a), node_in(b), k + 1); });
  }
  for (int m : members) net.add_edge(super, node_in(m), 1);
  net.max_flow(super, node_in(v), k);
  auto side = net.residual_side(super);
  VertexList sep;
  for (int w = 0; w < d.n(); ++w) {
    if (w == v) continue;
    if (side[node_in(w)] && !side[node_out(w)]) sep.push_back(w);
    // a member whose source arc crossed the cut
    else if (members.count(w) && !side[node_in(w)]) sep.push_back(w);
  }
  return sep;
}

}  // namespace

bool strongly_k_connected_fast(const Digraph& d, int k,
                               ConnectivityReport* witness) {
  const int n = d.n();
  if (k <= 0) return n >= k + 1;
  if (n < k + 1) return false;
  if (k == 1) {
    auto comps = strongly_connected_components(d);
    if (comps.size() == 1) return true;
    if (witness) {
      // first (sink) class cannot reach the rest
      witness->witness_pair = Arc{comps[0][0], comps.back()[0]};
      witness->witness_separator = {};
    }
    return false;
  }

  VertexList pivots(k);
  for (int i = 0; i < k; ++i) pivots[i] = i;
  std::vector<char> is_pivot(n, 0);
  for (int p : pivots) is_pivot[p] = 1;

  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      auto pc = pair_k_connected(d, pivots[i], pivots[j], k);
      if (!pc.connected) {
        if (witness) {
          witness->witness_pair = Arc{pivots[i], pivots[j]};
          witness->witness_separator = pc.separator;
        }
        return false;
      }
    }
  for (int u = 0; u < n; ++u) {
    if (is_pivot[u]) continue;
    if (!set_k_connected(d, u, pivots, k, SetDirection::ToSet)) {
      if (witness) {
        auto sep = set_flow_separator(d, u, pivots, k, SetDirection::ToSet);
        std::vector<char> in_sep(n, 0);
        for (int s : sep) in_sep[s] = 1;
        int target = -1;
        for (int p : pivots)
          if (!in_sep[p]) target = target == -1 ? p : target;
        witness->witness_pair = Arc{u, target};
        witness->witness_separator = sep;
      }
      return false;
    }
    if (!set_k_connected(d, u, pivots, k, SetDirection::FromSet)) {
      if (witness) {
        auto sep = set_flow_separator(d, u, pivots, k, SetDirection::FromSet);
        std::vector<char> in_sep(n, 0);
        for (int s : sep) in_sep[s] = 1;
        int source = -1;
        for (int p : pivots)
          if (!in_sep[p]) source = source == -1 ? p : source;
        witness->witness_pair = Arc{source, u};
        witness->witness_separator = sep;
      }
      return false;
    }
  }
  return true;
}

bool strongly_k_connected_allpairs(const Digraph& d, int k) {
  const int n = d.n();
  if (k <= 0) return n >= k + 1;
  if (n < k + 1) return false;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && !pair_k_connected(d, u, v, k).connected) return false;
  return true;
}

ConnectivityReport connectivity_report(const Digraph& d) {
  ConnectivityReport report;
  const int n = d.n();
  if (n <= 1) {
    report.kappa = 0;
    return report;
  }
  int cap = std::min({n - 1, d.min_out_degree() + 1, d.min_in_degree() + 1});
  int kappa = 0;
  for (int k = 1; k <= cap; ++k) {
    ConnectivityReport fail;
    if (strongly_k_connected_fast(d, k, &fail)) {
      kappa = k;
    } else {
      report.witness_pair = fail.witness_pair;
      report.witness_separator = fail.witness_separator;
      break;
    }
  }
  report.kappa = kappa;
  if (kappa == n - 1) {
    report.witness_pair.reset();
    report.witness_separator.clear();
  }
  return report;
}

KConnectivity is_strongly_k_connected(const Digraph& d, int k) {
  KConnectivity out;
  out.report = connectivity_report(d);
  out.ok = d.n() >= k + 1 && out.report.kappa >= k;
  if (k <= 0) out.ok = d.n() >= k + 1;
  return out;
}

bool glue_check(const Digraph& d, const VertexList& w, const VertexList& u,
                int k) {
  std::set<int> ws(w.begin(), w.end());
  for (int x : u)
    if (ws.count(x)) throw Error("BadSpec", "W and U must be disjoint");

  if (u.empty()) {
    Induced dw = induced_subdigraph(d, w);
    return strongly_k_connected_fast(dw.graph, k);
  }
  {
    Induced dw = induced_subdigraph(d, w);
    if (!strongly_k_connected_fast(dw.graph, k)) return false;
  }
  VertexList both = w;
  both.insert(both.end(), u.begin(), u.end());
  Induced ind = induced_subdigraph(d, both);
  std::vector<int> pos(d.n(), -1);
  for (std::size_t i = 0; i < ind.vertex_map.size(); ++i)
    pos[ind.vertex_map[i]] = static_cast<int>(i);
  VertexList w_local;
  for (int x : w) w_local.push_back(pos[x]);
  std::sort(w_local.begin(), w_local.end());

  bool ok = true;
  for (int x : u) {
    int xl = pos[x];
    if (!set_k_connected(ind.graph, xl, w_local, k, SetDirection::ToSet) ||
        !set_k_connected(ind.graph, xl, w_local, k, SetDirection::FromSet)) {
      ok = false;
      break;
    }
  }
  if (!ok) return false;

  // the growth rule and the direct check must agree
  if (!strongly_k_connected_fast(ind.graph, k))
    throw Error("InternalConsistency",
                "glue predicate holds but D[W u U] failed the direct "
                "strong k-connectivity check");
  return true;
}

namespace {

struct LinkSearch {
  const Digraph& d;
  const std::vector<Arc>& pairs;
  std::vector<char> used;
  std::vector<char> is_endpoint;
  std::vector<VertexList> found;
  long long budget;
  bool exhausted_fairly = true;  // false once the budget truncates search

  bool solve(std::size_t i) {
    if (budget-- <= 0) {
      exhausted_fairly = false;
      return false;
    }
    if (i == pairs.size()) return true;
    auto [x, y] = pairs[i];
    VertexList path{x};
    used[x] = 1;
    bool ok = extend(i, x, y, path);
    used[x] = 0;
    return ok;
  }

  bool extend(std::size_t i, int at, int y, VertexList& path) {
    if (budget-- <= 0) {
      exhausted_fairly = false;
      return false;
    }
    if (at == y) {
      found.push_back(path);
      if (solve(i + 1)) return true;
      found.pop_back();
      return false;
    }
    bool ok = false;
    d.out(at).for_each([&](int w) {
      if (ok || used[w]) return;
      // interior vertices may not steal endpoints of other pairs
      if (is_endpoint[w] && w != y) return;
      used[w] = 1;
      path.push_back(w);
      if (extend(i, w, y, path)) ok = true;
      else {
        path.pop_back();
        used[w] = 0;
      }
    });
    return ok;
  }
};

}  // namespace

LinkResult is_k_linked(const Digraph& d, const std::vector<Arc>& pairs) {
  std::set<int> endpoints;
  for (auto [x, y] : pairs) {
    if (x < 0 || x >= d.n() || y < 0 || y >= d.n())
      throw Error("OutOfRange", "endpoint outside range");
    if (!endpoints.insert(x).second || !endpoints.insert(y).second)
      throw Error("DuplicateEndpoints", "the 2t endpoints must be distinct");
  }
  LinkResult result;
  result.paths.kind = PathSystem::Kind::FullyDisjoint;
  const bool exhaustive_regime = pairs.size() <= 4 && d.n() <= 16;

  LinkSearch search{d, pairs, std::vector<char>(d.n(), 0),
                    std::vector<char>(d.n(), 0), {},
                    exhaustive_regime ? (1ll << 62) : 2'000'000ll};
  for (int e : endpoints) search.is_endpoint[e] = 1;

  if (search.solve(0)) {
    result.status = Status::Found;
    result.paths.paths = search.found;
  } else if (exhaustive_regime || search.exhausted_fairly) {
    result.status = Status::CertifiedNo;
    result.counterexample = pairs;
  } else {
    result.status = Status::Unknown;
  }
  return result;
}

std::optional<int> diameter(const Digraph& d) {
  const int n = d.n();
  if (n == 0) return std::nullopt;
  int best = 0;
  for (int s = 0; s < n; ++s) {
    Bits visited(n), frontier(n);
    visited.set(s);
    frontier.set(s);
    int reached = 1, dist = 0;
    while (frontier.any()) {
      Bits next(n);
      frontier.for_each([&](int v) { next |= d.out(v); });
      next.andnot_assign(visited);
      if (next.none()) break;
      ++dist;
      visited |= next;
      reached += next.count();
      frontier = next;
    }
    if (reached != n) return std::nullopt;
    best = std::max(best, dist);
  }
  return best;
}

}  // namespace tourneykit
