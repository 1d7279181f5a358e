#include "tourneykit/dominating.hpp"

#include <algorithm>
#include <cassert>

#include "tourneykit/connectivity.hpp"

namespace tourneykit {

bool DominatingStructure::bound_holds(int degree_of_x) const {
  // |uncovered| <= 2^(1-c') d + 2l with c' = |path|, exactly:
  // (|uncovered| - 2l) * 2^(c'-1) <= d
  long long excess = static_cast<long long>(uncovered.size()) - 2ll * ell;
  if (excess <= 0) return true;
  int shift = static_cast<int>(path.size()) - 1;
  if (shift >= 62) return false;  // excess >= 1 shifted past any degree
  return (excess << shift) <= degree_of_x;
}

namespace {

struct GreedyView {
  // Local relabeling of D minus the excluded vertices.
  Induced ind;
  int x_local = -1;
};

GreedyView make_view(const Digraph& d, int x, const VertexList& exclude) {
  std::vector<char> drop(d.n(), 0);
  for (int v : exclude) {
    if (v < 0 || v >= d.n())
      throw Error("OutOfRange", "excluded vertex outside range");
    drop[v] = 1;
  }
  if (x < 0 || x >= d.n()) throw Error("OutOfRange", "x outside range");
  if (drop[x]) throw Error("BadSpec", "x may not be excluded");
  VertexList keep;
  for (int v = 0; v < d.n(); ++v)
    if (!drop[v]) keep.push_back(v);
  GreedyView view{induced_subdigraph(d, keep), -1};
  for (std::size_t i = 0; i < view.ind.vertex_map.size(); ++i)
    if (view.ind.vertex_map[i] == x) view.x_local = static_cast<int>(i);
  return view;
}

}  // namespace

DominatingStructure almost_dominating(const Digraph& d, int x, int c,
                                      DomKind kind,
                                      const VertexList& exclude) {
  if (c < 1) throw Error("BadSpec", "need c >= 1");
  GreedyView view = make_view(d, x, exclude);
  const Digraph& g = view.ind.graph;
  const int n = g.n();
  const int ell = n - g.min_degree();

  // the greedy runs on the A orientation; B is the same loop with the
  // neighborhood roles flipped
  auto fwd = [&](int v) -> const Bits& {
    return kind == DomKind::A ? g.out(v) : g.in(v);
  };
  auto bwd = [&](int v) -> const Bits& {
    return kind == DomKind::A ? g.in(v) : g.out(v);
  };

  VertexList chain{view.x_local};
  Bits uncovered(n);
  for (int v = 0; v < n; ++v) uncovered.set(v);
  uncovered.andnot_assign(bwd(view.x_local));

  while (static_cast<int>(chain.size()) < c) {
    Bits candidates = uncovered;      // U \ U' = U cap N+(v_i)
    candidates &= fwd(chain.back());
    if (candidates.none()) break;     // U = U', early success, |U| <= l

    int best = -1, best_deg = -1;
    candidates.for_each([&](int w) {
      int deg = bwd(w).count_and(candidates);
      if (deg > best_deg) {
        best_deg = deg;
        best = w;
      }
    });
    // counting argument: the pick absorbs at least half of the candidate
    // pool beyond the non-neighbors
    assert(2 * best_deg >= candidates.count() - ell);
    chain.push_back(best);
    uncovered.andnot_assign(bwd(best));
  }

  DominatingStructure s;
  s.kind = kind;
  s.c = c;
  s.ell = ell;
  s.x = x;
  s.path = chain;
  if (kind == DomKind::B) std::reverse(s.path.begin(), s.path.end());
  for (int& v : s.path) v = view.ind.vertex_map[v];
  s.endpoint = kind == DomKind::A ? s.path.back() : s.path.front();
  uncovered.for_each(
      [&](int v) { s.uncovered.push_back(view.ind.vertex_map[v]); });

  int deg = kind == DomKind::A ? g.out_degree(view.x_local)
                               : g.in_degree(view.x_local);
  if (!s.bound_holds(deg))
    throw Error("InternalConsistency", "residue bound violated by greedy");
  return s;
}

std::vector<DominatingStructure> almost_dominating_batch(
    const Digraph& d, const std::vector<BatchRequest>& requests,
    const VertexList& initial_exclude) {
  std::vector<DominatingStructure> out;
  VertexList mask = initial_exclude;
  for (const auto& req : requests) {
    VertexList eff;
    for (int v : mask)
      if (v != req.x) eff.push_back(v);
    out.push_back(almost_dominating(d, req.x, req.c, req.kind, eff));
    for (int v : out.back().path) mask.push_back(v);
  }
  return out;
}

bool verify_sparse_linkage(const Digraph& d, const VertexList& a,
                           const VertexList& b, int k) {
  for (int w = 0; w < d.n(); ++w) {
    if (!set_k_connected(d, w, b, k, SetDirection::ToSet)) return false;
    if (!set_k_connected(d, w, a, k, SetDirection::FromSet)) return false;
  }
  return true;
}

namespace {

// Vertices sorted by degree descending, index ascending on ties.
VertexList by_degree_desc(const Digraph& d, bool out_degree) {
  VertexList order(d.n());
  for (int v = 0; v < d.n(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    int da = out_degree ? d.out_degree(a) : d.in_degree(a);
    int db = out_degree ? d.out_degree(b) : d.in_degree(b);
    return da > db;
  });
  return order;
}

// Exhaustive search for one side: smallest subset (lexicographic within
// each size) whose set-connectivity holds for every vertex.
std::optional<VertexList> side_exhaustive(const Digraph& d, int k, int budget,
                                          SetDirection dir) {
  const int n = d.n();
  for (int size = 1; size <= std::min(budget, n); ++size) {
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      VertexList cand(idx.begin(), idx.end());
      bool ok = true;
      for (int w = 0; w < n && ok; ++w)
        ok = set_k_connected(d, w, cand, k, dir);
      if (ok) return cand;
      int i = size - 1;
      while (i >= 0 && idx[i] == n - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace

SparseLinkageResult sparse_linkage(const Digraph& d, int k) {
  const int n = d.n();
  SparseLinkageResult result;
  result.pair.k = k;
  result.pair.ell = n - d.min_degree();
  result.pair.budget = 2 * k + result.pair.ell - 2;
  const int budget = result.pair.budget;

  if (n <= budget) {
    // tiny digraphs: A = B = V(D) works (every w is a member)
    VertexList all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    result.pair.a = result.pair.b = all;
    result.status = Status::Found;
    return result;
  }

  // greedy candidates: A needs out-reach ((A,w) for every w), B absorbs
  // ((w,B)); prefixes of the degree orders, then exact verification
  VertexList out_order = by_degree_desc(d, true);
  VertexList in_order = by_degree_desc(d, false);
  VertexList a_cand(out_order.begin(), out_order.begin() + budget);
  VertexList b_cand(in_order.begin(), in_order.begin() + budget);
  std::sort(a_cand.begin(), a_cand.end());
  std::sort(b_cand.begin(), b_cand.end());

  bool a_ok = true, b_ok = true;
  for (int w = 0; w < n && (a_ok || b_ok); ++w) {
    if (a_ok && !set_k_connected(d, w, a_cand, k, SetDirection::FromSet))
      a_ok = false;
    if (b_ok && !set_k_connected(d, w, b_cand, k, SetDirection::ToSet))
      b_ok = false;
  }

  if (!a_ok || !b_ok) {
    if (n > 16) {
      result.status = Status::Unknown;
      return result;
    }
    if (!a_ok) {
      auto a = side_exhaustive(d, k, budget, SetDirection::FromSet);
      if (!a) {
        result.status = Status::CertifiedNo;  // NotFoundExhaustive: alarm
        return result;
      }
      a_cand = *a;
    }
    if (!b_ok) {
      auto b = side_exhaustive(d, k, budget, SetDirection::ToSet);
      if (!b) {
        result.status = Status::CertifiedNo;
        return result;
      }
      b_cand = *b;
    }
  }

  result.pair.a = a_cand;
  result.pair.b = b_cand;
  if (!verify_sparse_linkage(d, result.pair.a, result.pair.b, k))
    throw Error("InternalConsistency", "sparse linkage verification regressed");
  result.status = Status::Found;
  return result;
}

}  // namespace tourneykit
