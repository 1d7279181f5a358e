#include "tourneykit/factors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace tourneykit {

void FactorSpec::validate(int n) const {
  if (lengths.empty()) throw Error("BadSpec", "no cycle lengths given");
  long long sum = 0;
  for (int l : lengths) {
    if (l < 3) throw Error("BadSpec", "cycle lengths must be >= 3");
    sum += l;
  }
  if (sum != n)
    throw Error("BadSpec", "lengths sum to " + std::to_string(sum) +
                               ", need n = " + std::to_string(n));
  std::set<int> seen;
  for (auto [ci, v] : prescribed) {
    if (ci < 0 || ci >= static_cast<int>(lengths.size()))
      throw Error("BadSpec", "prescribed cycle index out of range");
    if (v < 0 || v >= n)
      throw Error("BadSpec", "prescribed vertex out of range");
    if (!seen.insert(v).second)
      throw Error("BadSpec", "prescribed vertices must be distinct");
  }
}

FactorCheck verify_factor(const Tournament& t, const FactorSpec& spec,
                          const CycleFactor& factor) {
  auto fail = [](std::string why) { return FactorCheck{false, std::move(why)}; };
  if (factor.cycles.size() != spec.lengths.size())
    return fail("cycle count " + std::to_string(factor.cycles.size()) +
                " != spec count " + std::to_string(spec.lengths.size()));
  for (std::size_t i = 0; i < factor.cycles.size(); ++i)
    if (static_cast<int>(factor.cycles[i].vertices.size()) != spec.lengths[i])
      return fail("cycle " + std::to_string(i) + " has length " +
                  std::to_string(factor.cycles[i].vertices.size()) +
                  ", spec says " + std::to_string(spec.lengths[i]));
  for (auto [ci, v] : spec.prescribed) {
    const auto& vs = factor.cycles[ci].vertices;
    if (std::find(vs.begin(), vs.end(), v) == vs.end())
      return fail("prescribed vertex " + std::to_string(v) +
                  " missing from cycle " + std::to_string(ci));
  }
  std::vector<char> seen(t.n(), 0);
  for (const auto& c : factor.cycles)
    for (int v : c.vertices) {
      if (v < 0 || v >= t.n()) return fail("vertex out of range");
      if (seen[v])
        return fail("vertex " + std::to_string(v) + " used twice");
      seen[v] = 1;
    }
  for (int v = 0; v < t.n(); ++v)
    if (!seen[v]) return fail("vertex " + std::to_string(v) + " uncovered");
  for (std::size_t i = 0; i < factor.cycles.size(); ++i) {
    const auto& vs = factor.cycles[i].vertices;
    for (std::size_t j = 0; j < vs.size(); ++j) {
      int a = vs[j], b = vs[(j + 1) % vs.size()];
      if (!t.has_arc(a, b))
        return fail("(" + std::to_string(a) + "," + std::to_string(b) +
                    ") is not an arc");
    }
  }
  return FactorCheck{};
}

namespace {

struct FactorSearch {
  const Tournament& t;
  const std::vector<int>& lengths;
  std::vector<int> class_of;   // -1 = unassigned
  std::vector<int> count;      // per class
  std::vector<char> pinned_class;
  long long budget;            // -1 = unbounded
  bool truncated = false;

  bool class_still_completable(int ci) const {
    // assigned vertices of ci must share one strongly connected component
    // of T[class_i u pool]; a full class must itself be strongly connected
    VertexList members, pool;
    for (int v = 0; v < t.n(); ++v) {
      if (class_of[v] == ci) members.push_back(v);
      else if (class_of[v] == -1) pool.push_back(v);
    }
    if (members.empty()) return true;
    if (count[ci] == lengths[ci]) {
      Induced ind = induced_subdigraph(t, members);
      return is_strongly_connected(ind.graph);
    }
    VertexList both = members;
    both.insert(both.end(), pool.begin(), pool.end());
    Induced ind = induced_subdigraph(t, both);
    std::vector<int> pos(t.n(), -1);
    for (std::size_t i = 0; i < ind.vertex_map.size(); ++i)
      pos[ind.vertex_map[i]] = static_cast<int>(i);
    auto comps = strongly_connected_components(ind.graph);
    std::vector<int> comp_of(ind.graph.n());
    for (std::size_t c = 0; c < comps.size(); ++c)
      for (int v : comps[c]) comp_of[v] = static_cast<int>(c);
    int c0 = comp_of[pos[members[0]]];
    for (int v : members)
      if (comp_of[pos[v]] != c0) return false;
    // enough room in that component to finish the class
    int room = static_cast<int>(comps[c0].size());
    return room >= lengths[ci];
  }

  bool solve() {
    if (budget == 0) {
      truncated = true;
      return false;
    }
    if (budget > 0) --budget;
    int v = -1;
    for (int u = 0; u < t.n(); ++u)
      if (class_of[u] == -1) {
        v = u;
        break;
      }
    if (v == -1) return true;  // every class full and valid

    for (int ci = 0; ci < static_cast<int>(lengths.size()); ++ci) {
      if (count[ci] >= lengths[ci]) continue;
      if (count[ci] == 0 && !pinned_class[ci]) {
        // unpinned empty classes of equal length are interchangeable:
        // only the first of each length is worth trying
        bool duplicate = false;
        for (int cj = 0; cj < ci; ++cj)
          if (count[cj] == 0 && !pinned_class[cj] &&
              lengths[cj] == lengths[ci])
            duplicate = true;
        if (duplicate) continue;
      }
      class_of[v] = ci;
      ++count[ci];
      if (class_still_completable(ci) && solve()) return true;
      class_of[v] = -1;
      --count[ci];
      if (truncated) return false;
    }
    return false;
  }
};

}  // namespace

FactorResult find_factor(const Tournament& t, const FactorSpec& spec) {
  spec.validate(t.n());
  const int tcount = static_cast<int>(spec.lengths.size());

  FactorResult result;
  if (tcount == 1) {
    // single-cycle case is Camion
    try {
      // a Hamiltonian cycle contains every vertex, pins included
      Cycle c = camion_cycle(t);
      result.status = Status::Found;
      result.factor.cycles = {std::move(c)};
    } catch (const NotStronglyConnectedError&) {
      result.status = Status::CertifiedNo;
    }
    return result;
  }

  FactorSearch search{t,
                      spec.lengths,
                      std::vector<int>(t.n(), -1),
                      std::vector<int>(tcount, 0),
                      std::vector<char>(tcount, 0),
                      t.n() <= 14 ? -1 : 5'000'000ll};
  for (auto [ci, v] : spec.prescribed) {
    search.class_of[v] = ci;
    ++search.count[ci];
    search.pinned_class[ci] = 1;
  }
  for (auto [ci, v] : spec.prescribed)
    if (!search.class_still_completable(ci)) {
      result.status = t.n() <= 14 ? Status::CertifiedNo : Status::Unknown;
      return result;
    }

  if (search.solve()) {
    result.status = Status::Found;
    for (int ci = 0; ci < tcount; ++ci) {
      VertexList members, map_back;
      for (int v = 0; v < t.n(); ++v)
        if (search.class_of[v] == ci) members.push_back(v);
      Tournament sub = induced_subtournament(t, members, &map_back);
      Cycle c = camion_cycle(sub);
      for (int& v : c.vertices) v = map_back[v];
      result.factor.cycles.push_back(canonical_cycle(std::move(c.vertices)));
    }
    FactorCheck check = verify_factor(t, spec, result.factor);
    if (!check.ok)
      throw Error("InternalConsistency",
                  "solver output failed verification: " + check.violation);
  } else {
    result.status = search.truncated ? Status::Unknown : Status::CertifiedNo;
  }
  return result;
}

std::optional<VertexList> max_transitive_subtournament(const Tournament& t,
                                                       int size) {
  const int n = t.n();
  if (size > n) throw Error("TooLarge", "size exceeds vertex count");
  if (size <= 0) return VertexList{};
  // exhaustive scan; exact for n <= 16, refused beyond a frozen budget
  long long subsets = 1;
  const long long cap = 20'000'000;
  for (int i = 0; i < size && subsets <= cap; ++i)
    subsets = subsets * (n - i) / (i + 1);
  if (n > 16 && subsets > cap)
    throw Error("TooLarge",
                "exhaustive subset scan refused: C(n,size) beyond the "
                "documented n <= 16 regime");

  std::vector<int> idx(size);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    // a size-s subset is transitive iff its internal out-degrees are a
    // permutation of 0..s-1
    Bits mask(n);
    for (int i : idx) mask.set(i);
    unsigned seen = 0;
    bool ok = true;
    for (int i : idx) {
      int deg = t.out(i).count_and(mask);
      if (seen & (1u << deg)) {
        ok = false;
        break;
      }
      seen |= 1u << deg;
    }
    if (ok) return VertexList(idx.begin(), idx.end());
    int i = size - 1;
    while (i >= 0 && idx[i] == n - size + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
  return std::nullopt;
}

}  // namespace tourneykit
