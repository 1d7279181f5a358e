#include "tourneykit/extremal.hpp"

#include <algorithm>

namespace tourneykit {

void ExtremalSpec::validate() const {
  if (s < 2) throw Error("BadSpec", "need s >= 2");
  if (m < 2) throw Error("BadSpec", "need m >= 2");
  if (s_prime < 1 || s_prime >= layer_size())
    throw Error("BadSpec", "need 1 <= s' < C(s+1,2) = " +
                               std::to_string(layer_size()));
}

// Total order (= vertex index): x_s .. x_1, w*, z^1.., z^m.. (lexicographic
// in (i,j,l)), w_1 .. w_{s'}, y_1 .. y_s.
std::vector<std::string> ExtremalSpec::role_names() const {
  std::vector<std::string> names;
  for (int j = s; j >= 1; --j) names.push_back("x" + std::to_string(j));
  names.push_back("w*");
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= s; ++j)
      for (int l = 1; l <= j; ++l)
        names.push_back("z" + std::to_string(i) + "_" + std::to_string(j) +
                        "," + std::to_string(l));
  for (int r = 1; r <= s_prime; ++r) names.push_back("w" + std::to_string(r));
  for (int j = 1; j <= s; ++j) names.push_back("y" + std::to_string(j));
  return names;
}

VertexList ExtremalSpec::x_vertices() const {
  VertexList out(s);
  for (int i = 0; i < s; ++i) out[i] = i;
  return out;
}

namespace {

// index of z^i_{j,l} under the total order
int z_index(const ExtremalSpec& spec, int i, int j, int l) {
  int base = spec.s + 1;  // after x block and w*
  int per_layer = spec.layer_size();
  int within = 0;
  for (int jj = 1; jj < j; ++jj) within += jj;
  within += l - 1;
  return base + (i - 1) * per_layer + within;
}

}  // namespace

VertexList ExtremalSpec::layer(int i) const {
  VertexList out;
  for (int j = 1; j <= s; ++j)
    for (int l = 1; l <= j; ++l) out.push_back(z_index(*this, i, j, l));
  return out;
}

VertexList ExtremalSpec::pad_vertices() const {
  VertexList out;
  int base = s + 1 + m * layer_size();
  for (int r = 0; r < s_prime; ++r) out.push_back(base + r);
  return out;
}

VertexList ExtremalSpec::y_vertices() const {
  VertexList out;
  for (int j = 0; j < s; ++j) out.push_back(n() - s + j);
  return out;
}

std::vector<Arc> extremal_back_arcs(const ExtremalSpec& spec) {
  std::vector<Arc> arcs;
  const VertexList ys = spec.y_vertices();
  // x_j sits at index s-j (x_s first)
  auto x_of = [&](int j) { return spec.s - j; };
  for (int j = 1; j <= spec.s; ++j)
    for (int l = 1; l <= j; ++l) {
      arcs.emplace_back(z_index(spec, 1, j, l), x_of(j));     // z^1_{j,l} -> x_j
      arcs.emplace_back(ys[j - 1], z_index(spec, spec.m, j, l));  // y_j -> z^m_{j,l}
    }
  for (int i = 1; i < spec.m; ++i)
    for (int j = 1; j <= spec.s; ++j)
      for (int l = 1; l <= j; ++l)
        arcs.emplace_back(z_index(spec, i + 1, j, l), z_index(spec, i, j, l));
  return arcs;
}

Tournament extremal_tournament(const ExtremalSpec& spec) {
  spec.validate();
  const int n = spec.n();
  std::vector<Arc> back = extremal_back_arcs(spec);
  std::vector<char> is_back(static_cast<std::size_t>(n) * n, 0);
  for (auto [u, v] : back) is_back[static_cast<std::size_t>(u) * n + v] = 1;

  Digraph d(n);
  for (auto [u, v] : back) d.add_arc(u, v);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!is_back[static_cast<std::size_t>(v) * n + u]) d.add_arc(u, v);
  d.set_labels(spec.role_names());
  return Tournament::validated(std::move(d));
}

std::optional<int> min_k_subtournament_scan(
    const Tournament& t, int k, VertexList* witness,
    const std::vector<VertexList>* layer_prune) {
  const int n = t.n();
  if (n > 16)
    throw Error("TooLargeForExhaustive",
                "subset scan capped at n = 16, instance has n = " +
                    std::to_string(n));
  std::vector<std::uint32_t> layer_masks;
  if (layer_prune)
    for (const auto& layer : *layer_prune) {
      std::uint32_t m = 0;
      for (int v : layer) m |= 1u << v;
      layer_masks.push_back(m);
    }

  int best = -1;
  VertexList best_set;
  const std::uint32_t total = 1u << n;
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    int size = std::popcount(mask);
    if (size < k + 1) continue;
    if (best != -1 && size >= best) continue;
    bool pruned = false;
    for (std::uint32_t lm : layer_masks)
      if (std::popcount(mask & lm) < k) {
        pruned = true;
        break;
      }
    if (pruned) continue;
    VertexList verts;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) verts.push_back(v);
    Tournament sub = induced_subtournament(t, verts);
    if (strongly_k_connected_fast(sub, k)) {
      best = size;
      best_set = verts;
    }
  }
  if (best == -1) return std::nullopt;
  if (witness) *witness = best_set;
  return best;
}

ExtremalCertificate certify_extremal(const Tournament& t,
                                     const ExtremalSpec& spec, int k) {
  spec.validate();
  if (k < 2 || k > spec.s) throw Error("BadSpec", "need 2 <= k <= s");
  if (t.n() != spec.n())
    throw Error("BadSpec", "tournament size does not match the spec");

  ExtremalCertificate cert;
  cert.k = k;
  cert.hypothesis_warning = !spec.meets_hypothesis();

  cert.kappa_exact = connectivity_report(t).kappa;
  cert.kappa_ok = cert.kappa_exact >= spec.s;

  auto diam = diameter(t);
  cert.diameter_exact = diam ? *diam : -1;
  cert.diameter_bound_num = spec.n() - 2 * spec.s;
  cert.diameter_bound_den = spec.layer_size();
  cert.diameter_ok =
      diam && static_cast<long long>(*diam) * cert.diameter_bound_den >=
                  cert.diameter_bound_num;

  cert.size_bound_num =
      static_cast<long long>(k) * spec.n() -
      static_cast<long long>(k + 2) * spec.layer_size();
  cert.size_bound_den = spec.layer_size();

  if (t.n() <= 16) {
    std::vector<VertexList> layers;
    for (int i = 1; i <= spec.m; ++i) layers.push_back(spec.layer(i));
    VertexList witness;
    auto min_size = min_k_subtournament_scan(t, k, &witness, &layers);
    cert.subtournament_verified = true;
    cert.min_k_subtournament = min_size;
    cert.min_witness = witness;
    cert.subtournament_ok =
        !min_size || static_cast<long long>(*min_size) * cert.size_bound_den >=
                         cert.size_bound_num;
  }

  // separator sanity: deleting any single layer cuts Y off from X
  cert.layer_separator_ok = true;
  const VertexList xs = spec.x_vertices(), ys = spec.y_vertices();
  for (int i = 1; i <= spec.m && cert.layer_separator_ok; ++i) {
    VertexList keep;
    std::vector<char> drop(t.n(), 0);
    for (int z : spec.layer(i)) drop[z] = 1;
    for (int v = 0; v < t.n(); ++v)
      if (!drop[v]) keep.push_back(v);
    Induced ind = induced_subdigraph(t, keep);
    std::vector<int> pos(t.n(), -1);
    for (std::size_t p = 0; p < ind.vertex_map.size(); ++p)
      pos[ind.vertex_map[p]] = static_cast<int>(p);
    // BFS from all of Y at once
    Bits visited(ind.graph.n()), frontier(ind.graph.n());
    for (int y : ys) {
      visited.set(pos[y]);
      frontier.set(pos[y]);
    }
    while (frontier.any()) {
      Bits next(ind.graph.n());
      frontier.for_each([&](int v) { next |= ind.graph.out(v); });
      next.andnot_assign(visited);
      visited |= next;
      frontier = next;
    }
    for (int x : xs)
      if (visited.test(pos[x])) cert.layer_separator_ok = false;
  }
  return cert;
}

MinimalityResult is_minimally_strongly_k_connected(const Tournament& t,
                                                   int k) {
  const int n = t.n();
  if (n > 16)
    throw Error("TooLargeForExhaustive",
                "proper-subset scan capped at n = 16");
  MinimalityResult result;
  result.k_connected = strongly_k_connected_fast(t, k);

  const std::uint32_t total = 1u << n;
  const std::uint32_t full = total - 1;
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    if (mask == full) continue;
    if (std::popcount(mask) < k + 1) continue;
    VertexList verts;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) verts.push_back(v);
    Tournament sub = induced_subtournament(t, verts);
    if (strongly_k_connected_fast(sub, k)) {
      result.minimal = false;
      result.witness = verts;
      return result;
    }
  }
  result.minimal = result.k_connected;
  return result;
}

}  // namespace tourneykit
