#include "tourneykit/digraph.hpp"

#include <algorithm>

namespace tourneykit {

std::string to_string(Status s) {
  switch (s) {
    case Status::Found: return "Found";
    case Status::CertifiedNo: return "CertifiedNo";
    default: return "Unknown";
  }
}

namespace {

std::string pair_str(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Digraph::Digraph(int n) : n_(n) {
  if (n < 0) throw Error("BadSpec", "negative vertex count");
  out_.assign(n, Bits(n));
  in_.assign(n, Bits(n));
}

Digraph Digraph::from_arcs(int n, const std::vector<Arc>& arcs) {
  Digraph d(n);
  for (auto [u, v] : arcs) d.add_arc(u, v);
  return d;
}

void Digraph::add_arc(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw Error("OutOfRange", "arc " + pair_str(u, v) + " outside [0," +
                                  std::to_string(n_) + ")");
  if (u == v) throw Error("SelfArc", "self-arc at vertex " + std::to_string(u));
  out_[u].set(v);
  in_[v].set(u);
}

int Digraph::degree(int v) const {
  Bits nbrs = out_[v];
  nbrs |= in_[v];
  return nbrs.count();
}

int Digraph::min_out_degree() const {
  int m = n_ - 1 < 0 ? 0 : n_;
  for (int v = 0; v < n_; ++v) m = std::min(m, out_degree(v));
  return n_ == 0 ? 0 : m;
}

int Digraph::min_in_degree() const {
  int m = n_;
  for (int v = 0; v < n_; ++v) m = std::min(m, in_degree(v));
  return n_ == 0 ? 0 : m;
}

int Digraph::min_degree() const {
  int m = n_;
  for (int v = 0; v < n_; ++v) m = std::min(m, degree(v));
  return n_ == 0 ? 0 : m;
}

long long Digraph::arc_count() const {
  long long c = 0;
  for (int v = 0; v < n_; ++v) c += out_degree(v);
  return c;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(static_cast<std::size_t>(arc_count()));
  for (int u = 0; u < n_; ++u)
    out_[u].for_each([&](int v) { out.emplace_back(u, v); });
  return out;  // ascending u then v by construction
}

bool Digraph::has_two_cycle() const {
  for (int u = 0; u < n_; ++u)
    if (out_[u].intersects(in_[u])) return true;
  return false;
}

void Digraph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != n_)
    throw Error("BadSpec", "label count does not match vertex count");
  labels_ = std::move(labels);
}

Tournament Tournament::validated(Digraph d) {
  const int n = d.n();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      bool fwd = d.has_arc(u, v), bwd = d.has_arc(v, u);
      if (fwd && bwd)
        throw Error("DoublePair", "pair " + std::to_string(u) + "," +
                                      std::to_string(v) + " oriented both ways");
      if (!fwd && !bwd)
        throw Error("MissingPair", "pair " + std::to_string(u) + "," +
                                       std::to_string(v) + " not oriented");
    }
  }
  return Tournament(std::move(d));
}

Tournament make_tournament(int n, const std::vector<Arc>& arcs) {
  Digraph d(n);
  for (auto [u, v] : arcs) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw Error("OutOfRange", "arc (" + std::to_string(u) + "," +
                                    std::to_string(v) + ") outside range");
    if (u == v)
      throw Error("SelfArc", "self-arc at vertex " + std::to_string(u));
    if (d.has_arc(u, v) || d.has_arc(v, u))
      throw Error("DoublePair", "pair " + std::to_string(std::min(u, v)) + "," +
                                    std::to_string(std::max(u, v)) +
                                    " oriented more than once");
    d.add_arc(u, v);
  }
  return Tournament::validated(std::move(d));
}

Induced induced_subdigraph(const Digraph& d, const VertexList& u) {
  VertexList verts = u;
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  for (int v : verts)
    if (v < 0 || v >= d.n())
      throw Error("OutOfRange", "vertex " + std::to_string(v) + " outside range");

  std::vector<int> pos(d.n(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = static_cast<int>(i);

  Digraph g(static_cast<int>(verts.size()));
  for (std::size_t i = 0; i < verts.size(); ++i) {
    d.out(verts[i]).for_each([&](int w) {
      if (pos[w] >= 0) g.add_arc(static_cast<int>(i), pos[w]);
    });
  }
  return Induced{std::move(g), std::move(verts)};
}

Tournament induced_subtournament(const Tournament& t, const VertexList& u,
                                 VertexList* vertex_map) {
  Induced ind = induced_subdigraph(t, u);
  if (vertex_map) *vertex_map = ind.vertex_map;
  return Tournament::trusted(std::move(ind.graph));
}

}  // namespace tourneykit
