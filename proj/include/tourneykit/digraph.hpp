#pragma once

#include <string>
#include <vector>

#include "tourneykit/bits.hpp"
#include "tourneykit/common.hpp"

namespace tourneykit {

// Dense digraph over n labeled vertices. One bitrow per vertex for both
// out- and in-neighborhoods. May contain 2-cycles; never self-arcs.
// Instances are treated as immutable once published: every algorithm in the
// library takes `const Digraph&` and is a pure function of its inputs.
class Digraph {
 public:
  explicit Digraph(int n);

  static Digraph from_arcs(int n, const std::vector<Arc>& arcs);

  int n() const { return n_; }

  bool has_arc(int u, int v) const { return out_[u].test(v); }
  void add_arc(int u, int v);

  const Bits& out(int v) const { return out_[v]; }
  const Bits& in(int v) const { return in_[v]; }

  int out_degree(int v) const { return out_[v].count(); }
  int in_degree(int v) const { return in_[v].count(); }
  // |N+(v) u N-(v)|
  int degree(int v) const;

  int min_out_degree() const;  // delta^+
  int min_in_degree() const;   // delta^-
  int min_degree() const;      // delta

  long long arc_count() const;
  std::vector<Arc> arcs() const;  // lexicographically sorted

  bool is_semicomplete() const { return n_ <= 1 || min_degree() == n_ - 1; }
  bool has_two_cycle() const;

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

 private:
  int n_ = 0;
  std::vector<Bits> out_, in_;
  std::vector<std::string> labels_;
};

// A validated tournament: every unordered pair carries exactly one arc.
// A refinement of Digraph, not a separate representation.
class Tournament : public Digraph {
 public:
  // Validates the tournament invariant, throwing MissingPair / DoublePair.
  static Tournament validated(Digraph d);

  // Tags a digraph known-by-construction to be a tournament (generators).
  static Tournament trusted(Digraph d) { return Tournament(std::move(d)); }

 private:
  explicit Tournament(Digraph d) : Digraph(std::move(d)) {}
};

// Builds a tournament from an explicit arc list.
// Errors: SelfArc, DoublePair, MissingPair, each naming the offending pair.
Tournament make_tournament(int n, const std::vector<Arc>& arcs);

struct Induced {
  Digraph graph;
  VertexList vertex_map;  // new index i -> original vertex vertex_map[i]
};

// D[U] with vertices relabeled 0..|U|-1 in ascending original order.
Induced induced_subdigraph(const Digraph& d, const VertexList& u);

Tournament induced_subtournament(const Tournament& t, const VertexList& u,
                                 VertexList* vertex_map = nullptr);

}  // namespace tourneykit
