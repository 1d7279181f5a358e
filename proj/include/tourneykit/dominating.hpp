#pragma once

#include "tourneykit/digraph.hpp"

namespace tourneykit {

enum class DomKind {
  A,  // in-dominating: path from x; residue = V minus the union of in-neighborhoods
  B,  // out-dominating: path into x; residue = V minus the union of out-neighborhoods
};

struct DominatingStructure {
  DomKind kind = DomKind::A;
  VertexList path;      // arc order: A starts at x, B ends at x; |path| <= c
  int endpoint = -1;    // far end: A -> path.back(), B -> path.front()
  VertexList uncovered; // residue
  int c = 0;
  int ell = 0;          // derived: n - delta(D) of the effective digraph
  int x = -1;

  // Residue bound |uncovered| <= 2^(1-c') d(x) + 2*ell with c' = |path|,
  // compared in exact integer arithmetic (d = d+ for A, d- for B).
  bool bound_holds(int degree_of_x) const;
};

// Greedy almost-dominating structure: keep the uncovered set U and
// U' = U minus N+(v_i); stop early when U = U';
// otherwise append the vertex of U\U' with maximum in-degree (A) or
// out-degree (B) inside D[U\U'], ties to the lowest index. The returned
// structure satisfies the residue bound, asserted before return.
// `exclude` removes vertices from D before the run (the batched
// construction's D^X / D^Y masks); ell is derived from what remains.
DominatingStructure almost_dominating(const Digraph& d, int x, int c,
                                      DomKind kind,
                                      const VertexList& exclude = {});

struct BatchRequest {
  int x = -1;
  int c = 0;
  DomKind kind = DomKind::A;
};

// Pairwise-disjoint batch: each call excludes every previously built path
// (plus the caller's initial mask), mirroring the sequential masked
// applications of the construction.
std::vector<DominatingStructure> almost_dominating_batch(
    const Digraph& d, const std::vector<BatchRequest>& requests,
    const VertexList& initial_exclude = {});

struct SparseLinkagePair {
  VertexList a, b;
  int k = 0;
  int ell = 0;
  int budget = 0;  // 2k + ell - 2
};

struct SparseLinkageResult {
  // CertifiedNo here means NotFoundExhaustive: the n <= 16 subset search
  // found no pair within budget. Pairs of this size always exist when
  // delta(D) >= n - ell, so callers treat it as a bug-class alarm.
  Status status = Status::Unknown;
  SparseLinkagePair pair;
};

// Every w can reach B and be reached from A even after any k-1 deletions.
bool verify_sparse_linkage(const Digraph& d, const VertexList& a,
                           const VertexList& b, int k);

// Verified search for the sparse linkage pair: greedy candidates
// (high-out-degree picks for A, high-in-degree for B), exact verification
// via set_k_connected for every vertex, then exhaustive subset search for
// n <= 16.
SparseLinkageResult sparse_linkage(const Digraph& d, int k);

}  // namespace tourneykit
