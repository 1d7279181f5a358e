#pragma once

#include "tourneykit/connectivity.hpp"
#include "tourneykit/digraph.hpp"

namespace tourneykit {

struct BipartiteGraph {
  int na = 0, nb = 0;
  std::vector<std::vector<int>> adj;  // adj[a] = ascending b indices

  static BipartiteGraph from_edges(int na, int nb,
                                   const std::vector<Arc>& edges);
  int degree_a(int a) const { return static_cast<int>(adj[a].size()); }
  std::vector<int> degrees_b() const;
};

struct HallResult {
  bool perfect = false;
  std::vector<int> match_of_a;    // b index per a, -1 if unmatched
  VertexList deficiency_witness;  // a-side subset S with |N(S)| < |S|
};

// Augmenting-path matching (a-side in index order, neighbors ascending, so
// the lowest-index perfect matching comes out). On failure the alternating
// tree of the first stuck vertex is the Hall violator. |A| = |B| required
// (UnbalancedSides).
HallResult hall_matching(const BipartiteGraph& g);

struct DistributeResult {
  Status status = Status::Unknown;     // Found or CertifiedNo (= NoMatching)
  std::vector<VertexList> parts;       // seeds extended to target sizes
  std::vector<bool> glue_certified;    // per-part glue_check outcome
  VertexList hall_witness;             // leftover vertices violating Hall
};

// The auxiliary-bipartite-graph distribution step: leftover vertices on one
// side, target-deficit slot copies per part on the other, an edge x-slot(i)
// iff x has >= k out- and >= k in-neighbors in seed i. A perfect matching
// extends every seed to its exact target; each extension is then certified
// by glue_check. Failure returns the Hall witness (a legitimate outcome at
// desk scale).
DistributeResult distribute_vertices(const Digraph& d,
                                     const std::vector<VertexList>& seeds,
                                     int k, const std::vector<int>& targets);

struct PartCertificate {
  VertexList part;
  int kappa = 0;
  bool k_connected = false;
};

struct PartitionCertificate {
  int k = 0;
  std::vector<int> sizes;              // effective sizes (surplus absorbed)
  std::vector<VertexList> pinned;
  std::vector<PartCertificate> parts;
};

struct PartitionResult {
  Status status = Status::Unknown;
  PartitionCertificate certificate;
};

// Partition into t parts of prescribed sizes, each inducing a strongly
// k-connected subdigraph containing its pinned set. sum(sizes) <= n; any
// surplus n - sum is absorbed into part 1. Pipeline: pins + dominating-path
// anchors + greedy growth to strongly k-connected seeds, matching-based
// distribution to exact sizes, then full independent certification.
// Exhaustive fallback certifies NoPartition for n <= 12; Unknown beyond.
// Throws BadSizes / PinConflict.
PartitionResult partition_k_connected(const Digraph& d, int t, int k,
                                      const std::vector<int>& sizes,
                                      const std::vector<VertexList>& pinned);

// Construction-independent re-verification: partition property, exact
// sizes, pin containment, per-part strong k-connectivity by flow.
bool verify_partition_certificate(const Digraph& d,
                                  const PartitionCertificate& cert);

struct PathLinkSpec {
  std::vector<Arc> pairs;    // (x_i, y_i), all 2t endpoints distinct
  std::vector<int> lengths;  // vertex counts, each >= 2, sum <= n

  void validate(int n) const;  // throws BadSpec
};

struct LinkPathsResult {
  Status status = Status::Unknown;
  PathSystem paths;  // fully disjoint, exact vertex counts
};

// Vertex-disjoint x_i -> y_i paths with exact vertex counts. Exact
// backtracking, lowest-index-first; certified NoSolution for n <= 12.
// The t=1, len=n case is the Hamiltonian-path-between-endpoints search.
LinkPathsResult linked_paths_with_lengths(const Digraph& d,
                                          const PathLinkSpec& spec);

}  // namespace tourneykit
