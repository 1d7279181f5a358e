#pragma once

#include <optional>
#include <string>

#include "tourneykit/connectivity.hpp"
#include "tourneykit/digraph.hpp"

namespace tourneykit {

// Parameters of the layered extremal tournament. Vertex indexing is the
// construction's total order itself (index 0 = x_s), so serialized
// instances diff cleanly against the reference figures.
struct ExtremalSpec {
  int s = 2;        // connectivity parameter, >= 2
  int m = 2;        // layer count, >= 2
  int s_prime = 1;  // padding, 1 <= s' < C(s+1,2)

  int layer_size() const { return s * (s + 1) / 2; }  // C(s+1,2)
  int n() const { return layer_size() * m + 2 * s + 1 + s_prime; }

  void validate() const;  // throws BadSpec
  // The proposition's hypothesis n >= 2*C(s+1,2)+2s+2; surfaced as a
  // warning, never an error (the construction itself is defined anyway).
  bool meets_hypothesis() const {
    return n() >= 2 * layer_size() + 2 * s + 2;
  }

  std::vector<std::string> role_names() const;
  VertexList x_vertices() const;        // x_s..x_1 = indices 0..s-1
  int w_star() const { return s; }
  VertexList layer(int i) const;        // Z^i, i in [1..m]
  VertexList pad_vertices() const;      // w_1..w_{s'}
  VertexList y_vertices() const;        // y_1..y_s = last s indices
};

// The construction: orient every pair forward in the total order except
// the explicit back-arc families z^1_{j,l} -> x_j, y_j -> z^m_{j,l} and
// the layer chains z^{i+1}_{j,l} -> z^i_{j,l}.
Tournament extremal_tournament(const ExtremalSpec& spec);
std::vector<Arc> extremal_back_arcs(const ExtremalSpec& spec);

struct ExtremalCertificate {
  int k = 0;
  int kappa_exact = 0;
  bool kappa_ok = false;  // kappa_exact >= s

  int diameter_exact = -1;  // -1 would mean not strongly connected
  // diameter bound (n-2s)/C(s+1,2) kept as an exact rational
  long long diameter_bound_num = 0;
  int diameter_bound_den = 1;
  bool diameter_ok = false;

  // Smallest strongly k-connected induced subtournament (exhaustive
  // regime n <= 16 only) against the bound k*n/C(s+1,2) - k - 2.
  bool subtournament_verified = false;
  std::optional<int> min_k_subtournament;
  VertexList min_witness;
  long long size_bound_num = 0;
  int size_bound_den = 1;
  bool subtournament_ok = false;  // meaningful only when verified

  // Deleting any single layer Z^i leaves no path from Y to X.
  bool layer_separator_ok = false;

  bool hypothesis_warning = false;  // spec fails the proposition hypothesis
};

// Measures all three claimed properties plus the layer-separator sanity
// check. For n > 16 the subset scan is skipped and the subtournament bound
// reported as unverified (kappa and diameter are still computed).
ExtremalCertificate certify_extremal(const Tournament& t,
                                     const ExtremalSpec& spec, int k);

// Smallest size of a strongly k-connected induced subtournament, by scan
// over all vertex subsets (n <= 16, else TooLargeForExhaustive). Subsets
// failing `layer_prune` (fewer than k vertices in some listed layer) are
// skipped; pass nullptr for the unpruned scan.
std::optional<int> min_k_subtournament_scan(
    const Tournament& t, int k, VertexList* witness,
    const std::vector<VertexList>* layer_prune = nullptr);

struct MinimalityResult {
  bool minimal = false;
  bool k_connected = false;              // the tournament itself
  std::optional<VertexList> witness;     // a strongly k-connected proper subset
};

// Strong k-connectivity is not monotone under vertex deletion, so all
// proper subsets are scanned (n <= 16, else TooLargeForExhaustive).
MinimalityResult is_minimally_strongly_k_connected(const Tournament& t, int k);

}  // namespace tourneykit
