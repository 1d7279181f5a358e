#pragma once

#include "tourneykit/connectivity.hpp"
#include "tourneykit/digraph.hpp"

namespace tourneykit {

// Cyclic vertex sequence; canonical form starts at the minimum vertex.
struct Cycle {
  VertexList vertices;
};

Cycle canonical_cycle(VertexList vertices);

// Consecutive (cyclic) pairs are arcs, no repeats, and optionally exact
// length / required member.
bool validate_cycle(const Digraph& d, const Cycle& c, int expected_len = -1,
                    int must_contain = -1);

class NotStronglyConnectedError : public Error {
 public:
  NotStronglyConnectedError(Arc pair, VertexList separator);
  Arc witness_pair;
  VertexList witness_separator;
};

// Hamiltonian cycle of a strongly connected tournament, built by the
// classical insertion argument (no search): grow a cycle, inserting any
// outside vertex with both an in- and an out-neighbor on it; when none
// exists the outside splits into a dominating side S and a dominated side
// T and strong connectivity forces an arc t->s, which is spliced in.
// Throws NotStronglyConnectedError (with witness) otherwise. O(n^2)-ish
// with bitrows; runs at n in the thousands.
Cycle camion_cycle(const Tournament& t);

// Cycle of exactly `len` vertices through v (vertex pancyclicity), grown
// one vertex per round from a 3-cycle through v: insert an outside vertex,
// or splice an arc t->s from the dominated side to the dominating side
// while dropping one cycle vertex other than v.
// Throws NotStronglyConnectedError / BadLength.
Cycle moon_cycle(const Tournament& t, int v, int len);

struct TwoCycles {
  Status status = Status::Unknown;
  Cycle first, second;  // v lies on first; |first| = len, |second| = n-len
};

// Spanning pair of vertex-disjoint cycles with prescribed first length and
// v on the first cycle. General guarantees for such splits only kick in at
// astronomically high connectivity, so this is exact-by-search over the
// first cycle's vertex set: certified NoPartition for n <= 14, Unknown
// beyond.
TwoCycles two_cycle_partition(const Tournament& t, int v, int len);

}  // namespace tourneykit
