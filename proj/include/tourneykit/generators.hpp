#pragma once

#include <cstdint>
#include <functional>

#include "tourneykit/digraph.hpp"

namespace tourneykit {

// SplitMix64 (Steele, Lea, Flood). The stream definition is frozen:
// regression files and seeds are stable across platforms and releases.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// Index of pair (u,v), u<v, in row-major upper-triangular order:
// (0,1),(0,2),...,(0,n-1),(1,2),...  Shared by the enumerator and the
// compact serialization format.
int pair_index(int n, int u, int v);
long long pair_count(int n);  // C(n,2)

// Fair-coin orientation of every pair. Pairs are visited in row-major
// order; one SplitMix64 draw per pair; the draw's lowest bit set means
// u->v, clear means v->u. Identical (n,seed) reproduces identical arcs.
Tournament random_tournament(int n, std::uint64_t seed);

// Quadratic-residue (Paley) tournament: u->v iff v-u is a nonzero square
// mod q. Requires q prime with q = 3 (mod 4); throws BadModulus otherwise.
Tournament paley_tournament(int q);

// Acyclic reference tournament: u->v for all u<v.
Tournament transitive_tournament(int n);

// Orientation-mask decoding used by the enumerator: the mask holds C(n,2)
// bits, pair i at bit (m-1-i) so that increasing masks are in lexicographic
// order of the orientation bitstring; a set bit means u->v.
Tournament tournament_from_mask(int n, std::uint64_t mask);

// All 2^C(n,2) labeled tournaments exactly once, lexicographic in the
// orientation bitstring. Visitor may return false to stop early.
// Throws TooLarge for n > 7.
void enumerate_labeled_tournaments(
    int n, const std::function<bool(const Tournament&, std::uint64_t)>& visit);

std::uint64_t labeled_tournament_count(int n);

}  // namespace tourneykit
