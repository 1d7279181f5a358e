#include "tourneykit/generators.hpp"

namespace tourneykit {

int pair_index(int n, int u, int v) {
  // row-major over the upper triangle: row u starts after
  // sum_{r<u} (n-1-r) pairs
  return u * (2 * n - u - 1) / 2 + (v - u - 1);
}

long long pair_count(int n) { return static_cast<long long>(n) * (n - 1) / 2; }

Tournament random_tournament(int n, std::uint64_t seed) {
  if (n < 1) throw Error("BadSpec", "need n >= 1");
  Digraph d(n);
  SplitMix64 rng(seed);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (rng.next() & 1)
        d.add_arc(u, v);
      else
        d.add_arc(v, u);
    }
  return Tournament::trusted(std::move(d));
}

namespace {

bool is_prime(int q) {
  if (q < 2) return false;
  for (int p = 2; static_cast<long long>(p) * p <= q; ++p)
    if (q % p == 0) return false;
  return true;
}

}  // namespace

Tournament paley_tournament(int q) {
  if (!is_prime(q) || q % 4 != 3)
    throw Error("BadModulus",
                "q = " + std::to_string(q) + " is not a prime = 3 (mod 4)");
  std::vector<char> residue(q, 0);
  for (int a = 1; a < q; ++a)
    residue[static_cast<int>((static_cast<long long>(a) * a) % q)] = 1;
  Digraph d(q);
  for (int u = 0; u < q; ++u)
    for (int v = 0; v < q; ++v)
      if (u != v && residue[((v - u) % q + q) % q]) d.add_arc(u, v);
  return Tournament::trusted(std::move(d));
}

Tournament transitive_tournament(int n) {
  Digraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) d.add_arc(u, v);
  return Tournament::trusted(std::move(d));
}

Tournament tournament_from_mask(int n, std::uint64_t mask) {
  const long long m = pair_count(n);
  Digraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      int i = pair_index(n, u, v);
      if ((mask >> (m - 1 - i)) & 1)
        d.add_arc(u, v);
      else
        d.add_arc(v, u);
    }
  return Tournament::trusted(std::move(d));
}

void enumerate_labeled_tournaments(
    int n, const std::function<bool(const Tournament&, std::uint64_t)>& visit) {
  if (n > 7)
    throw Error("TooLarge", "enumeration capped at n = 7 (2^21 instances)");
  if (n < 1) throw Error("BadSpec", "need n >= 1");
  const std::uint64_t total = labeled_tournament_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask)
    if (!visit(tournament_from_mask(n, mask), mask)) return;
}

std::uint64_t labeled_tournament_count(int n) {
  return std::uint64_t{1} << pair_count(n);
}

}  // namespace tourneykit
