#pragma once

#include <map>
#include <optional>

#include "tourneykit/hamiltonicity.hpp"

namespace tourneykit {

struct FactorSpec {
  std::vector<int> lengths;     // each >= 3, sum = n
  std::map<int, int> prescribed;  // cycle index -> vertex that must lie on it

  void validate(int n) const;  // throws BadSpec
};

struct CycleFactor {
  std::vector<Cycle> cycles;
};

struct FactorCheck {
  bool ok = true;
  std::string violation;  // first violated clause when !ok
};

// Checks disjointness, coverage, arc-validity, lengths and prescribed
// memberships; reports the first violated clause.
FactorCheck verify_factor(const Tournament& t, const FactorSpec& spec,
                          const CycleFactor& factor);

struct FactorResult {
  Status status = Status::Unknown;
  CycleFactor factor;
};

// Exact backtracking over vertex-to-cycle assignments: prescribed vertices
// pin their cycles first, branching is on the lowest unassigned vertex,
// and a class stays open only while its assigned vertices share one
// strongly connected component of the class-plus-pool subtournament (a
// class that just filled must itself be strongly connected, i.e.
// Hamiltonian by Camion). Certified NoFactor for n <= 14; bounded search
// with Unknown beyond.
FactorResult find_factor(const Tournament& t, const FactorSpec& spec);

// A vertex subset of the given size inducing a transitive subtournament,
// or nullopt after an exhaustive scan. Exact for n <= 16; beyond that the
// scan refuses (TooLarge) rather than silently truncating.
std::optional<VertexList> max_transitive_subtournament(const Tournament& t,
                                                       int size);

}  // namespace tourneykit
