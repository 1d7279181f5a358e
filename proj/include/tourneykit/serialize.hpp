#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "tourneykit/digraph.hpp"

namespace tourneykit {

// Instance file: {"n": int, "arcs": [[u,v],...], "meta": {...}}.
// Arcs are written lexicographically sorted; meta is free-form.
struct Instance {
  Digraph graph;
  nlohmann::json meta;
};

nlohmann::json instance_to_json(const Digraph& d,
                                const nlohmann::json& meta = nlohmann::json::object());
Instance instance_from_json(const nlohmann::json& j);
Instance parse_instance(const std::string& text);   // JSON or compact, auto-detected
Instance load_instance(const std::string& path);

// Compact format: "n <hex>". The hex string encodes the C(n,2) pair bits in
// row-major order (see pair_index); bit 1 at pair (u,v) means u->v. Bits are
// packed four per hex digit, first pair in the most significant position of
// the first digit; the final digit is zero-padded. Tournaments only.
std::string to_compact(const Tournament& t);
Tournament tournament_from_compact(const std::string& text);

std::string to_dot(const Digraph& d);

// FNV-1a 64 over the canonical serialization (the meta-free JSON dump with
// sorted keys and sorted arcs); stable across platforms.
std::uint64_t digest(const Digraph& d);
std::string digest_hex(const Digraph& d);

}  // namespace tourneykit
