#pragma once
// JSON (de)serialization of extensions and walks.
//
// Extension: { "dim": int, "quotient": { "order": int, "table": [[int]] },
//              "phi": [d x d int matrix per q],
//              "cocycle": [[ [int; d] per (q1, q2) ]],
//              "name"?: string, "presentation"?: string }
// Walk: { "extension": <extension> | "trivial",
//         "generators": [ { "n": [int], "q": int } ],
//         "includes_identity": bool, "coin_dim": int,
//         "matrices": [ s x s arrays of [re, im] ],
//         "gen_labels"?: [string], "tolerance": float }

#include <string>

#include "json.hpp"

#include "cayleywalk/walk.hpp"

namespace cw {

nlohmann::json extension_to_json(const ExtensionData& ext);
ExtensionData extension_from_json(const nlohmann::json& j);

nlohmann::json walk_to_json(const QuantumWalk& w);
QuantumWalk walk_from_json(const nlohmann::json& j);

// Convenience string wrappers (throws std::runtime_error on parse errors).
std::string walk_to_string(const QuantumWalk& w);
QuantumWalk walk_from_string(const std::string& text);
std::string extension_to_string(const ExtensionData& ext);
ExtensionData extension_from_string(const std::string& text);

}  // namespace cw
