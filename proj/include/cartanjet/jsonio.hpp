#pragma once

#include "cartanjet/jet.hpp"
#include "cartanjet/projective.hpp"
#include "cartanjet/vecjet.hpp"

#include <json.hpp>

namespace cartanjet::io {

// JSON wire formats. Jets are
//   {"dim": n, "order": 2|3, "base": [..], "e1": [[..]],
//    "e2": [[[..]]], "e3": [[[[..]]]]}
// with rationals serialized as strings "p/q" (plain integers are accepted
// on input). Symmetric slots are emitted in full redundant form and
// validated for symmetry when read.

nlohmann::json rat_to_json(const Rat& r);
Rat rat_from_json(const nlohmann::json& j);

nlohmann::json jet_to_json(const Jet2& f);
nlohmann::json jet_to_json(const Jet3& f);

/// "order" field of a jet value (2 or 3); throws std::invalid_argument on
/// malformed input.
int jet_order(const nlohmann::json& j);
Jet2 jet2_from_json(const nlohmann::json& j);
Jet3 jet3_from_json(const nlohmann::json& j);

// vector-field jets: {"dim": n, "Xm1": [..], "X0": [[..]], "X1": [[[..]]]}
nlohmann::json vecjet_to_json(const VecJet& v);
VecJet vecjet_from_json(const nlohmann::json& j);

// projective frames: {"x": "p/q", "e": "p/q", "e2": "p/q"}
nlohmann::json frame_to_json(const proj::ProjFrame2& f);
proj::ProjFrame2 frame_from_json(const nlohmann::json& j);

} // namespace cartanjet::io
