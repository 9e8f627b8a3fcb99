#pragma once

// JSON codecs for the core value types. Rationals serialize as
// {"num": "...", "den": "..."} string pairs so no exactness is lost;
// everything else is plain objects with a "type" tag. Decoders validate and
// throw std::invalid_argument on malformed input.

#include "nads/hyperspace.hpp"
#include "nads/measures.hpp"

namespace nads {

nlohmann::json rat_to_json(const Rat& q);
Rat rat_from_json(const nlohmann::json& j);

nlohmann::json point_to_json(const Point& x);
Point point_from_json(const nlohmann::json& j);

nlohmann::json open_to_json(const BasicOpen& u);
BasicOpen open_from_json(const nlohmann::json& j);
nlohmann::json open_set_to_json(const OpenSet& u);
OpenSet open_set_from_json(const nlohmann::json& j);

nlohmann::json measure_to_json(const AtomicMeasure& mu);
AtomicMeasure measure_from_json(const nlohmann::json& j);

nlohmann::json hitting_to_json(const HittingSet& hs);
HittingSet hitting_from_json(const nlohmann::json& j);

nlohmann::json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const nlohmann::json& j);

}  // namespace nads
