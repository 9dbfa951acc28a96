#pragma once

// JSON renderings of reports. Points and orbit indices are 1-based. Group and
// automorphism orders that may not fit a double are decimal strings.

#include <json.hpp>

#include "switchscan/counting.hpp"
#include "switchscan/search.hpp"

namespace switchscan {

nlohmann::json points_json(Mask set);
nlohmann::json to_json(const ClassificationReport& r);
nlohmann::json to_json(const OrbitCountReport& r);
nlohmann::json to_json(const Type2Report& r);
nlohmann::json to_json(const ScanResult& r, int degree);
nlohmann::json to_json(const SwitchingType& t);
nlohmann::json group_json(const std::string& name, const PermGroup& g);

}  // namespace switchscan
