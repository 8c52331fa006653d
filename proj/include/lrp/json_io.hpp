#pragma once

#include <json.hpp>

#include "lrp/report.hpp"

namespace lrp {

nlohmann::json to_json(const InvariantReport& r);
nlohmann::json to_json(const ClassTable& t);
nlohmann::json to_json(const std::vector<CountRow>& rows, bool tmp);
nlohmann::json polygon_json(const LatticePolygon& p);
LatticePolygon polygon_from_json(const nlohmann::json& j);

std::string report_text(const InvariantReport& r);

}  // namespace lrp
