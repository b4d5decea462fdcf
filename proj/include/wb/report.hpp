/*
  report.hpp — machine-readable serialization of screening verdicts and
  curvature reports (JSON and CSV), plus a structural validator for the
  shipped JSON schemas.
*/
#ifndef WB_REPORT_HPP
#define WB_REPORT_HPP

#include "wb/criteria.hpp"
#include "wb/curvature.hpp"

#include <string>
#include <vector>

// the vendored single-header library defines nlohmann::json
#include <json.hpp>

namespace wb {

nlohmann::json to_json(const ScreenVerdict& v);
nlohmann::json screen_report_json(const std::vector<ScreenVerdict>& verdicts,
                                  const std::string& config_desc);
std::string screen_report_csv(const std::vector<ScreenVerdict>& verdicts);

nlohmann::json to_json(const CurvatureReport& r);
std::string curvature_report_csv(const std::vector<CurvatureReport>& reports);

/// Structural schema check: every "required" property exists and has the
/// declared primitive "type" ("string", "integer", "boolean", "array",
/// "object"); recurses into "properties" and array "items".
bool validate_against_schema(const nlohmann::json& doc, const nlohmann::json& schema,
                             std::string* error = nullptr);

/// The schemas shipped with the tool.
nlohmann::json screen_report_schema();
nlohmann::json curvature_report_schema();

}  // namespace wb

#endif
