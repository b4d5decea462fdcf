#include "wb/report.hpp"

#include <sstream>

namespace wb {

namespace {

std::string coeffs_str(const VecQ& c) {
  std::string s = "[";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += c[i].str();
  }
  return s + "]";
}

}  // namespace

nlohmann::json to_json(const ScreenVerdict& v) {
  nlohmann::json j;
  j["family"] = std::string(1, v.family);
  j["rank"] = v.rank;
  j["coeffs"] = coeffs_str(v.coeffs);
  j["canonical_coeffs"] = coeffs_str(v.canonical);
  nlohmann::json orbit = nlohmann::json::array();
  for (const auto& c : v.congruent) orbit.push_back(coeffs_str(c));
  j["congruent_coeffs"] = orbit;
  j["weight"] = v.weight;
  j["dim"] = v.dim.str();
  j["self_dual"] = v.self_dual;
  j["orthogonal"] = v.orthogonal;
  j["real_type"] = v.real_type;
  j["zero_weight"] = v.zero_weight;
  j["passed"] = v.passed;
  nlohmann::json w = nlohmann::json::object();
  for (const auto& [k, val] : v.witnesses) w[k] = val;
  j["witnesses"] = w;
  j["rejected_by"] = v.rejected_by ? nlohmann::json(*v.rejected_by) : nlohmann::json(nullptr);
  j["classification_label"] =
      v.classification_label ? nlohmann::json(*v.classification_label) : nlohmann::json(nullptr);
  j["survivor"] = v.survivor;
  return j;
}

nlohmann::json screen_report_json(const std::vector<ScreenVerdict>& verdicts,
                                  const std::string& config_desc) {
  nlohmann::json j;
  j["tool"] = "wbcli";
  j["report"] = "screen";
  j["config"] = config_desc;
  nlohmann::json list = nlohmann::json::array();
  for (const auto& v : verdicts) list.push_back(to_json(v));
  j["verdicts"] = list;
  return j;
}

std::string screen_report_csv(const std::vector<ScreenVerdict>& verdicts) {
  std::ostringstream os;
  os << "family,rank,coeffs,canonical_coeffs,weight,dim,self_dual,orthogonal,real_type,"
        "zero_weight,passed,rejected_by,classification_label,survivor\n";
  auto quote = [](std::string s) {
    for (auto& ch : s)
      if (ch == ',') ch = ';';
    return s;
  };
  for (const auto& v : verdicts) {
    std::string passed;
    for (size_t i = 0; i < v.passed.size(); ++i) passed += (i ? "+" : "") + v.passed[i];
    os << v.family << "," << v.rank << "," << quote(coeffs_str(v.coeffs)) << ","
       << quote(coeffs_str(v.canonical)) << "," << quote(v.weight) << "," << v.dim.str() << ","
       << v.self_dual << "," << v.orthogonal << "," << v.real_type << "," << v.zero_weight << ","
       << passed << "," << quote(v.rejected_by.value_or("")) << ","
       << quote(v.classification_label.value_or("")) << "," << v.survivor << "\n";
  }
  return os.str();
}

nlohmann::json to_json(const CurvatureReport& r) {
  nlohmann::json j;
  j["algebra"] = r.algebra_name;
  j["dim_g"] = r.dim_g;
  j["dim_v"] = r.dim_v;
  j["dim_K"] = r.dim_K;
  j["dim_Bh"] = r.dim_Bh;
  j["dim_g_underline"] = r.dim_g_underline;
  j["dim_g_h"] = r.dim_g_h;
  j["is_berger"] = r.is_berger;
  j["is_weak_berger"] = r.is_weak_berger;
  j["mode"] = r.mode;
  j["gamma"] = r.gamma_info ? nlohmann::json(*r.gamma_info) : nlohmann::json(nullptr);
  return j;
}

std::string curvature_report_csv(const std::vector<CurvatureReport>& reports) {
  std::ostringstream os;
  os << "algebra,dim_g,dim_v,dim_K,dim_Bh,dim_g_underline,dim_g_h,is_berger,is_weak_berger,mode\n";
  for (const auto& r : reports)
    os << r.algebra_name << "," << r.dim_g << "," << r.dim_v << "," << r.dim_K << "," << r.dim_Bh
       << "," << r.dim_g_underline << "," << r.dim_g_h << "," << r.is_berger << ","
       << r.is_weak_berger << "," << r.mode << "\n";
  return os.str();
}

bool validate_against_schema(const nlohmann::json& doc, const nlohmann::json& schema,
                             std::string* error) {
  auto fail = [&](const std::string& msg) {
    if (error) *error = msg;
    return false;
  };
  if (schema.contains("type")) {
    std::string t = schema["type"];
    if (t == "object" && !doc.is_object()) return fail("expected object");
    if (t == "array" && !doc.is_array()) return fail("expected array");
    if (t == "string" && !doc.is_string()) return fail("expected string");
    if (t == "integer" && !doc.is_number_integer()) return fail("expected integer");
    if (t == "boolean" && !doc.is_boolean()) return fail("expected boolean");
  }
  if (schema.contains("required"))
    for (const auto& key : schema["required"])
      if (!doc.contains(key.get<std::string>()))
        return fail("missing required property " + key.get<std::string>());
  if (schema.contains("properties") && doc.is_object()) {
    for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it) {
      if (!doc.contains(it.key())) continue;
      if (doc[it.key()].is_null()) continue;  // nullable fields
      if (!validate_against_schema(doc[it.key()], it.value(), error)) {
        if (error) *error = it.key() + ": " + *error;
        return false;
      }
    }
  }
  if (schema.contains("items") && doc.is_array())
    for (const auto& el : doc)
      if (!validate_against_schema(el, schema["items"], error)) return false;
  return true;
}

nlohmann::json screen_report_schema() {
  return nlohmann::json::parse(R"({
    "type": "object",
    "required": ["tool", "report", "config", "verdicts"],
    "properties": {
      "tool": {"type": "string"},
      "report": {"type": "string"},
      "config": {"type": "string"},
      "verdicts": {
        "type": "array",
        "items": {
          "type": "object",
          "required": ["family", "rank", "coeffs", "canonical_coeffs", "weight", "dim",
                       "self_dual", "orthogonal", "real_type", "zero_weight", "passed",
                       "witnesses", "survivor"],
          "properties": {
            "family": {"type": "string"},
            "rank": {"type": "integer"},
            "coeffs": {"type": "string"},
            "canonical_coeffs": {"type": "string"},
            "weight": {"type": "string"},
            "dim": {"type": "string"},
            "self_dual": {"type": "boolean"},
            "orthogonal": {"type": "boolean"},
            "real_type": {"type": "boolean"},
            "zero_weight": {"type": "boolean"},
            "passed": {"type": "array", "items": {"type": "string"}},
            "witnesses": {"type": "object"},
            "rejected_by": {"type": "string"},
            "classification_label": {"type": "string"},
            "survivor": {"type": "boolean"}
          }
        }
      }
    }
  })");
}

nlohmann::json curvature_report_schema() {
  return nlohmann::json::parse(R"({
    "type": "object",
    "required": ["algebra", "dim_g", "dim_v", "dim_K", "dim_Bh", "dim_g_underline",
                 "dim_g_h", "is_berger", "is_weak_berger", "mode"],
    "properties": {
      "algebra": {"type": "string"},
      "dim_g": {"type": "integer"},
      "dim_v": {"type": "integer"},
      "dim_K": {"type": "integer"},
      "dim_Bh": {"type": "integer"},
      "dim_g_underline": {"type": "integer"},
      "dim_g_h": {"type": "integer"},
      "is_berger": {"type": "boolean"},
      "is_weak_berger": {"type": "boolean"},
      "mode": {"type": "string"}
    }
  })");
}

}  // namespace wb
