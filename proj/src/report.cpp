#include "dkbv/report.hpp"

#include <sstream>

#include "json.hpp"

namespace dkbv {

using nlohmann::json;

const char* const dkbv_version = "0.1.0";

std::string input_digest(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  std::ostringstream o;
  o << std::hex << h;
  return o.str();
}

bool report_all_hold(const ReportDocument& r) {
  for (const auto& v : r.verdicts)
    if (!v.holds) return false;
  return true;
}

namespace {

json witness_json(const TaskWitness& w) {
  json values = json::object();
  for (const auto& [f, v] : w.values) values[f] = v.to_text();
  return {{"table", w.table},       {"attribute", w.attribute}, {"rule1", w.rule1},
          {"rule2", w.rule2},       {"values", values},         {"description", w.description}};
}

json verdict_json(const TaskVerdict& v) {
  json ws = json::array();
  for (const auto& w : v.witnesses) ws.push_back(witness_json(w));
  return {{"task", task_text(v.task)},
          {"holds", v.holds},
          {"witnesses", ws},
          {"stats",
           {{"reasoner_calls", v.stats.reasoner_calls}, {"elapsed_ms", v.stats.elapsed_ms}}}};
}

}  // namespace

std::string report_json(const ReportDocument& r) {
  json doc;
  doc["tool_version"] = r.tool_version.empty() ? dkbv_version : r.tool_version;
  doc["input"] = r.input;
  doc["digest"] = r.digest;
  doc["all_hold"] = report_all_hold(r);
  doc["verdicts"] = json::array();
  for (const auto& v : r.verdicts) doc["verdicts"].push_back(verdict_json(v));
  return doc.dump(2) + "\n";
}

std::string report_text(const ReportDocument& r) {
  std::ostringstream o;
  o << "dkbv " << (r.tool_version.empty() ? dkbv_version : r.tool_version) << "  input "
    << r.input << "  digest " << r.digest << "\n";
  for (const auto& v : r.verdicts) {
    o << task_text(v.task) << ": " << (v.holds ? "holds" : "FAILS") << "  ("
      << v.stats.reasoner_calls << " reasoner calls, " << v.stats.elapsed_ms << " ms)\n";
    for (const auto& w : v.witnesses) {
      o << "  " << w.description;
      if (!w.values.empty()) {
        o << " [";
        bool first = true;
        for (const auto& [f, val] : w.values) {
          o << (first ? "" : ", ") << f << "=" << val.to_text();
          first = false;
        }
        o << "]";
      }
      o << "\n";
    }
  }
  o << (report_all_hold(r) ? "all verdicts hold\n" : "some verdicts fail\n");
  return o.str();
}

std::string report_schema() {
  return R"({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "title": "dkbv verification report",
  "type": "object",
  "required": ["tool_version", "input", "digest", "all_hold", "verdicts"],
  "additionalProperties": false,
  "properties": {
    "tool_version": { "type": "string" },
    "input": { "type": "string" },
    "digest": { "type": "string" },
    "all_hold": { "type": "boolean" },
    "verdicts": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["task", "holds", "witnesses", "stats"],
        "additionalProperties": false,
        "properties": {
          "task": {
            "type": "string",
            "enum": ["unique-hit", "any-hit", "priority-hit", "io",
                     "coverage", "completeness", "determinability"]
          },
          "holds": { "type": "boolean" },
          "witnesses": {
            "type": "array",
            "items": {
              "type": "object",
              "required": ["table", "attribute", "rule1", "rule2", "values", "description"],
              "additionalProperties": false,
              "properties": {
                "table": { "type": "string" },
                "attribute": { "type": "string" },
                "rule1": { "type": "integer" },
                "rule2": { "type": "integer" },
                "values": { "type": "object", "additionalProperties": { "type": "string" } },
                "description": { "type": "string" }
              }
            }
          },
          "stats": {
            "type": "object",
            "required": ["reasoner_calls", "elapsed_ms"],
            "additionalProperties": false,
            "properties": {
              "reasoner_calls": { "type": "integer" },
              "elapsed_ms": { "type": "number" }
            }
          }
        }
      }
    }
  }
}
)";
}

namespace {

// Just the JSON Schema subset the shipped schema uses.
void schema_check(const json& schema, const json& v, const std::string& path,
                  std::vector<std::string>& errs) {
  if (auto it = schema.find("type"); it != schema.end()) {
    const std::string& t = it->get_ref<const std::string&>();
    bool ok = (t == "object" && v.is_object()) || (t == "array" && v.is_array()) ||
              (t == "string" && v.is_string()) || (t == "boolean" && v.is_boolean()) ||
              (t == "integer" && v.is_number_integer()) || (t == "number" && v.is_number());
    if (!ok) {
      errs.push_back(path + ": expected " + t);
      return;
    }
  }
  if (auto it = schema.find("enum"); it != schema.end()) {
    bool found = false;
    for (const auto& e : *it) found = found || e == v;
    if (!found) errs.push_back(path + ": value not in enum");
  }
  if (auto it = schema.find("required"); it != schema.end())
    for (const auto& r : *it)
      if (!v.contains(r.get_ref<const std::string&>()))
        errs.push_back(path + ": missing required field " + r.get<std::string>());
  if (v.is_object()) {
    const json* props = schema.contains("properties") ? &schema["properties"] : nullptr;
    for (const auto& [key, val] : v.items()) {
      if (props && props->contains(key)) {
        schema_check((*props)[key], val, path + "." + key, errs);
      } else if (auto ap = schema.find("additionalProperties"); ap != schema.end()) {
        if (ap->is_boolean() && !ap->get<bool>())
          errs.push_back(path + ": unexpected field " + key);
        else if (ap->is_object())
          schema_check(*ap, val, path + "." + key, errs);
      }
    }
  }
  if (v.is_array() && schema.contains("items")) {
    std::size_t i = 0;
    for (const auto& e : v) schema_check(schema["items"], e, path + "[" + std::to_string(i++) + "]", errs);
  }
}

}  // namespace

std::vector<std::string> validate_report(const std::string& json_text) {
  std::vector<std::string> errs;
  json doc = json::parse(json_text, nullptr, false);
  if (doc.is_discarded()) {
    errs.push_back("$: not valid JSON");
    return errs;
  }
  schema_check(json::parse(report_schema()), doc, "$", errs);
  return errs;
}

}  // namespace dkbv
