#ifndef DKBV_REPORT_HPP
#define DKBV_REPORT_HPP

#include "dkbv/tasks.hpp"

namespace dkbv {

extern const char* const dkbv_version;

// FNV-1a 64-bit hex digest of the input document (report provenance only).
std::string input_digest(const std::string& text);

struct ReportDocument {
  std::string tool_version;  // defaults to dkbv_version
  std::string input;         // file name or fixture name
  std::string digest;        // input_digest of the source text
  std::vector<TaskVerdict> verdicts;
};

bool report_all_hold(const ReportDocument& r);

std::string report_json(const ReportDocument& r);  // pretty-printed, schema-stable
std::string report_text(const ReportDocument& r);  // human-readable summary

// The shipped JSON schema (also installed as report.schema.json) and a
// validator for the subset of JSON Schema it uses (type, required,
// properties, items, enum, additionalProperties). Empty result = valid.
std::string report_schema();
std::vector<std::string> validate_report(const std::string& json_text);

}  // namespace dkbv

#endif
