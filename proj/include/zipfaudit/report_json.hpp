#pragma once

#include <string>

#include <json.hpp>

#include "zipfaudit/audit.hpp"

namespace zipfaudit {

inline constexpr int kReportSchemaVersion = 1;

/// Serializes a full report with a fixed key order:
/// {schema_version, categories, pooled, histogram, trend, scores,
///  fake_index_note}.
nlohmann::ordered_json report_to_json(const FullReport& report);

/// Two-space-indented JSON document, newline-terminated; byte-identical for
/// identical reports.
std::string report_to_string(const FullReport& report);

}  // namespace zipfaudit
