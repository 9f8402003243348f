#pragma once

#include <string>

namespace zipfaudit {

/// Deterministic value formatting for every columnar CLI output: exact
/// integers print in full; other values print with 6 significant digits,
/// lowercase scientific outside [1e-3, 1e6).
std::string format_value(double x);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_escape(const std::string& field);

}  // namespace zipfaudit
