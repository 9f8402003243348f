#include "zipfaudit/format.hpp"

#include <cmath>
#include <cstdio>

namespace zipfaudit {

std::string format_value(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x < 0 ? "-inf" : "inf";
  if (x == 0.0) return "0";

  char buf[48];
  double magnitude = std::fabs(x);
  if (x == std::trunc(x) && magnitude < 9007199254740992.0) {  // 2^53
    std::snprintf(buf, sizeof buf, "%.0f", x);
  } else if (magnitude < 1e-3 || magnitude >= 1e6) {
    std::snprintf(buf, sizeof buf, "%.5e", x);
  } else {
    std::snprintf(buf, sizeof buf, "%.6g", x);
  }
  return buf;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace zipfaudit
