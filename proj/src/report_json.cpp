#include "zipfaudit/report_json.hpp"

namespace zipfaudit {

namespace {

nlohmann::ordered_json fits_json(const CategoryReport& report) {
  nlohmann::ordered_json fits;
  for (Metric m : kAllMetrics) {
    const PowerLawFit& f = report.fit(m);
    fits[std::string(metric_name(m))] = {{"a", f.prefactor},
                                         {"k", f.exponent},
                                         {"r2", f.r_squared},
                                         {"n_points", f.n_points}};
  }
  return fits;
}

nlohmann::ordered_json deviation_json(const CategoryReport& report) {
  nlohmann::ordered_json dev;
  for (Metric m : kAllMetrics)
    dev[std::string(metric_name(m))] = report.max_deviation(m);
  return dev;
}

}  // namespace

nlohmann::ordered_json report_to_json(const FullReport& report) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = kReportSchemaVersion;

  doc["categories"] = nlohmann::ordered_json::array();
  for (const CategoryReport& cat : report.categories) {
    nlohmann::ordered_json row;
    row["category"] = cat.category;
    row["account_count"] = cat.account_count;
    row["fits"] = fits_json(cat);
    row["zipf_max_deviation"] = deviation_json(cat);
    doc["categories"].push_back(std::move(row));
  }

  nlohmann::ordered_json pooled;
  pooled["account_count"] = report.pooled.account_count;
  pooled["fits"] = fits_json(report.pooled);
  pooled["zipf_max_deviation"] = deviation_json(report.pooled);
  doc["pooled"] = std::move(pooled);

  doc["histogram"] = {{"edges", report.histogram.edges},
                      {"counts", report.histogram.counts},
                      {"underflow", report.histogram.underflow},
                      {"overflow", report.histogram.overflow},
                      {"undefined", report.histogram.undefined}};

  doc["trend"] = {{"slope", report.trend.slope},
                  {"intercept", report.trend.intercept},
                  {"r2", report.trend.r_squared}};

  doc["scores"] = nlohmann::ordered_json::array();
  for (const AccountScore& s : report.scores) {
    doc["scores"].push_back({{"name", s.account_name},
                             {"category", s.category},
                             {"p", s.p},
                             {"p_percentile", s.p_percentile},
                             {"fake_index", s.fake_index}});
  }

  doc["fake_index_note"] = std::string(fake_index_disclaimer());
  return doc;
}

std::string report_to_string(const FullReport& report) {
  return report_to_json(report).dump(2) + "\n";
}

}  // namespace zipfaudit
