#include "zipfaudit/audit.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "zipfaudit/errors.hpp"
#include "zipfaudit/zipf.hpp"

namespace zipfaudit {

namespace {

std::vector<AccountRecord> records_with_category(const AccountSet& set,
                                                 std::string_view category) {
  std::vector<AccountRecord> subset;
  for (const AccountRecord& r : set.records())
    if (r.category == category) subset.push_back(r);
  return subset;
}

CategoryReport report_over(std::vector<AccountRecord> records,
                           std::string label) {
  if (records.size() < 2)
    throw InsufficientDataError("category \"" + label + "\" has " +
                                std::to_string(records.size()) +
                                " account(s); need at least 2 to fit");
  for (const AccountRecord& r : records)
    for (Metric m : kAllMetrics)
      if (!(r.metric(m) > 0.0))
        throw DomainError("account \"" + r.name + "\" has non-positive " +
                          std::string(metric_name(m)));

  AccountSet subset(std::move(records), "category:" + label);
  CategoryReport report;
  report.category = std::move(label);
  report.account_count = subset.size();
  for (Metric m : kAllMetrics) {
    RankedSeries series = rank_metric(subset, m);
    report.fits[static_cast<std::size_t>(m)] = fit_power_law(series);
    report.zipf_max_deviation[static_cast<std::size_t>(m)] =
        zipf_deviation(series).max_abs_relative_error;
  }
  return report;
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  std::size_t n = values.size();
  return n % 2 == 1 ? values[n / 2]
                    : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace

CategoryReport category_report(const AccountSet& set, std::string_view category) {
  return report_over(records_with_category(set, category), std::string(category));
}

std::vector<AccountScore> account_scores(const AccountSet& set,
                                         std::string_view category) {
  std::vector<AccountRecord> subset = records_with_category(set, category);
  if (subset.empty())
    throw InsufficientDataError("category \"" + std::string(category) +
                                "\" has no accounts");

  std::vector<AccountScore> scores;
  scores.reserve(subset.size());
  std::vector<double> ratios;
  ratios.reserve(subset.size());
  for (const AccountRecord& r : subset) {
    PRatioRecord pr = p_ratio(r.average_retweets, r.total_followers, r.name);
    scores.push_back({r.name, r.category, pr.ratio, 0.0, 0.0});
    ratios.push_back(pr.ratio);
  }

  const double med = median(ratios);
  const std::size_t n = scores.size();
  for (AccountScore& s : scores) {
    std::size_t smaller = 0;
    for (double p : ratios)
      if (p < s.p) ++smaller;
    s.p_percentile =
        n == 1 ? 1.0 : static_cast<double>(smaller) / static_cast<double>(n - 1);
    s.fake_index = s.p >= med ? 0.0 : 1.0 - s.p / med;
  }

  std::sort(scores.begin(), scores.end(),
            [](const AccountScore& a, const AccountScore& b) {
              if (a.p != b.p) return a.p > b.p;
              return a.account_name < b.account_name;
            });
  return scores;
}

FullReport full_report(const AccountSet& set) {
  if (set.empty()) throw InsufficientDataError("empty account set");

  FullReport report;

  std::set<std::string> categories;
  for (const AccountRecord& r : set.records()) categories.insert(r.category);
  for (const std::string& c : categories)
    report.categories.push_back(category_report(set, c));

  report.pooled = report_over(set.records(), "overall");

  std::vector<PRatioRecord> ratios;
  ratios.reserve(set.size());
  for (const AccountRecord& r : set.records())
    ratios.push_back(p_ratio(r.average_retweets, r.total_followers, r.name));
  report.histogram = bin_log(ratios);
  report.trend = log_trend_fit(ratios);

  for (const std::string& c : categories) {
    std::vector<AccountScore> scores = account_scores(set, c);
    report.scores.insert(report.scores.end(), scores.begin(), scores.end());
  }
  return report;
}

std::string_view fake_index_disclaimer() {
  return "fake_index is a heuristic median-relative shortfall in [0,1] "
         "(an ordering device), not a measured fake-follower percentage";
}

}  // namespace zipfaudit
