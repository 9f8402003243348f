#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "zipfaudit/dataset.hpp"
#include "zipfaudit/powerlaw.hpp"
#include "zipfaudit/pratio.hpp"

namespace zipfaudit {

/// Per-category fit matrix: one power-law fit and one max Zipf deviation per
/// metric, indexed by Metric.
struct CategoryReport {
  std::string category;
  std::size_t account_count = 0;
  std::array<PowerLawFit, 3> fits;
  std::array<double, 3> zipf_max_deviation = {0.0, 0.0, 0.0};

  const PowerLawFit& fit(Metric m) const {
    return fits[static_cast<std::size_t>(m)];
  }
  double max_deviation(Metric m) const {
    return zipf_max_deviation[static_cast<std::size_t>(m)];
  }
};

/// Fits all three metrics for one category tag. Needs at least two accounts
/// with the tag and positive metric values throughout.
CategoryReport category_report(const AccountSet& set, std::string_view category);

/// One account's engagement standing inside its category. fake_index is a
/// heuristic median-relative shortfall in [0, 1] — an ordering device, not a
/// measured fake-follower percentage — and is labeled as such wherever it is
/// emitted.
struct AccountScore {
  std::string account_name;
  std::string category;
  double p = 0.0;             // average retweets / total followers
  double p_percentile = 0.0;  // strict-less rank of p within category, in [0,1]
  double fake_index = 0.0;    // 1 - min(1, p / median p); 0 when p >= median
};

/// Scores every account carrying the tag, sorted by p descending (ties by
/// name). Percentile is strict-less count / (count - 1), 1 for a singleton.
std::vector<AccountScore> account_scores(const AccountSet& set,
                                         std::string_view category);

/// Everything the audit produces for one account set: per-category fit
/// matrices, the pooled fit over all accounts, the ratio histogram, the
/// log-trend line, and every account score.
struct FullReport {
  std::vector<CategoryReport> categories;  // sorted by category name
  CategoryReport pooled;                   // all accounts, category "overall"
  BinHistogram histogram;
  LogTrend trend;
  std::vector<AccountScore> scores;  // category asc, then p desc
};

FullReport full_report(const AccountSet& set);

/// Wording used everywhere fake_index appears in emitted output.
std::string_view fake_index_disclaimer();

}  // namespace zipfaudit
