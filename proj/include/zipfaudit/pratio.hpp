#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace zipfaudit {

inline constexpr double kRatioNormalization = 1e6;

/// Engagement ratio of one account: ratio = average retweets / total
/// followers, normalized = ratio * 1e6, log_normalized = log10(normalized)
/// when normalized > 0. bin_index refers to the standard histogram and is
/// absent for undefined or out-of-range values.
struct PRatioRecord {
  std::string account_name;
  double ratio = 0.0;
  double normalized = 0.0;
  std::optional<double> log_normalized;
  std::optional<std::size_t> bin_index;
};

/// Computes the engagement ratio. total_followers must be positive; the
/// error names the account when a name is given.
PRatioRecord p_ratio(double average_retweets, double total_followers,
                     std::string account_name = {});

/// Standard histogram edges: [0.5, 1.0, 1.2, 1.4, ..., 4.0] — a 0.5-wide
/// first interval, then 0.2-wide intervals through 4.0.
const std::vector<double>& standard_bin_edges();

/// Histogram of log-normalized ratios over the standard edges. Bins are
/// half-open [lo, hi) except the final bin, which is closed. Values below
/// 0.5 / above 4.0 land in underflow / overflow; records with undefined
/// log value are counted in `undefined`.
struct BinHistogram {
  std::vector<double> edges;
  std::vector<std::size_t> counts;
  std::size_t underflow = 0;
  std::size_t overflow = 0;
  std::size_t undefined = 0;

  std::size_t total() const;
};

/// Bins every record and stamps its bin_index. Conservation holds:
/// sum(counts) + underflow + overflow + undefined == records.size().
BinHistogram bin_log(std::span<PRatioRecord> records);

/// Linear trend of log-normalized ratio against rank (records sorted by
/// normalized ratio descending before fitting).
struct LogTrend {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// OLS of log_normalized vs rank 1..m over the records with a defined log
/// value; requires at least two such records. Input order does not matter.
LogTrend log_trend_fit(std::span<const PRatioRecord> records);

}  // namespace zipfaudit
