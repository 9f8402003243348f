#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zipfaudit/series.hpp"

namespace zipfaudit {

/// The three account metrics, ranked independently of each other.
enum class Metric { kTotalTweets = 0, kAverageRetweets = 1, kTotalFollowers = 2 };

inline constexpr std::array<Metric, 3> kAllMetrics = {
    Metric::kTotalTweets, Metric::kAverageRetweets, Metric::kTotalFollowers};

std::string_view metric_name(Metric metric);
std::optional<Metric> metric_from_name(std::string_view name);

/// One account's label, category tag and metric counts. Counts may be
/// fractional after suffix expansion.
struct AccountRecord {
  std::string name;
  std::string category;
  double total_tweets = 0.0;
  double average_retweets = 0.0;
  double total_followers = 0.0;

  double metric(Metric m) const;
};

/// Immutable, validated collection of account records: names unique and
/// non-empty, counts finite and non-negative. May be empty.
class AccountSet {
 public:
  AccountSet() = default;
  AccountSet(std::vector<AccountRecord> records, std::string source);

  const std::vector<AccountRecord>& records() const { return records_; }
  const std::string& source() const { return source_; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }

 private:
  std::vector<AccountRecord> records_;
  std::string source_ = "inline";
};

/// Parses a suffixed-decimal count ("84.80M", "51.70K", "0.5", "12").
/// Suffixes K/M/B (case-insensitive) scale by 1e3/1e6/1e9. Expansion is done
/// in integer arithmetic whenever the result is integral, so table cells like
/// "84.80M" come back as exactly 84800000.
double parse_count(std::string_view text);

/// Formats a count back into suffixed-decimal form; inverse of parse_count
/// for the given suffix ('K', 'M', 'B', or '\0' for none) and decimal count.
std::string format_suffixed(double value, char suffix, int decimals);

enum class InputFormat { kCsv, kJson };

/// Loads an account set from CSV (header required:
/// name,category,total_tweets,average_retweets,total_followers) or a JSON
/// array of objects with the same keys; counts may be suffixed strings or
/// plain numbers. Row order is preserved.
AccountSet load_accounts(std::istream& in, InputFormat format,
                         std::string source_name = "inline");

/// Ranks one metric over the set: values sorted descending, ties broken by
/// ascending name, ranks 1..n with no gaps. Point labels carry account names.
RankedSeries rank_metric(const AccountSet& set, Metric metric);

}  // namespace zipfaudit
