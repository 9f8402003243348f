#include "zipfaudit/pratio.hpp"

#include <algorithm>
#include <cmath>

#include "zipfaudit/errors.hpp"
#include "zipfaudit/powerlaw.hpp"

namespace zipfaudit {

PRatioRecord p_ratio(double average_retweets, double total_followers,
                     std::string account_name) {
  std::string who = account_name.empty() ? std::string("account")
                                         : "account \"" + account_name + "\"";
  if (!std::isfinite(average_retweets) || average_retweets < 0.0)
    throw DomainError(who + " has invalid average retweets");
  if (!std::isfinite(total_followers) || total_followers < 0.0)
    throw DomainError(who + " has invalid total followers");
  if (total_followers == 0.0)
    throw DomainError("division by zero followers for " + who);

  PRatioRecord rec;
  rec.account_name = std::move(account_name);
  rec.ratio = average_retweets / total_followers;
  rec.normalized = rec.ratio * kRatioNormalization;
  if (rec.normalized > 0.0) rec.log_normalized = std::log10(rec.normalized);
  return rec;
}

const std::vector<double>& standard_bin_edges() {
  // [0.5, 1.0) then 0.2-wide intervals through 4.0; edges built from
  // integer tenths so they are the exact doubles 1.2, 1.4, ...
  static const std::vector<double> edges = [] {
    std::vector<double> e;
    e.push_back(0.5);
    for (int tenths = 10; tenths <= 40; tenths += 2)
      e.push_back(static_cast<double>(tenths) / 10.0);
    return e;
  }();
  return edges;
}

std::size_t BinHistogram::total() const {
  std::size_t sum = underflow + overflow + undefined;
  for (std::size_t c : counts) sum += c;
  return sum;
}

BinHistogram bin_log(std::span<PRatioRecord> records) {
  if (records.empty())
    throw InsufficientDataError("cannot bin an empty record list");

  const std::vector<double>& edges = standard_bin_edges();
  BinHistogram hist;
  hist.edges = edges;
  hist.counts.assign(edges.size() - 1, 0);

  for (PRatioRecord& rec : records) {
    rec.bin_index.reset();
    if (!rec.log_normalized) {
      ++hist.undefined;
      continue;
    }
    double v = *rec.log_normalized;
    if (v < edges.front()) {
      ++hist.underflow;
    } else if (v > edges.back()) {
      ++hist.overflow;
    } else {
      // half-open [lo, hi); v == final edge falls into the closed last bin
      std::size_t idx = hist.counts.size() - 1;
      for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        if (v < edges[i + 1]) {
          idx = i;
          break;
        }
      }
      ++hist.counts[idx];
      rec.bin_index = idx;
    }
  }
  return hist;
}

LogTrend log_trend_fit(std::span<const PRatioRecord> records) {
  struct Entry {
    double normalized;
    double log_normalized;
    const std::string* name;
  };
  std::vector<Entry> defined;
  for (const PRatioRecord& rec : records)
    if (rec.log_normalized)
      defined.push_back({rec.normalized, *rec.log_normalized, &rec.account_name});
  if (defined.size() < 2)
    throw InsufficientDataError(
        "log trend needs at least 2 records with a defined log value, got " +
        std::to_string(defined.size()));

  std::sort(defined.begin(), defined.end(), [](const Entry& a, const Entry& b) {
    if (a.normalized != b.normalized) return a.normalized > b.normalized;
    return *a.name < *b.name;
  });

  std::vector<double> x(defined.size()), y(defined.size());
  for (std::size_t i = 0; i < defined.size(); ++i) {
    x[i] = static_cast<double>(i + 1);
    y[i] = defined[i].log_normalized;
  }
  detail::LinearFitResult lin = detail::linear_ols(x, y);
  return {lin.slope, lin.intercept, lin.r_squared};
}

}  // namespace zipfaudit
