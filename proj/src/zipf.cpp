#include "zipfaudit/zipf.hpp"

#include <cmath>
#include <string>

#include "zipfaudit/errors.hpp"

namespace zipfaudit {

ZipfModel::ZipfModel(double rank1_value, std::int64_t rank_count)
    : rank1_value(rank1_value), rank_count(rank_count) {
  if (!(rank1_value > 0.0) || !std::isfinite(rank1_value))
    throw ParameterError("rank-1 value must be positive and finite");
  if (rank_count < 1) throw ParameterError("rank count must be at least 1");
}

double zipf_expected(const ZipfModel& model, std::int64_t rank) {
  if (rank < 1 || rank > model.rank_count)
    throw RangeError("rank " + std::to_string(rank) + " outside [1, " +
                     std::to_string(model.rank_count) + "]");
  return model.rank1_value / static_cast<double>(rank);
}

RankedSeries zipf_series(const ZipfModel& model) {
  RankedSeries series;
  series.points.reserve(static_cast<std::size_t>(model.rank_count));
  for (std::int64_t n = 1; n <= model.rank_count; ++n)
    series.points.push_back(
        {static_cast<double>(n), model.rank1_value / static_cast<double>(n), {}});
  return series;
}

DeviationReport zipf_deviation(const RankedSeries& series) {
  if (series.empty())
    throw InsufficientDataError("cannot measure deviation of an empty series");
  for (const RankedPoint& p : series.points)
    if (!(p.value > 0.0))
      throw DomainError("non-positive value at rank " +
                        std::to_string(static_cast<long long>(p.rank)));

  const double rank1_value = series.front().value;
  DeviationReport report;
  report.per_rank.reserve(series.size());
  for (const RankedPoint& p : series.points) {
    double expected = rank1_value / p.rank;
    double rel = (p.value - expected) / expected;
    report.per_rank.push_back({p.rank, p.value, expected, rel});
    report.max_abs_relative_error =
        std::max(report.max_abs_relative_error, std::fabs(rel));
  }
  return report;
}

}  // namespace zipfaudit
