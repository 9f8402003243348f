#pragma once

#include <cstdint>
#include <vector>

#include "zipfaudit/series.hpp"

namespace zipfaudit {

/// Ideal rank-value model: the value at rank n is rank1_value / n.
struct ZipfModel {
  double rank1_value = 1.0;   // value at rank 1
  std::int64_t rank_count = 1;  // number of ranks

  ZipfModel(double rank1_value, std::int64_t rank_count);
};

/// Model value at a rank; rank must lie in [1, rank_count].
double zipf_expected(const ZipfModel& model, std::int64_t rank);

/// The full model series: strictly decreasing values rank1_value / n
/// for n = 1..rank_count.
RankedSeries zipf_series(const ZipfModel& model);

struct DeviationEntry {
  double rank = 0.0;
  double observed = 0.0;
  double expected = 0.0;
  double relative_error = 0.0;  // (observed - expected) / expected
};

/// Per-rank conformance of a series to the ideal model anchored at its own
/// rank-1 value.
struct DeviationReport {
  std::vector<DeviationEntry> per_rank;
  double max_abs_relative_error = 0.0;
};

/// Measures how closely a ranked series follows the model with
/// rank1_value = series value at rank 1. All values must be positive.
DeviationReport zipf_deviation(const RankedSeries& series);

}  // namespace zipfaudit
