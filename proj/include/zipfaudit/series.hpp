#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace zipfaudit {

/// One point of a ranked series. `rank` is the x coordinate: a 1-based rank
/// for metric rankings, or a rank-like positive value (e.g. a node degree)
/// for distribution data fed to the fitter.
struct RankedPoint {
  double rank = 0.0;
  double value = 0.0;
  std::string label;  // account name or item tag; may be empty
};

/// Values sorted descending with their rank coordinates.
struct RankedSeries {
  std::vector<RankedPoint> points;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
  const RankedPoint& front() const { return points.front(); }
};

}  // namespace zipfaudit
