#include "zipfaudit/powerlaw.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zipfaudit/errors.hpp"

namespace zipfaudit {

namespace detail {

LinearFitResult linear_ols(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  if (n != y.size() || n < 2)
    throw InsufficientDataError("linear fit needs at least 2 points");

  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_x += x[i];
    mean_y += y[i];
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);

  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double dx = x[i] - mean_x;
    double dy = y[i] - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0)
    throw DomainError("degenerate fit: all x coordinates identical");

  LinearFitResult fit;
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;

  double ss_res = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double r = y[i] - (fit.intercept + fit.slope * x[i]);
    ss_res += r * r;
  }
  fit.r_squared = syy == 0.0 ? 1.0 : 1.0 - ss_res / syy;
  fit.r_squared = std::clamp(fit.r_squared, 0.0, 1.0);
  return fit;
}

}  // namespace detail

PowerLawFit fit_power_law(const RankedSeries& series) {
  const std::size_t n = series.size();
  if (n < 2)
    throw InsufficientDataError("power-law fit needs at least 2 points, got " +
                                std::to_string(n));

  // Sort a copy so the accumulation order — and therefore the result — is
  // independent of input point order.
  std::vector<RankedPoint> pts = series.points;
  std::sort(pts.begin(), pts.end(), [](const RankedPoint& a, const RankedPoint& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    if (a.value != b.value) return a.value < b.value;
    return a.label < b.label;
  });

  std::vector<double> lx(n), ly(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(pts[i].rank) || !(pts[i].rank > 0.0))
      throw DomainError("non-positive rank coordinate " +
                        std::to_string(pts[i].rank));
    if (!std::isfinite(pts[i].value) || !(pts[i].value > 0.0))
      throw DomainError("non-positive value at rank " +
                        std::to_string(static_cast<long long>(pts[i].rank)));
    lx[i] = std::log(pts[i].rank);
    ly[i] = std::log(pts[i].value);
  }

  detail::LinearFitResult lin = detail::linear_ols(lx, ly);
  PowerLawFit fit;
  fit.exponent = lin.slope;
  fit.prefactor = std::exp(lin.intercept);
  fit.r_squared = lin.r_squared;
  fit.n_points = n;
  return fit;
}

double eval_power_law(const PowerLawFit& fit, double x) {
  if (!(x > 0.0))
    throw DomainError("power law evaluated at non-positive x = " +
                      std::to_string(x));
  return fit.prefactor * std::pow(x, fit.exponent);
}

std::vector<LogResidual> residuals_log(const RankedSeries& series,
                                       const PowerLawFit& fit) {
  std::vector<LogResidual> residuals;
  residuals.reserve(series.size());
  const double log_a = std::log(fit.prefactor);
  for (const RankedPoint& p : series.points) {
    if (!(p.rank > 0.0) || !(p.value > 0.0))
      throw DomainError("non-positive point at rank " +
                        std::to_string(static_cast<long long>(p.rank)));
    double model_log = log_a + fit.exponent * std::log(p.rank);
    residuals.push_back({p.rank, std::log(p.value) - model_log});
  }
  return residuals;
}

}  // namespace zipfaudit
