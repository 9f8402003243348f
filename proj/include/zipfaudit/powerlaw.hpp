#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "zipfaudit/series.hpp"

namespace zipfaudit {

/// y = prefactor * x^exponent, fitted by ordinary least squares on
/// (ln x, ln y). r_squared is the goodness of fit in log space.
struct PowerLawFit {
  double prefactor = 0.0;
  double exponent = 0.0;
  double r_squared = 0.0;
  std::size_t n_points = 0;
};

/// Least-squares trend line through the series in log-log space:
/// exponent = slope, prefactor = exp(intercept). Requires at least two
/// points, all ranks and values positive. Point order does not matter;
/// the result is bit-identical for any permutation of the same points.
PowerLawFit fit_power_law(const RankedSeries& series);

/// Evaluates the fitted model at x > 0.
double eval_power_law(const PowerLawFit& fit, double x);

struct LogResidual {
  double rank = 0.0;
  double residual = 0.0;  // ln(observed) - ln(model)
};

/// Log-space residuals of a series against a fit. For a series fitted by
/// fit_power_law itself the residuals sum to ~0.
std::vector<LogResidual> residuals_log(const RankedSeries& series,
                                       const PowerLawFit& fit);

namespace detail {

/// Plain simple linear regression of y against x (two-pass, centered sums).
/// Shared by the log-log fitter and the log-trend fit.
struct LinearFitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

LinearFitResult linear_ols(std::span<const double> x, std::span<const double> y);

}  // namespace detail

}  // namespace zipfaudit
