#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace ktsim::exp {

struct PowerLawFit {
  double slope = 0.0;
  double intercept = 0.0;  // of ln y = intercept + slope ln x
  double r_squared = 0.0;
};

/// Ordinary least squares on (ln x, ln y). Needs >= 3 points and strictly
/// positive values; throws std::invalid_argument otherwise. R^2 is 1 when y
/// is constant.
PowerLawFit fit_power_law(std::span<const double> x, std::span<const double> y);

/// Reads columns `x_col`, `y_col` of a CSV with a header line.
PowerLawFit fit_power_law_csv(std::istream& csv, const std::string& x_col, const std::string& y_col);

}  // namespace ktsim::exp
