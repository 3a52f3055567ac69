#include "ktsim/exp/fit.hpp"

#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ktsim::exp {

PowerLawFit fit_power_law(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("fit_power_law: x and y differ in length");
  if (x.size() < 3) throw std::invalid_argument("fit_power_law: need at least 3 points");
  const double k = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw std::invalid_argument("fit_power_law: values must be positive");
    lx.push_back(std::log(x[i]));
    ly.push_back(std::log(y[i]));
    sx += lx.back();
    sy += ly.back();
  }
  const double mx = sx / k, my = sy / k;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_power_law: x is constant");
  PowerLawFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double sse = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double r = ly[i] - (fit.intercept + fit.slope * lx[i]);
    sse += r * r;
  }
  fit.r_squared = syy == 0.0 ? 1.0 : 1.0 - sse / syy;
  return fit;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) {
    if (!cell.empty() && cell.back() == '\r') cell.pop_back();
    out.push_back(cell);
  }
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

PowerLawFit fit_power_law_csv(std::istream& csv, const std::string& x_col, const std::string& y_col) {
  std::string line;
  if (!std::getline(csv, line)) throw std::invalid_argument("fit: empty CSV");
  const auto header = split_csv_line(line);
  auto column = [&](const std::string& name) {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return i;
    throw std::invalid_argument("fit: no column '" + name + "'");
  };
  const std::size_t xi = column(x_col), yi = column(y_col);
  std::vector<double> x, y;
  while (std::getline(csv, line)) {
    if (line.empty()) continue;
    const auto cells = split_csv_line(line);
    if (cells.size() <= std::max(xi, yi)) throw std::invalid_argument("fit: short CSV row");
    try {
      x.push_back(std::stod(cells[xi]));
      y.push_back(std::stod(cells[yi]));
    } catch (const std::logic_error&) {
      throw std::invalid_argument("fit: non-numeric cell in row '" + line + "'");
    }
  }
  return fit_power_law(x, y);
}

}  // namespace ktsim::exp
