#include "ktsim/hash/independence.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace ktsim {

IndependenceTable exact_independence_check(const HashFamilyParams& params,
                                           std::span<const std::uint64_t> points) {
  const std::uint64_t p = params.prime;
  const std::uint64_t L = params.range_size;
  const unsigned c = params.independence;
  if (points.size() > c) throw std::invalid_argument("independence check: more than c points");
  if (std::set<std::uint64_t>(points.begin(), points.end()).size() != points.size())
    throw std::invalid_argument("independence check: points must be distinct");
  for (auto x : points)
    if (x >= params.domain_size) throw std::invalid_argument("independence check: point outside domain");
  if (p % L != 0) throw std::invalid_argument("independence check: L must divide p");

  std::uint64_t total = 1;
  for (unsigned i = 0; i < c; ++i) {
    total *= p;
    if (total > 10'000'000) throw std::invalid_argument("independence check: p^c exceeds 10^7");
  }
  std::uint64_t cells = 1;
  for (std::size_t j = 0; j < points.size(); ++j) cells *= L;

  IndependenceTable table;
  table.counts.assign(cells, 0);
  table.functions = total;
  table.expected = static_cast<double>(total) / static_cast<double>(cells);

  std::vector<std::uint64_t> coeffs(c, 0);
  for (std::uint64_t f = 0; f < total; ++f) {
    PolynomialHash h(params, coeffs);
    std::uint64_t cell = 0, scale = 1;
    for (auto x : points) {
      cell += h(x) * scale;
      scale *= L;
    }
    ++table.counts[cell];
    // odometer increment over [0, p)^c
    for (unsigned i = 0; i < c; ++i) {
      if (++coeffs[i] < p) break;
      coeffs[i] = 0;
    }
  }
  for (auto n : table.counts)
    table.max_deviation = std::max(table.max_deviation, std::abs(static_cast<double>(n) - table.expected));
  return table;
}

}  // namespace ktsim
