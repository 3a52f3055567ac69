#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ktsim/hash/poly_hash.hpp"

namespace ktsim {

/// Joint distribution of (h(x_1), ..., h(x_k)) over every coefficient vector
/// of the family. counts is indexed by sum_j h(x_j) * L^j.
struct IndependenceTable {
  std::vector<std::uint64_t> counts;
  std::uint64_t functions = 0;  // p^c
  double expected = 0.0;        // p^c / L^k
  double max_deviation = 0.0;   // max |count - expected|
};

/// Exhaustive enumeration. Throws std::invalid_argument when p^c > 10^7, when
/// L does not divide p, when more than c points are given, or when points
/// repeat or fall outside [N).
IndependenceTable exact_independence_check(const HashFamilyParams& params,
                                           std::span<const std::uint64_t> points);

}  // namespace ktsim
