#pragma once

#include <cstdint>
#include <random>

namespace ktsim {

using Rng = std::mt19937_64;

/// One step of splitmix64; advances `state`.
std::uint64_t splitmix64(std::uint64_t& state);

/// Derives an independent-looking 64-bit seed for sub-stream `stream` of `seed`.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Uniform integer in [0, bound). bound must be > 0. Portable across
/// standard libraries, unlike std::uniform_int_distribution.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// Uniform double in [0, 1) with 53 random bits.
double uniform_unit(Rng& rng);

}  // namespace ktsim
