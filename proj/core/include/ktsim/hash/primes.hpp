#pragma once

#include <cstdint>

namespace ktsim {

/// Deterministic Miller-Rabin (witnesses 2..37, exact for all 64-bit inputs).
bool is_prime(std::uint64_t n);

/// Smallest prime >= n.
std::uint64_t next_prime(std::uint64_t n);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

}  // namespace ktsim
