#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ktsim/hash/bits.hpp"

namespace ktsim {

/// Family of degree-(c-1) polynomials over GF(p), mapping [N] -> [L].
struct HashFamilyParams {
  std::uint64_t domain_size = 1;  // N
  std::uint64_t range_size = 1;   // L
  unsigned independence = 1;      // c
  std::uint64_t prime = 2;        // p

  /// Picks the smallest prime >= max(N, L). Throws std::invalid_argument on
  /// N, L, or c equal to zero.
  static HashFamilyParams make(std::uint64_t domain_size, std::uint64_t range_size,
                               unsigned independence);

  /// Explicit prime; must be prime and >= max(N, L).
  static HashFamilyParams with_prime(std::uint64_t domain_size, std::uint64_t range_size,
                                     unsigned independence, std::uint64_t prime);

  unsigned domain_bits() const;  // a = ceil(log2 N), at least 1
  unsigned range_bits() const;   // b = ceil(log2 L), at least 1
};

/// ceil(log2 x) with a floor of 1.
unsigned bit_width_for(std::uint64_t x);

std::uint64_t bits_required(unsigned a, unsigned b, unsigned c);
std::uint64_t bits_required(const HashFamilyParams& params);

/// c-wise independent default: ceil(4 log2 n), at least 1.
unsigned default_independence(std::uint64_t n);

class PolynomialHash {
 public:
  PolynomialHash() = default;

  /// coefficients[i] is the coefficient of x^i; each must be < p and there
  /// must be exactly c of them.
  PolynomialHash(HashFamilyParams params, std::vector<std::uint64_t> coefficients);

  /// Reads c chunks of max(a, b) bits from `bits` starting at `offset`
  /// (little-endian within each chunk), each reduced mod p. Throws
  /// std::invalid_argument if fewer than bits_required(params) bits remain.
  static PolynomialHash sample(const HashFamilyParams& params, const BitString& bits,
                               std::size_t offset = 0);

  /// ((sum_i a_i x^i) mod p) mod L. Throws std::out_of_range for x >= N.
  std::uint64_t operator()(std::uint64_t x) const;

  /// Same without the domain check and final reduction.
  std::uint64_t field_value(std::uint64_t x) const;

  const HashFamilyParams& params() const { return params_; }
  const std::vector<std::uint64_t>& coefficients() const { return coeffs_; }

  /// Decimal coefficients, comma separated.
  std::string coefficients_csv() const;

  friend bool operator==(const PolynomialHash& a, const PolynomialHash& b) {
    return a.coeffs_ == b.coeffs_ && a.params_.prime == b.params_.prime &&
           a.params_.range_size == b.params_.range_size &&
           a.params_.domain_size == b.params_.domain_size;
  }

 private:
  HashFamilyParams params_;
  std::vector<std::uint64_t> coeffs_;
};

}  // namespace ktsim
