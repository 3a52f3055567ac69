#include "ktsim/hash/poly_hash.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "ktsim/hash/primes.hpp"

namespace ktsim {

unsigned bit_width_for(std::uint64_t x) {
  if (x <= 2) return 1;
  return static_cast<unsigned>(std::bit_width(x - 1));
}

HashFamilyParams HashFamilyParams::make(std::uint64_t domain_size, std::uint64_t range_size,
                                        unsigned independence) {
  return with_prime(domain_size, range_size, independence,
                    next_prime(std::max(domain_size, range_size)));
}

HashFamilyParams HashFamilyParams::with_prime(std::uint64_t domain_size, std::uint64_t range_size,
                                              unsigned independence, std::uint64_t prime) {
  if (domain_size == 0 || range_size == 0 || independence == 0)
    throw std::invalid_argument("hash params: N, L and c must be positive");
  if (!is_prime(prime) || prime < std::max(domain_size, range_size))
    throw std::invalid_argument(fmt::format("hash params: {} is not a prime >= max(N, L)", prime));
  return {domain_size, range_size, independence, prime};
}

unsigned HashFamilyParams::domain_bits() const { return bit_width_for(domain_size); }
unsigned HashFamilyParams::range_bits() const { return bit_width_for(range_size); }

std::uint64_t bits_required(unsigned a, unsigned b, unsigned c) {
  return static_cast<std::uint64_t>(c) * std::max(a, b);
}

std::uint64_t bits_required(const HashFamilyParams& params) {
  return bits_required(params.domain_bits(), params.range_bits(), params.independence);
}

unsigned default_independence(std::uint64_t n) {
  if (n <= 1) return 1;
  return static_cast<unsigned>(std::ceil(4.0 * std::log2(static_cast<double>(n)) - 1e-9));
}

PolynomialHash::PolynomialHash(HashFamilyParams params, std::vector<std::uint64_t> coefficients)
    : params_(params), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != params_.independence)
    throw std::invalid_argument("PolynomialHash: need exactly c coefficients");
  for (auto a : coeffs_)
    if (a >= params_.prime) throw std::invalid_argument("PolynomialHash: coefficient >= p");
}

PolynomialHash PolynomialHash::sample(const HashFamilyParams& params, const BitString& bits,
                                      std::size_t offset) {
  const std::uint64_t need = bits_required(params);
  if (offset > bits.size() || bits.size() - offset < need)
    throw std::invalid_argument(
        fmt::format("sample_function: {} bits needed, {} available", need, bits.size() - std::min(offset, bits.size())));
  const unsigned w = std::max(params.domain_bits(), params.range_bits());
  std::vector<std::uint64_t> coeffs(params.independence);
  for (unsigned i = 0; i < params.independence; ++i)
    coeffs[i] = bits.read(offset + static_cast<std::size_t>(i) * w, w) % params.prime;
  return PolynomialHash(params, std::move(coeffs));
}

std::uint64_t PolynomialHash::field_value(std::uint64_t x) const {
  const std::uint64_t p = params_.prime;
  x %= p;
  std::uint64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = mulmod(acc, x, p) + *it;
    if (acc >= p) acc -= p;
  }
  return acc;
}

std::uint64_t PolynomialHash::operator()(std::uint64_t x) const {
  if (x >= params_.domain_size)
    throw std::out_of_range(fmt::format("hash input {} outside domain [0, {})", x, params_.domain_size));
  return field_value(x) % params_.range_size;
}

std::string PolynomialHash::coefficients_csv() const { return fmt::format("{}", fmt::join(coeffs_, ",")); }

}  // namespace ktsim
