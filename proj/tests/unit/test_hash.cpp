#include <gtest/gtest.h>

#include <cmath>

#include "ktsim/hash/bits.hpp"
#include "ktsim/hash/independence.hpp"
#include "ktsim/hash/poly_hash.hpp"
#include "ktsim/hash/primes.hpp"
#include "ktsim/random.hpp"

using namespace ktsim;

TEST(Primes, SmallAndLarge) {
  const std::uint64_t small[] = {2, 3, 5, 7, 11, 13, 1048583};
  for (auto p : small) EXPECT_TRUE(is_prime(p)) << p;
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(561));      // Carmichael
  EXPECT_FALSE(is_prime(3215031751ull));  // strong pseudoprime to 2,3,5,7
  EXPECT_TRUE(is_prime(18446744073709551557ull));
  EXPECT_EQ(next_prime(1u << 20), 1048583u);
  EXPECT_EQ(next_prime(14), 17u);
  EXPECT_EQ(next_prime(2), 2u);
}

TEST(Primes, MulmodMatchesNaiveForSmall) {
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t m = uniform_below(rng, 1u << 30) + 1, a = rng() % m, b = rng() % m;
    EXPECT_EQ(mulmod(a, b, m), a * b % m);
  }
  EXPECT_EQ(powmod(3, 4, 7), 81u % 7);
}

TEST(Bits, ReadLittleEndianChunks) {
  BitString b(10);
  b.set(0, true);
  b.set(3, true);
  b.set(9, true);
  EXPECT_EQ(b.read(0, 4), 0b1001u);
  EXPECT_EQ(b.read(6, 4), 0b1000u);
  EXPECT_THROW(b.read(8, 4), std::out_of_range);
  EXPECT_EQ(BitString::random(300, 4), BitString::random(300, 4));
  EXPECT_NE(BitString::random(300, 4), BitString::random(300, 5));
}

TEST(HashParams, BitsRequired) {
  EXPECT_EQ(bits_required(8, 4, 3), 24u);
  EXPECT_EQ(bits_required(1, 1, 1), 1u);
  EXPECT_EQ(bits_required(20, 10, 40), 800u);
  const auto p = HashFamilyParams::make(1000, 16, 5);
  EXPECT_EQ(p.prime, 1009u);
  EXPECT_EQ(p.domain_bits(), 10u);
  EXPECT_EQ(p.range_bits(), 4u);
  EXPECT_EQ(bits_required(p), 50u);
  EXPECT_THROW(HashFamilyParams::with_prime(10, 10, 2, 9), std::invalid_argument);
  EXPECT_THROW(HashFamilyParams::with_prime(10, 10, 2, 7), std::invalid_argument);
  EXPECT_EQ(default_independence(1024), 40u);
}

TEST(PolyHash, ZeroBitsGiveZeroPolynomial) {
  const auto params = HashFamilyParams::make(100, 10, 4);
  const auto h = PolynomialHash::sample(params, BitString(bits_required(params)));
  for (std::uint64_t x = 0; x < 100; ++x) EXPECT_EQ(h(x), 0u);
}

TEST(PolyHash, InsufficientBitsRejected) {
  const auto params = HashFamilyParams::make(100, 10, 4);
  EXPECT_THROW(PolynomialHash::sample(params, BitString(bits_required(params) - 1)), std::invalid_argument);
}

TEST(PolyHash, DirectEvaluation) {
  const auto p5 = HashFamilyParams::with_prime(5, 5, 2, 5);
  EXPECT_EQ(PolynomialHash(p5, {1, 1}).field_value(3), 4u);
  EXPECT_EQ(PolynomialHash(p5, {2, 3})(0), 2u);
  const auto p7 = HashFamilyParams::with_prime(7, 4, 3, 7);
  EXPECT_EQ(PolynomialHash(p7, {1, 2, 3})(2), 3u);
  EXPECT_THROW(PolynomialHash(p7, {1, 2, 3})(7), std::out_of_range);
  EXPECT_THROW(PolynomialHash(p7, {1, 2}), std::invalid_argument);
  EXPECT_THROW(PolynomialHash(p7, {1, 2, 7}), std::invalid_argument);
}

TEST(PolyHash, SameBitsSameFunction) {
  const auto params = HashFamilyParams::make(1u << 16, 1u << 10, 12);
  const auto bits = BitString::random(2 * bits_required(params), 77);
  const auto a = PolynomialHash::sample(params, bits);
  const auto b = PolynomialHash::sample(params, bits);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.coefficients_csv(), b.coefficients_csv());
  EXPECT_NE(a, PolynomialHash::sample(params, bits, bits_required(params)));
}

TEST(Independence, ExactlyUniformWhenRangeDividesPrime) {
  const auto p5c2 = HashFamilyParams::with_prime(5, 5, 2, 5);
  const std::uint64_t pts01[] = {0, 1};
  const auto t = exact_independence_check(p5c2, pts01);
  EXPECT_EQ(t.functions, 25u);
  EXPECT_EQ(t.max_deviation, 0.0);
  for (auto c : t.counts) EXPECT_EQ(c, 1u);

  const auto p5c1 = HashFamilyParams::with_prime(5, 5, 1, 5);
  const std::uint64_t pt0[] = {0};
  const auto t1 = exact_independence_check(p5c1, pt0);
  for (auto c : t1.counts) EXPECT_EQ(c, 1u);

  const auto p7c2 = HashFamilyParams::with_prime(7, 7, 2, 7);
  const std::uint64_t pts25[] = {2, 5};
  EXPECT_EQ(exact_independence_check(p7c2, pts25).max_deviation, 0.0);
}

TEST(Independence, Guards) {
  const auto p = HashFamilyParams::with_prime(5, 5, 2, 5);
  const std::uint64_t three[] = {0, 1, 2};
  EXPECT_THROW(exact_independence_check(p, three), std::invalid_argument);
  const std::uint64_t dup[] = {1, 1};
  EXPECT_THROW(exact_independence_check(p, dup), std::invalid_argument);
  const auto nondiv = HashFamilyParams::with_prime(5, 3, 2, 5);
  const std::uint64_t two[] = {0, 1};
  EXPECT_THROW(exact_independence_check(nondiv, two), std::invalid_argument);
  const auto big = HashFamilyParams::with_prime(101, 101, 4, 101);  // 101^4 > 1e7
  EXPECT_THROW(exact_independence_check(big, two), std::invalid_argument);
}

TEST(Independence, PairwiseLimitOfDegreeOnePolynomials) {
  // c = 2 gives pairwise but not 3-wise uniformity: a line through two
  // points fixes the third. Exhibit it by counting directly.
  const std::uint64_t p = 5;
  const auto params = HashFamilyParams::with_prime(5, 5, 2, p);
  std::vector<int> triple_counts(125, 0);
  for (std::uint64_t a0 = 0; a0 < p; ++a0)
    for (std::uint64_t a1 = 0; a1 < p; ++a1) {
      const PolynomialHash h(params, {a0, a1});
      ++triple_counts[h(0) + 5 * h(1) + 25 * h(2)];
    }
  int zero = 0;
  for (int c : triple_counts) zero += c == 0;
  EXPECT_EQ(zero, 100);  // only 25 of 125 triples reachable
}

TEST(Independence, LimitedIndependenceTailBound) {
  // X = #{i < 10^4 : h(i) < L/2} with c = 32. For each delta the fraction of
  // 10^3 sampled functions with X >= (1 + delta) mu must not exceed
  // exp(-min(c, delta^2 mu)) by more than three binomial standard errors.
  constexpr std::uint64_t kN = 10000, kL = 1u << 20;
  constexpr unsigned kC = 32;
  constexpr int kFunctions = 1000;
  const auto params = HashFamilyParams::make(kN, kL, kC);
  const double mu = kN * 0.5;
  const double deltas[] = {0.015, 0.02, 0.03, 0.04};
  std::vector<int> exceed(std::size(deltas), 0);
  const auto bits = BitString::random(kFunctions * bits_required(params), 2024);
  for (int f = 0; f < kFunctions; ++f) {
    const auto h = PolynomialHash::sample(params, bits, f * bits_required(params));
    std::uint64_t x = 0;
    for (std::uint64_t i = 0; i < kN; ++i) x += h(i) < kL / 2;
    for (std::size_t d = 0; d < std::size(deltas); ++d) exceed[d] += x >= (1 + deltas[d]) * mu;
  }
  for (std::size_t d = 0; d < std::size(deltas); ++d) {
    const double bound = std::exp(-std::min<double>(kC, deltas[d] * deltas[d] * mu));
    const double slack = 3 * std::sqrt(bound * (1 - bound) / kFunctions);
    EXPECT_LE(exceed[d] / double(kFunctions), bound + slack) << "delta=" << deltas[d];
  }
}
