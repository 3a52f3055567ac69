#include "ktsim/hash/bits.hpp"

#include <stdexcept>

#include "ktsim/random.hpp"

namespace ktsim {

BitString BitString::random(std::size_t nbits, std::uint64_t seed) {
  BitString s(nbits);
  Rng rng(mix_seed(seed, 0xb175));
  for (auto& w : s.words_) w = rng();
  if (nbits % 64 != 0 && !s.words_.empty()) s.words_.back() &= (std::uint64_t{1} << (nbits % 64)) - 1;
  return s;
}

void BitString::set(std::size_t i, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (i % 64);
  if (value)
    words_[i / 64] |= mask;
  else
    words_[i / 64] &= ~mask;
}

std::uint64_t BitString::read(std::size_t offset, unsigned width) const {
  if (width > 64) throw std::invalid_argument("BitString::read: width > 64");
  if (offset + width > nbits_) throw std::out_of_range("BitString::read past end");
  if (width == 0) return 0;
  const std::size_t w = offset / 64;
  const unsigned s = offset % 64;
  std::uint64_t value = words_[w] >> s;
  if (s != 0 && s + width > 64) value |= words_[w + 1] << (64 - s);
  return width == 64 ? value : value & ((std::uint64_t{1} << width) - 1);
}

}  // namespace ktsim
