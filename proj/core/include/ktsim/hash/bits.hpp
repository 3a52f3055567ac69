#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ktsim {

/// Fixed-length bit string, bit i stored at word i/64, position i%64.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  static BitString random(std::size_t nbits, std::uint64_t seed);

  std::size_t size() const { return nbits_; }
  bool bit(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i, bool value);

  /// `width` (<= 64) bits starting at `offset`, bit offset+j landing at
  /// position j of the result. Throws std::out_of_range past the end.
  std::uint64_t read(std::size_t offset, unsigned width) const;

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace ktsim
