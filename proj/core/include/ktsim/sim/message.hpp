#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "ktsim/graph/graph.hpp"
#include "ktsim/graph/ids.hpp"

namespace ktsim {

/// Payload of one envelope. `bits` is the declared size used for message
/// accounting; ids are the ID-valued fields (these drive utilization and
/// decoding), words are ordinary data.
struct Message {
  static constexpr std::size_t kMaxIds = 2;
  static constexpr std::size_t kMaxWords = 2;

  std::uint16_t tag = 0;
  std::uint32_t bits = 1;
  std::uint8_t id_count = 0;
  std::uint8_t word_count = 0;
  std::array<IdValue, kMaxIds> ids{};
  std::array<std::uint64_t, kMaxWords> words{};

  static Message make(std::uint16_t tag, std::uint32_t bits) {
    Message m;
    m.tag = tag;
    m.bits = bits;
    return m;
  }
  Message& with_id(IdValue id);
  Message& with_word(std::uint64_t w);

  std::span<const IdValue> id_fields() const { return {ids.data(), id_count}; }
  std::span<const std::uint64_t> data() const { return {words.data(), word_count}; }
  std::uint64_t word(std::size_t i = 0) const { return words[i]; }

  friend bool operator==(const Message& a, const Message& b);
};

struct Envelope {
  Vertex src = 0;
  Vertex dst = 0;
  std::uint32_t round = 0;
  Message msg;

  friend bool operator==(const Envelope& a, const Envelope& b) {
    return a.src == b.src && a.dst == b.dst && a.round == b.round && a.msg == b.msg;
  }
};

}  // namespace ktsim
