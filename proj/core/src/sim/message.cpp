#include "ktsim/sim/message.hpp"

#include <algorithm>

#include "ktsim/errors.hpp"

namespace ktsim {

Message& Message::with_id(IdValue id) {
  if (id_count == kMaxIds) throw ProgramError("message carries too many ID fields");
  ids[id_count++] = id;
  return *this;
}

Message& Message::with_word(std::uint64_t w) {
  if (word_count == kMaxWords) throw ProgramError("message carries too many data words");
  words[word_count++] = w;
  return *this;
}

bool operator==(const Message& a, const Message& b) {
  return a.tag == b.tag && a.bits == b.bits && std::ranges::equal(a.id_fields(), b.id_fields()) &&
         std::ranges::equal(a.data(), b.data());
}

}  // namespace ktsim
