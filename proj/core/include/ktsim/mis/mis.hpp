#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "ktsim/errors.hpp"
#include "ktsim/graph/graph.hpp"

namespace ktsim {

enum class MisCause : std::uint8_t { undecided, sampled_greedy, luby, dominated };

std::string_view cause_name(MisCause c);

struct MISOutput {
  std::vector<std::uint8_t> in;  // 1 = in the set
  std::vector<MisCause> cause;

  explicit MISOutput(std::size_t n = 0) : in(n, 0), cause(n, MisCause::undecided) {}
  std::size_t size() const;  // vertices in the set
};

/// Independent and maximal.
Verdict verify_mis(const Graph& g, const MISOutput& out);

/// Lines "v in|out cause".
void write_mis(std::ostream& out, const MISOutput& mis);

}  // namespace ktsim
