#include <algorithm>
#include <ostream>

#include <fmt/format.h>

#include "ktsim/mis/mis.hpp"

namespace ktsim {

std::string_view cause_name(MisCause c) {
  switch (c) {
    case MisCause::undecided: return "undecided";
    case MisCause::sampled_greedy: return "sampled-greedy";
    case MisCause::luby: return "luby";
    case MisCause::dominated: return "dominated";
  }
  return "?";
}

std::size_t MISOutput::size() const { return static_cast<std::size_t>(std::count(in.begin(), in.end(), 1)); }

Verdict verify_mis(const Graph& g, const MISOutput& out) {
  if (out.in.size() != g.vertex_count()) return Verdict::fail("output size differs from vertex count");
  for (const auto& [u, v] : g.edges())
    if (out.in[u] && out.in[v]) return Verdict::fail(fmt::format("edge {{{},{}}} inside the set", u, v));
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (out.in[v]) continue;
    auto nb = g.neighbors(v);
    if (std::none_of(nb.begin(), nb.end(), [&](Vertex u) { return out.in[u] != 0; }))
      return Verdict::fail(fmt::format("vertex {} is out but has no neighbor in the set", v));
  }
  return Verdict::ok();
}

void write_mis(std::ostream& out, const MISOutput& mis) {
  for (std::size_t v = 0; v < mis.in.size(); ++v)
    out << v << ' ' << (mis.in[v] ? "in" : "out") << ' ' << cause_name(mis.cause[v]) << '\n';
}

}  // namespace ktsim
