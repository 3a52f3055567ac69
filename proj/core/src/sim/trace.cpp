#include "ktsim/sim/trace.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <fmt/format.h>

#include "ktsim/errors.hpp"
#include "ktsim/sim/utilization.hpp"

namespace ktsim {

std::vector<Envelope> ExecutionTrace::round_envelopes(std::uint32_t r) const {
  std::vector<Envelope> out;
  auto lo = std::lower_bound(envelopes.begin(), envelopes.end(), r,
                             [](const Envelope& e, std::uint32_t x) { return e.round < x; });
  for (auto it = lo; it != envelopes.end() && it->round == r; ++it) out.push_back(*it);
  return out;
}

namespace {

void append_line(std::string& buf, const Envelope& e) {
  fmt::format_to(std::back_inserter(buf), "{},{},{},{},{},", e.round, e.src, e.dst, e.msg.bits, e.msg.tag);
  bool first = true;
  for (IdValue id : e.msg.id_fields()) {
    if (!first) buf.push_back(';');
    fmt::format_to(std::back_inserter(buf), "{}", id);
    first = false;
  }
}

struct Fnv {
  std::uint64_t h = 0xcbf29ce484222325ull;
  void bytes(const void* p, std::size_t n) {
    auto* c = static_cast<const unsigned char*>(p);
    for (std::size_t i = 0; i < n; ++i) {
      h ^= c[i];
      h *= 0x100000001b3ull;
    }
  }
  void u64(std::uint64_t v) { bytes(&v, sizeof v); }
};

}  // namespace

void write_trace_csv(std::ostream& out, const ExecutionTrace& trace) {
  out << "round,src,dst,bits,tag,id_fields\n";
  std::string line;
  for (const auto& e : trace.envelopes) {
    line.clear();
    append_line(line, e);
    out << line << '\n';
  }
}

std::uint64_t trace_digest(const ExecutionTrace& trace) {
  Fnv f;
  f.u64(trace.vertex_count);
  f.u64(trace.rounds);
  std::string line;
  for (const auto& e : trace.envelopes) {
    line.clear();
    append_line(line, e);
    f.bytes(line.data(), line.size());
    for (auto w : e.msg.data()) f.u64(w);
    f.u64(0xff);
  }
  for (const auto& s : trace.states) {
    f.u64(s.round);
    f.u64(s.vertex);
    f.u64(s.bytes.size());
    f.bytes(s.bytes.data(), s.bytes.size());
  }
  for (const auto& o : trace.outputs) {
    f.u64(o.has_value());
    f.u64(static_cast<std::uint64_t>(o.value_or(0)));
  }
  return f.h;
}

std::uint64_t count_messages(const ExecutionTrace& trace, unsigned word_bits) {
  if (word_bits == 0) throw std::invalid_argument("count_messages: word_bits must be >= 1");
  std::uint64_t total = 0;
  for (const auto& e : trace.envelopes) total += (e.msg.bits + word_bits - 1) / word_bits;
  return total;
}

unsigned default_word_bits(std::size_t n) {
  if (n <= 1) return 32;
  const auto two_log = static_cast<unsigned>(std::ceil(2.0 * std::log2(static_cast<double>(n)) - 1e-9));
  return std::max(32u, two_log);
}

DecodedTrace decode_trace(const ExecutionTrace& trace, const IdAssignment& ids) {
  DecodedTrace d;
  d.rounds = trace.rounds;
  d.envelopes.reserve(trace.envelopes.size());
  for (const auto& e : trace.envelopes) {
    DecodedEnvelope de{e.round, e.src, e.dst, e.msg.bits, e.msg.tag, {}, {}};
    for (IdValue id : e.msg.id_fields()) {
      auto v = ids.vertex_of(id);
      if (!v)
        throw DecodeError(fmt::format("round {}: {} -> {} carries ID {} held by no vertex", e.round,
                                      e.src, e.dst, id));
      de.id_vertices.push_back(*v);
    }
    de.words.assign(e.msg.data().begin(), e.msg.data().end());
    d.envelopes.push_back(std::move(de));
  }
  std::stable_sort(d.envelopes.begin(), d.envelopes.end());
  d.states = trace.states;
  std::sort(d.states.begin(), d.states.end(), [](const StateSnapshot& a, const StateSnapshot& b) {
    return std::tie(a.round, a.vertex, a.bytes) < std::tie(b.round, b.vertex, b.bytes);
  });
  d.outputs = trace.outputs;
  return d;
}

std::vector<Edge> track_utilized_edges(const Graph& g, const ExecutionTrace& trace,
                                       const IdAssignment& ids) {
  UtilizationTracker tracker(g, ids);
  for (const auto& e : trace.envelopes) tracker.observe(e.src, e.dst, e.msg);
  return tracker.edges();
}

}  // namespace ktsim
