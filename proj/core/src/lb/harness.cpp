#include "ktsim/lb/harness.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include <fmt/format.h>

#include "ktsim/coloring/palette.hpp"
#include "ktsim/coloring/verify.hpp"
#include "ktsim/mis/mis.hpp"
#include "ktsim/sim/engine.hpp"

namespace ktsim::lb {

namespace {

std::string describe(const DecodedEnvelope& e) {
  std::string ids;
  for (Vertex v : e.id_vertices) ids += fmt::format("{}v{}", ids.empty() ? "" : ";", v);
  return fmt::format("{}->{} tag={} bits={} ids=[{}]", e.src, e.dst, e.tag, e.bits, ids);
}

template <typename T, typename Key>
std::vector<T> in_round(const std::vector<T>& xs, std::uint32_t r, Key round_of) {
  std::vector<T> out;
  for (const auto& x : xs)
    if (round_of(x) == r) out.push_back(x);
  return out;
}

}  // namespace

SimilarityReport check_similarity(const ExecutionTrace& a, const ExecutionTrace& b, const IdAssignment& ids_a,
                                  const IdAssignment& ids_b) {
  const DecodedTrace da = decode_trace(a, ids_a);
  const DecodedTrace db = decode_trace(b, ids_b);
  SimilarityReport rep;
  const std::uint32_t rounds = std::max(da.rounds, db.rounds);
  auto env_round = [](const DecodedEnvelope& e) { return e.round; };
  auto st_round = [](const StateSnapshot& s) { return s.round; };
  for (std::uint32_t r = 1; r <= rounds; ++r) {
    const auto ea = in_round(da.envelopes, r, env_round);
    const auto eb = in_round(db.envelopes, r, env_round);
    if (ea != eb) {
      std::string what = fmt::format("messages differ ({} vs {})", ea.size(), eb.size());
      for (std::size_t i = 0; i < std::min(ea.size(), eb.size()); ++i)
        if (ea[i] != eb[i]) {
          what = fmt::format("message {} vs {}", describe(ea[i]), describe(eb[i]));
          break;
        }
      rep.similar = false;
      rep.first_divergence = Divergence{r, what};
      return rep;
    }
    const auto sa = in_round(da.states, r, st_round);
    const auto sb = in_round(db.states, r, st_round);
    if (sa != sb) {
      std::string what = "state sets differ";
      for (std::size_t i = 0; i < std::min(sa.size(), sb.size()); ++i)
        if (!(sa[i] == sb[i])) {
          what = fmt::format("state of {} '{}' vs state of {} '{}'", sa[i].vertex, sa[i].bytes, sb[i].vertex,
                             sb[i].bytes);
          break;
        }
      rep.similar = false;
      rep.first_divergence = Divergence{r, what};
      return rep;
    }
  }
  if (da.outputs != db.outputs) {
    rep.similar = false;
    std::string what = "output vectors differ";
    for (std::size_t v = 0; v < std::min(da.outputs.size(), db.outputs.size()); ++v)
      if (da.outputs[v] != db.outputs[v]) {
        what = fmt::format("output of {}: {} vs {}", v, da.outputs[v].value_or(-1), db.outputs[v].value_or(-1));
        break;
      }
    rep.first_divergence = Divergence{0, what};
  }
  return rep;
}

SimilarityReport check_similarity(const ExecutionTrace& a, const ExecutionTrace& b, const IdAssignment& ids) {
  return check_similarity(a, b, ids, ids);
}

CrossingReport run_crossing_experiment(std::size_t t, const Crossing& crossing, Fixture program,
                                       std::uint64_t seed) {
  const CrossingPair pair = make_crossing_pair(t, crossing);
  const IdAssignment& psi = pair.base.psi;
  RunOptions opt;
  opt.seed = seed;
  opt.record_trace = true;
  opt.audit_ids = true;
  opt.round_limit = 64;

  CrossingReport rep;
  rep.t = t;
  rep.crossing = crossing;
  auto base_prog = make_fixture(program, 6 * t);
  RunResult base = run_synchronous(pair.base.base, psi, *base_prog, opt);
  auto crossed_prog = make_fixture(program, 6 * t);
  RunResult crossed = run_synchronous(pair.crossed.crossed, psi, *crossed_prog, opt);

  const Vertex y_prime = pair.base.prime(crossing.y);
  const std::set<Edge> used(base.metrics.utilized_edges.begin(), base.metrics.utilized_edges.end());
  rep.e_utilized = used.contains(make_edge(crossing.y, crossing.z));
  rep.ep_utilized = used.contains(make_edge(crossing.x_prime, y_prime));
  for (const auto& e : crossed.trace.envelopes) {
    const Edge f = make_edge(e.src, e.dst);
    if (f == make_edge(crossing.y, y_prime) || f == make_edge(crossing.x_prime, crossing.z))
      rep.crossed_new_edges_used = true;
  }
  rep.similarity = check_similarity(base.trace, crossed.trace, psi);
  for (const auto& o : base.trace.outputs) rep.base_output.push_back(o.value_or(0));
  for (const auto& o : crossed.trace.outputs) rep.crossed_output.push_back(o.value_or(0));
  rep.base_metrics = base.metrics;
  rep.base_trace = std::move(base.trace);
  rep.crossed_trace = std::move(crossed.trace);
  return rep;
}

namespace {

IncorrectnessVerdict inconclusive(CrossingReport rep, std::string why) {
  IncorrectnessVerdict v;
  v.report = std::move(rep);
  v.reason = std::move(why);
  return v;
}

}  // namespace

IncorrectnessVerdict audit_mis_incorrectness(std::size_t t, const Crossing& crossing, Fixture program,
                                             std::uint64_t seed) {
  if (output_kind(program) != OutputKind::mis) throw std::invalid_argument("audit_mis_incorrectness: not an MIS program");
  CrossingReport rep = run_crossing_experiment(t, crossing, program, seed);
  if (rep.e_utilized || rep.ep_utilized) return inconclusive(std::move(rep), "e or e' utilized");
  const LowerBoundInstance base = build_base_graph(t);
  const LowerBoundInstance crossed = cross_edges(base, crossing.y, crossing.z, crossing.x_prime);
  auto to_mis = [](const std::vector<std::int64_t>& o) {
    MISOutput m(o.size());
    for (std::size_t v = 0; v < o.size(); ++v) m.in[v] = o[v] != 0;
    return m;
  };
  if (!verify_mis(base.base, to_mis(rep.base_output)))
    return inconclusive(std::move(rep), "base output is not an MIS");
  IncorrectnessVerdict v;
  const Vertex y_prime = base.prime(crossing.y);
  const auto& out = rep.crossed_output;
  if (out[crossing.y] && out[y_prime])
    v.kind = "mis_y_y'";
  else if (out[crossing.x_prime] && out[crossing.z])
    v.kind = "mis_x'_z";
  v.conclusion = v.kind.empty() ? Conclusion::no_violation : Conclusion::violation;
  if (v.kind.empty() && !verify_mis(crossed.crossed, to_mis(out))) v.reason = "crossed output invalid elsewhere";
  v.report = std::move(rep);
  return v;
}

IncorrectnessVerdict audit_coloring_incorrectness(std::size_t t, const Crossing& crossing, Fixture program,
                                                  std::uint64_t seed) {
  if (output_kind(program) != OutputKind::coloring)
    throw std::invalid_argument("audit_coloring_incorrectness: not a coloring program");
  CrossingReport rep = run_crossing_experiment(t, crossing, program, seed);
  if (rep.e_utilized || rep.ep_utilized) return inconclusive(std::move(rep), "e or e' utilized");
  const LowerBoundInstance base = build_base_graph(t);
  ColoringOutput col;
  for (auto c : rep.base_output) col.color.push_back(static_cast<Color>(std::max<std::int64_t>(c, 0)));
  if (!verify_coloring(base.base, col, static_cast<Color>(base.base.max_degree() + 1)))
    return inconclusive(std::move(rep), "base output is not a (Delta+1)-coloring");
  IncorrectnessVerdict v;
  const Vertex y_prime = base.prime(crossing.y);
  if (rep.crossed_output[crossing.y] == rep.crossed_output[y_prime]) v.kind = "mono_y_y'";
  v.conclusion = v.kind.empty() ? Conclusion::no_violation : Conclusion::violation;
  v.report = std::move(rep);
  return v;
}

IncorrectnessVerdict audit_incorrectness(std::size_t t, const Crossing& crossing, Fixture program,
                                         std::uint64_t seed) {
  switch (output_kind(program)) {
    case OutputKind::mis: return audit_mis_incorrectness(t, crossing, program, seed);
    case OutputKind::coloring: return audit_coloring_incorrectness(t, crossing, program, seed);
    case OutputKind::none: break;
  }
  CrossingReport rep = run_crossing_experiment(t, crossing, program, seed);
  return inconclusive(std::move(rep), "program has no checkable output");
}

std::optional<CrossingReport> scan_family_for_unutilized_pair(std::size_t t, Fixture program, std::uint64_t seed) {
  for (const Crossing& c : enumerate_family(t)) {
    CrossingReport rep = run_crossing_experiment(t, c, program, seed);
    if (!rep.e_utilized && !rep.ep_utilized) return rep;
  }
  return std::nullopt;
}

void write_harness_header(std::ostream& out) {
  out << "t,y,z,x_prime,e_utilized,ep_utilized,similar,violation_kind\n";
}

void write_harness_row(std::ostream& out, const IncorrectnessVerdict& v) {
  const auto& r = v.report;
  std::string kind = v.kind;
  if (v.conclusion == Conclusion::inconclusive) kind = "inconclusive";
  if (v.conclusion == Conclusion::no_violation) kind = "none";
  out << fmt::format("{},{},{},{},{},{},{},{}\n", r.t, r.crossing.y, r.crossing.z, r.crossing.x_prime,
                     r.e_utilized ? 1 : 0, r.ep_utilized ? 1 : 0, r.similarity.similar ? 1 : 0, kind);
}

}  // namespace ktsim::lb
