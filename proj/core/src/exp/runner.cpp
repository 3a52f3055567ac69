#include "ktsim/exp/runner.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <tuple>

#include <fmt/format.h>

#include "ktsim/coloring/delta_plus_one.hpp"
#include "ktsim/coloring/eps_delta.hpp"
#include "ktsim/coloring/verify.hpp"
#include "ktsim/errors.hpp"
#include "ktsim/graph/generators.hpp"
#include "ktsim/graph/io.hpp"
#include "ktsim/lb/harness.hpp"
#include "ktsim/mis/greedy.hpp"
#include "ktsim/mis/kt2_mis.hpp"
#include "ktsim/mis/luby.hpp"
#include "ktsim/random.hpp"

namespace ktsim::exp {

const char* const kCsvHeader =
    "run_id,algorithm,n,m,p,eps,delta,c_sample,seed,rounds,messages,charged_messages,utilized_edges,"
    "rounds_charged,valid,extra";

std::string ExperimentRow::extra_value(const std::string& key) const {
  for (const auto& [k, v] : extra)
    if (k == key) return v;
  return {};
}

namespace {

template <typename T>
void put(ExperimentRow& row, const char* key, const T& value) {
  row.extra.emplace_back(key, fmt::format("{}", value));
}

void fill_metrics(ExperimentRow& row, const RunMetrics& m) {
  row.rounds = m.rounds;
  row.messages = m.messages;
  row.charged_messages = m.charged_messages;
  row.utilized_edges = m.utilized_edges.size();
  row.rounds_charged = m.charged_rounds;
}

BroadcastBackendConfig backend_of(const ExperimentConfig& cfg, double default_delta) {
  BroadcastBackendConfig b;
  b.mode = cfg.backend == "flooding" ? BroadcastBackendConfig::Mode::flooding
                                     : BroadcastBackendConfig::Mode::accounted_oracle;
  b.delta = cfg.delta.value_or(default_delta);
  b.polylog_factor = cfg.polylog_factor;
  return b;
}

IdAssignment ids_for(const ExperimentConfig& cfg, std::size_t n, std::uint64_t seed) {
  return cfg.ids == "identity" ? IdAssignment::identity(n) : IdAssignment::random(n, mix_seed(seed, 0x1d));
}

void run_one(const ExperimentConfig& cfg, const Graph& g, ExperimentRow& row) {
  const IdAssignment ids = ids_for(cfg, g.vertex_count(), row.seed);
  const std::uint64_t alg_seed = mix_seed(row.seed, 0xa1);
  const auto& a = cfg.algorithm;
  if (a == "color-d1") {
    Alg1Config c;
    c.broadcast = backend_of(cfg, 0.5);
    c.word_bits = cfg.word_bits;
    row.delta = c.broadcast.delta;
    const Palette palette = Palette::degree_plus_one(g);
    const Alg1Result r = alg1_delta_plus_one(g, ids, palette, c, alg_seed);
    fill_metrics(row, r.metrics);
    row.valid = !r.flagged && verify_coloring(g, r.output, palette).valid;
    put(row, "max_degree", g.max_degree());
    put(row, "colors_used", r.output.colors_used());
    put(row, "recursion_depth", r.recursion_depth);
    put(row, "attempts", r.attempts);
    std::size_t deferred = 0;
    for (const auto& l : r.levels) deferred += l.deferred;
    put(row, "deferred", deferred);
    if (r.flagged) put(row, "failure", r.failure);
  } else if (a == "color-eps") {
    Alg2Config c;
    c.eps = cfg.eps;
    c.broadcast = backend_of(cfg, 0.0);
    c.word_bits = cfg.word_bits;
    row.eps = cfg.eps;
    row.delta = c.broadcast.delta;
    const Alg2Result r = alg2_eps_delta(g, ids, c, alg_seed);
    fill_metrics(row, r.metrics);
    row.valid = !r.flagged && verify_coloring(g, r.output, r.palette_size).valid;
    put(row, "max_degree", g.max_degree());
    put(row, "palette_size", r.palette_size);
    put(row, "colors_used", r.output.colors_used());
    put(row, "phases_used", r.phases_used);
    put(row, "phase_budget", r.phase_budget);
    put(row, "node_phases", r.node_phases);
    put(row, "node_successes", r.node_successes);
    put(row, "max_checks", r.max_checks_per_node_phase);
    put(row, "attempts", r.attempts);
    if (r.flagged) put(row, "failure", r.failure);
  } else if (a == "mis-kt2") {
    Alg3Config c;
    c.c_sample = cfg.c_sample;
    c.word_bits = cfg.word_bits;
    row.c_sample = cfg.c_sample;
    const Alg3Result r = alg3_kt2_mis(g, ids, c, alg_seed);
    fill_metrics(row, r.metrics);
    row.valid = verify_mis(g, r.output).valid;
    put(row, "sample_size", r.sample_size);
    put(row, "greedy_entrants", r.greedy_entrants);
    put(row, "remnant_size", r.remnant_size);
    put(row, "remnant_max_degree", r.remnant_max_degree);
    put(row, "greedy_rounds", r.greedy_rounds);
    put(row, "inform_rounds", r.inform_rounds);
    put(row, "luby_rounds", r.luby_rounds);
    put(row, "audit_ok", r.audit_ok ? 1 : 0);
  } else if (a == "luby") {
    const std::vector<std::uint8_t> all(g.vertex_count(), 1);
    const LubyRun r = luby_mis(g, ids, all, alg_seed, cfg.word_bits);
    fill_metrics(row, r.metrics);
    row.valid = verify_mis(g, r.output).valid;
    put(row, "mis_size", r.output.size());
  } else if (a == "greedy") {
    RankedSample s;
    s.member.assign(g.vertex_count(), 1);
    s.rank.resize(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      Rng rng(mix_seed(alg_seed, v));
      s.rank[v] = rng();
    }
    const GreedyRun r = parallel_greedy_mis(g, ids, s, alg_seed, cfg.word_bits);
    fill_metrics(row, r.metrics);
    const MISOutput oracle = sequential_greedy_mis(g, ids, s);
    const bool same = oracle.in == r.output.in;
    row.valid = verify_mis(g, r.output).valid && same;
    put(row, "mis_size", r.output.size());
    put(row, "matches_sequential", same ? 1 : 0);
  }
}

void run_lb(const ExperimentConfig& cfg, std::vector<ExperimentRow>& rows) {
  const lb::Fixture program = lb::fixture_from_name(cfg.program);
  for (std::size_t t : cfg.t)
    for (std::uint64_t seed : cfg.seeds)
      for (const Crossing& c : enumerate_family(t)) {
        lb::IncorrectnessVerdict v;
        try {
          v = lb::audit_incorrectness(t, c, program, seed);
        } catch (const AuditError& e) {
          throw InvariantBreach(fmt::format("lb-check t={} crossing=({},{},{}) program={}: {}", t, c.y, c.z,
                                            c.x_prime, cfg.program, e.what()));
        }
        const auto& r = v.report;
        ExperimentRow row;
        row.algorithm = cfg.algorithm;
        row.n = 6 * t;
        row.m = 4 * t * t;
        row.seed = seed;
        row.run_id = fmt::format("lb-check/{}/t{}/s{}/{}-{}-{}", cfg.program, t, seed, c.y, c.z, c.x_prime);
        fill_metrics(row, r.base_metrics);
        const bool hypothesis = !r.e_utilized && !r.ep_utilized;
        if (!hypothesis)
          row.valid = true;  // nothing claimed
        else if (lb::output_kind(program) == lb::OutputKind::none)
          row.valid = r.similarity.similar;
        else
          row.valid = r.similarity.similar && v.conclusion == lb::Conclusion::violation;
        put(row, "program", cfg.program);
        put(row, "t", t);
        put(row, "y", c.y);
        put(row, "z", c.z);
        put(row, "x_prime", c.x_prime);
        put(row, "e_utilized", r.e_utilized ? 1 : 0);
        put(row, "ep_utilized", r.ep_utilized ? 1 : 0);
        put(row, "similar", r.similarity.similar ? 1 : 0);
        put(row, "violation_kind", v.conclusion == lb::Conclusion::violation      ? v.kind
                                   : v.conclusion == lb::Conclusion::no_violation ? std::string("none")
                                                                                   : std::string("inconclusive"));
        rows.push_back(std::move(row));
      }
}

std::string opt(const std::optional<double>& v) { return v ? fmt::format("{}", *v) : std::string(); }

}  // namespace

Graph build_graph(const ExperimentConfig& cfg, std::size_t n, double p, std::uint64_t seed) {
  if (!cfg.graph_file.empty()) return read_graph_file(cfg.graph_file);
  if (cfg.family == "complete") return complete_graph(n);
  if (cfg.family == "star") return star_graph(n);
  if (cfg.family == "path") return path_graph(n);
  if (cfg.family == "cycle") return cycle_graph(n);
  if (cfg.family == "edgeless") return Graph::from_edges(n, {});
  return generate_random_graph(n, p, seed);
}

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  std::vector<ExperimentRow> rows;
  if (cfg.algorithm == "lb-check") {
    run_lb(cfg, rows);
  } else {
    const bool from_file = !cfg.graph_file.empty();
    const bool random_family = !from_file && cfg.family == "gnp";
    std::optional<Graph> file_graph;
    if (from_file) {
      try {
        file_graph = read_graph_file(cfg.graph_file);
      } catch (const ParseError& e) {
        throw UsageError(e.what());
      }
    }
    const std::vector<std::size_t> ns = from_file ? std::vector<std::size_t>{file_graph->vertex_count()} : cfg.n;
    const std::vector<double> ps = random_family ? cfg.p : std::vector<double>{0.0};
    for (std::size_t n : ns)
      for (double p : ps)
        for (std::uint64_t seed : cfg.seeds) {
          const Graph g = from_file ? *file_graph : build_graph(cfg, n, p, seed);
          ExperimentRow row;
          row.algorithm = cfg.algorithm;
          row.n = g.vertex_count();
          row.m = g.edge_count();
          if (random_family) row.p = p;
          row.seed = seed;
          row.run_id = fmt::format("{}/{}/n{}/{}s{}", cfg.algorithm, from_file ? "file" : cfg.family, row.n,
                                   random_family ? fmt::format("p{}/", p) : std::string(), seed);
          try {
            run_one(cfg, g, row);
          } catch (const ProgramError& e) {
            throw InvariantBreach(row.run_id + ": " + e.what());
          } catch (const AuditError& e) {
            throw InvariantBreach(row.run_id + ": " + e.what());
          } catch (const DecodeError& e) {
            throw InvariantBreach(row.run_id + ": " + e.what());
          }
          rows.push_back(std::move(row));
        }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const ExperimentRow& a, const ExperimentRow& b) {
    return std::tie(a.algorithm, a.n, a.p, a.seed) < std::tie(b.algorithm, b.n, b.p, b.seed);
  });
  return rows;
}

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) { out << to_csv(rows); }

std::string to_csv(const std::vector<ExperimentRow>& rows) {
  std::string s = kCsvHeader;
  s += '\n';
  for (const auto& r : rows) {
    std::string extra;
    for (const auto& [k, v] : r.extra) extra += fmt::format("{}{}={}", extra.empty() ? "" : ";", k, v);
    s += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", r.run_id, r.algorithm, r.n, r.m, opt(r.p),
                     opt(r.eps), opt(r.delta), opt(r.c_sample), r.seed, r.rounds, r.messages, r.charged_messages,
                     r.utilized_edges, r.rounds_charged, r.valid ? "true" : "false", extra);
  }
  return s;
}

std::uint64_t csv_digest(const std::vector<ExperimentRow>& rows) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : to_csv(rows)) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace ktsim::exp
