#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ktsim/exp/config.hpp"
#include "ktsim/graph/graph.hpp"

namespace ktsim::exp {

struct ExperimentRow {
  std::string run_id;
  std::string algorithm;
  std::size_t n = 0;
  std::size_t m = 0;
  std::optional<double> p;  // empty for file / structured graphs
  std::optional<double> eps;
  std::optional<double> delta;
  std::optional<double> c_sample;
  std::uint64_t seed = 0;
  std::uint64_t rounds = 0;
  std::uint64_t messages = 0;
  std::uint64_t charged_messages = 0;
  std::uint64_t utilized_edges = 0;
  std::uint64_t rounds_charged = 0;
  bool valid = false;
  std::vector<std::pair<std::string, std::string>> extra;

  std::string extra_value(const std::string& key) const;
};

/// An algorithm broke an internal invariant (model violation, failed audit
/// outside lb-check). The CLI maps it to exit status 3.
class InvariantBreach : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One row per (n, p, seed) -- or per crossing for lb-check -- sorted by
/// (algorithm, n, p, seed). Deterministic in the config. Validates first.
std::vector<ExperimentRow> run_experiment(const ExperimentConfig& cfg);

/// Graph for one grid point, as run_experiment builds it.
Graph build_graph(const ExperimentConfig& cfg, std::size_t n, double p, std::uint64_t seed);

extern const char* const kCsvHeader;
void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);
std::string to_csv(const std::vector<ExperimentRow>& rows);
/// FNV-1a over the CSV text.
std::uint64_t csv_digest(const std::vector<ExperimentRow>& rows);

}  // namespace ktsim::exp
