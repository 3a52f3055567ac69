#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ktsim::exp {

/// Bad configuration; the CLI maps it to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  std::string algorithm;  // color-d1 | color-eps | mis-kt2 | luby | greedy | lb-check
  std::vector<std::size_t> n;
  std::vector<double> p{0.5};
  double eps = 0.5;
  std::optional<double> delta;  // unset: 0.5 for color-d1, 0 for color-eps
  std::string backend = "oracle";  // oracle | flooding
  double polylog_factor = 1.0;
  double c_sample = 2.0;
  std::vector<std::uint64_t> seeds;
  unsigned word_bits = 0;
  std::string output;  // empty: stdout
  std::string family = "gnp";  // gnp | complete | star | path | cycle | edgeless
  std::string graph_file;      // overrides family / n / p
  std::string ids = "random";  // random | identity
  std::vector<std::size_t> t;  // lb-check part sizes
  std::string program = "order-coloring";
};

/// Every recognized key, in documentation order.
const std::vector<std::string_view>& config_keys();

/// Sets one key from its text form. Lists are comma separated. Throws
/// UsageError for unknown keys or unparsable values.
void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view value);

/// Flat "key = value" lines; '#' starts a comment.
void apply_config_text(ExperimentConfig& cfg, std::istream& in);
void apply_config_file(ExperimentConfig& cfg, const std::string& path);

/// Throws UsageError on an inconsistent configuration.
void validate(const ExperimentConfig& cfg);

}  // namespace ktsim::exp
