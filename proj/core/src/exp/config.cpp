#include "ktsim/exp/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <string>

#include "ktsim/lb/programs.hpp"

namespace ktsim::exp {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_list(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    const auto comma = s.find(',');
    auto item = trim(s.substr(0, comma));
    if (!item.empty()) out.push_back(item);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw UsageError("bad value for " + std::string(key) + ": '" + std::string(text) + "'");
  return value;
}

double parse_double(std::string_view key, std::string_view text) {
  // from_chars for double is missing in older libstdc++.
  std::string s(text);
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw UsageError("bad value for " + std::string(key) + ": '" + s + "'");
  return v;
}

template <typename T>
std::vector<T> parse_list(std::string_view key, std::string_view text) {
  std::vector<T> out;
  for (auto item : split_list(text)) {
    if constexpr (std::is_floating_point_v<T>)
      out.push_back(parse_double(key, item));
    else
      out.push_back(parse_number<T>(key, item));
  }
  return out;
}

void one_of(std::string_view key, std::string_view v, std::initializer_list<std::string_view> allowed) {
  if (std::find(allowed.begin(), allowed.end(), v) == allowed.end())
    throw UsageError("bad value for " + std::string(key) + ": '" + std::string(v) + "'");
}

}  // namespace

const std::vector<std::string_view>& config_keys() {
  static const std::vector<std::string_view> keys = {
      "algorithm", "n",  "p",      "eps",      "delta", "backend", "polylog_factor", "c_sample", "seeds",
      "word_bits", "output", "family", "graph_file", "ids", "t", "program"};
  return keys;
}

void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view raw) {
  const auto value = trim(raw);
  if (key == "algorithm") {
    one_of(key, value, {"color-d1", "color-eps", "mis-kt2", "luby", "greedy", "lb-check"});
    cfg.algorithm = value;
  } else if (key == "n") {
    cfg.n = parse_list<std::size_t>(key, value);
  } else if (key == "p") {
    cfg.p = parse_list<double>(key, value);
  } else if (key == "eps") {
    cfg.eps = parse_double(key, value);
  } else if (key == "delta") {
    cfg.delta = parse_double(key, value);
  } else if (key == "backend") {
    one_of(key, value, {"oracle", "flooding"});
    cfg.backend = value;
  } else if (key == "polylog_factor") {
    cfg.polylog_factor = parse_double(key, value);
  } else if (key == "c_sample") {
    cfg.c_sample = parse_double(key, value);
  } else if (key == "seeds") {
    cfg.seeds = parse_list<std::uint64_t>(key, value);
  } else if (key == "word_bits") {
    cfg.word_bits = parse_number<unsigned>(key, value);
  } else if (key == "output") {
    cfg.output = value;
  } else if (key == "family") {
    one_of(key, value, {"gnp", "complete", "star", "path", "cycle", "edgeless"});
    cfg.family = value;
  } else if (key == "graph_file") {
    cfg.graph_file = value;
  } else if (key == "ids") {
    one_of(key, value, {"random", "identity"});
    cfg.ids = value;
  } else if (key == "t") {
    cfg.t = parse_list<std::size_t>(key, value);
  } else if (key == "program") {
    try {
      (void)lb::fixture_from_name(value);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    cfg.program = value;
  } else {
    throw UsageError("unknown key '" + std::string(key) + "'");
  }
}

void apply_config_text(ExperimentConfig& cfg, std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s = line;
    if (auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string_view::npos) throw UsageError("config line " + std::to_string(lineno) + ": expected key=value");
    apply_setting(cfg, trim(s.substr(0, eq)), s.substr(eq + 1));
  }
}

void apply_config_file(ExperimentConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config " + path);
  apply_config_text(cfg, in);
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.algorithm.empty()) throw UsageError("algorithm not set");
  one_of("algorithm", cfg.algorithm, {"color-d1", "color-eps", "mis-kt2", "luby", "greedy", "lb-check"});
  one_of("backend", cfg.backend, {"oracle", "flooding"});
  one_of("family", cfg.family, {"gnp", "complete", "star", "path", "cycle", "edgeless"});
  one_of("ids", cfg.ids, {"random", "identity"});
  if (cfg.seeds.empty()) throw UsageError("seeds list is empty");
  if (cfg.algorithm == "lb-check") {
    if (cfg.t.empty()) throw UsageError("lb-check needs a non-empty t list");
    for (auto t : cfg.t)
      if (t == 0 || t > 64) throw UsageError("t must lie in [1, 64]");
    return;
  }
  if (cfg.graph_file.empty()) {
    if (cfg.n.empty()) throw UsageError("n list is empty");
    for (auto n : cfg.n)
      if (n == 0) throw UsageError("n must be positive");
    if (cfg.family == "gnp") {
      if (cfg.p.empty()) throw UsageError("p list is empty");
      for (double p : cfg.p)
        if (!(p >= 0.0 && p <= 1.0)) throw UsageError("p must lie in [0, 1]");
    }
  }
  if (cfg.algorithm == "color-eps" && !(cfg.eps > 0.0)) throw UsageError("eps must be positive");
  if (cfg.delta && !(*cfg.delta >= 0.0 && *cfg.delta <= 1.0)) throw UsageError("delta must lie in [0, 1]");
  if (!(cfg.polylog_factor >= 1.0)) throw UsageError("polylog_factor must be >= 1");
  if (!(cfg.c_sample > 0.0)) throw UsageError("c_sample must be positive");
  if (cfg.word_bits != 0 && cfg.word_bits < 8) throw UsageError("word_bits must be 0 (auto) or >= 8");
}

}  // namespace ktsim::exp
