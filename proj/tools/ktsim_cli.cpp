// ktsim: run experiment grids and emit CSV, or fit power laws to a CSV.
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "ktsim/errors.hpp"
#include "ktsim/exp/config.hpp"
#include "ktsim/exp/fit.hpp"
#include "ktsim/exp/runner.hpp"

namespace {

constexpr int kUsage = 2;
constexpr int kBreach = 3;

struct ExperimentCommand {
  std::string algorithm;
  CLI::App* app = nullptr;
  std::string config_file;
  std::map<std::string, std::string> flags;
};

void add_experiment_flags(ExperimentCommand& cmd) {
  cmd.app->add_option("--config", cmd.config_file, "key=value config file; flags override it");
  for (auto key : ktsim::exp::config_keys()) {
    if (key == "algorithm") continue;
    const std::string k(key);
    cmd.app->add_option_function<std::string>(
        "--" + k, [&cmd, k](const std::string& v) { cmd.flags[k] = v; }, "config key " + k);
  }
}

int run_experiment_command(const ExperimentCommand& cmd) {
  using namespace ktsim::exp;
  ExperimentConfig cfg;
  if (!cmd.config_file.empty()) apply_config_file(cfg, cmd.config_file);
  cfg.algorithm.clear();
  apply_setting(cfg, "algorithm", cmd.algorithm);
  for (const auto& [k, v] : cmd.flags) apply_setting(cfg, k, v);
  const auto rows = run_experiment(cfg);
  if (cfg.output.empty()) {
    write_csv(std::cout, rows);
  } else {
    std::ofstream out(cfg.output);
    if (!out) throw UsageError("cannot write " + cfg.output);
    write_csv(out, rows);
  }
  std::size_t invalid = 0;
  for (const auto& r : rows) invalid += r.valid ? 0 : 1;
  std::cerr << fmt::format("{} rows, {} invalid, digest {:016x}\n", rows.size(), invalid, csv_digest(rows));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ktsim: message-complexity experiments for KT-1/KT-2 coloring and MIS"};
  app.require_subcommand(1);

  std::vector<std::unique_ptr<ExperimentCommand>> commands;
  const std::pair<const char*, const char*> algos[] = {
      {"color-d1", "(Delta+1)-coloring via palette partitioning"},
      {"color-eps", "(1+eps)Delta-coloring with hashed proposals"},
      {"mis-kt2", "KT-2 MIS: sampled greedy, two-hop informing, Luby"},
      {"luby", "Luby MIS baseline"},
      {"greedy", "parallel random-rank greedy MIS, checked against the sequential order"},
      {"lb-check", "crossing experiments on the two-copy lower-bound family"},
  };
  for (const auto& [name, help] : algos) {
    auto cmd = std::make_unique<ExperimentCommand>();
    cmd->algorithm = name;
    cmd->app = app.add_subcommand(name, help);
    add_experiment_flags(*cmd);
    commands.push_back(std::move(cmd));
  }

  std::string fit_input, fit_x = "n", fit_y = "messages";
  auto* fit = app.add_subcommand("fit", "least-squares power law y ~ x^slope over CSV columns");
  fit->add_option("--input", fit_input, "CSV file ('-' for stdin)")->required();
  fit->add_option("--x", fit_x, "x column");
  fit->add_option("--y", fit_y, "y column");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (fit->parsed()) {
      ktsim::exp::PowerLawFit f;
      if (fit_input == "-") {
        f = ktsim::exp::fit_power_law_csv(std::cin, fit_x, fit_y);
      } else {
        std::ifstream in(fit_input);
        if (!in) throw ktsim::exp::UsageError("cannot open " + fit_input);
        f = ktsim::exp::fit_power_law_csv(in, fit_x, fit_y);
      }
      std::cout << fmt::format("slope={:.6f} intercept={:.6f} r2={:.6f}\n", f.slope, f.intercept, f.r_squared);
      return 0;
    }
    for (const auto& cmd : commands)
      if (cmd->app->parsed()) return run_experiment_command(*cmd);
  } catch (const ktsim::exp::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ktsim::ParseError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ktsim::exp::InvariantBreach& e) {
    std::cerr << "invariant breach: " << e.what() << '\n';
    return kBreach;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kBreach;
  }
  return kUsage;
}
