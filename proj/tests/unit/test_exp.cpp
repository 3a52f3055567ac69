#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "ktsim/exp/config.hpp"
#include "ktsim/exp/fit.hpp"
#include "ktsim/exp/runner.hpp"

using namespace ktsim;
using namespace ktsim::exp;

TEST(Config, ParsesTextAndLists) {
  ExperimentConfig cfg;
  std::istringstream in("# grid\nalgorithm = color-eps\nn = 256, 512\np=0.1,0.5\nseeds = 1,2,3 # trailing\neps=0.25\n");
  apply_config_text(cfg, in);
  EXPECT_EQ(cfg.algorithm, "color-eps");
  EXPECT_EQ(cfg.n, (std::vector<std::size_t>{256, 512}));
  EXPECT_EQ(cfg.p, (std::vector<double>{0.1, 0.5}));
  EXPECT_EQ(cfg.seeds, (std::vector<std::uint64_t>{1, 2, 3}));
  EXPECT_DOUBLE_EQ(cfg.eps, 0.25);
  EXPECT_NO_THROW(validate(cfg));
  apply_setting(cfg, "eps", "1");  // later settings override
  EXPECT_DOUBLE_EQ(cfg.eps, 1.0);
}

TEST(Config, RejectsBadInput) {
  ExperimentConfig cfg;
  EXPECT_THROW(apply_setting(cfg, "colour", "x"), UsageError);
  EXPECT_THROW(apply_setting(cfg, "n", "12a"), UsageError);
  EXPECT_THROW(apply_setting(cfg, "eps", ""), UsageError);
  std::istringstream no_eq("algorithm color-eps\n");
  EXPECT_THROW(apply_config_text(cfg, no_eq), UsageError);
  EXPECT_THROW(apply_config_file(cfg, "/nonexistent/ktsim.cfg"), UsageError);
}

TEST(Config, Validation) {
  ExperimentConfig cfg;
  cfg.algorithm = "color-eps";
  cfg.n = {64};
  EXPECT_THROW(validate(cfg), UsageError);  // no seeds
  cfg.seeds = {1};
  EXPECT_NO_THROW(validate(cfg));
  cfg.eps = 0;
  EXPECT_THROW(validate(cfg), UsageError);
  cfg.eps = 0.5;
  cfg.algorithm = "sorting";
  EXPECT_THROW(validate(cfg), UsageError);
  cfg.algorithm = "lb-check";
  cfg.t = {0};
  EXPECT_THROW(validate(cfg), UsageError);
  cfg.t = {2};
  EXPECT_NO_THROW(validate(cfg));
  EXPECT_FALSE(config_keys().empty());
}

TEST(Fit, ExactPowerLaws) {
  const std::vector<double> x{2, 4, 8, 16};
  std::vector<double> sq, cube, flat(4, 7.0);
  for (double v : x) {
    sq.push_back(3 * v * v);
    cube.push_back(v * v * v);
  }
  const auto a = fit_power_law(x, sq);
  EXPECT_NEAR(a.slope, 2.0, 1e-12);
  EXPECT_NEAR(a.intercept, std::log(3.0), 1e-12);
  EXPECT_NEAR(a.r_squared, 1.0, 1e-12);
  EXPECT_NEAR(fit_power_law(x, cube).slope, 3.0, 1e-12);
  const auto c = fit_power_law(x, flat);
  EXPECT_NEAR(c.slope, 0.0, 1e-12);
  EXPECT_DOUBLE_EQ(c.r_squared, 1.0);
}

TEST(Fit, RejectsDegenerateInput) {
  const std::vector<double> x{1, 2, 3}, bad{1, 0, 2}, two{1, 2};
  EXPECT_THROW(fit_power_law(x, bad), std::invalid_argument);
  EXPECT_THROW(fit_power_law(two, two), std::invalid_argument);
  const std::vector<double> same{4, 4, 4};
  EXPECT_THROW(fit_power_law(same, x), std::invalid_argument);
}

TEST(Fit, ReadsCsvColumns) {
  std::istringstream csv("n,messages,other\n10,100,x\n100,10000,y\n1000,1000000,z\n");
  EXPECT_NEAR(fit_power_law_csv(csv, "n", "messages").slope, 2.0, 1e-12);
  std::istringstream missing("n,rounds\n1,1\n2,2\n3,3\n");
  EXPECT_THROW(fit_power_law_csv(missing, "n", "messages"), std::invalid_argument);
}

TEST(Runner, ColorEpsSingleRow) {
  ExperimentConfig cfg;
  cfg.algorithm = "color-eps";
  cfg.n = {128};
  cfg.seeds = {1};
  const auto rows = run_experiment(cfg);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_TRUE(rows[0].valid);
  EXPECT_EQ(rows[0].n, 128u);
  EXPECT_FALSE(rows[0].extra_value("palette_size").empty());
  const std::string csv = to_csv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), kCsvHeader);
}

TEST(Runner, LbCheckRowsPerCrossing) {
  ExperimentConfig cfg;
  cfg.algorithm = "lb-check";
  cfg.t = {2};
  cfg.seeds = {0};
  const auto rows = run_experiment(cfg);
  ASSERT_EQ(rows.size(), 8u);
  for (const auto& r : rows) {
    EXPECT_EQ(r.n, 12u);
    EXPECT_EQ(r.m, 16u);
    EXPECT_TRUE(r.valid);
    EXPECT_EQ(r.extra_value("violation_kind"), "mono_y_y'");
  }
}

TEST(Runner, EmptySeedsIsUsageError) {
  ExperimentConfig cfg;
  cfg.algorithm = "luby";
  cfg.n = {16};
  EXPECT_THROW(run_experiment(cfg), UsageError);
}

TEST(Runner, StructuredFamilies) {
  ExperimentConfig cfg;
  cfg.algorithm = "luby";
  cfg.n = {10};
  cfg.seeds = {3};
  for (const char* fam : {"complete", "star", "path", "cycle", "edgeless"}) {
    cfg.family = fam;
    const auto rows = run_experiment(cfg);
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_TRUE(rows[0].valid) << fam;
  }
  cfg.family = "complete";
  EXPECT_EQ(build_graph(cfg, 10, 0.5, 1).edge_count(), 45u);
}

TEST(Runner, DeterministicDigest) {
  ExperimentConfig cfg;
  cfg.algorithm = "mis-kt2";
  cfg.n = {200, 100};
  cfg.p = {0.2};
  cfg.seeds = {2, 1};
  const auto a = run_experiment(cfg);
  EXPECT_EQ(csv_digest(a), csv_digest(run_experiment(cfg)));
  ASSERT_EQ(a.size(), 4u);
  EXPECT_EQ(a[0].n, 100u);  // sorted by n, then seed
  EXPECT_EQ(a[0].seed, 1u);
}
