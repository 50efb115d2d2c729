#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cogsec/config.hpp"
#include "cogsec/experiment.hpp"

using namespace cogsec;

namespace {

const std::filesystem::path kPresets = COGSEC_PRESET_DIR;

constexpr const char* kMinimal = R"(
schemes = direct
snr_grid_db = -5, 0, 5
secrecy_rates = 0.1,0.3,0.5
p0 = 0.8
gamma_p_db = 5
sigma2_sd = 1
sigma2_se = 0.1
sigma2_pd = 0.2
sigma2_pe = 0.2
trials = 200
seed = 9
)";

ExperimentSpec parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

std::string key_of_error(const std::string& text) {
  try {
    parse(text);
  } catch (const ConfigError& e) {
    return e.key();
  }
  return "<ok>";
}

std::string without_line(std::string text, const std::string& key) {
  const auto pos = text.find("\n" + key + " ");
  const auto end = text.find('\n', pos + 1);
  return text.erase(pos, end - pos);
}

}  // namespace

TEST(LoadConfig, Fig3Preset) {
  const ExperimentSpec spec = load_config(kPresets / "fig3.cfg");
  EXPECT_EQ(spec.params.p0, 0.8);
  EXPECT_EQ(spec.params.gamma_p_db, 5.0);
  EXPECT_EQ(spec.params.links.sigma2_sd, 1.0);
  EXPECT_EQ(spec.params.links.sigma2_pd, 0.2);
  EXPECT_EQ(spec.params.links.sigma2_pe, 0.2);
  EXPECT_EQ(spec.params.links.sigma2_se, 0.1);
  EXPECT_EQ(spec.secrecy_rates, (std::vector<double>{0.1, 0.3, 0.5}));
  EXPECT_EQ(spec.schemes, std::vector<Scheme>{Scheme::direct});
}

TEST(LoadConfig, Fig5Preset) {
  const ExperimentSpec spec = load_config(kPresets / "fig5.cfg");
  EXPECT_EQ(spec.relay_counts, (std::vector<std::size_t>{2, 4, 6}));
  EXPECT_EQ(spec.snr_grid_db.size(), 11u);
  EXPECT_EQ(spec.params.links.sigma2_si, 1.0);
  EXPECT_EQ(spec.params.links.sigma2_id, 1.0);
  EXPECT_EQ(spec.params.links.sigma2_pi, 0.2);
  EXPECT_EQ(spec.params.links.sigma2_ie, 0.1);
  EXPECT_EQ(spec.secrecy_rates, std::vector<double>{0.1});
}

TEST(LoadConfig, MissingFileIsIoError) {
  EXPECT_THROW(load_config("/nonexistent/exp.cfg"), IoError);
}

TEST(ParseConfig, MinimalDefaults) {
  const ExperimentSpec spec = parse(kMinimal);
  EXPECT_EQ(spec.params.pd, 0.9);
  EXPECT_EQ(spec.params.pf, 0.1);
  EXPECT_EQ(spec.trials, 200u);
  EXPECT_EQ(spec.seed, 9u);
  EXPECT_EQ(spec.snr_grid_db, (std::vector<double>{-5.0, 0.0, 5.0}));
}

TEST(ParseConfig, MissingKeyIsNamed) {
  EXPECT_EQ(key_of_error(without_line(kMinimal, "secrecy_rates")), "secrecy_rates");
  EXPECT_EQ(key_of_error(without_line(kMinimal, "sigma2_pe")), "sigma2_pe");
}

TEST(ParseConfig, RelayingNeedsRelayKeys) {
  std::string text = kMinimal;
  text.replace(text.find("schemes = direct"), 16, "schemes = direct,opportunistic");
  EXPECT_EQ(key_of_error(text), "relay_counts");
  text += "relay_counts = 2\n";
  EXPECT_EQ(key_of_error(text), "sigma2_si");
}

TEST(ParseConfig, UnknownKeyRejected) {
  EXPECT_EQ(key_of_error(std::string(kMinimal) + "sigma2_sdd = 1\n"), "sigma2_sdd");
}

TEST(ParseConfig, RangeErrorsNameTheKey) {
  std::string negative_p0 = kMinimal;
  negative_p0.replace(negative_p0.find("p0 = 0.8"), 8, "p0 = -0.1");
  EXPECT_EQ(key_of_error(negative_p0), "p0");
  EXPECT_EQ(key_of_error(std::string(kMinimal) + "pd = 0.05\n"), "pd");
  std::string zero_rate = kMinimal;
  zero_rate.replace(zero_rate.find("0.1,0.3,0.5"), 11, "0.1,0,0.5");
  EXPECT_EQ(key_of_error(zero_rate), "secrecy_rates");
}

TEST(ParseConfig, GridMustBeStrictlyIncreasing) {
  std::string text = kMinimal;
  text.replace(text.find("-5, 0, 5"), 8, "0, 0, 5");
  EXPECT_EQ(key_of_error(text), "snr_grid_db");
}

TEST(ParseConfig, BadNumberRejected) {
  std::string text = kMinimal;
  text.replace(text.find("trials = 200"), 12, "trials = 2e5");
  EXPECT_EQ(key_of_error(text), "trials");
}

TEST(Describe, RoundTripsThroughParser) {
  const ExperimentSpec spec = load_config(kPresets / "fig5.cfg");
  const ExperimentSpec again = parse(describe(spec));
  EXPECT_EQ(again.params, spec.params);
  EXPECT_EQ(again.schemes, spec.schemes);
  EXPECT_EQ(again.snr_grid_db, spec.snr_grid_db);
  EXPECT_EQ(again.relay_counts, spec.relay_counts);
  EXPECT_EQ(again.secrecy_rates, spec.secrecy_rates);
  EXPECT_EQ(again.trials, spec.trials);
  EXPECT_EQ(again.seed, spec.seed);
  EXPECT_EQ(again.output_path, spec.output_path);
}

TEST(WorkerCount, EnvironmentOverride) {
  ::setenv(kWorkersEnv, "3", 1);
  EXPECT_EQ(default_worker_count(), 3u);
  ::setenv(kWorkersEnv, "zero", 1);
  EXPECT_THROW(default_worker_count(), ConfigError);
  ::setenv(kWorkersEnv, "0", 1);
  EXPECT_THROW(default_worker_count(), ConfigError);
  ::unsetenv(kWorkersEnv);
  EXPECT_GE(default_worker_count(), 1u);
}
