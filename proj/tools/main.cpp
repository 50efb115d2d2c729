// cogsec: secrecy outage simulator for cognitive radio transmissions.
//
//   cogsec run --config presets/fig3.cfg [--trials N] [--seed S] [--output out.csv]
//   cogsec plot --input out.csv --output out.svg
//   cogsec oracle --gamma-s-db 10 --rs 0.1 --sigma-sd 1 --sigma-se 0.1
//
// Exit codes: 0 success, 2 configuration/input error, 3 I/O error.

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "cogsec/config.hpp"
#include "cogsec/csv.hpp"
#include "cogsec/estimator.hpp"
#include "cogsec/experiment.hpp"
#include "cogsec/model.hpp"
#include "cogsec/plot.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

int run_command(const std::string& config_path, std::optional<std::uint64_t> trials,
                std::optional<std::uint64_t> seed, std::optional<std::string> output) {
  cogsec::ExperimentSpec spec = cogsec::load_config(config_path);
  if (trials) spec.trials = *trials;
  if (seed) spec.seed = *seed;
  if (output) spec.output_path = *output;
  cogsec::check(spec);

  const unsigned workers = cogsec::default_worker_count();
  std::cerr << "# effective experiment (" << workers << " workers)\n" << cogsec::describe(spec);
  const cogsec::SweepTable table = cogsec::run_experiment(spec, workers);
  std::cerr << fmt::format("# wrote {} rows to {}\n", table.rows.size(), spec.output_path.string());
  return 0;
}

int plot_command(const std::string& input, const std::string& output) {
  const std::size_t curves = cogsec::emit_plot(input, output);
  std::cerr << fmt::format("# wrote {} curves to {}\n", curves, output);
  return 0;
}

int oracle_command(double gamma_s_db, double rs, double sigma_sd, double sigma_se) {
  if (!(rs > 0.0 && sigma_sd > 0.0 && sigma_se > 0.0)) {
    throw std::invalid_argument("--rs, --sigma-sd and --sigma-se must be positive");
  }
  const double gamma_s = cogsec::db_to_linear(gamma_s_db);
  fmt::print("{:.17g}\n", cogsec::direct_outage_closed_form(gamma_s, sigma_sd, sigma_se, rs));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Secrecy outage simulation for cognitive radio with opportunistic relaying"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Run a sweep and write its CSV table");
  std::string config_path;
  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> output;
  run->add_option("--config", config_path, "Experiment configuration file")->required();
  run->add_option("--trials", trials, "Trials per sweep row (overrides the config)");
  run->add_option("--seed", seed, "Base seed (overrides the config)");
  run->add_option("--output", output, "CSV output path (overrides the config)");

  auto* plot = app.add_subcommand("plot", "Render a sweep CSV as an SVG plot");
  std::string plot_input;
  std::string plot_output;
  plot->add_option("--input", plot_input, "Sweep CSV")->required();
  plot->add_option("--output", plot_output, "SVG path")->required();

  auto* oracle = app.add_subcommand(
      "oracle", "Print the closed-form direct-transmission outage (perfect sensing)");
  double gamma_s_db = 0.0;
  double rs = 0.0;
  double sigma_sd = 0.0;
  double sigma_se = 0.0;
  oracle->add_option("--gamma-s-db", gamma_s_db, "Transmit SNR in dB")->required();
  oracle->add_option("--rs", rs, "Secrecy rate, bit/s/Hz")->required();
  oracle->add_option("--sigma-sd", sigma_sd, "Main channel variance")->required();
  oracle->add_option("--sigma-se", sigma_se, "Wiretap channel variance")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*run) return run_command(config_path, trials, seed, output);
    if (*plot) return plot_command(plot_input, plot_output);
    if (*oracle) return oracle_command(gamma_s_db, rs, sigma_sd, sigma_se);
  } catch (const cogsec::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}
