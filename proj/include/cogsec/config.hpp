#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "cogsec/estimator.hpp"
#include "cogsec/model.hpp"

namespace cogsec {

/// Bad configuration content (unknown key, missing key, invalid value).
/// `key()` is the offending configuration key when one can be named.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& what)
      : std::runtime_error(key.empty() ? what : key + ": " + what), key_(std::move(key)) {}

  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

/// Unreadable input or unwritable output.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentSpec {
  SystemParams params;
  std::vector<Scheme> schemes;
  std::vector<double> snr_grid_db;         // strictly increasing
  std::vector<std::size_t> relay_counts;   // positive; opportunistic scheme only
  std::vector<double> secrecy_rates;       // positive, bit/s/Hz
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 1;
  std::filesystem::path output_path = "results.csv";

  SweepPlan plan() const;
};

/// Checks list invariants and runs model validation on every secrecy rate.
/// Throws ConfigError naming the key at fault.
void check(const ExperimentSpec& spec);

/// Parses the `key = value` experiment format (lists comma-separated, `#`
/// comments). Unknown keys are rejected. The result has passed `check`.
ExperimentSpec parse_config(std::istream& in);

/// Throws IoError if the file cannot be opened, ConfigError otherwise.
ExperimentSpec load_config(const std::filesystem::path& path);

/// Human-readable dump of the effective experiment, one key per line, in the
/// same format parse_config accepts.
std::string describe(const ExperimentSpec& spec);

}  // namespace cogsec
