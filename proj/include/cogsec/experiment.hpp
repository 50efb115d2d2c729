#pragma once

#include <filesystem>

#include "cogsec/config.hpp"
#include "cogsec/estimator.hpp"

namespace cogsec {

inline constexpr const char* kWorkersEnv = "COGSEC_WORKERS";

/// Worker count from COGSEC_WORKERS, or all available cores when unset.
/// Throws ConfigError if the variable is set but not a positive integer.
unsigned default_worker_count();

/// Runs the sweep and writes the CSV to spec.output_path.
/// Throws IoError if the file cannot be written.
SweepTable run_experiment(const ExperimentSpec& spec, unsigned workers);

/// Writes `contents` to `path`, replacing it. Throws IoError on failure.
void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace cogsec
