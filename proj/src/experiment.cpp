#include "cogsec/experiment.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <string_view>
#include <thread>

#include "cogsec/csv.hpp"

namespace cogsec {

unsigned default_worker_count() {
  if (const char* env = std::getenv(kWorkersEnv); env != nullptr && *env != '\0') {
    const std::string_view text(env);
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
      throw ConfigError(kWorkersEnv, "must be a positive integer, got '" + std::string(text) + "'");
    }
    return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open '" + path.string() + "' for writing");
  }
  out << contents;
  out.close();
  if (!out) {
    throw IoError("failed writing '" + path.string() + "'");
  }
}

SweepTable run_experiment(const ExperimentSpec& spec, unsigned workers) {
  check(spec);
  const ValidatedParams params = [&] {
    try {
      return validate(spec.params);
    } catch (const ParamError& e) {
      throw ConfigError(e.field(), e.what());
    }
  }();
  // Fail on an unwritable destination before spending time on the sweep.
  {
    std::ofstream probe(spec.output_path, std::ios::binary | std::ios::app);
    if (!probe) {
      throw IoError("cannot open '" + spec.output_path.string() + "' for writing");
    }
  }
  SweepTable table = sweep(spec.plan(), params, workers);
  write_file(spec.output_path, format_csv(table));
  return table;
}

}  // namespace cogsec
