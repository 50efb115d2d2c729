#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "cogsec/estimator.hpp"

namespace cogsec {

/// One polyline of the plot: all rows sharing (scheme, n_relays, secrecy_rate),
/// ordered by SNR.
struct Curve {
  Scheme scheme = Scheme::direct;
  std::size_t n_relays = 0;
  double secrecy_rate = 0.0;
  std::vector<double> gamma_s_db;
  std::vector<double> estimate;

  std::string label() const;
};

/// Groups rows into curves in order of first appearance.
std::vector<Curve> group_curves(const SweepTable& table);

/// Outage versus SNR on a log-scale y axis. Zero estimates are pinned to the
/// bottom of the axis. Throws std::invalid_argument for an empty table.
std::string render_svg(const SweepTable& table);

/// Reads a sweep CSV and writes its SVG plot. Returns the number of curves.
/// Throws IoError if a file cannot be opened, CsvError for malformed or empty data.
std::size_t emit_plot(const std::filesystem::path& csv_path, const std::filesystem::path& out_path);

}  // namespace cogsec
