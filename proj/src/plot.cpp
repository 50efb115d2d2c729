#include "cogsec/plot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

#include "cogsec/config.hpp"
#include "cogsec/csv.hpp"
#include "cogsec/experiment.hpp"

namespace cogsec {

namespace {

constexpr double kWidth = 760.0;
constexpr double kHeight = 520.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 220.0;
constexpr double kTop = 30.0;
constexpr double kBottom = 60.0;

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

}  // namespace

std::string Curve::label() const {
  if (scheme == Scheme::direct) {
    return fmt::format("direct, Rs={}", secrecy_rate);
  }
  return fmt::format("{} N={}, Rs={}", to_string(scheme), n_relays, secrecy_rate);
}

std::vector<Curve> group_curves(const SweepTable& table) {
  std::vector<Curve> curves;
  for (const SweepRow& row : table.rows) {
    auto it = std::find_if(curves.begin(), curves.end(), [&](const Curve& c) {
      return c.scheme == row.scheme && c.n_relays == row.n_relays &&
             c.secrecy_rate == row.secrecy_rate;
    });
    if (it == curves.end()) {
      curves.push_back({row.scheme, row.n_relays, row.secrecy_rate, {}, {}});
      it = std::prev(curves.end());
    }
    it->gamma_s_db.push_back(row.gamma_s_db);
    it->estimate.push_back(row.result.estimate);
  }
  for (Curve& c : curves) {
    std::vector<std::size_t> order(c.gamma_s_db.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return c.gamma_s_db[a] < c.gamma_s_db[b]; });
    Curve sorted = c;
    for (std::size_t k = 0; k < order.size(); ++k) {
      sorted.gamma_s_db[k] = c.gamma_s_db[order[k]];
      sorted.estimate[k] = c.estimate[order[k]];
    }
    c = std::move(sorted);
  }
  return curves;
}

std::string render_svg(const SweepTable& table) {
  if (table.rows.empty()) {
    throw std::invalid_argument("render_svg: no data rows");
  }
  const std::vector<Curve> curves = group_curves(table);

  double x_min = table.rows.front().gamma_s_db;
  double x_max = x_min;
  double y_min_pos = 1.0;
  for (const SweepRow& row : table.rows) {
    x_min = std::min(x_min, row.gamma_s_db);
    x_max = std::max(x_max, row.gamma_s_db);
    if (row.result.estimate > 0.0) y_min_pos = std::min(y_min_pos, row.result.estimate);
  }
  if (x_max == x_min) {
    x_min -= 1.0;
    x_max += 1.0;
  }
  const int decade_lo = std::min(-1, static_cast<int>(std::floor(std::log10(y_min_pos))));
  const int decade_hi = 0;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * plot_w; };
  auto py = [&](double y) {
    const double ly = y > 0.0 ? std::max(std::log10(y), double(decade_lo)) : double(decade_lo);
    return kTop + (decade_hi - ly) / double(decade_hi - decade_lo) * plot_h;
  };

  std::string svg = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" "
      "viewBox=\"0 0 {0} {1}\" font-family=\"sans-serif\" font-size=\"12\">\n"
      "<rect width=\"{0}\" height=\"{1}\" fill=\"white\"/>\n",
      kWidth, kHeight);

  // Decade gridlines and labels.
  for (int d = decade_lo; d <= decade_hi; ++d) {
    const double y = py(std::pow(10.0, d));
    svg += fmt::format(
        "<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"#ddd\"/>\n"
        "<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"end\">1e{}</text>\n",
        kLeft, y, kLeft + plot_w, y, kLeft - 6, y + 4, d);
  }
  // One x tick per distinct SNR value.
  std::vector<double> xs;
  for (const SweepRow& row : table.rows) xs.push_back(row.gamma_s_db);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  for (double x : xs) {
    svg += fmt::format(
        "<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{0:.2f}\" y2=\"{2:.2f}\" stroke=\"#eee\"/>\n"
        "<text x=\"{0:.2f}\" y=\"{3:.2f}\" text-anchor=\"middle\">{4}</text>\n",
        px(x), kTop, kTop + plot_h, kTop + plot_h + 18, x);
  }
  svg += fmt::format(
      "<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" fill=\"none\" "
      "stroke=\"black\"/>\n",
      kLeft, kTop, plot_w, plot_h);
  svg += fmt::format(
      "<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">SNR gamma_s (dB)</text>\n",
      kLeft + plot_w / 2, kHeight - 15);
  svg += fmt::format(
      "<text x=\"20\" y=\"{0:.2f}\" text-anchor=\"middle\" transform=\"rotate(-90 20 {0:.2f})\">"
      "Secrecy outage probability</text>\n",
      kTop + plot_h / 2);

  for (std::size_t k = 0; k < curves.size(); ++k) {
    const Curve& c = curves[k];
    const char* color = kPalette[k % std::size(kPalette)];
    std::string points;
    for (std::size_t i = 0; i < c.gamma_s_db.size(); ++i) {
      if (i != 0) points += ' ';
      points += fmt::format("{:.2f},{:.2f}", px(c.gamma_s_db[i]), py(c.estimate[i]));
    }
    svg += fmt::format(
        "<polyline class=\"curve\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" "
        "points=\"{}\"/>\n",
        color, points);
    for (std::size_t i = 0; i < c.gamma_s_db.size(); ++i) {
      svg += fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"2.5\" fill=\"{}\"/>\n",
                         px(c.gamma_s_db[i]), py(c.estimate[i]), color);
    }
    const double ly = kTop + 10 + 20.0 * static_cast<double>(k);
    const double lx = kLeft + plot_w + 15;
    svg += fmt::format(
        "<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"{}\" "
        "stroke-width=\"2\"/>\n"
        "<text class=\"legend\" x=\"{:.2f}\" y=\"{:.2f}\">{}</text>\n",
        lx, ly, lx + 20, ly, color, lx + 26, ly + 4, c.label());
  }
  svg += "</svg>\n";
  return svg;
}

std::size_t emit_plot(const std::filesystem::path& csv_path, const std::filesystem::path& out_path) {
  std::ifstream in(csv_path);
  if (!in) {
    throw IoError("cannot open '" + csv_path.string() + "'");
  }
  const SweepTable table = parse_csv(in);
  if (table.rows.empty()) {
    throw CsvError(2, "no data rows in '" + csv_path.string() + "'");
  }
  write_file(out_path, render_svg(table));
  return group_curves(table).size();
}

}  // namespace cogsec
