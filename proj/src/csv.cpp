#include "cogsec/csv.hpp"

#include <charconv>
#include <istream>
#include <vector>

#include <fmt/format.h>

namespace cogsec {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  while (true) {
    const auto comma = line.find(',');
    fields.push_back(line.substr(0, comma));
    if (comma == std::string_view::npos) break;
    line.remove_prefix(comma + 1);
  }
  return fields;
}

template <typename T>
T parse_field(std::size_t line, std::string_view name, std::string_view text) {
  T value{};
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw CsvError(line, fmt::format("cannot parse {} from '{}'", name, text));
  }
  return value;
}

}  // namespace

std::string format_csv(const SweepTable& table) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const SweepRow& row : table.rows) {
    const OutageEstimate& r = row.result;
    out += fmt::format("{},{},{:.17g},{:.17g},{},{},{:.17g},{:.17g},{:.17g},{}\n",
                       to_string(row.scheme), row.n_relays, row.secrecy_rate, row.gamma_s_db,
                       r.trials, r.outages, r.estimate, r.ci_low, r.ci_high, r.seed);
  }
  return out;
}

SweepTable parse_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) {
    throw CsvError(line_no, "missing header");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) {
    throw CsvError(line_no, "unexpected header '" + line + "'");
  }

  SweepTable table;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split_fields(line);
    if (f.size() != 10) {
      throw CsvError(line_no, fmt::format("expected 10 fields, found {}", f.size()));
    }
    SweepRow row;
    try {
      row.scheme = parse_scheme(f[0]);
    } catch (const std::invalid_argument& e) {
      throw CsvError(line_no, e.what());
    }
    row.n_relays = parse_field<std::size_t>(line_no, "n_relays", f[1]);
    row.secrecy_rate = parse_field<double>(line_no, "secrecy_rate", f[2]);
    row.gamma_s_db = parse_field<double>(line_no, "gamma_s_db", f[3]);
    OutageEstimate& r = row.result;
    r.trials = parse_field<std::uint64_t>(line_no, "trials", f[4]);
    r.outages = parse_field<std::uint64_t>(line_no, "outages", f[5]);
    r.estimate = parse_field<double>(line_no, "estimate", f[6]);
    r.ci_low = parse_field<double>(line_no, "ci_low", f[7]);
    r.ci_high = parse_field<double>(line_no, "ci_high", f[8]);
    r.seed = parse_field<std::uint64_t>(line_no, "seed", f[9]);
    if (r.outages > r.trials) {
      throw CsvError(line_no, "outages exceed trials");
    }
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace cogsec
