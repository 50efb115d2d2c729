#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "cogsec/estimator.hpp"

namespace cogsec {

inline constexpr const char* kCsvHeader =
    "scheme,n_relays,secrecy_rate,gamma_s_db,trials,outages,estimate,ci_low,ci_high,seed";

/// Malformed sweep CSV; `line()` is 1-based.
class CsvError : public std::runtime_error {
 public:
  CsvError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Header plus one line per row. Reals use 17 significant digits, so
/// parse_csv(format_csv(t)) reproduces every double exactly.
std::string format_csv(const SweepTable& table);

/// Throws CsvError on a wrong header, wrong field count or unparsable field.
/// An empty data section is accepted here; callers decide whether it is an error.
SweepTable parse_csv(std::istream& in);

}  // namespace cogsec
