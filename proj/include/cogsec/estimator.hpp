#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "cogsec/model.hpp"

namespace cogsec {

enum class Scheme { direct, opportunistic };

std::string_view to_string(Scheme scheme) noexcept;
/// Parses "direct" or "opportunistic"; throws std::invalid_argument otherwise.
Scheme parse_scheme(std::string_view text);

struct Interval {
  double low = 0.0;
  double high = 1.0;
};

/// Monte Carlo estimate of the secrecy outage probability.
/// `estimate * trials == outages`; [ci_low, ci_high] is the 95% Wilson interval.
struct OutageEstimate {
  std::uint64_t outages = 0;
  std::uint64_t trials = 0;
  double estimate = 0.0;
  double ci_low = 0.0;
  double ci_high = 1.0;
  std::uint64_t seed = 0;

  double half_width() const noexcept { return 0.5 * (ci_high - ci_low); }
  bool operator==(const OutageEstimate&) const = default;
};

/// Wilson score interval for a binomial proportion. Throws std::invalid_argument
/// unless 0 <= successes <= trials, trials >= 1 and confidence in (0, 1).
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double confidence = 0.95);

/// Estimates Pr(C_d - C_e < R_s | band detected idle). Trial t draws from
/// RandomStream(seed, t), so the result does not depend on `workers`.
///
/// Throws std::invalid_argument if trials == 0, workers == 0, or the
/// opportunistic scheme is requested with no relays.
OutageEstimate estimate_outage(Scheme scheme, const ValidatedParams& params,
                               std::uint64_t trials, std::uint64_t seed,
                               unsigned workers = 1);

/// Closed-form direct-transmission outage with perfect sensing and no primary
/// interference, c = 2^r_s:
///   1 - exp(-(c - 1) / (gamma_s sigma2_sd)) * sigma2_sd / (sigma2_sd + c sigma2_se)
double direct_outage_closed_form(double gamma_s, double sigma2_sd, double sigma2_se, double r_s);

/// High-SNR limit of direct_outage_closed_form: c sigma2_se / (sigma2_sd + c sigma2_se).
double direct_outage_floor(double sigma2_sd, double sigma2_se, double r_s);

struct SweepRow {
  Scheme scheme = Scheme::direct;
  std::size_t n_relays = 0;  // 0 for the direct scheme
  double secrecy_rate = 0.0;
  double gamma_s_db = 0.0;
  OutageEstimate result;
};

/// Rows ordered by (scheme, n_relays, gamma_s_db, secrecy_rate).
struct SweepTable {
  std::vector<SweepRow> rows;
};

struct SweepPlan {
  std::vector<Scheme> schemes;
  std::vector<double> snr_grid_db;
  std::vector<std::size_t> relay_counts;  // used by the opportunistic scheme only
  std::vector<double> secrecy_rates;      // empty: use the params' secrecy rate
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 1;
};

/// Evaluates every (scheme, relay count, grid point, secrecy rate) combination.
/// Row k of the sorted table is estimated with seed row_seed(plan.seed, k).
SweepTable sweep(const SweepPlan& plan, const ValidatedParams& params, unsigned workers = 1);

std::uint64_t row_seed(std::uint64_t seed, std::uint64_t row_index) noexcept;

}  // namespace cogsec
