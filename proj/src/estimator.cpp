#include "cogsec/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>

#include <boost/math/distributions/normal.hpp>

#include "cogsec/environment.hpp"
#include "cogsec/relaying.hpp"
#include "cogsec/secrecy.hpp"

namespace cogsec {

std::string_view to_string(Scheme scheme) noexcept {
  switch (scheme) {
    case Scheme::direct:
      return "direct";
    case Scheme::opportunistic:
      return "opportunistic";
  }
  return "unknown";
}

Scheme parse_scheme(std::string_view text) {
  if (text == "direct") return Scheme::direct;
  if (text == "opportunistic") return Scheme::opportunistic;
  throw std::invalid_argument("unknown scheme '" + std::string(text) + "'");
}

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double confidence) {
  if (trials == 0) {
    throw std::invalid_argument("wilson_interval: trials must be >= 1");
  }
  if (successes > trials) {
    throw std::invalid_argument("wilson_interval: successes exceed trials");
  }
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw std::invalid_argument("wilson_interval: confidence must lie in (0, 1)");
  }
  const boost::math::normal_distribution<double> standard;
  const double z = boost::math::quantile(standard, 0.5 + 0.5 * confidence);
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2n = z * z / n;
  const double center = (p + 0.5 * z2n) / (1.0 + z2n);
  const double half = z / (1.0 + z2n) * std::sqrt(p * (1.0 - p) / n + 0.25 * z2n / n);

  Interval ci{std::clamp(center - half, 0.0, p), std::clamp(center + half, p, 1.0)};
  if (successes == 0) ci.low = 0.0;
  if (successes == trials) ci.high = 1.0;
  return ci;
}

namespace {

std::uint64_t count_outages(Scheme scheme, const ValidatedParams& params, std::uint64_t seed,
                            std::uint64_t begin, std::uint64_t end) {
  TrialRealization trial;
  std::uint64_t outages = 0;
  for (std::uint64_t t = begin; t < end; ++t) {
    RandomStream rng(seed, t);
    sample_trial(params, rng, trial);
    const SchemeOutcome outcome =
        scheme == Scheme::direct ? direct_trial(trial, params) : relaying_trial(trial, params);
    outages += outcome.outage ? 1 : 0;
  }
  return outages;
}

}  // namespace

OutageEstimate estimate_outage(Scheme scheme, const ValidatedParams& params,
                               std::uint64_t trials, std::uint64_t seed, unsigned workers) {
  if (trials == 0) {
    throw std::invalid_argument("estimate_outage: trials must be >= 1");
  }
  if (workers == 0) {
    throw std::invalid_argument("estimate_outage: workers must be >= 1");
  }
  if (scheme == Scheme::opportunistic && params.n_relays() == 0) {
    throw std::invalid_argument("estimate_outage: opportunistic relaying needs n_relays >= 1");
  }
  // The direct scheme never reads relay links, so don't draw them.
  const ValidatedParams sampling =
      scheme == Scheme::direct && params.n_relays() != 0 ? params.with_relays(0) : params;

  const std::uint64_t chunks = std::min<std::uint64_t>(workers, trials);
  std::vector<std::uint64_t> partial(chunks, 0);
  auto run_chunk = [&](std::uint64_t k) {
    const std::uint64_t begin = trials * k / chunks;
    const std::uint64_t end = trials * (k + 1) / chunks;
    partial[k] = count_outages(scheme, sampling, seed, begin, end);
  };
  if (chunks == 1) {
    run_chunk(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(chunks);
    for (std::uint64_t k = 0; k < chunks; ++k) pool.emplace_back(run_chunk, k);
  }

  OutageEstimate out;
  out.trials = trials;
  for (std::uint64_t c : partial) out.outages += c;
  out.estimate = static_cast<double>(out.outages) / static_cast<double>(trials);
  const Interval ci = wilson_interval(out.outages, trials, 0.95);
  out.ci_low = ci.low;
  out.ci_high = ci.high;
  out.seed = seed;
  return out;
}

double direct_outage_closed_form(double gamma_s, double sigma2_sd, double sigma2_se, double r_s) {
  const double c = std::exp2(r_s);
  const double no_outage =
      std::exp(-(c - 1.0) / (gamma_s * sigma2_sd)) * sigma2_sd / (sigma2_sd + c * sigma2_se);
  return 1.0 - no_outage;
}

double direct_outage_floor(double sigma2_sd, double sigma2_se, double r_s) {
  const double c = std::exp2(r_s);
  return c * sigma2_se / (sigma2_sd + c * sigma2_se);
}

std::uint64_t row_seed(std::uint64_t seed, std::uint64_t row_index) noexcept {
  return mix64(mix64(seed + 0x632be59bd9b4e019ULL) ^ row_index);
}

SweepTable sweep(const SweepPlan& plan, const ValidatedParams& params, unsigned workers) {
  if (plan.snr_grid_db.empty()) {
    throw std::invalid_argument("sweep: SNR grid is empty");
  }
  if (plan.schemes.empty()) {
    throw std::invalid_argument("sweep: no schemes requested");
  }
  const bool wants_relaying = std::find(plan.schemes.begin(), plan.schemes.end(),
                                        Scheme::opportunistic) != plan.schemes.end();
  if (wants_relaying && plan.relay_counts.empty()) {
    throw std::invalid_argument("sweep: opportunistic scheme needs at least one relay count");
  }
  // Duplicate list entries collapse to one row.
  std::vector<double> rates = plan.secrecy_rates;
  if (rates.empty()) rates.push_back(params.secrecy_rate());
  std::sort(rates.begin(), rates.end());
  rates.erase(std::unique(rates.begin(), rates.end()), rates.end());
  std::vector<double> grid = plan.snr_grid_db;
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  std::vector<std::size_t> relay_counts = plan.relay_counts;
  std::sort(relay_counts.begin(), relay_counts.end());
  relay_counts.erase(std::unique(relay_counts.begin(), relay_counts.end()), relay_counts.end());

  SweepTable table;
  auto add_rows = [&](Scheme scheme, std::size_t n_relays) {
    for (double rate : rates) {
      for (double snr : grid) {
        table.rows.push_back({scheme, n_relays, rate, snr, {}});
      }
    }
  };
  std::vector<Scheme> schemes = plan.schemes;
  std::sort(schemes.begin(), schemes.end());
  schemes.erase(std::unique(schemes.begin(), schemes.end()), schemes.end());
  for (Scheme scheme : schemes) {
    if (scheme == Scheme::direct) {
      add_rows(scheme, 0);
    } else {
      for (std::size_t n : relay_counts) {
        if (n == 0) throw std::invalid_argument("sweep: relay counts must be positive");
        add_rows(scheme, n);
      }
    }
  }
  std::sort(table.rows.begin(), table.rows.end(), [](const SweepRow& a, const SweepRow& b) {
    return std::tie(a.scheme, a.n_relays, a.gamma_s_db, a.secrecy_rate) <
           std::tie(b.scheme, b.n_relays, b.gamma_s_db, b.secrecy_rate);
  });

  for (std::size_t k = 0; k < table.rows.size(); ++k) {
    SweepRow& row = table.rows[k];
    const ValidatedParams point = validate([&] {
      SystemParams p = params.raw();
      p.gamma_s_db = row.gamma_s_db;
      p.n_relays = row.n_relays;
      p.secrecy_rate = row.secrecy_rate;
      return p;
    }());
    row.result = estimate_outage(row.scheme, point, plan.trials, row_seed(plan.seed, k), workers);
  }
  return table;
}

}  // namespace cogsec
