#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <vector>

#include "cogsec/model.hpp"

namespace cogsec {

/// Deterministic random stream keyed by (seed, stream_id).
///
/// The key is hashed with splitmix64 into the state of a xoshiro256** engine,
/// so each trial index gets its own sequence and no state is shared between
/// trials. The draw sequence is a pure function of the key and is identical on
/// every platform (no std:: distributions are involved).
class RandomStream {
 public:
  using result_type = std::uint64_t;

  RandomStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept;

  /// Uniform on [0, 1) with 53 bits of resolution.
  double uniform() noexcept;

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::array<std::uint64_t, 4> state_;
};

/// splitmix64 finalizer; used for stream keys and per-row seed derivation.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// One Monte Carlo draw of every channel power plus the primary occupancy.
/// Per-relay vectors all have length n_relays.
struct TrialRealization {
  double x_sd = 0.0;
  double x_se = 0.0;
  double x_pd = 0.0;
  double x_pe = 0.0;
  std::vector<double> x_si;
  std::vector<double> x_id;
  std::vector<double> x_pi;
  std::vector<double> x_ie;
  bool primary_active = false;  // alpha

  std::size_t n_relays() const noexcept { return x_si.size(); }
};

/// Exponential variate with the given mean (|h|^2 of a Rayleigh channel).
double sample_channel_power(double variance, RandomStream& rng) noexcept;

/// Pr(primary active | band detected idle). Throws std::invalid_argument if the
/// band is never detected idle or an input is not a probability.
double posterior_busy_given_detected_idle(double p0, double pd, double pf);

/// Draws alpha conditioned on the band having been detected idle.
bool sample_interference_state(const ValidatedParams& params, RandomStream& rng) noexcept;

/// Draws a full realization. `out` is reused to avoid reallocating per trial.
void sample_trial(const ValidatedParams& params, RandomStream& rng, TrialRealization& out);
TrialRealization sample_trial(const ValidatedParams& params, RandomStream& rng);

}  // namespace cogsec
