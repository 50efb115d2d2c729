#include "cogsec/environment.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace cogsec {

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {
  // Two rounds keep (s, t) and (t, s) apart.
  std::uint64_t key = mix64(mix64(seed) ^ stream_id);
  for (auto& word : state_) {
    key = mix64(key);
    word = key;
  }
}

RandomStream::result_type RandomStream::operator()() noexcept {
  // xoshiro256**
  const std::uint64_t result = std::rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = std::rotl(state_[3], 45);
  return result;
}

double RandomStream::uniform() noexcept {
  return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

double sample_channel_power(double variance, RandomStream& rng) noexcept {
  // 1 - u lies in (0, 1], so the log is finite.
  return -variance * std::log1p(-rng.uniform());
}

double posterior_busy_given_detected_idle(double p0, double pd, double pf) {
  for (double p : {p0, pd, pf}) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("posterior_busy_given_detected_idle: probability out of [0, 1]");
    }
  }
  const double busy_missed = (1.0 - p0) * (1.0 - pd);
  const double detected_idle = p0 * (1.0 - pf) + busy_missed;
  if (!(detected_idle > 0.0)) {
    throw std::invalid_argument(
        "posterior_busy_given_detected_idle: band is never detected idle");
  }
  return busy_missed / detected_idle;
}

bool sample_interference_state(const ValidatedParams& params, RandomStream& rng) noexcept {
  const SystemParams& p = params.raw();
  const double busy = (1.0 - p.p0) * (1.0 - p.pd);
  const double posterior = busy / (p.p0 * (1.0 - p.pf) + busy);
  return rng.uniform() < posterior;
}

void sample_trial(const ValidatedParams& params, RandomStream& rng, TrialRealization& out) {
  const LinkBudget& l = params.links();
  const std::size_t n = params.n_relays();

  out.primary_active = sample_interference_state(params, rng);
  out.x_sd = sample_channel_power(l.sigma2_sd, rng);
  out.x_se = sample_channel_power(l.sigma2_se, rng);
  out.x_pd = sample_channel_power(l.sigma2_pd, rng);
  out.x_pe = sample_channel_power(l.sigma2_pe, rng);

  out.x_si.resize(n);
  out.x_id.resize(n);
  out.x_pi.resize(n);
  out.x_ie.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.x_si[i] = sample_channel_power(l.sigma2_si, rng);
    out.x_id[i] = sample_channel_power(l.sigma2_id, rng);
    out.x_pi[i] = sample_channel_power(l.sigma2_pi, rng);
    out.x_ie[i] = sample_channel_power(l.sigma2_ie, rng);
  }
}

TrialRealization sample_trial(const ValidatedParams& params, RandomStream& rng) {
  TrialRealization out;
  sample_trial(params, rng, out);
  return out;
}

}  // namespace cogsec
