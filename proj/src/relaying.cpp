#include "cogsec/relaying.hpp"

#include <algorithm>
#include <stdexcept>

namespace cogsec {

double relay_sinr(double x_first_hop, double x_second_hop, double x_p_relay,
                  double x_p_receiver, bool primary_active, double gamma_s,
                  double gamma_p) noexcept {
  const double x1 = x_first_hop;
  const double x2 = x_second_hop;
  const double relay_impairment = primary_active ? x_p_relay * gamma_p + 1.0 : 1.0;
  const double receiver_impairment = primary_active ? x_p_receiver * gamma_p + 1.0 : 1.0;
  const double denom = x2 * relay_impairment + x1 * receiver_impairment;
  if (denom == 0.0) {
    return 0.0;
  }
  return x1 * x2 * gamma_s / denom;
}

const RelayCandidate& select_best_relay(std::span<const RelayCandidate> candidates) {
  if (candidates.empty()) {
    throw std::invalid_argument("select_best_relay: no candidates");
  }
  // max_element returns the first of equal maxima.
  return *std::max_element(candidates.begin(), candidates.end(),
                           [](const RelayCandidate& a, const RelayCandidate& b) {
                             return a.sinr_d < b.sinr_d;
                           });
}

double sdc_combine(double sinr_a, double sinr_b) noexcept { return std::max(sinr_a, sinr_b); }

std::vector<RelayCandidate> relay_candidates(const TrialRealization& t,
                                             const ValidatedParams& params) {
  const double gs = params.gamma_s();
  const double gp = params.gamma_p();
  std::vector<RelayCandidate> out;
  out.reserve(t.n_relays());
  for (std::size_t i = 0; i < t.n_relays(); ++i) {
    out.push_back({i, relay_sinr(t.x_si[i], t.x_id[i], t.x_pi[i], t.x_pd, t.primary_active, gs, gp),
                   relay_sinr(t.x_si[i], t.x_ie[i], t.x_pi[i], t.x_pe, t.primary_active, gs, gp)});
  }
  return out;
}

SchemeOutcome relaying_trial(const TrialRealization& t, const ValidatedParams& params) {
  const std::size_t n = t.n_relays();
  if (n == 0) {
    throw std::invalid_argument("relaying_trial: realization has no relays; use direct_trial");
  }
  const double gs = params.gamma_s();
  const double gp = params.gamma_p();
  const bool alpha = t.primary_active;

  // Running argmax instead of a candidate vector; same tie rule as select_best_relay.
  RelayCandidate best{0, -1.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    const double sinr_d = relay_sinr(t.x_si[i], t.x_id[i], t.x_pi[i], t.x_pd, alpha, gs, gp);
    if (sinr_d > best.sinr_d) {
      best = {i, sinr_d, 0.0};
    }
  }
  best.sinr_e = relay_sinr(t.x_si[best.index], t.x_ie[best.index], t.x_pi[best.index], t.x_pe,
                           alpha, gs, gp);

  const double combined_d = sdc_combine(direct_sinr(t.x_sd, t.x_pd, alpha, gs, gp), best.sinr_d);
  const double combined_e = sdc_combine(direct_sinr(t.x_se, t.x_pe, alpha, gs, gp), best.sinr_e);
  return make_outcome(0.5 * capacity_from_sinr(combined_d), 0.5 * capacity_from_sinr(combined_e),
                      params.secrecy_rate());
}

}  // namespace cogsec
