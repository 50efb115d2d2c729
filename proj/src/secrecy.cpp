#include "cogsec/secrecy.hpp"

#include <cmath>
#include <stdexcept>

namespace cogsec {

double capacity_from_sinr(double sinr) {
  if (!(sinr >= 0.0)) {
    throw std::invalid_argument("capacity_from_sinr: SINR must be non-negative");
  }
  return std::log2(1.0 + sinr);
}

double direct_sinr(double x, double x_p, bool primary_active, double gamma_s,
                   double gamma_p) noexcept {
  const double interference = primary_active ? x_p * gamma_p : 0.0;
  return x * gamma_s / (interference + 1.0);
}

SchemeOutcome make_outcome(double capacity_d, double capacity_e, double secrecy_rate) noexcept {
  return {capacity_d, capacity_e, capacity_d - capacity_e < secrecy_rate};
}

SchemeOutcome direct_trial(const TrialRealization& t, const ValidatedParams& params) {
  const double gs = params.gamma_s();
  const double gp = params.gamma_p();
  const double c_sd = capacity_from_sinr(direct_sinr(t.x_sd, t.x_pd, t.primary_active, gs, gp));
  const double c_se = capacity_from_sinr(direct_sinr(t.x_se, t.x_pe, t.primary_active, gs, gp));
  return make_outcome(c_sd, c_se, params.secrecy_rate());
}

}  // namespace cogsec
