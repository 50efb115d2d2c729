#include "cogsec/model.hpp"

#include <cmath>

namespace cogsec {

namespace {

void require_probability(double value, const char* field) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw ParamError(field, "probability must lie in [0, 1]");
  }
}

void require_positive_variance(double value, const char* field) {
  if (!(std::isfinite(value) && value > 0.0)) {
    throw ParamError(field, "variance must be finite and strictly positive");
  }
}

void require_finite(double value, const char* field) {
  if (!std::isfinite(value)) {
    throw ParamError(field, "value must be finite");
  }
}

}  // namespace

double db_to_linear(double x_db) {
  if (!std::isfinite(x_db)) {
    throw std::invalid_argument("db_to_linear: input must be finite");
  }
  return std::pow(10.0, x_db / 10.0);
}

ValidatedParams::ValidatedParams(const SystemParams& params)
    : params_(params),
      gamma_s_(db_to_linear(params.gamma_s_db)),
      gamma_p_(db_to_linear(params.gamma_p_db)) {}

ValidatedParams validate(const SystemParams& p) {
  require_probability(p.p0, "p0");
  require_probability(p.pd, "pd");
  require_probability(p.pf, "pf");
  if (p.pd < p.pf) {
    throw ParamError("pd", "detection probability below false-alarm probability");
  }
  if (p.p0 * (1.0 - p.pf) + (1.0 - p.p0) * (1.0 - p.pd) <= 0.0) {
    throw ParamError("pf", "band is never detected idle (Pr(H0_hat) = 0)");
  }

  require_finite(p.gamma_s_db, "gamma_s_db");
  require_finite(p.gamma_p_db, "gamma_p_db");

  const LinkBudget& l = p.links;
  require_positive_variance(l.sigma2_sd, "sigma2_sd");
  require_positive_variance(l.sigma2_se, "sigma2_se");
  require_positive_variance(l.sigma2_pd, "sigma2_pd");
  require_positive_variance(l.sigma2_pe, "sigma2_pe");
  require_positive_variance(l.sigma2_si, "sigma2_si");
  require_positive_variance(l.sigma2_id, "sigma2_id");
  require_positive_variance(l.sigma2_pi, "sigma2_pi");
  require_positive_variance(l.sigma2_ie, "sigma2_ie");

  if (!(std::isfinite(p.secrecy_rate) && p.secrecy_rate > 0.0)) {
    throw ParamError("secrecy_rate", "must be finite and strictly positive");
  }
  return ValidatedParams(p);
}

ValidatedParams validate(const ValidatedParams& params) { return validate(params.raw()); }

ValidatedParams ValidatedParams::with_gamma_s_db(double gamma_s_db) const {
  SystemParams p = params_;
  p.gamma_s_db = gamma_s_db;
  return validate(p);
}

ValidatedParams ValidatedParams::with_relays(std::size_t n_relays) const {
  SystemParams p = params_;
  p.n_relays = n_relays;
  return validate(p);
}

ValidatedParams ValidatedParams::with_secrecy_rate(double secrecy_rate) const {
  SystemParams p = params_;
  p.secrecy_rate = secrecy_rate;
  return validate(p);
}

}  // namespace cogsec
