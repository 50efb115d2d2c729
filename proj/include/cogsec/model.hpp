#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace cogsec {

/// Raised when a scenario parameter violates one of its invariants.
/// `field()` names the offending parameter (e.g. "p0", "sigma2_se").
class ParamError : public std::invalid_argument {
 public:
  ParamError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Mean channel powers (Rayleigh variances) of every link class.
/// Relay-class values are shared by all relays.
struct LinkBudget {
  double sigma2_sd = 1.0;  // source -> destination
  double sigma2_se = 0.1;  // source -> eavesdropper
  double sigma2_pd = 0.2;  // primary -> destination
  double sigma2_pe = 0.2;  // primary -> eavesdropper
  double sigma2_si = 1.0;  // source -> relay
  double sigma2_id = 1.0;  // relay -> destination
  double sigma2_pi = 0.2;  // primary -> relay
  double sigma2_ie = 0.1;  // relay -> eavesdropper

  bool operator==(const LinkBudget&) const = default;
};

/// Scenario constants. Defaults are the sensing boundary values of IEEE 802.22
/// (pd = 0.9, pf = 0.1) and the link budget of the relaying experiment.
struct SystemParams {
  double p0 = 0.8;          // prior probability the band is idle
  double pd = 0.9;          // detection probability
  double pf = 0.1;          // false-alarm probability
  double gamma_s_db = 0.0;  // cognitive transmit SNR, dB
  double gamma_p_db = 5.0;  // primary transmit SNR, dB
  LinkBudget links;
  std::size_t n_relays = 0;
  double secrecy_rate = 0.1;  // bit/s/Hz

  bool operator==(const SystemParams&) const = default;
};

/// Converts a decibel value to a linear ratio. Throws std::invalid_argument on
/// non-finite input.
double db_to_linear(double x_db);

class ValidatedParams;

ValidatedParams validate(const SystemParams& params);
ValidatedParams validate(const ValidatedParams& params);

/// A SystemParams that is known to satisfy every invariant, with the linear
/// SNRs precomputed. Only obtainable through `validate`.
class ValidatedParams {
 public:
  const SystemParams& raw() const noexcept { return params_; }
  const LinkBudget& links() const noexcept { return params_.links; }

  double gamma_s() const noexcept { return gamma_s_; }
  double gamma_p() const noexcept { return gamma_p_; }
  std::size_t n_relays() const noexcept { return params_.n_relays; }
  double secrecy_rate() const noexcept { return params_.secrecy_rate; }

  // Re-validated copies with one field changed.
  ValidatedParams with_gamma_s_db(double gamma_s_db) const;
  ValidatedParams with_relays(std::size_t n_relays) const;
  ValidatedParams with_secrecy_rate(double secrecy_rate) const;

  bool operator==(const ValidatedParams&) const = default;

 private:
  explicit ValidatedParams(const SystemParams& params);

  SystemParams params_;
  double gamma_s_;
  double gamma_p_;

  friend ValidatedParams validate(const SystemParams&);
};

}  // namespace cogsec
