#pragma once

#include "cogsec/environment.hpp"
#include "cogsec/model.hpp"

namespace cogsec {

/// Per-trial capacities of a transmission scheme and its secrecy outage verdict.
/// `outage` is exactly `capacity_d - capacity_e < secrecy_rate`.
struct SchemeOutcome {
  double capacity_d = 0.0;  // bit/s/Hz at the destination
  double capacity_e = 0.0;  // bit/s/Hz at the eavesdropper
  bool outage = false;
};

/// log2(1 + sinr). Throws std::invalid_argument for negative or NaN input.
double capacity_from_sinr(double sinr);

/// Single-hop SINR under optional primary interference:
/// x * gamma_s / (alpha * x_p * gamma_p + 1).
double direct_sinr(double x, double x_p, bool primary_active, double gamma_s,
                   double gamma_p) noexcept;

/// Builds the outcome from the two capacities; the single place the outage
/// predicate is evaluated.
SchemeOutcome make_outcome(double capacity_d, double capacity_e, double secrecy_rate) noexcept;

/// Direct source -> destination transmission overheard by the eavesdropper.
SchemeOutcome direct_trial(const TrialRealization& trial, const ValidatedParams& params);

}  // namespace cogsec
