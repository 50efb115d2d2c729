#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cogsec/environment.hpp"
#include "cogsec/model.hpp"
#include "cogsec/secrecy.hpp"

namespace cogsec {

/// End-to-end SINRs of one relay as seen by the destination and the eavesdropper.
struct RelayCandidate {
  std::size_t index = 0;
  double sinr_d = 0.0;
  double sinr_e = 0.0;
};

/// End-to-end amplify-and-forward SINR over source -> relay -> receiver with
/// primary interference at both the relay and the receiver:
///
///   x1 x2 gamma_s / [ x2 (x_p_relay alpha gamma_p + 1) + x1 (x_p_receiver alpha gamma_p + 1) ]
///
/// For alpha = 0 this is gamma_s times the half harmonic mean x1 x2 / (x1 + x2).
/// Returns 0 when both hop powers are 0.
double relay_sinr(double x_first_hop, double x_second_hop, double x_p_relay,
                  double x_p_receiver, bool primary_active, double gamma_s,
                  double gamma_p) noexcept;

/// Destination-driven selection: the candidate with the largest sinr_d, lowest
/// index on ties. sinr_e is never read. Throws std::invalid_argument if empty.
const RelayCandidate& select_best_relay(std::span<const RelayCandidate> candidates);

/// Selection diversity combining: keep the stronger branch.
double sdc_combine(double sinr_a, double sinr_b) noexcept;

/// Destination and eavesdropper SINRs of every relay in the realization.
std::vector<RelayCandidate> relay_candidates(const TrialRealization& trial,
                                             const ValidatedParams& params);

/// Opportunistic AF relaying over two half-slots. Both receivers combine the
/// direct copy with the copy forwarded by the destination-selected relay, and
/// both capacities carry the 1/2 time-sharing factor.
/// Throws std::invalid_argument if the realization has no relays.
SchemeOutcome relaying_trial(const TrialRealization& trial, const ValidatedParams& params);

}  // namespace cogsec
