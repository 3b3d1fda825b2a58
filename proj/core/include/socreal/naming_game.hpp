#pragma once

#include <cstddef>

#include "socreal/probability.hpp"

namespace socreal {

/// Result of one speaker -> listener proposal.
struct ExchangeOutcome {
  std::size_t speaker_symbol = 0;
  std::size_t listener_symbol = 0;
  std::size_t used_symbol = 0;
  bool accepted = false;
  double acceptance_ratio = 1.0;
};

/// Speaker's proposal, drawn from its own symbol distribution.
std::size_t propose(const Categorical& xi_speaker, Rng& rng);

/// xi_li[w_sp] / xi_li[w_li], both floored at kLogFloor. Uses the listener's
/// distribution only; the speaker's proposal probabilities cancel against the
/// product-of-experts target, as does its normalizer.
double acceptance_ratio(const Categorical& xi_listener, std::size_t w_sp, std::size_t w_li);

/// Accept/reject step for a proposal against the listener's current sample.
/// Consumes exactly one uniform draw, also when the symbols coincide.
ExchangeOutcome decide(const Categorical& xi_listener, std::size_t w_sp, std::size_t w_li, Rng& rng);

/// Full exchange: w_sp ~ xi_speaker, w_li ~ xi_listener, then `decide`.
/// Draw order on `rng`: proposal, listener sample, acceptance uniform.
ExchangeOutcome exchange(const Categorical& xi_speaker, const Categorical& xi_listener, Rng& rng);

}  // namespace socreal
