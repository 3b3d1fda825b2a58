#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "socreal/generative_model.hpp"
#include "socreal/policy.hpp"
#include "socreal/probability.hpp"

namespace socreal {

enum class Phase { Preference, Interpretation };

std::string_view phase_name(Phase p);  // "C" / "E"

struct LearningConfig {
  double eta_C = 0.1;
  double eta_E = 0.1;
  double tau_E = 1.0;
  /// Preference updates are gated on the updating agent's mean likelihood
  /// column entropy being below this (nats).
  double entropy_threshold = 1.0;
  std::uint64_t phase_length = 100;
  Phase first_phase = Phase::Interpretation;

  /// Throws std::invalid_argument on violated bounds.
  void validate() const;
};

/// Dirichlet update: counts += obs (outer) phi. Total count mass grows by 1.
void update_likelihood_counts(AgentModel& model, const OneHot& obs, const Categorical& phi);

bool preference_gate_open(const AgentModel& model, const LearningConfig& cfg);

/// Moves the rejected speaker's preference scores toward the observations
/// it predicts under the listener's symbol and away from those under its
/// own:  scores += eta_C * (P(o | w_listener) - P(o | w_speaker)).
/// No-op when the entropy gate is closed. Returns whether it applied.
/// The caller is responsible for only invoking this on a rejection during a
/// preference phase.
bool update_preference(AgentModel& speaker, const SharedInterpretation& interp, std::size_t w_listener,
                       std::size_t w_speaker, const LearningConfig& cfg);

/// E[:, w_used] <- (1 - eta_E) E[:, w_used] + eta_E softmax(-g / tau_E).
void update_interpretation(SharedInterpretation& interp, std::size_t w_used, std::span<const double> g,
                           const LearningConfig& cfg);

/// Which parameter is being learned at step t. Phases alternate every
/// phase_length steps, starting with cfg.first_phase.
Phase phase(std::uint64_t t, const LearningConfig& cfg);

}  // namespace socreal
