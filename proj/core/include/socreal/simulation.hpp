#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <vector>

#include "socreal/body_env.hpp"
#include "socreal/config.hpp"
#include "socreal/generative_model.hpp"
#include "socreal/learning.hpp"
#include "socreal/naming_game.hpp"
#include "socreal/policy.hpp"

namespace socreal {

inline constexpr std::size_t kAgentA = 0;
inline constexpr std::size_t kAgentB = 1;

/// Indices of the independent random streams derived from the run seed.
enum class Stream : std::uint64_t { EnvA = 0, EnvB = 1, AgentA = 2, AgentB = 3, Game = 4 };

/// One row of the per-exchange log.
struct StepLog {
  std::uint64_t step = 0;
  std::size_t exchange = 0;  // index within the step
  std::size_t listener = 0;
  std::size_t speaker = 0;
  ExchangeOutcome outcome;
  std::size_t action = 0;
  std::array<BodyState, 2> body;
  double jsd_C = 0.0;
  double acceptance_rate = 0.0;
  std::array<double, 2> mean_likelihood_entropy{};
  Phase phase = Phase::Interpretation;
  bool gate_speaker = false;
  bool preference_updated = false;
};

/// Trailing-window acceptance rate.
class AcceptanceWindow {
public:
  explicit AcceptanceWindow(std::size_t width);
  void push(bool accepted);
  /// accepted / recorded over the trailing window; 0 when empty.
  double rate() const;

private:
  std::size_t width_;
  std::size_t accepted_ = 0;
  std::deque<bool> window_;
};

/// State of a two-agent run, advanced one exchange at a time.
///
/// Per exchange the listener: computes both symbol distributions, plays one
/// naming-game round against the speaker's proposal, draws an action from
/// the adopted symbol, moves its body, updates its posterior and likelihood
/// counts. Then, depending on the phase, either the rejected speaker adapts
/// its preference or the shared interpretation of the adopted symbol is
/// pulled toward the listener's expected-free-energy ranking of actions.
class Simulation {
public:
  /// Validates `cfg`; throws std::invalid_argument on violations.
  explicit Simulation(const RunConfig& cfg);

  const RunConfig& config() const { return cfg_; }
  const AgentModel& agent(std::size_t id) const { return agents_.at(id); }
  const BodyEnv& body(std::size_t id) const { return envs_.at(id); }
  const SharedInterpretation& interpretation() const { return interp_; }

  /// Number of completed steps.
  std::uint64_t steps_done() const { return step_; }
  bool finished() const { return step_ >= cfg_.total_steps; }

  /// Performs the next exchange. Precondition: !finished().
  StepLog next_exchange();
  /// Performs all exchanges of the next step.
  std::vector<StepLog> next_step();

  double preference_divergence() const;

private:
  RunConfig cfg_;
  std::array<BodyEnv, 2> envs_;
  std::array<AgentModel, 2> agents_;
  std::array<Rng, 2> agent_rngs_;
  Rng game_rng_;
  SharedInterpretation interp_;
  AcceptanceWindow window_;
  std::uint64_t step_ = 0;
  std::size_t exchange_in_step_ = 0;
};

}  // namespace socreal
