#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "socreal/probability.hpp"

namespace socreal {

inline constexpr int kLevels = 6;
inline constexpr std::size_t kNumBodyStates = kLevels * kLevels;
inline constexpr std::size_t kNumActions = 5;

/// Probability that a drift-prone action also moves temperature away from
/// the middle of the scale.
inline constexpr double kDriftProbability = 0.2;

enum class Action : std::size_t { Cool = 0, Warm = 1, Eat = 2, Play = 3, Sleep = 4 };

inline constexpr std::array<Action, kNumActions> kAllActions = {Action::Cool, Action::Warm, Action::Eat,
                                                                 Action::Play, Action::Sleep};

std::string_view action_name(Action a);
Action action_from_index(std::size_t index);
std::optional<Action> parse_action(std::string_view name);

/// Interoceptive (energy, temperature) pair, both on a 0..5 scale.
struct BodyState {
  int energy = 0;
  int temperature = 0;

  BodyState() = default;
  /// Throws std::out_of_range if either coordinate is outside [0, 5].
  BodyState(int energy, int temperature);

  bool operator==(const BodyState&) const = default;
};

/// Observation / state index: 6 * energy + temperature.
std::size_t encode_index(const BodyState& s);
OneHot encode(const BodyState& s);
BodyState decode(std::size_t index);

/// Exact successor distribution of `step` from `s` under `a`.
/// Entries are (successor, probability); at most two, merged when equal.
std::vector<std::pair<BodyState, double>> successors(const BodyState& s, Action a);

/// One stochastic transition. Consumes exactly one uniform draw for the
/// drift-prone actions (Eat, Play, Sleep) and none for Cool/Warm.
BodyState step(const BodyState& s, Action a, Rng& rng);

/// B_a[s', s] = P(s' | s, a) for each action, in Action order.
std::vector<StochasticMatrix> true_transitions();

/// One embodied agent's ground-truth body.
class BodyEnv {
public:
  BodyEnv(BodyState initial, Rng rng);

  /// Initial state drawn uniformly over all 36 cells from `rng`.
  static BodyEnv random_start(Rng rng);

  const BodyState& state() const { return state_; }
  OneHot observe() const { return encode(state_); }
  const BodyState& act(Action a);

private:
  BodyState state_;
  Rng rng_;
};

}  // namespace socreal
