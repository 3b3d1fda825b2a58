#include "socreal/body_env.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace socreal {

namespace {

constexpr int kMaxLevel = kLevels - 1;

int clamp_level(int v) { return std::clamp(v, 0, kMaxLevel); }

int energy_delta(Action a) {
  switch (a) {
    case Action::Cool:
    case Action::Warm:
    case Action::Play:
      return -1;
    case Action::Eat:
      return 2;
    case Action::Sleep:
      return 0;
  }
  return 0;
}

bool drifts(Action a) { return a == Action::Eat || a == Action::Play || a == Action::Sleep; }

// Temperature drifts away from the middle: down at 0..2, up at 3..5.
int drift_direction(int temperature) { return temperature <= 2 ? -1 : +1; }

}  // namespace

std::string_view action_name(Action a) {
  switch (a) {
    case Action::Cool: return "Cool";
    case Action::Warm: return "Warm";
    case Action::Eat: return "Eat";
    case Action::Play: return "Play";
    case Action::Sleep: return "Sleep";
  }
  return "?";
}

Action action_from_index(std::size_t index) {
  if (index >= kNumActions) throw std::out_of_range("action index " + std::to_string(index));
  return static_cast<Action>(index);
}

std::optional<Action> parse_action(std::string_view name) {
  for (Action a : kAllActions)
    if (action_name(a) == name) return a;
  return std::nullopt;
}

BodyState::BodyState(int energy_, int temperature_) : energy(energy_), temperature(temperature_) {
  if (energy < 0 || energy > kMaxLevel || temperature < 0 || temperature > kMaxLevel)
    throw std::out_of_range("BodyState out of range");
}

std::size_t encode_index(const BodyState& s) {
  return static_cast<std::size_t>(kLevels * s.energy + s.temperature);
}

OneHot encode(const BodyState& s) { return OneHot(encode_index(s), kNumBodyStates); }

BodyState decode(std::size_t index) {
  if (index >= kNumBodyStates) throw std::out_of_range("decode: index out of range");
  const int i = static_cast<int>(index);
  return BodyState(i / kLevels, i % kLevels);
}

std::vector<std::pair<BodyState, double>> successors(const BodyState& s, Action a) {
  const int energy = clamp_level(s.energy + energy_delta(a));
  if (a == Action::Cool) return {{BodyState(energy, clamp_level(s.temperature - 1)), 1.0}};
  if (a == Action::Warm) return {{BodyState(energy, clamp_level(s.temperature + 1)), 1.0}};

  const BodyState stay(energy, s.temperature);
  const BodyState drifted(energy, clamp_level(s.temperature + drift_direction(s.temperature)));
  if (stay == drifted) return {{stay, 1.0}};
  return {{stay, 1.0 - kDriftProbability}, {drifted, kDriftProbability}};
}

BodyState step(const BodyState& s, Action a, Rng& rng) {
  BodyState next(clamp_level(s.energy + energy_delta(a)), s.temperature);
  if (a == Action::Cool) {
    next.temperature = clamp_level(s.temperature - 1);
  } else if (a == Action::Warm) {
    next.temperature = clamp_level(s.temperature + 1);
  } else if (drifts(a) && rng.uniform() < kDriftProbability) {
    next.temperature = clamp_level(s.temperature + drift_direction(s.temperature));
  }
  return next;
}

std::vector<StochasticMatrix> true_transitions() {
  std::vector<StochasticMatrix> out;
  out.reserve(kNumActions);
  for (Action a : kAllActions) {
    Matrix m(kNumBodyStates, kNumBodyStates);
    for (std::size_t from = 0; from < kNumBodyStates; ++from)
      for (const auto& [to, p] : successors(decode(from), a)) m(encode_index(to), from) += p;
    out.emplace_back(std::move(m));
  }
  return out;
}

BodyEnv::BodyEnv(BodyState initial, Rng rng) : state_(initial), rng_(std::move(rng)) {}

BodyEnv BodyEnv::random_start(Rng rng) {
  const BodyState initial = decode(rng.below(kNumBodyStates));
  return BodyEnv(initial, std::move(rng));
}

const BodyState& BodyEnv::act(Action a) {
  state_ = step(state_, a, rng_);
  return state_;
}

}  // namespace socreal
