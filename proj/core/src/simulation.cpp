#include "socreal/simulation.hpp"

#include <stdexcept>

namespace socreal {

AcceptanceWindow::AcceptanceWindow(std::size_t width) : width_(width) {
  if (width_ == 0) throw std::invalid_argument("AcceptanceWindow: width must be positive");
}

void AcceptanceWindow::push(bool accepted) {
  window_.push_back(accepted);
  if (accepted) ++accepted_;
  if (window_.size() > width_) {
    if (window_.front()) --accepted_;
    window_.pop_front();
  }
}

double AcceptanceWindow::rate() const {
  if (window_.empty()) return 0.0;
  return static_cast<double>(accepted_) / static_cast<double>(window_.size());
}

namespace {

Rng stream(const RunConfig& cfg, Stream s) { return Rng(cfg.seed, static_cast<std::uint64_t>(s)); }

AgentModel make_agent(const RunConfig& cfg, double temperature_target) {
  AgentConfig ac;
  ac.num_obs = cfg.num_obs;
  ac.num_states = cfg.num_states;
  ac.num_actions = cfg.num_actions;
  ac.initial_count = cfg.initial_count;
  ac.preference.energy_target = cfg.energy_target;
  ac.preference.energy_sharpness = cfg.energy_sharpness;
  ac.preference.temperature_sharpness = cfg.temperature_sharpness;
  ac.preference.temperature_target = temperature_target;
  return init_agent(ac);
}

const RunConfig& validated(const RunConfig& cfg) {
  cfg.validate();
  return cfg;
}

// First percept: posterior from the initial prior and the first observation.
void perceive_initial(AgentModel& model, const BodyEnv& env) {
  const auto& A = model.likelihood();
  const auto obs = env.observe();
  std::vector<double> log_post(model.num_states());
  for (std::size_t s = 0; s < log_post.size(); ++s)
    log_post[s] = safe_log(A(obs.index, s)) + safe_log(model.initial_prior()[s]);
  model.set_posterior(softmax(log_post));
}

}  // namespace

Simulation::Simulation(const RunConfig& cfg)
    : cfg_(validated(cfg)),
      envs_{BodyEnv::random_start(stream(cfg, Stream::EnvA)), BodyEnv::random_start(stream(cfg, Stream::EnvB))},
      agents_{make_agent(cfg, cfg.temperature_target_A), make_agent(cfg, cfg.temperature_target_B)},
      agent_rngs_{stream(cfg, Stream::AgentA), stream(cfg, Stream::AgentB)},
      game_rng_(stream(cfg, Stream::Game)),
      interp_(SharedInterpretation::uniform(cfg.num_actions, cfg.num_symbols)),
      window_(cfg.acceptance_window) {
  for (std::size_t id : {kAgentA, kAgentB}) perceive_initial(agents_[id], envs_[id]);
}

double Simulation::preference_divergence() const {
  return js_divergence(agents_[kAgentA].preference(), agents_[kAgentB].preference());
}

StepLog Simulation::next_exchange() {
  if (finished()) throw std::logic_error("Simulation::next_exchange: run already finished");

  StepLog log;
  log.step = step_;
  log.exchange = exchange_in_step_;
  if (cfg_.role_scheme == RoleScheme::DoubleExchange)
    log.listener = exchange_in_step_ == 0 ? kAgentA : kAgentB;
  else
    log.listener = step_ % 2 == 0 ? kAgentA : kAgentB;
  log.speaker = 1 - log.listener;
  log.phase = phase(step_, cfg_.learning);

  AgentModel& listener = agents_[log.listener];
  AgentModel& speaker = agents_[log.speaker];

  const EfeVector g_listener = expected_free_energy(listener);
  const Categorical xi_listener = symbol_distribution(symbol_scores(g_listener.total, interp_));
  const Categorical xi_speaker = infer_symbol_distribution(speaker, interp_);

  log.outcome = exchange(xi_speaker, xi_listener, game_rng_);
  log.action = select_action(interp_, log.outcome.used_symbol, agent_rngs_[log.listener]);

  envs_[log.listener].act(action_from_index(log.action));
  const OneHot obs = envs_[log.listener].observe();
  const Categorical phi = infer_state(listener, obs, log.action);
  update_likelihood_counts(listener, obs, phi);

  log.gate_speaker = preference_gate_open(speaker, cfg_.learning);
  if (log.phase == Phase::Preference) {
    if (!log.outcome.accepted)
      log.preference_updated = update_preference(speaker, interp_, log.outcome.listener_symbol,
                                                 log.outcome.speaker_symbol, cfg_.learning);
  } else {
    update_interpretation(interp_, log.outcome.used_symbol, g_listener.total, cfg_.learning);
  }

  window_.push(log.outcome.accepted);
  log.body = {envs_[kAgentA].state(), envs_[kAgentB].state()};
  log.jsd_C = preference_divergence();
  log.acceptance_rate = window_.rate();
  for (std::size_t id : {kAgentA, kAgentB})
    log.mean_likelihood_entropy[id] = agents_[id].mean_likelihood_entropy();

  if (++exchange_in_step_ == cfg_.exchanges_per_step()) {
    exchange_in_step_ = 0;
    ++step_;
  }
  return log;
}

std::vector<StepLog> Simulation::next_step() {
  std::vector<StepLog> logs;
  const std::uint64_t current = step_;
  while (!finished() && step_ == current) logs.push_back(next_exchange());
  return logs;
}

}  // namespace socreal
