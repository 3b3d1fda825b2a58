#include "socreal/generative_model.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "socreal/body_env.hpp"
#include "socreal/policy.hpp"

namespace socreal {

std::vector<double> PreferenceTemplate::scores() const {
  std::vector<double> s(kNumBodyStates);
  for (std::size_t i = 0; i < kNumBodyStates; ++i) {
    const BodyState b = decode(i);
    s[i] = -energy_sharpness * std::abs(b.energy - energy_target) -
           temperature_sharpness * std::abs(b.temperature - temperature_target);
  }
  const double mean = std::accumulate(s.begin(), s.end(), 0.0) / static_cast<double>(s.size());
  for (double& x : s) x -= mean;
  return s;
}

AgentModel::AgentModel(Matrix likelihood_counts, std::vector<StochasticMatrix> transitions,
                       std::vector<double> preference_scores, Categorical initial_prior)
    : a_counts_(std::move(likelihood_counts)),
      A_(StochasticMatrix::from_counts(a_counts_)),
      A_entropy_(column_entropies(A_)),
      B_(std::move(transitions)),
      C_scores_(std::move(preference_scores)),
      C_(softmax(C_scores_)),
      D_(std::move(initial_prior)),
      phi_(D_) {
  if (B_.empty()) throw std::invalid_argument("AgentModel: no transition matrices");
  for (const auto& b : B_)
    if (b.rows() != num_states() || b.cols() != num_states())
      throw std::invalid_argument("AgentModel: transition matrix dimension mismatch");
  if (C_.size() != num_obs()) throw std::invalid_argument("AgentModel: preference dimension mismatch");
  if (D_.size() != num_states()) throw std::invalid_argument("AgentModel: initial prior dimension mismatch");
}

void AgentModel::add_likelihood_counts(std::span<const double> obs_weights, std::span<const double> state_weights) {
  if (obs_weights.size() != num_obs() || state_weights.size() != num_states())
    throw std::invalid_argument("add_likelihood_counts: dimension mismatch");
  for (std::size_t o = 0; o < num_obs(); ++o) {
    if (obs_weights[o] == 0.0) continue;
    for (std::size_t s = 0; s < num_states(); ++s) a_counts_(o, s) += obs_weights[o] * state_weights[s];
  }
  A_ = StochasticMatrix::from_counts(a_counts_);
  A_entropy_ = column_entropies(A_);
}

double AgentModel::mean_likelihood_entropy() const {
  return std::accumulate(A_entropy_.begin(), A_entropy_.end(), 0.0) / static_cast<double>(A_entropy_.size());
}

void AgentModel::set_preference_scores(std::vector<double> scores) {
  if (scores.size() != num_obs()) throw std::invalid_argument("set_preference_scores: dimension mismatch");
  C_ = softmax(scores);
  C_scores_ = std::move(scores);
}

void AgentModel::set_posterior(Categorical phi) {
  if (phi.size() != num_states()) throw std::invalid_argument("set_posterior: dimension mismatch");
  phi_ = std::move(phi);
}

AgentModel init_agent(const AgentConfig& cfg) {
  if (cfg.num_obs != kNumBodyStates || cfg.num_states != kNumBodyStates || cfg.num_actions != kNumActions)
    throw std::invalid_argument("init_agent: dimensions must match the body environment (36 obs, 36 states, 5 actions)");
  if (!(cfg.initial_count > 0.0)) throw std::invalid_argument("init_agent: initial_count must be positive");
  return AgentModel(Matrix(cfg.num_obs, cfg.num_states, cfg.initial_count), true_transitions(),
                    cfg.preference.scores(), Categorical::uniform(cfg.num_states));
}

Categorical posterior_given(const AgentModel& model, const Categorical& phi_prev, const OneHot& obs,
                            std::size_t prev_action) {
  if (obs.dim != model.num_obs()) throw std::invalid_argument("infer_state: observation dimension mismatch");
  const auto predicted = model.transition(prev_action).matrix().multiply(phi_prev.values());
  const auto& A = model.likelihood();
  std::vector<double> log_post(model.num_states());
  for (std::size_t s = 0; s < model.num_states(); ++s)
    log_post[s] = safe_log(A(obs.index, s)) + safe_log(predicted[s]);
  return softmax(log_post);
}

Categorical infer_state(AgentModel& model, const OneHot& obs, std::size_t prev_action) {
  auto phi = posterior_given(model, model.posterior(), obs, prev_action);
  model.set_posterior(phi);
  return phi;
}

Categorical predict_obs(const AgentModel& model, std::size_t action) {
  const auto next_state = model.transition(action).apply(model.posterior());
  return model.likelihood().apply(next_state);
}

Categorical predict_obs_given_symbol(const AgentModel& model, const SharedInterpretation& interp,
                                     std::size_t symbol) {
  if (interp.num_actions() != model.num_actions())
    throw std::invalid_argument("predict_obs_given_symbol: action dimension mismatch");
  std::vector<double> mix(model.num_obs(), 0.0);
  for (std::size_t a = 0; a < model.num_actions(); ++a) {
    const double w = interp(a, symbol);
    if (w == 0.0) continue;
    const auto q = predict_obs(model, a);
    for (std::size_t o = 0; o < mix.size(); ++o) mix[o] += w * q[o];
  }
  return Categorical::normalize(std::move(mix));
}

}  // namespace socreal
