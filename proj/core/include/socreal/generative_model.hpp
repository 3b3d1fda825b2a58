#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "socreal/probability.hpp"

namespace socreal {

class SharedInterpretation;

/// Initial preference shape over the 6x6 interoceptive grid:
/// score(e, t) = -energy_sharpness * |e - energy_target| - temperature_sharpness * |t - temperature_target|.
struct PreferenceTemplate {
  double energy_target = 2.5;
  double temperature_target = 5.0;
  double energy_sharpness = 1.0;
  double temperature_sharpness = 1.0;

  /// Mean-centred scores, one per observation index 6 * e + t.
  std::vector<double> scores() const;
};

/// One agent's POMDP parameters and current belief.
///
/// The likelihood is always the column-normalized Dirichlet counts and the
/// preference is always softmax of the preference scores; both are rederived
/// on every mutation so the pairs cannot drift apart.
class AgentModel {
public:
  AgentModel(Matrix likelihood_counts, std::vector<StochasticMatrix> transitions,
             std::vector<double> preference_scores, Categorical initial_prior);

  std::size_t num_obs() const { return A_.rows(); }
  std::size_t num_states() const { return A_.cols(); }
  std::size_t num_actions() const { return B_.size(); }

  const StochasticMatrix& likelihood() const { return A_; }
  const Matrix& likelihood_counts() const { return a_counts_; }
  /// Per-state entropy of the likelihood columns, cached with A.
  const std::vector<double>& likelihood_entropies() const { return A_entropy_; }
  double mean_likelihood_entropy() const;
  const StochasticMatrix& transition(std::size_t action) const { return B_.at(action); }
  const std::vector<StochasticMatrix>& transitions() const { return B_; }
  const Categorical& preference() const { return C_; }
  const std::vector<double>& preference_scores() const { return C_scores_; }
  const Categorical& initial_prior() const { return D_; }
  const Categorical& posterior() const { return phi_; }

  /// counts += outer(obs_weights, state_weights); A rederived.
  void add_likelihood_counts(std::span<const double> obs_weights, std::span<const double> state_weights);
  void set_preference_scores(std::vector<double> scores);
  void set_posterior(Categorical phi);

private:
  Matrix a_counts_;
  StochasticMatrix A_;
  std::vector<double> A_entropy_;
  std::vector<StochasticMatrix> B_;
  std::vector<double> C_scores_;
  Categorical C_;
  Categorical D_;
  Categorical phi_;
};

struct AgentConfig {
  std::size_t num_obs = 36;
  std::size_t num_states = 36;
  std::size_t num_actions = 5;
  /// Pseudo-count placed in every likelihood cell at start.
  double initial_count = 0.1;
  PreferenceTemplate preference;
};

/// Uniform likelihood, true body transitions, uniform initial prior,
/// posterior = initial prior. Throws std::invalid_argument when the
/// dimensions disagree with the body environment.
AgentModel init_agent(const AgentConfig& cfg);

/// Posterior update: softmax(log A[obs, :] + log(B_prev_action * phi)).
/// Stores and returns the new posterior.
Categorical infer_state(AgentModel& model, const OneHot& obs, std::size_t prev_action);

/// Same update, without touching the model.
Categorical posterior_given(const AgentModel& model, const Categorical& phi_prev, const OneHot& obs,
                            std::size_t prev_action);

/// A * (B_action * phi).
Categorical predict_obs(const AgentModel& model, std::size_t action);

/// sum_a E[a, symbol] * predict_obs(model, a).
Categorical predict_obs_given_symbol(const AgentModel& model, const SharedInterpretation& interp,
                                     std::size_t symbol);

}  // namespace socreal
