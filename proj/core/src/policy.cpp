#include "socreal/policy.hpp"

#include <cmath>
#include <stdexcept>

namespace socreal {

SharedInterpretation::SharedInterpretation(StochasticMatrix e) : E_(std::move(e)) {}

SharedInterpretation SharedInterpretation::uniform(std::size_t num_actions, std::size_t num_symbols) {
  return SharedInterpretation(StochasticMatrix::uniform(num_actions, num_symbols));
}

EfeVector expected_free_energy(const AgentModel& model) {
  const auto& A = model.likelihood();
  const auto& C = model.preference();
  const auto& state_entropy = model.likelihood_entropies();

  EfeVector g;
  g.ambiguity.resize(model.num_actions());
  g.risk.resize(model.num_actions());
  g.total.resize(model.num_actions());
  for (std::size_t a = 0; a < model.num_actions(); ++a) {
    const auto next_state = model.transition(a).apply(model.posterior());
    double ambiguity = 0.0;
    for (std::size_t s = 0; s < next_state.size(); ++s) ambiguity += next_state[s] * state_entropy[s];
    const auto predicted = A.apply(next_state);
    g.ambiguity[a] = ambiguity;
    g.risk[a] = kl_divergence(predicted, C);
    g.total[a] = g.ambiguity[a] + g.risk[a];
  }
  return g;
}

std::vector<double> symbol_scores(std::span<const double> g, const SharedInterpretation& interp) {
  if (g.size() != interp.num_actions()) throw std::invalid_argument("symbol_scores: dimension mismatch");
  return interp.matrix().matrix().multiply_transposed(g);
}

Categorical symbol_distribution(std::span<const double> scores) {
  std::vector<double> negated(scores.begin(), scores.end());
  for (double& x : negated) x = -x;
  return softmax(negated);
}

Categorical infer_symbol_distribution(const AgentModel& model, const SharedInterpretation& interp) {
  return symbol_distribution(symbol_scores(expected_free_energy(model).total, interp));
}

std::size_t select_action(const SharedInterpretation& interp, std::size_t symbol, Rng& rng) {
  if (symbol >= interp.num_symbols()) throw std::out_of_range("select_action: symbol out of range");
  return sample(interp.column(symbol), rng);
}

}  // namespace socreal
