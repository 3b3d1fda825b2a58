#include "socreal/learning.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace socreal {

std::string_view phase_name(Phase p) { return p == Phase::Preference ? "C" : "E"; }

void LearningConfig::validate() const {
  if (!(eta_C >= 0.0) || !std::isfinite(eta_C)) throw std::invalid_argument("eta_C must be >= 0");
  if (!(eta_E >= 0.0 && eta_E <= 1.0)) throw std::invalid_argument("eta_E must lie in [0, 1]");
  if (!(tau_E > 0.0) || !std::isfinite(tau_E)) throw std::invalid_argument("tau_E must be > 0");
  if (!(entropy_threshold > 0.0)) throw std::invalid_argument("entropy_threshold must be > 0");
  if (phase_length == 0) throw std::invalid_argument("phase_length must be > 0");
}

void update_likelihood_counts(AgentModel& model, const OneHot& obs, const Categorical& phi) {
  std::vector<double> o(obs.dim, 0.0);
  o.at(obs.index) = 1.0;
  model.add_likelihood_counts(o, phi.values());
}

bool preference_gate_open(const AgentModel& model, const LearningConfig& cfg) {
  return model.mean_likelihood_entropy() < cfg.entropy_threshold;
}

bool update_preference(AgentModel& speaker, const SharedInterpretation& interp, std::size_t w_listener,
                       std::size_t w_speaker, const LearningConfig& cfg) {
  if (!preference_gate_open(speaker, cfg)) return false;
  if (w_listener == w_speaker || cfg.eta_C == 0.0) return true;
  const auto toward = predict_obs_given_symbol(speaker, interp, w_listener);
  const auto away = predict_obs_given_symbol(speaker, interp, w_speaker);
  auto scores = speaker.preference_scores();
  for (std::size_t o = 0; o < scores.size(); ++o) scores[o] += cfg.eta_C * (toward[o] - away[o]);
  speaker.set_preference_scores(std::move(scores));
  return true;
}

void update_interpretation(SharedInterpretation& interp, std::size_t w_used, std::span<const double> g,
                           const LearningConfig& cfg) {
  if (w_used >= interp.num_symbols()) throw std::out_of_range("update_interpretation: symbol out of range");
  if (g.size() != interp.num_actions()) throw std::invalid_argument("update_interpretation: dimension mismatch");
  if (cfg.eta_E == 0.0) return;
  std::vector<double> negated(g.begin(), g.end());
  for (double& x : negated) x = -x;
  const auto target = softmax(negated, cfg.tau_E);
  const auto old = interp.column(w_used);
  std::vector<double> blended(old.size());
  for (std::size_t a = 0; a < blended.size(); ++a) blended[a] = (1.0 - cfg.eta_E) * old[a] + cfg.eta_E * target[a];
  interp.set_column(w_used, Categorical::normalize(std::move(blended)));
}

Phase phase(std::uint64_t t, const LearningConfig& cfg) {
  const bool first = (t / cfg.phase_length) % 2 == 0;
  if (first) return cfg.first_phase;
  return cfg.first_phase == Phase::Preference ? Phase::Interpretation : Phase::Preference;
}

}  // namespace socreal
