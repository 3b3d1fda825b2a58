#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "socreal/generative_model.hpp"
#include "socreal/probability.hpp"

namespace socreal {

/// Community-level symbol interpretation: column w is the distribution over
/// actions evoked by symbol w (N_a x N_w).
class SharedInterpretation {
public:
  SharedInterpretation() = default;
  explicit SharedInterpretation(StochasticMatrix e);

  /// Every symbol maps uniformly onto every action.
  static SharedInterpretation uniform(std::size_t num_actions, std::size_t num_symbols);

  std::size_t num_actions() const { return E_.rows(); }
  std::size_t num_symbols() const { return E_.cols(); }
  double operator()(std::size_t action, std::size_t symbol) const { return E_(action, symbol); }
  Categorical column(std::size_t symbol) const { return E_.column(symbol); }
  const StochasticMatrix& matrix() const { return E_; }

  void set_column(std::size_t symbol, const Categorical& actions) { E_.set_column(symbol, actions); }

  bool operator==(const SharedInterpretation&) const = default;

private:
  StochasticMatrix E_;
};

/// Expected free energy per action, split into its two nonnegative parts.
struct EfeVector {
  std::vector<double> ambiguity;
  std::vector<double> risk;
  std::vector<double> total;

  std::size_t size() const { return total.size(); }
  double operator[](std::size_t a) const { return total[a]; }
};

/// One-step expected free energy for every action:
///   ambiguity(a) = (B_a phi) . H[A]
///   risk(a)      = KL[A B_a phi || C]
EfeVector expected_free_energy(const AgentModel& model);

/// E^T g: expected free energy of the action drawn from each symbol.
std::vector<double> symbol_scores(std::span<const double> g, const SharedInterpretation& interp);

/// softmax(-scores).
Categorical symbol_distribution(std::span<const double> symbol_scores);

/// Convenience: symbol_distribution(symbol_scores(expected_free_energy(model), interp)).
Categorical infer_symbol_distribution(const AgentModel& model, const SharedInterpretation& interp);

/// Draws an action from column `symbol` of the interpretation.
std::size_t select_action(const SharedInterpretation& interp, std::size_t symbol, Rng& rng);

}  // namespace socreal
