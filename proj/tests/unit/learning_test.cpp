#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "socreal/body_env.hpp"
#include "socreal/learning.hpp"
#include "support/test_support.hpp"

namespace socreal {
namespace {

using testing::max_abs_diff;

// Two observations, two states, two actions (stay / swap) with a perfectly
// learned likelihood so the preference gate is open.
AgentModel two_state_agent() {
  Matrix swap(2, 2, 0.0);
  swap(1, 0) = 1.0;
  swap(0, 1) = 1.0;
  std::vector<StochasticMatrix> b = {StochasticMatrix::identity(2), StochasticMatrix(swap)};
  AgentModel m(StochasticMatrix::identity(2).matrix(), std::move(b), {0.5, -0.5}, Categorical::uniform(2));
  m.set_posterior(Categorical::delta(2, 0));
  return m;
}

SharedInterpretation two_symbol_interp() {
  Matrix e(2, 2);
  e(0, 0) = 0.8;
  e(1, 0) = 0.2;
  e(0, 1) = 0.3;
  e(1, 1) = 0.7;
  return SharedInterpretation(StochasticMatrix(e));
}

TEST(LikelihoodCounts, PointMassIncrementsOneCell) {
  auto m = init_agent(AgentConfig{});
  const Matrix before = m.likelihood_counts();
  update_likelihood_counts(m, OneHot(4, 36), Categorical::delta(36, 7));
  for (std::size_t o = 0; o < 36; ++o)
    for (std::size_t s = 0; s < 36; ++s)
      EXPECT_DOUBLE_EQ(m.likelihood_counts()(o, s) - before(o, s), (o == 4 && s == 7) ? 1.0 : 0.0);
}

TEST(LikelihoodCounts, UniformPosteriorSpreadsOverRow) {
  auto m = init_agent(AgentConfig{});
  const Matrix before = m.likelihood_counts();
  update_likelihood_counts(m, OneHot(2, 36), Categorical::uniform(36));
  for (std::size_t s = 0; s < 36; ++s) EXPECT_NEAR(m.likelihood_counts()(2, s) - before(2, s), 1.0 / 36.0, 1e-15);
  EXPECT_DOUBLE_EQ(m.likelihood_counts()(3, 0), before(3, 0));
}

TEST(LikelihoodCounts, MassGrowsByOnePerObservation) {
  auto m = init_agent(AgentConfig{});
  const double initial = m.likelihood_counts().total();
  BodyEnv env = BodyEnv::random_start(Rng(61));
  Rng pick(62);
  for (int t = 1; t <= 100; ++t) {
    const std::size_t a = pick.below(kNumActions);
    env.act(action_from_index(a));
    const auto phi = infer_state(m, env.observe(), a);
    update_likelihood_counts(m, env.observe(), phi);
    ASSERT_NEAR(m.likelihood_counts().total(), initial + t, 1e-9);
    for (std::size_t s = 0; s < 36; ++s) ASSERT_NEAR(testing::sum(m.likelihood().column(s).values()), 1.0, 1e-9);
  }
}

TEST(PreferenceGate, FollowsMeanLikelihoodEntropy) {
  LearningConfig cfg;
  EXPECT_FALSE(preference_gate_open(init_agent(AgentConfig{}), cfg));
  EXPECT_TRUE(preference_gate_open(two_state_agent(), cfg));
  cfg.entropy_threshold = 10.0;
  EXPECT_TRUE(preference_gate_open(init_agent(AgentConfig{}), cfg));
}

TEST(UpdatePreference, HandComputedTwoObservationCase) {
  auto m = two_state_agent();
  LearningConfig cfg;
  cfg.eta_C = 0.5;
  ASSERT_TRUE(update_preference(m, two_symbol_interp(), 1, 0, cfg));
  // P(o | w=1) = [0.3, 0.7], P(o | w=0) = [0.8, 0.2]; delta = 0.5 * [-0.5, 0.5].
  EXPECT_NEAR(m.preference_scores()[0], 0.25, 1e-15);
  EXPECT_NEAR(m.preference_scores()[1], -0.25, 1e-15);
  EXPECT_NEAR(m.preference()[0], 0.6224593312018545646389, 1e-15);
  EXPECT_NEAR(m.preference()[1], 0.3775406687981454353611, 1e-15);
}

TEST(UpdatePreference, SameSymbolOrZeroRateIsNoOp) {
  auto m = two_state_agent();
  const auto before = m.preference_scores();
  LearningConfig cfg;
  update_preference(m, two_symbol_interp(), 1, 1, cfg);
  EXPECT_EQ(m.preference_scores(), before);
  cfg.eta_C = 0.0;
  update_preference(m, two_symbol_interp(), 1, 0, cfg);
  EXPECT_EQ(m.preference_scores(), before);
}

TEST(UpdatePreference, ClosedGateLeavesPreference) {
  auto m = init_agent(AgentConfig{});
  const auto before = m.preference_scores();
  EXPECT_FALSE(update_preference(m, SharedInterpretation::uniform(5, 15), 1, 0, LearningConfig{}));
  EXPECT_EQ(m.preference_scores(), before);
}

TEST(UpdatePreference, IdenticalPredictionsAreNoOp) {
  auto m = two_state_agent();
  Matrix e(2, 2, 0.5);
  const SharedInterpretation same{StochasticMatrix(e)};
  const auto before = m.preference_scores();
  update_preference(m, same, 1, 0, LearningConfig{});
  EXPECT_LT(max_abs_diff(m.preference_scores(), before), 1e-15);
}

TEST(UpdatePreference, StepBoundedByRate) {
  std::mt19937_64 gen(63);
  LearningConfig cfg;
  cfg.eta_C = 0.7;
  cfg.entropy_threshold = 100.0;
  for (int trial = 0; trial < 200; ++trial) {
    auto m = testing::random_agent(gen, 6, 6, 3);
    const SharedInterpretation interp(testing::random_stochastic(gen, 3, 4));
    const auto before = m.preference_scores();
    update_preference(m, interp, trial % 4, (trial + 1) % 4, cfg);
    EXPECT_LE(max_abs_diff(m.preference_scores(), before), cfg.eta_C + 1e-15);
    EXPECT_NEAR(testing::sum(m.preference().values()), 1.0, 1e-12);
    // Differences of two distributions: the total score mass is unchanged.
    EXPECT_NEAR(testing::sum(m.preference_scores()), testing::sum(before), 1e-12);
  }
}

TEST(UpdateInterpretation, FullRateReplacesColumn) {
  auto e = SharedInterpretation::uniform(5, 3);
  LearningConfig cfg;
  cfg.eta_E = 1.0;
  cfg.tau_E = 0.5;
  const std::vector<double> g = {1.0, 0.0, 2.0, 3.0, 0.5};
  update_interpretation(e, 1, g, cfg);
  const std::vector<double> neg = {-1.0, 0.0, -2.0, -3.0, -0.5};
  EXPECT_LT(max_abs_diff(e.column(1).values(), softmax(neg, 0.5).values()), 1e-15);
}

TEST(UpdateInterpretation, ZeroRateLeavesE) {
  auto e = SharedInterpretation::uniform(5, 3);
  const auto before = e;
  LearningConfig cfg;
  cfg.eta_E = 0.0;
  const std::vector<double> g = {1.0, 0.0, 2.0, 3.0, 0.5};
  update_interpretation(e, 1, g, cfg);
  EXPECT_EQ(e, before);
}

TEST(UpdateInterpretation, HalfBlendClosedForm) {
  auto e = SharedInterpretation::uniform(5, 15);
  LearningConfig cfg;
  cfg.eta_E = 0.5;
  cfg.tau_E = 1.0;
  const std::vector<double> g = {0.0, std::log(4.0), std::log(2.0), std::log(8.0), 1.0};
  update_interpretation(e, 6, g, cfg);
  const std::vector<double> want = {0.3229277199753781835746134, 0.1557319299938445458936534,
                                    0.2114638599876890917873067, 0.1278659649969222729468267,
                                    0.1820105250461659057975998};
  EXPECT_LT(max_abs_diff(e.column(6).values(), want), 1e-15);
}

TEST(UpdateInterpretation, OtherColumnsBitwiseUnchanged) {
  std::mt19937_64 gen(64);
  std::normal_distribution<double> n(0.0, 2.0);
  SharedInterpretation e(testing::random_stochastic(gen, 5, 15));
  for (int trial = 0; trial < 200; ++trial) {
    const auto before = e;
    const std::size_t w = trial % 15;
    std::vector<double> g(5);
    for (double& x : g) x = n(gen);
    update_interpretation(e, w, g, LearningConfig{});
    for (std::size_t c = 0; c < 15; ++c) {
      if (c == w) continue;
      ASSERT_EQ(e.column(c), before.column(c));
    }
    ASSERT_NEAR(testing::sum(e.column(w).values()), 1.0, 1e-12);
  }
}

TEST(UpdateInterpretation, RejectsBadArguments) {
  auto e = SharedInterpretation::uniform(5, 3);
  const std::vector<double> g(5, 0.0);
  EXPECT_THROW(update_interpretation(e, 3, g, LearningConfig{}), std::out_of_range);
  const std::vector<double> short_g(4, 0.0);
  EXPECT_THROW(update_interpretation(e, 0, short_g, LearningConfig{}), std::invalid_argument);
}

TEST(Phase, PreferenceFirstSchedule) {
  LearningConfig cfg;
  cfg.first_phase = Phase::Preference;
  cfg.phase_length = 100;
  EXPECT_EQ(phase(0, cfg), Phase::Preference);
  EXPECT_EQ(phase(99, cfg), Phase::Preference);
  EXPECT_EQ(phase(100, cfg), Phase::Interpretation);
  EXPECT_EQ(phase(200, cfg), Phase::Preference);
}

TEST(Phase, DefaultStartsWithInterpretation) {
  const LearningConfig cfg;
  EXPECT_EQ(phase(0, cfg), Phase::Interpretation);
  EXPECT_EQ(phase(100, cfg), Phase::Preference);
  EXPECT_EQ(phase_name(Phase::Preference), "C");
  EXPECT_EQ(phase_name(Phase::Interpretation), "E");
}

TEST(Phase, SwitchesExactlyEveryPhaseLength) {
  for (std::uint64_t len : {1u, 7u, 100u}) {
    LearningConfig cfg;
    cfg.phase_length = len;
    std::uint64_t switches = 0;
    for (std::uint64_t t = 1; t < 10000; ++t) {
      const bool changed = phase(t, cfg) != phase(t - 1, cfg);
      ASSERT_EQ(changed, t % len == 0) << "t=" << t << " len=" << len;
      switches += changed;
    }
    EXPECT_EQ(switches, 9999 / len);
  }
}

TEST(LearningConfig, Validation) {
  LearningConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.eta_E = 1.5;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = LearningConfig{};
  cfg.tau_E = 0.0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = LearningConfig{};
  cfg.phase_length = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = LearningConfig{};
  cfg.eta_C = -0.1;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

}  // namespace
}  // namespace socreal
