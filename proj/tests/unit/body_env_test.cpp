#include <gtest/gtest.h>

#include <map>

#include "socreal/body_env.hpp"
#include "support/test_support.hpp"

namespace socreal {
namespace {

TEST(Encoding, KnownIndices) {
  EXPECT_EQ(encode_index(BodyState(0, 0)), 0u);
  EXPECT_EQ(encode_index(BodyState(2, 3)), 15u);
  EXPECT_EQ(encode_index(BodyState(5, 5)), 35u);
  EXPECT_EQ(decode(15), BodyState(2, 3));
  const OneHot o = encode(BodyState(1, 4));
  EXPECT_EQ(o.index, 10u);
  EXPECT_EQ(o.dim, 36u);
}

TEST(Encoding, DecodeInvertsEncode) {
  for (std::size_t i = 0; i < kNumBodyStates; ++i) EXPECT_EQ(encode_index(decode(i)), i);
  EXPECT_THROW(decode(36), std::out_of_range);
  EXPECT_THROW(BodyState(6, 0), std::out_of_range);
  EXPECT_THROW(BodyState(0, -1), std::out_of_range);
}

TEST(Actions, NamesRoundTrip) {
  for (Action a : kAllActions) EXPECT_EQ(parse_action(action_name(a)), a);
  EXPECT_FALSE(parse_action("Dance").has_value());
  EXPECT_EQ(action_from_index(2), Action::Eat);
  EXPECT_THROW(action_from_index(5), std::out_of_range);
}

TEST(Step, DeterministicActions) {
  Rng rng(1);
  EXPECT_EQ(step(BodyState(3, 3), Action::Cool, rng), BodyState(2, 2));
  EXPECT_EQ(step(BodyState(3, 3), Action::Warm, rng), BodyState(2, 4));
  EXPECT_EQ(step(BodyState(0, 0), Action::Cool, rng), BodyState(0, 0));
  EXPECT_EQ(step(BodyState(0, 5), Action::Warm, rng), BodyState(0, 5));
}

TEST(Step, EnergyEffectsAndSaturation) {
  Rng rng(2);
  for (int i = 0; i < 50; ++i) {
    EXPECT_EQ(step(BodyState(4, 2), Action::Eat, rng).energy, 5);
    EXPECT_EQ(step(BodyState(2, 2), Action::Eat, rng).energy, 4);
    EXPECT_EQ(step(BodyState(0, 2), Action::Play, rng).energy, 0);
    EXPECT_EQ(step(BodyState(3, 2), Action::Sleep, rng).energy, 3);
  }
}

TEST(Successors, DriftDirection) {
  const auto low = successors(BodyState(3, 2), Action::Sleep);
  ASSERT_EQ(low.size(), 2u);
  EXPECT_EQ(low[0].first, BodyState(3, 2));
  EXPECT_DOUBLE_EQ(low[0].second, 0.8);
  EXPECT_EQ(low[1].first, BodyState(3, 1));
  EXPECT_DOUBLE_EQ(low[1].second, 0.2);

  const auto high = successors(BodyState(3, 3), Action::Play);
  ASSERT_EQ(high.size(), 2u);
  EXPECT_EQ(high[1].first, BodyState(2, 4));

  // Drift saturates at the edges of the scale, leaving a single successor.
  const auto edge = successors(BodyState(1, 5), Action::Sleep);
  ASSERT_EQ(edge.size(), 1u);
  EXPECT_EQ(edge[0].first, BodyState(1, 5));
  EXPECT_DOUBLE_EQ(edge[0].second, 1.0);
}

TEST(TrueTransitions, ColumnsMatchSuccessors) {
  const auto B = true_transitions();
  ASSERT_EQ(B.size(), kNumActions);
  for (Action a : kAllActions) {
    const auto& m = B[static_cast<std::size_t>(a)];
    for (std::size_t s = 0; s < kNumBodyStates; ++s) {
      std::vector<double> want(kNumBodyStates, 0.0);
      for (const auto& [to, p] : successors(decode(s), a)) want[encode_index(to)] += p;
      EXPECT_EQ(m.column(s).vec(), want) << action_name(a) << " from " << s;
    }
  }
}

TEST(TrueTransitions, OnlyNeighbouringStates) {
  const auto B = true_transitions();
  for (std::size_t a = 0; a < kNumActions; ++a)
    for (std::size_t from = 0; from < kNumBodyStates; ++from)
      for (std::size_t to = 0; to < kNumBodyStates; ++to) {
        if (B[a](to, from) == 0.0) continue;
        EXPECT_LE(std::abs(decode(to).temperature - decode(from).temperature), 1);
        EXPECT_LE(std::abs(decode(to).energy - decode(from).energy), 2);
      }
}

TEST(Step, MonteCarloMatchesTransitions) {
  const auto B = true_transitions();
  Rng rng(2024);
  const int n = 20000;
  for (std::size_t a = 0; a < kNumActions; ++a)
    for (std::size_t s : {0u, 8u, 14u, 15u, 21u, 35u}) {
      std::vector<double> freq(kNumBodyStates, 0.0);
      for (int i = 0; i < n; ++i) freq[encode_index(step(decode(s), action_from_index(a), rng))] += 1.0 / n;
      EXPECT_LT(testing::total_variation(freq, B[a].column(s).vec()), 0.01);
    }
}

TEST(BodyEnv, StaysInBoundsUnderRandomActions) {
  Rng pick(3);
  auto env = BodyEnv::random_start(Rng(4));
  for (int i = 0; i < 20000; ++i) {
    const auto& s = env.act(action_from_index(pick.below(kNumActions)));
    ASSERT_GE(s.energy, 0);
    ASSERT_LE(s.energy, 5);
    ASSERT_GE(s.temperature, 0);
    ASSERT_LE(s.temperature, 5);
    ASSERT_EQ(env.observe().index, encode_index(s));
  }
}

TEST(BodyEnv, RandomStartCoversGrid) {
  std::map<std::size_t, int> seen;
  for (std::uint64_t seed = 0; seed < 2000; ++seed) ++seen[encode_index(BodyEnv::random_start(Rng(seed)).state())];
  EXPECT_EQ(seen.size(), kNumBodyStates);
}

}  // namespace
}  // namespace socreal
