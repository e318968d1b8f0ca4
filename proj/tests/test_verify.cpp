#include <gtest/gtest.h>

#include "richman/classify.hpp"
#include "richman/notation.hpp"
#include "richman/random_game.hpp"
#include "richman/solver.hpp"
#include "richman/verify.hpp"

using namespace richman;

namespace {

constexpr Player L = Player::Left;
constexpr Player R = Player::Right;

}  // namespace

TEST(Predictions, Impartial) {
  const Game star = parse("*");
  EXPECT_EQ(predict_impartial(star, {2, 1, L}), L);
  EXPECT_EQ(predict_impartial(star, {2, 1, R}), R);
  EXPECT_EQ(predict_impartial(parse("*2"), {2, 1, L}), R);
  EXPECT_EQ(predict_impartial(star, {3, 2, R}), L);
  EXPECT_EQ(predict_impartial(Game::zero(), {3, 3, L}), R);
}

TEST(Predictions, SymmetricEnding) {
  const Game sym = parse("^sym");
  // alternating outcome L: Left wins the even split either way
  EXPECT_EQ(predict_symmetric_ending(sym, {2, 1, L}), L);
  EXPECT_EQ(predict_symmetric_ending(sym, {2, 1, R}), L);
  EXPECT_EQ(predict_symmetric_ending(sym, {3, 1, L}), R);
  EXPECT_EQ(predict_symmetric_ending(Game::zero(), {2, 1, R}), L);
}

TEST(Predictions, MatchTheSolverOnTheirFamilies) {
  GameGenerator gen({4, 3, 0.3}, 61);
  for (int i = 0; i < 200; ++i) {
    const Game imp = gen.impartial();
    const Game sym = gen.symmetric_ending();
    for (Dollars tb = 0; tb <= 4; ++tb)
      for (Player m : {L, R})
        for (Dollars p = 0; p <= tb; ++p) {
          const BudgetState s{tb, p, m};
          EXPECT_EQ(solve(imp, s), predict_impartial(imp, s)) << render(imp);
          EXPECT_EQ(solve(sym, s), predict_symmetric_ending(sym, s)) << render(sym);
        }
  }
}

TEST(Predictions, SymmetricEndingRuleFailsWithoutTheFamily) {
  // ^ lacks a symmetric ending; the rule predicts Right at p^=0 but Left wins
  const Game up = parse("^");
  EXPECT_FALSE(classify(up).symmetric_ending);
  EXPECT_EQ(predict_symmetric_ending(up, {1, 0, L}), R);
  EXPECT_EQ(solve(up, {1, 0, L}), L);
}

TEST(LastMove, Helper) {
  EXPECT_EQ(last_move_winner(parse("1"), {2, 2, L}), L);
  EXPECT_EQ(last_move_winner(parse("1"), {2, 0, L}), std::nullopt);
  EXPECT_EQ(last_move_winner(parse("*"), {2, 1, R}), R);
  EXPECT_EQ(last_move_winner(parse("^"), {2, 2, L}), L);
}

TEST(RunVerification, DefaultCorpusPasses) {
  VerifyOptions options;
  options.count = 120;
  const VerifyReport report = run_verification(options);
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.checks.size(), 12u);
  for (const auto& c : report.checks) {
    EXPECT_GT(c.cases, 0u) << c.name;
    EXPECT_EQ(c.failures, 0u) << c.name << ": " << c.counterexample;
  }
}

TEST(RunVerification, Deterministic) {
  VerifyOptions options;
  options.count = 30;
  options.max_total = 2;
  const auto a = run_verification(options);
  const auto b = run_verification(options);
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) EXPECT_EQ(a.checks[i].cases, b.checks[i].cases);
}
