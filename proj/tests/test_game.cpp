#include <gtest/gtest.h>

#include <set>

#include "richman/classify.hpp"
#include "richman/notation.hpp"
#include "richman/random_game.hpp"

using namespace richman;

namespace {

Game g(const char* text) { return parse(text); }

std::vector<Game> corpus(std::uint64_t seed, std::size_t n = 300) {
  GameGenerator gen({4, 3, 0.3}, seed);
  std::vector<Game> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(gen.any());
  return out;
}

}  // namespace

TEST(Game, DefaultIsZero) {
  Game z;
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.birthday(), 0u);
  EXPECT_FALSE(z.has_options(Player::Left));
  EXPECT_FALSE(z.has_options(Player::Right));
  EXPECT_EQ(z, Game::zero());
}

TEST(Game, InterningSharesIdentity) {
  const Game a = Game::make({Game::zero()}, {Game::zero()});
  const Game b = Game::make({Game::zero()}, {Game::zero()});
  EXPECT_EQ(a.id(), b.id());
  EXPECT_EQ(a, g("*"));
  // option order does not change identity
  const Game up = g("^");
  EXPECT_EQ(Game::make({up, g("*")}, {}), Game::make({g("*"), up}, {}));
}

TEST(Game, OptionsAreDeduplicatedInInputOrder) {
  const Game star = g("*");
  const Game x = Game::make({star, Game::zero(), star, Game::zero()}, {});
  ASSERT_EQ(x.left_options().size(), 2u);
  EXPECT_EQ(x.left_options()[0], star);
  EXPECT_EQ(x.left_options()[1], Game::zero());
  EXPECT_EQ(render(x), "{*,0|}");
}

TEST(Game, Birthday) {
  EXPECT_EQ(g("0").birthday(), 0u);
  EXPECT_EQ(g("*").birthday(), 1u);
  EXPECT_EQ(g("^").birthday(), 2u);
  EXPECT_EQ(g("^sym").birthday(), 3u);
  EXPECT_EQ(g("{{{{0|}|}|}|}").birthday(), 4u);
}

TEST(Game, Conjugate) {
  EXPECT_EQ(conjugate(g("*")), g("*"));
  EXPECT_EQ(conjugate(g("1")), g("-1"));
  EXPECT_EQ(conjugate(g("^")), g("v"));
  EXPECT_EQ(conjugate(g("{v|^}")), g("{v|^}"));
  EXPECT_EQ(conjugate(g("{0,*|1}")), g("{-1|0,*}"));
}

TEST(Notation, ParseExamples) {
  EXPECT_EQ(g("{|}"), Game::zero());
  EXPECT_EQ(g("{0|*}"), Game::make({Game::zero()}, {g("*")}));
  EXPECT_EQ(g("{0|*}"), g("^"));
  EXPECT_EQ(g("{{*|*}|*}"), g("^sym"));
  EXPECT_EQ(g(" { 0 , * | } "), g("{0,*|}"));
  EXPECT_EQ(g("{1|-1}"), g("+-1"));
  EXPECT_EQ(g("{0|1}"), g("1/2"));
}

TEST(Notation, LongestTokenWins) {
  EXPECT_EQ(g("*2"), g("{*|*}"));
  EXPECT_EQ(g("{*2|*}"), g("^sym"));
  EXPECT_EQ(g("{*,*2|}").left_options().size(), 2u);
}

TEST(Notation, RenderExamples) {
  EXPECT_EQ(render(Game::zero()), "0");
  EXPECT_EQ(render(g("{*|*}")), "*2");
  EXPECT_EQ(render(g("{{*|0}|{0|*}}")), "{v|^}");
  EXPECT_EQ(render(g("{{*|*}|*}")), "^sym");
  EXPECT_EQ(render(g("{1|}")), "{1|}");
}

TEST(Notation, NamedForms) {
  std::set<std::string_view> names;
  for (const auto& nf : named_forms()) names.insert(nf.name);
  EXPECT_EQ(names, (std::set<std::string_view>{"0", "*", "*2", "1", "-1", "1/2", "^", "v",
                                               "^sym", "+-1"}));
  EXPECT_EQ(*lookup_named("^"), g("{0|*}"));
  EXPECT_FALSE(lookup_named("2").has_value());
  EXPECT_EQ(*name_of(g("{0|0}")), "*");
  EXPECT_FALSE(name_of(g("{1|}")).has_value());
}

TEST(Notation, Errors) {
  for (const char* bad : {"", "{", "{0|", "{0|0", "{0|0}}", "{0 0|}", "{0,|}", "2", "{x|}",
                          "{|}{|}", "*3", "{0||0}", "|"}) {
    EXPECT_THROW(parse(bad), ParseError) << bad;
  }
  try {
    parse("{0|q}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
}

TEST(Notation, RoundTripOnCorpus) {
  for (const Game& x : corpus(11)) EXPECT_EQ(parse(render(x)), x) << render(x);
}

TEST(Classify, Examples) {
  const auto star = classify(g("*"));
  EXPECT_TRUE(star.impartial);
  EXPECT_TRUE(star.dicot);
  EXPECT_TRUE(star.symmetric_ending);

  const auto sym = classify(g("^sym"));
  EXPECT_FALSE(sym.impartial);
  EXPECT_TRUE(sym.symmetric_ending);

  EXPECT_FALSE(classify(g("^")).symmetric_ending);
  EXPECT_TRUE(classify(g("^")).dicot);
  EXPECT_FALSE(classify(g("1")).dicot);
  EXPECT_TRUE(classify(g("0")).impartial);
  EXPECT_TRUE(classify(g("0")).symmetric_ending);
}

TEST(Classify, AlternatingOutcome) {
  EXPECT_EQ(alternating_outcome(g("0")), AlternatingOutcome::P);
  EXPECT_EQ(alternating_outcome(g("*")), AlternatingOutcome::N);
  EXPECT_EQ(alternating_outcome(g("1")), AlternatingOutcome::L);
  EXPECT_EQ(alternating_outcome(g("-1")), AlternatingOutcome::R);
  EXPECT_EQ(alternating_outcome(g("^")), AlternatingOutcome::L);
  EXPECT_EQ(alternating_outcome(g("*2")), AlternatingOutcome::P);
  EXPECT_EQ(alternating_outcome(g("^sym")), AlternatingOutcome::L);
  EXPECT_EQ(alternating_winner(g("*"), Player::Right), Player::Right);
  EXPECT_EQ(to_string(AlternatingOutcome::N), "N");
}

TEST(Classify, OutcomeOrder) {
  using O = AlternatingOutcome;
  EXPECT_TRUE(outcome_leq(O::R, O::L));
  EXPECT_TRUE(outcome_leq(O::N, O::L));
  EXPECT_TRUE(outcome_leq(O::R, O::P));
  EXPECT_FALSE(outcome_leq(O::N, O::P));
  EXPECT_FALSE(outcome_leq(O::P, O::N));
  EXPECT_FALSE(outcome_leq(O::L, O::R));
  EXPECT_EQ(mirror(O::L), O::R);
  EXPECT_EQ(mirror(O::N), O::N);
}

TEST(Properties, ConjugateIsAnInvolution) {
  for (const Game& x : corpus(12)) {
    const Game c = conjugate(x);
    EXPECT_EQ(conjugate(c), x);
    EXPECT_EQ(c.birthday(), x.birthday());
    EXPECT_EQ(alternating_outcome(c), mirror(alternating_outcome(x)));
  }
}

TEST(Properties, ImpartialImpliesDicotAndSymmetricEnding) {
  GameGenerator gen({4, 3, 0.3}, 13);
  for (int i = 0; i < 300; ++i) {
    const Game x = i % 2 ? gen.impartial() : gen.any();
    const auto c = classify(x);
    if (c.impartial) {
      EXPECT_TRUE(c.dicot) << render(x);
      EXPECT_TRUE(c.symmetric_ending) << render(x);
    }
  }
}

TEST(RandomGame, BirthdayZeroIsZero) {
  for (std::uint64_t seed : {0u, 1u, 99u}) EXPECT_TRUE(random_game(0, 3, 0.3, seed).is_zero());
}

TEST(RandomGame, Golden) {
  // frozen from the generator's first run
  EXPECT_EQ(render(random_game(2, 2, 0.3, 42)), "1");
  EXPECT_EQ(render(random_game(2, 2, 0.3, 44)), "{0|*,0}");
  GameGenerator gen({3, 2, 0.3}, 5);
  EXPECT_EQ(render(gen.impartial()), "*2");
  EXPECT_EQ(render(gen.symmetric_ending()), "{*|*2,*}");
  EXPECT_EQ(render(gen.any()), "{-1|}");
}

TEST(RandomGame, DeterministicAndBounded) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Game a = random_game(3, 3, 0.2, seed);
    EXPECT_EQ(a, random_game(3, 3, 0.2, seed));
    EXPECT_LE(a.birthday(), 3u);
  }
}

TEST(RandomGame, FamiliesHoldTheirShape) {
  GameGenerator gen({4, 3, 0.3}, 21);
  for (int i = 0; i < 200; ++i) {
    const Game imp = gen.impartial();
    const Game sym = gen.symmetric_ending();
    EXPECT_TRUE(classify(imp).impartial) << render(imp);
    EXPECT_TRUE(classify(sym).symmetric_ending) << render(sym);
    EXPECT_LE(imp.birthday(), 4u);
    EXPECT_LE(sym.birthday(), 4u);
  }
}

TEST(RandomGame, RejectsZeroOptions) {
  EXPECT_THROW(GameGenerator({2, 0, 0.3}, 1), std::invalid_argument);
}
