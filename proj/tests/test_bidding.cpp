#include <gtest/gtest.h>

#include "richman/bidding.hpp"

using namespace richman;

namespace {

constexpr Player L = Player::Left;
constexpr Player R = Player::Right;

Bid b(Dollars n) { return {n, false}; }
Bid hat(Dollars n) { return {n, true}; }

}  // namespace

TEST(BudgetState, Basics) {
  const BudgetState s{5, 2, L};
  EXPECT_EQ(s.right(), 3);
  EXPECT_EQ(s.budget(L), 2);
  EXPECT_EQ(s.budget(R), 3);
  EXPECT_EQ(s.dominating(), R);
  EXPECT_EQ((BudgetState{4, 2, L}).dominating(), L);
  EXPECT_EQ((BudgetState{4, 2, R}).dominating(), R);
  EXPECT_EQ(s.mirrored(), (BudgetState{5, 3, R}));
  EXPECT_EQ(s.mirrored().mirrored(), s);
}

TEST(BudgetState, Validate) {
  EXPECT_NO_THROW((BudgetState{0, 0, L}).validate());
  EXPECT_THROW((BudgetState{2, 3, L}).validate(), InvalidBudget);
  EXPECT_THROW((BudgetState{2, -1, R}).validate(), InvalidBudget);
  EXPECT_THROW((BudgetState{-1, 0, R}).validate(), InvalidBudget);
}

TEST(BudgetState, Strings) {
  EXPECT_EQ(to_string(BudgetState{2, 1, L}), "p^=1");
  EXPECT_EQ(to_string(BudgetState{2, 1, R}), "p=1");
  EXPECT_EQ(to_string(b(2)), "2");
  EXPECT_EQ(to_string(hat(2)), "2^");
}

TEST(LegalBids, Examples) {
  const BudgetState s{2, 1, L};
  EXPECT_EQ(legal_bids(s, L), (std::vector<Bid>{b(0), hat(0), b(1), hat(1)}));
  EXPECT_EQ(legal_bids(s, R), (std::vector<Bid>{b(0), b(1)}));
  EXPECT_EQ(legal_bids({0, 0, L}, L), (std::vector<Bid>{b(0), hat(0)}));
  EXPECT_EQ(legal_bids({0, 0, L}, R), (std::vector<Bid>{b(0)}));
}

TEST(LegalBids, Counts) {
  for (Dollars tb = 0; tb <= 6; ++tb)
    for (Dollars p = 0; p <= tb; ++p)
      for (Player m : {L, R}) {
        const BudgetState s{tb, p, m};
        for (Player who : {L, R}) {
          const auto bids = legal_bids(s, who);
          const auto n = static_cast<std::size_t>(s.budget(who) + 1);
          EXPECT_EQ(bids.size(), who == m ? 2 * n : n);
          for (const auto& bid : bids) EXPECT_TRUE(is_legal(s, who, bid));
        }
      }
}

TEST(IsLegal, Rejections) {
  const BudgetState s{3, 1, L};
  EXPECT_FALSE(is_legal(s, L, b(2)));
  EXPECT_FALSE(is_legal(s, L, b(-1)));
  EXPECT_FALSE(is_legal(s, R, hat(0)));
  EXPECT_TRUE(is_legal(s, R, b(2)));
  EXPECT_FALSE(is_legal(s, R, b(3)));
}

TEST(ResolveBids, FourCases) {
  const BudgetState s{2, 1, L};
  // marked bid with l >= r
  EXPECT_EQ(resolve_bids(s, hat(1), b(0)), (Resolution{L, {2, 0, R}}));
  // r > l
  EXPECT_EQ(resolve_bids(s, b(0), b(1)), (Resolution{R, {2, 2, L}}));
  // tie
  EXPECT_EQ(resolve_bids(s, b(1), b(1)), (Resolution{L, {2, 0, R}}));
  // strictly higher unmarked bid keeps the marker
  EXPECT_EQ(resolve_bids({3, 2, L}, b(2), b(1)), (Resolution{L, {3, 0, L}}));
}

TEST(ResolveBids, MarkedBidThatLosesKeepsMarker) {
  EXPECT_EQ(resolve_bids({3, 1, L}, hat(0), b(1)), (Resolution{R, {3, 2, L}}));
}

TEST(ResolveBids, RightOwnerMirrors) {
  const BudgetState s{4, 2, R};
  EXPECT_EQ(resolve_bids(s, b(1), hat(1)), (Resolution{R, {4, 3, L}}));
  EXPECT_EQ(resolve_bids(s, b(1), b(1)), (Resolution{R, {4, 3, L}}));
  EXPECT_EQ(resolve_bids(s, b(2), b(1)), (Resolution{L, {4, 0, R}}));
  EXPECT_EQ(resolve_bids(s, b(0), b(1)), (Resolution{R, {4, 3, R}}));
}

TEST(ResolveBids, ZeroBudgetAlternatesMarker) {
  EXPECT_EQ(resolve_bids({0, 0, L}, b(0), b(0)), (Resolution{L, {0, 0, R}}));
  EXPECT_EQ(resolve_bids({0, 0, R}, b(0), b(0)), (Resolution{R, {0, 0, L}}));
}

TEST(ResolveBids, IllegalInputs) {
  EXPECT_THROW(resolve_bids({2, 1, L}, b(2), b(0)), IllegalBid);
  EXPECT_THROW(resolve_bids({2, 1, L}, b(0), hat(0)), IllegalBid);
  EXPECT_THROW(resolve_bids({2, 3, L}, b(0), b(0)), InvalidBudget);
}

TEST(ResolveBids, Conservation) {
  for (Dollars tb = 0; tb <= 5; ++tb)
    for (Dollars p = 0; p <= tb; ++p)
      for (Player m : {L, R}) {
        const BudgetState s{tb, p, m};
        for (const auto& lb : legal_bids(s, L))
          for (const auto& rb : legal_bids(s, R)) {
            const Resolution r = resolve_bids(s, lb, rb);
            EXPECT_TRUE(r.next.valid());
            EXPECT_EQ(r.next.total, tb);
            const Bid& paid = r.mover == L ? lb : rb;
            EXPECT_EQ(r.next.budget(r.mover), s.budget(r.mover) - paid.amount);
            // the marker moves only when its owner wins a tie or a marked bid
            const bool transfer = r.mover == m && (paid.include_marker || lb.amount == rb.amount);
            EXPECT_EQ(r.next.marker, transfer ? opponent(m) : m);
          }
      }
}
