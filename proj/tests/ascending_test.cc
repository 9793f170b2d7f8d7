// Copyright 2026 The Auction Mechanisms Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "auction/ascending.h"
#include "auction/single_item.h"
#include "auction/rng.h"

namespace auction {
namespace {

constexpr ItemId I0{0}, I1{1}, I2{2};
constexpr BidderId B0{0}, B1{1}, B2{2};

StrategySpec truthful(std::map<ItemId, Ticks> values) {
  return {{TruthfulSingleton{std::move(values)}}};
}

StrategySpec on_one(std::int64_t value) { return truthful({{I0, Ticks(value)}}); }

TEST(Saa, SingleItemTruthful) {
  // Values 100/150/120/60/110 at step 5.
  std::vector<StrategySpec> s = {on_one(100), on_one(150), on_one(120), on_one(60), on_one(110)};
  const auto r = run_saa(1, s, Ticks(5));
  EXPECT_EQ(r.outcome.winners(), (std::vector<BidderId>{B1}));
  EXPECT_EQ(r.outcome.revenue, Ticks(120));
  EXPECT_EQ(r.board[0].price, Ticks(120));
  EXPECT_EQ(r.outcome.surplus.at(B1), Ticks(30));
  EXPECT_FALSE(r.board[0].open);
}

TEST(Saa, OpeningBidIsOneStep) {
  std::vector<StrategySpec> s = {on_one(10), on_one(0)};
  const auto r = run_saa(1, s, Ticks(5));
  EXPECT_EQ(r.outcome.winners(), (std::vector<BidderId>{B0}));
  EXPECT_EQ(r.outcome.revenue, Ticks(5));
  EXPECT_EQ(r.rounds, 2);
}

TEST(Saa, UnbidItemsStayUnsold) {
  std::vector<StrategySpec> s = {on_one(3)};
  const auto r = run_saa(2, s, Ticks(5));
  EXPECT_TRUE(r.outcome.allocation.empty());
  EXPECT_EQ(r.outcome.revenue, Ticks(0));
  EXPECT_FALSE(r.board[0].standing.has_value());
}

TEST(Saa, SameRoundTieGoesToLowestId) {
  std::vector<StrategySpec> s = {on_one(5), on_one(5)};
  const auto r = run_saa(1, s, Ticks(5));
  EXPECT_EQ(r.outcome.winners(), (std::vector<BidderId>{B0}));
  EXPECT_EQ(r.outcome.revenue, Ticks(5));
}

TEST(Saa, HoldsAreLogged) {
  std::vector<StrategySpec> s = {on_one(20), on_one(7)};
  const auto r = run_saa(1, s, Ticks(5));
  // The closing round has no bids; the standing bidder's hold is still there.
  bool final_hold = false;
  for (const auto& rec : r.log)
    final_hold = final_hold || (rec.round == r.rounds && rec.action == RoundAction::kHold &&
                                rec.bidder == B0);
  EXPECT_TRUE(final_hold);
}

TEST(Saa, ReplayReproducesBoard) {
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    const int items = static_cast<int>(rng.uniform_int(1, 3));
    const int bidders = static_cast<int>(rng.uniform_int(1, 4));
    std::vector<StrategySpec> s;
    for (int b = 0; b < bidders; ++b) {
      std::map<ItemId, Ticks> values;
      for (int i = 0; i < items; ++i)
        if (rng.uniform_int(0, 3)) values[ItemId{static_cast<std::uint32_t>(i)}] = Ticks(rng.uniform_int(0, 60));
      s.push_back(truthful(values));
    }
    const auto r = run_saa(items, s, Ticks(rng.uniform_int(1, 7)));
    auto replayed = replay_round_log(r.log, items);
    for (auto& st : replayed) st.open = false;
    EXPECT_EQ(replayed, r.board);
    EXPECT_EQ(outcome_from_board(r.board, bidders).payments, r.outcome.payments);
  }
}

// The round count is bounded by the number of minimum raises the values
// allow, and standing prices never exceed the winner's value.
TEST(Saa, TerminatesWithinRaiseBound) {
  Rng rng(9);
  for (int t = 0; t < 200; ++t) {
    const int n = static_cast<int>(rng.uniform_int(1, 5));
    const std::int64_t step = rng.uniform_int(1, 10);
    std::vector<std::int64_t> v(n);
    std::vector<StrategySpec> s;
    for (auto& x : v) {
      x = rng.uniform_int(0, 300);
      s.push_back(on_one(x));
    }
    const auto r = run_saa(1, s, Ticks(step));
    const auto top = *std::max_element(v.begin(), v.end());
    EXPECT_LE(r.rounds, top / step + 2);
    if (!r.outcome.allocation.empty()) {
      const auto w = r.outcome.winners().front();
      EXPECT_LE(r.outcome.payment_of(w).amount(), v[w.index]);
    }
  }
}

TEST(Saa, RoundLimit) {
  std::vector<StrategySpec> s = {on_one(1000), on_one(1000)};
  SaaLimits limits;
  limits.max_rounds = 10;
  EXPECT_THROW(run_saa(1, s, Ticks(1), limits), AuctionError);
}

// Against an ascending clock: with grid-separated top values the same
// bidder wins, and the price lands within one step above the runner-up's
// grid point.
TEST(Saa, AgreesWithEnglishClockUpToOneStep) {
  Rng rng(12);
  for (int t = 0; t < 300; ++t) {
    const int n = static_cast<int>(rng.uniform_int(2, 5));
    const std::int64_t h = rng.uniform_int(1, 10);
    std::vector<std::int64_t> v(n);
    for (auto& x : v) x = rng.uniform_int(0, 200);
    auto sorted = v;
    std::sort(sorted.rbegin(), sorted.rend());
    if (sorted[0] / h <= sorted[1] / h) continue;
    std::vector<StrategySpec> s;
    std::vector<Ticks> tv;
    for (auto x : v) {
      s.push_back(on_one(x));
      tv.emplace_back(x);
    }
    ClockConfig clock;
    clock.step = Ticks(h);
    const auto saa = run_saa(1, s, Ticks(h));
    const auto eng = run_english_clock(tv, clock);
    EXPECT_EQ(saa.outcome.winners(), eng.winners());
    const auto snapped = sorted[1] / h * h;
    EXPECT_GE(saa.outcome.revenue.amount(), snapped);
    EXPECT_LE(saa.outcome.revenue.amount(), snapped + h);
  }
}

TEST(PackageBudget, Decisions) {
  PriceBoard board(3);
  const Bundle pair{I1, I2};
  board[I1.index].price = Ticks(40);
  board[I2.index].price = Ticks(30);
  // Projected 45 + 35 = 80 fits a joint value of 80: raise the cheaper item.
  auto a = package_budget_decision(board, B0, pair, Ticks(80), Ticks(5));
  EXPECT_EQ(a.kind, PackageAction::kRaise);
  EXPECT_EQ(a.item, I2);
  EXPECT_EQ(a.amount, Ticks(35));
  EXPECT_EQ(package_budget_decision(board, B0, pair, Ticks(79), Ticks(5)).kind,
            PackageAction::kQuitAll);
  // Standing on item 2 counts its price without a step.
  board[I2.index].standing = B0;
  a = package_budget_decision(board, B0, pair, Ticks(75), Ticks(5));
  EXPECT_EQ(a.kind, PackageAction::kRaise);
  EXPECT_EQ(a.item, I1);
  board[I1.index].standing = B0;
  EXPECT_EQ(package_budget_decision(board, B0, pair, Ticks(75), Ticks(5)).kind,
            PackageAction::kHold);
  // Equal next prices: lowest id.
  PriceBoard flat(3);
  EXPECT_EQ(package_budget_decision(flat, B0, pair, Ticks(100), Ticks(5)).item, I1);
}

TEST(PackageBudget, QuitsWholeBundleInAuction) {
  // A package bidder valuing {0,1} at 90 against singleton bidders at 60 each.
  std::vector<StrategySpec> s = {{{PackageBudget{{I0, I1}, Ticks(90)}}},
                                 truthful({{I0, Ticks(60)}}), truthful({{I1, Ticks(60)}})};
  const auto r = run_saa(2, s, Ticks(5));
  EXPECT_TRUE(r.outcome.allocation.items_of(B0).empty());
  EXPECT_EQ(r.outcome.allocation.items_of(B1), (std::vector<ItemId>{I0}));
  EXPECT_EQ(r.outcome.allocation.items_of(B2), (std::vector<ItemId>{I1}));
  int quits = 0;
  for (const auto& rec : r.log)
    if (rec.bidder == B0 && rec.action == RoundAction::kQuit) ++quits;
  EXPECT_EQ(quits, 2);
}

TEST(Scripted, CompositeWithTruthful) {
  std::vector<StrategySpec> s = {
      {{Scripted{{{1, I0, Ticks(50)}, {3, I0, Ticks(80)}}}, TruthfulSingleton{{{I1, Ticks(20)}}}}},
      {{Scripted{{{2, I0, Ticks(60)}, {4, I0, std::nullopt}}}, TruthfulSingleton{{{I1, Ticks(10)}}}}}};
  const auto r = run_saa(2, s, Ticks(5));
  EXPECT_EQ(r.outcome.allocation.items_of(B0), (std::vector<ItemId>{I0, I1}));
  EXPECT_EQ(r.board[0].price, Ticks(80));
  EXPECT_EQ(r.board[1].price, Ticks(15));
  // Scripted parts carry no values, so no surplus is reported.
  EXPECT_TRUE(r.outcome.surplus.empty());
}

TEST(Scripted, RuleViolationsNameRoundAndBidder) {
  auto expect_error = [](std::vector<StrategySpec> s, const char* fragment) {
    try {
      run_saa(1, s, Ticks(5));
      ADD_FAILURE() << "no error for " << fragment;
    } catch (const ScenarioError& e) {
      EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
    }
  };
  expect_error({{{Scripted{{{1, I0, Ticks(3)}}}}}}, "round 1, bidder 0");
  expect_error({{{Scripted{{{1, I0, Ticks(10)}, {2, I0, Ticks(20)}}}}}}, "standing");
  expect_error({{{Scripted{{{1, I0, std::nullopt}, {2, I0, Ticks(20)}}}}}, on_one(100)},
               "after quitting");
  expect_error({{{Scripted{{{9, I0, Ticks(10)}}}}}}, "after the auction closed");
}

TEST(RoundAction, Names) {
  for (auto a : {RoundAction::kBid, RoundAction::kHold, RoundAction::kQuit})
    EXPECT_EQ(parse_action(action_name(a)), a);
  EXPECT_THROW(parse_action("pass"), AuctionError);
}

TEST(Saa, RejectsBadSetup) {
  std::vector<StrategySpec> none;
  EXPECT_THROW(run_saa(1, none, Ticks(5)), AuctionError);
  std::vector<StrategySpec> one = {on_one(5)};
  EXPECT_THROW(run_saa(1, one, Ticks(0)), AuctionError);
  std::vector<StrategySpec> stray = {truthful({{I2, Ticks(5)}})};
  EXPECT_THROW(run_saa(1, stray, Ticks(5)), AuctionError);
}

}  // namespace
}  // namespace auction
