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

#ifndef AUCTION_ASCENDING_H_
#define AUCTION_ASCENDING_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "auction/core.h"
#include "auction/money.h"

namespace auction {

// Simultaneous ascending auction: one price per item, bids in rounds.
//
// Each round every bidder, in id order, looks at the board as it stood at
// the start of the round and submits bids on items where it is not the
// standing bidder. A bid must be at least the current price plus one step
// (the opening bid on an item is therefore one step). After all bidders have
// moved, each item goes to its highest bid of the round, ties to the lowest
// id. The auction ends after a round with no bids; every item is sold to its
// standing bidder at the standing price, and items nobody bid on stay
// unsold.

// Bids the minimum raise on each listed item while that stays within the
// item's value; quits the item otherwise.
struct TruthfulSingleton {
  std::map<ItemId, Ticks> values;
};

// Wants the whole bundle for joint_value; see package_budget_decision.
struct PackageBudget {
  Bundle bundle;
  Ticks joint_value;
};

// One scripted move: a bid of the given amount, or a quit when amount is
// empty.
struct ScriptedMove {
  std::int64_t round = 1;
  ItemId item;
  std::optional<Ticks> amount;
};

struct Scripted {
  std::vector<ScriptedMove> moves;
};

using StrategyPart = std::variant<TruthfulSingleton, PackageBudget, Scripted>;

// A bidder's behaviour, possibly combining parts that govern disjoint items
// (e.g. scripted on some items, truthful on another).
struct StrategySpec {
  std::vector<StrategyPart> parts;
};

struct ItemState {
  Ticks price{0};
  std::optional<BidderId> standing;
  bool open = true;

  friend bool operator==(const ItemState&, const ItemState&) = default;
};

using PriceBoard = std::vector<ItemState>;

enum class RoundAction { kBid, kHold, kQuit };

std::string_view action_name(RoundAction action);
RoundAction parse_action(std::string_view name);

struct RoundRecord {
  std::int64_t round = 0;
  BidderId bidder;
  ItemId item;
  Ticks price;  // bid amount, or the item's price for hold and quit
  RoundAction action = RoundAction::kBid;

  friend bool operator==(const RoundRecord&, const RoundRecord&) = default;
};

using RoundLog = std::vector<RoundRecord>;

struct SaaResult {
  Outcome outcome;
  RoundLog log;
  PriceBoard board;
  std::int64_t rounds = 0;  // rounds played, the final empty one included
};

// Scripted move that breaks the rules; the message names round and bidder.
class ScenarioError : public AuctionError {
 public:
  using AuctionError::AuctionError;
};

struct SaaLimits {
  std::int64_t max_rounds = 1'000'000;
};

SaaResult run_saa(std::size_t item_count, std::span<const StrategySpec> strategies,
                  Ticks step, SaaLimits limits = {});

struct PackageAction {
  enum Kind { kRaise, kHold, kQuitAll } kind = kHold;
  ItemId item;   // kRaise only
  Ticks amount;  // kRaise only
};

// Package bidder's move. The projected bundle cost counts items it already
// stands on at their price and every other item at price + step. If that
// exceeds joint_value it quits the whole bundle. Otherwise it raises the
// non-standing item with the lowest next price (lowest id on ties), or holds
// when it stands on the whole bundle.
PackageAction package_budget_decision(const PriceBoard& board, BidderId bidder,
                                      const Bundle& bundle, Ticks joint_value,
                                      Ticks step);

// Rebuilds the closing board from a log, applying the same per-round
// highest-bid rule as run_saa.
PriceBoard replay_round_log(const RoundLog& log, std::size_t item_count);

// Sale of each item to its standing bidder at the standing price.
Outcome outcome_from_board(const PriceBoard& board, std::size_t bidder_count);

}  // namespace auction

#endif  // AUCTION_ASCENDING_H_
