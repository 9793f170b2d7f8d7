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

#include "auction/ascending.h"

#include <algorithm>
#include <set>
#include <string>

namespace auction {
namespace {

struct Pending {
  ItemId item;
  BidderId bidder;
  Ticks amount;
};

[[noreturn]] void script_error(std::int64_t round, BidderId bidder,
                               const std::string& what) {
  throw ScenarioError("round " + std::to_string(round) + ", bidder " +
                      std::to_string(bidder.index) + ": " + what);
}

void apply_round(PriceBoard& board, const std::vector<Pending>& bids) {
  // bids arrive in bidder-id order, so the first maximum is the lowest id.
  std::vector<std::optional<Pending>> best(board.size());
  for (const auto& b : bids) {
    auto& slot = best[b.item.index];
    if (!slot || b.amount > slot->amount) slot = b;
  }
  for (std::size_t i = 0; i < board.size(); ++i) {
    if (!best[i]) continue;
    board[i].price = best[i]->amount;
    board[i].standing = best[i]->bidder;
  }
}

class Engine {
 public:
  Engine(std::size_t item_count, std::span<const StrategySpec> strategies, Ticks step)
      : strategies_(strategies), step_(step), board_(item_count),
        quit_(strategies.size()) {}

  SaaResult run(SaaLimits limits) {
    std::int64_t last_scripted = 0;
    for (const auto& s : strategies_)
      for (const auto& part : s.parts)
        if (auto* sc = std::get_if<Scripted>(&part))
          for (const auto& m : sc->moves) last_scripted = std::max(last_scripted, m.round);

    std::int64_t round = 0;
    for (;;) {
      if (++round > limits.max_rounds)
        throw AuctionError("ascending auction did not settle within " +
                           std::to_string(limits.max_rounds) + " rounds");
      snapshot_ = board_;
      pending_.clear();
      for (std::uint32_t b = 0; b < strategies_.size(); ++b) play(round, BidderId{b});
      apply_round(board_, pending_);
      if (pending_.empty()) break;
    }
    if (last_scripted > round)
      throw ScenarioError("scripted moves in round " + std::to_string(last_scripted) +
                          " come after the auction closed in round " +
                          std::to_string(round));
    for (auto& item : board_) item.open = false;

    SaaResult result;
    result.outcome = outcome_from_board(board_, strategies_.size());
    add_surplus(result.outcome);
    result.log = std::move(log_);
    result.board = board_;
    result.rounds = round;
    return result;
  }

 private:
  void play(std::int64_t round, BidderId bidder) {
    for (std::size_t i = 0; i < snapshot_.size(); ++i) {
      const auto& st = snapshot_[i];
      if (st.open && st.standing == bidder)
        log(round, bidder, ItemId{static_cast<std::uint32_t>(i)}, st.price,
            RoundAction::kHold);
    }
    for (const auto& part : strategies_[bidder.index].parts) {
      std::visit([&](const auto& p) { play_part(round, bidder, p); }, part);
    }
  }

  void play_part(std::int64_t round, BidderId bidder, const TruthfulSingleton& s) {
    for (const auto& [item, value] : s.values) {
      const auto& st = at(item);
      if (has_quit(bidder, item) || !st.open || st.standing == bidder) continue;
      const Ticks next = st.price + step_;
      if (next <= value) {
        bid(round, bidder, item, next);
      } else {
        quit(round, bidder, item);
      }
    }
  }

  void play_part(std::int64_t round, BidderId bidder, const PackageBudget& s) {
    if (s.bundle.empty() || has_quit(bidder, s.bundle.items().front())) return;
    const auto action =
        package_budget_decision(snapshot_, bidder, s.bundle, s.joint_value, step_);
    if (action.kind == PackageAction::kQuitAll) {
      for (ItemId item : s.bundle.items()) quit(round, bidder, item);
    } else if (action.kind == PackageAction::kRaise) {
      bid(round, bidder, action.item, action.amount);
    }
  }

  void play_part(std::int64_t round, BidderId bidder, const Scripted& s) {
    for (const auto& m : s.moves) {
      if (m.round != round) continue;
      if (m.item.index >= snapshot_.size())
        script_error(round, bidder, "unknown item " + std::to_string(m.item.index));
      if (has_quit(bidder, m.item))
        script_error(round, bidder, "moves on item " + std::to_string(m.item.index) +
                                        " after quitting it");
      const auto& st = at(m.item);
      if (!m.amount) {
        quit(round, bidder, m.item);
        continue;
      }
      if (st.standing == bidder)
        script_error(round, bidder, "bids on item " + std::to_string(m.item.index) +
                                        " while already standing on it");
      if (*m.amount < st.price + step_)
        script_error(round, bidder,
                     "bid " + std::to_string(m.amount->amount()) + " on item " +
                         std::to_string(m.item.index) + " is below the minimum " +
                         std::to_string((st.price + step_).amount()));
      bid(round, bidder, m.item, *m.amount);
    }
  }

  const ItemState& at(ItemId item) const {
    if (item.index >= snapshot_.size())
      throw AuctionError("strategy references unknown item " +
                         std::to_string(item.index));
    return snapshot_[item.index];
  }

  bool has_quit(BidderId bidder, ItemId item) const {
    return quit_[bidder.index].contains(item);
  }

  void bid(std::int64_t round, BidderId bidder, ItemId item, Ticks amount) {
    pending_.push_back({item, bidder, amount});
    log(round, bidder, item, amount, RoundAction::kBid);
  }

  void quit(std::int64_t round, BidderId bidder, ItemId item) {
    if (!quit_[bidder.index].insert(item).second) return;
    log(round, bidder, item, at(item).price, RoundAction::kQuit);
  }

  void log(std::int64_t round, BidderId bidder, ItemId item, Ticks price,
           RoundAction action) {
    log_.push_back({round, bidder, item, price, action});
  }

  // Surplus is reported only for bidders whose every part carries values.
  void add_surplus(Outcome& outcome) const {
    for (std::uint32_t b = 0; b < strategies_.size(); ++b) {
      const BidderId bidder{b};
      const auto won = outcome.allocation.items_of(bidder);
      auto holds = [&](ItemId i) { return std::binary_search(won.begin(), won.end(), i); };
      Ticks value(0);
      bool valued = true;
      for (const auto& part : strategies_[b].parts) {
        if (auto* t = std::get_if<TruthfulSingleton>(&part)) {
          for (const auto& [item, v] : t->values)
            if (holds(item)) value += v;
        } else if (auto* p = std::get_if<PackageBudget>(&part)) {
          if (std::all_of(p->bundle.items().begin(), p->bundle.items().end(), holds))
            value += p->joint_value;
        } else {
          valued = false;
        }
      }
      if (valued) outcome.surplus[bidder] = value - outcome.payment_of(bidder);
    }
  }

  std::span<const StrategySpec> strategies_;
  Ticks step_;
  PriceBoard board_;
  PriceBoard snapshot_;
  std::vector<Pending> pending_;
  std::vector<std::set<ItemId>> quit_;
  RoundLog log_;
};

}  // namespace

std::string_view action_name(RoundAction action) {
  switch (action) {
    case RoundAction::kBid: return "bid";
    case RoundAction::kHold: return "hold";
    case RoundAction::kQuit: return "quit";
  }
  return "?";
}

RoundAction parse_action(std::string_view name) {
  for (auto a : {RoundAction::kBid, RoundAction::kHold, RoundAction::kQuit})
    if (action_name(a) == name) return a;
  throw AuctionError("unknown round action '" + std::string(name) + "'");
}

SaaResult run_saa(std::size_t item_count, std::span<const StrategySpec> strategies,
                  Ticks step, SaaLimits limits) {
  if (step <= Ticks(0)) throw AuctionError("ascending auction: step must be positive");
  if (strategies.empty()) throw AuctionError("ascending auction: no bidders");
  return Engine(item_count, strategies, step).run(limits);
}

PackageAction package_budget_decision(const PriceBoard& board, BidderId bidder,
                                      const Bundle& bundle, Ticks joint_value,
                                      Ticks step) {
  Ticks projected(0);
  std::optional<ItemId> cheapest;
  Ticks cheapest_next(0);
  for (ItemId item : bundle.items()) {
    if (item.index >= board.size())
      throw AuctionError("package references unknown item " + std::to_string(item.index));
    const auto& st = board[item.index];
    if (st.standing == bidder) {
      projected += st.price;
      continue;
    }
    const Ticks next = st.price + step;
    projected += next;
    if (!cheapest || next < cheapest_next) {
      cheapest = item;
      cheapest_next = next;
    }
  }
  if (projected > joint_value) return {PackageAction::kQuitAll, {}, {}};
  if (!cheapest) return {PackageAction::kHold, {}, {}};
  return {PackageAction::kRaise, *cheapest, cheapest_next};
}

PriceBoard replay_round_log(const RoundLog& log, std::size_t item_count) {
  PriceBoard board(item_count);
  std::vector<Pending> round_bids;
  std::int64_t current = log.empty() ? 0 : log.front().round;
  auto flush = [&] {
    // Same rule as the engine: highest amount, then lowest bidder id.
    std::stable_sort(round_bids.begin(), round_bids.end(),
                     [](const Pending& a, const Pending& b) {
                       return a.bidder < b.bidder;
                     });
    apply_round(board, round_bids);
    round_bids.clear();
  };
  for (const auto& r : log) {
    if (r.round != current) {
      flush();
      current = r.round;
    }
    if (r.item.index >= item_count) throw AuctionError("log references unknown item");
    if (r.action == RoundAction::kBid) round_bids.push_back({r.item, r.bidder, r.price});
  }
  flush();
  for (auto& item : board) item.open = false;
  return board;
}

Outcome outcome_from_board(const PriceBoard& board, std::size_t bidder_count) {
  Outcome out;
  for (std::size_t i = 0; i < board.size(); ++i) {
    if (!board[i].standing) continue;
    const BidderId winner = *board[i].standing;
    out.allocation.assign(winner, Bundle{ItemId{static_cast<std::uint32_t>(i)}});
    out.payments[winner] += board[i].price;
  }
  finalize_payments(out, bidder_count);
  return out;
}

}  // namespace auction
