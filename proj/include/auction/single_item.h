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

#ifndef AUCTION_SINGLE_ITEM_H_
#define AUCTION_SINGLE_ITEM_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "auction/core.h"
#include "auction/money.h"

namespace auction {

// Single-item formats. Bids, values and stop prices are indexed by BidderId;
// the item is ItemId{0}. An empty true_values span means "not supplied".

enum class PaymentRule {
  kSecondPrice,         // winner pays the runner-up value on the step grid
  kSecondPricePlusStep  // ... plus one step
};

struct ClockConfig {
  Ticks step{1};
  PaymentRule payment_rule = PaymentRule::kSecondPrice;
  Ticks start_price{0};  // descending clock only
};

enum class SingleItemFormat { kFirstPrice, kVickrey, kEnglish, kJapanese, kDutch };

std::string_view format_name(SingleItemFormat format);
SingleItemFormat parse_format(std::string_view name);

// Highest bid wins (ties to the lowest id) and pays its own bid.
Outcome run_first_price(std::span<const Ticks> bids,
                        std::span<const Ticks> true_values = {});

// Highest bid wins and pays the highest other bid; a lone bidder pays 0.
Outcome run_vickrey(std::span<const Ticks> bids,
                    std::span<const Ticks> true_values = {});

// Ascending clock from 0 in steps of cfg.step. A bidder stays in while the
// price is at most its value. The last one in (highest value, then lowest
// id) wins. The payment is the runner-up value rounded up to the step grid,
// plus one step under kSecondPricePlusStep. Winner surplus is reported
// against the values.
Outcome run_english_clock(std::span<const Ticks> values, const ClockConfig& cfg);

struct ClockExit {
  std::int64_t round;  // clock tick at which the exit was observed
  BidderId bidder;
  Ticks last_price;    // highest price the bidder was still in at
};

struct JapaneseResult {
  Outcome outcome;
  std::vector<ClockExit> exits;  // in exit order; the winner never exits
};

// Same clock with every irrevocable exit recorded. The winner pays the last
// price at which its final rival was still in.
JapaneseResult run_japanese(std::span<const Ticks> values, const ClockConfig& cfg);

// Descending clock from cfg.start_price in steps of cfg.step (floored at 0).
// The first grid price at or below some stop price ends the auction; that
// bidder pays the grid price. When several stops are passed at the same
// grid price the highest stop accepts first, then the lowest id.
Outcome run_dutch(std::span<const Ticks> stop_prices, const ClockConfig& cfg);

// Symmetric uniform-value equilibrium bid (n-1)/n * value, rounded down to
// a whole tick.
Ticks bne_bid_uniform(Ticks value, int n_bidders);

struct RevenueEstimate {
  double mean = 0;        // in units of the value scale (values in [0, 1))
  double std_error = 0;
  std::int64_t replications = 0;
};

// Values grid for revenue estimation: one unit = kRevenueGrid ticks.
inline constexpr std::int64_t kRevenueGrid = 1'000'000;

// Monte Carlo expected revenue with i.i.d. uniform values. First-price and
// Dutch bidders shade with bne_bid_uniform; the others bid truthfully. The
// clocks run with a one-tick step. Replication k uses Rng::stream(seed, k),
// so the result does not depend on the worker count.
RevenueEstimate estimate_revenue(SingleItemFormat format, int n_bidders,
                                 std::int64_t replications, std::uint64_t seed,
                                 unsigned workers = 1);

// Revenue of one replication, in ticks of kRevenueGrid.
Ticks revenue_replication(SingleItemFormat format, int n_bidders,
                          std::uint64_t seed, std::uint64_t replication);

}  // namespace auction

#endif  // AUCTION_SINGLE_ITEM_H_
