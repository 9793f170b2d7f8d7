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

#ifndef AUCTION_COMBINATORIAL_H_
#define AUCTION_COMBINATORIAL_H_

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "auction/core.h"

namespace auction {

// Exhaustive combinatorial auction over OR bids.
//
// Allocations are searched by a memoized recursion over the remaining item
// set: the lowest undecided item is either left unsold or covered by one bid
// that fits in what remains. Ties in welfare go to the lexicographically
// smallest item->owner vector, with "unsold" ordered before every bidder and
// bidders by id. Equal vectors fall back to the covering bids' positions in
// the profile.

struct SearchLimits {
  std::size_t max_items = 12;
};

class InstanceTooLarge : public AuctionError {
 public:
  using AuctionError::AuctionError;
};

struct WelfareValue {
  Ticks total;
  friend auto operator<=>(const WelfareValue&, const WelfareValue&) = default;
};

// Calls visit once per feasible allocation, the empty one included. Throws
// AuctionError if the profile does not validate.
void for_each_allocation(std::size_t item_count, const BidProfile& profile,
                         const std::function<void(const Allocation&)>& visit,
                         SearchLimits limits = {});

std::vector<Allocation> enumerate_allocations(std::size_t item_count,
                                              const BidProfile& profile,
                                              SearchLimits limits = {});

std::pair<Allocation, WelfareValue> winner_determination(
    std::size_t item_count, const BidProfile& profile, SearchLimits limits = {});

// Sum of the owning bidders' bids on the assigned bundles.
WelfareValue welfare_of(const Allocation& allocation, const BidProfile& profile);

// Pivot payments: for every bidder, the best welfare the others could reach
// without it, minus what the others get in kstar. Every bidder gets an entry.
std::map<BidderId, Ticks> vcg_payments(std::size_t item_count,
                                       const BidProfile& profile,
                                       const Allocation& kstar,
                                       SearchLimits limits = {});

// Value of an item set to a bidder under its OR valuation: the best sum
// over disjoint own bundles inside the set.
Ticks or_value(const BidProfile& valuation, BidderId bidder,
               const std::vector<ItemId>& items);

// Winner determination plus pivot payments. With true_values supplied the
// surplus of each bidder is the OR value of the items it won minus its
// payment.
Outcome run_generalized_vickrey(std::size_t item_count, const BidProfile& profile,
                                const BidProfile* true_values = nullptr,
                                SearchLimits limits = {});

}  // namespace auction

#endif  // AUCTION_COMBINATORIAL_H_
