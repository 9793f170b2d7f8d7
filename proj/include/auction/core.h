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

#ifndef AUCTION_CORE_H_
#define AUCTION_CORE_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "auction/money.h"

namespace auction {

// Dense participant index, 0..N-1 within a scenario. Display names live in
// the scenario's roster, not in the id.
struct BidderId {
  std::uint32_t index = 0;
  friend constexpr auto operator<=>(BidderId, BidderId) = default;
};

// Dense item index, 0..M-1.
struct ItemId {
  std::uint32_t index = 0;
  friend constexpr auto operator<=>(ItemId, ItemId) = default;
};

std::ostream& operator<<(std::ostream& os, BidderId b);
std::ostream& operator<<(std::ostream& os, ItemId i);

// Raised by mechanisms for inputs that break their preconditions.
class AuctionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A set of items bid on jointly. Items are kept sorted; duplicates are kept
// so that validate_profile can report them.
class Bundle {
 public:
  Bundle() = default;
  Bundle(std::initializer_list<ItemId> items);
  explicit Bundle(std::vector<ItemId> items);

  const std::vector<ItemId>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  bool contains(ItemId item) const;
  bool has_duplicates() const;

  // Bit i set for item i. Requires every index < 64.
  std::uint64_t mask() const;

  friend auto operator<=>(const Bundle&, const Bundle&) = default;
  friend bool operator==(const Bundle&, const Bundle&) = default;

 private:
  std::vector<ItemId> items_;
};

std::ostream& operator<<(std::ostream& os, const Bundle& b);

struct BundleBid {
  BidderId bidder;
  Bundle bundle;
  Ticks amount;

  friend bool operator==(const BundleBid&, const BundleBid&) = default;
};

// OR-language bids: a bidder may win any pairwise-disjoint subset of its own
// bundles, and the values add.
class BidProfile {
 public:
  BidProfile() = default;
  BidProfile(std::size_t bidder_count, std::vector<BundleBid> bids);

  std::size_t bidder_count() const { return bidder_count_; }
  const std::vector<BundleBid>& bids() const { return bids_; }

  void add(BundleBid bid);

  // The same profile without any of this bidder's bids (bidder count kept).
  BidProfile without(BidderId bidder) const;

  // The bid of this bidder on exactly this bundle, if any.
  const BundleBid* find(BidderId bidder, const Bundle& bundle) const;

 private:
  std::size_t bidder_count_ = 0;
  std::vector<BundleBid> bids_;
};

// Bidder -> bundles won. Bidders that win nothing have no entry.
class Allocation {
 public:
  void assign(BidderId bidder, Bundle bundle);

  const std::map<BidderId, std::vector<Bundle>>& assignment() const {
    return assignment_;
  }
  const std::vector<Bundle>& bundles_of(BidderId bidder) const;
  bool empty() const { return assignment_.empty(); }

  // Items held by each bidder, flattened and sorted.
  std::vector<ItemId> items_of(BidderId bidder) const;

  // Owner of each item (index = item), or -1 for unassigned.
  std::vector<std::int64_t> owner_vector(std::size_t item_count) const;

  friend bool operator==(const Allocation&, const Allocation&) = default;

 private:
  std::map<BidderId, std::vector<Bundle>> assignment_;
};

std::ostream& operator<<(std::ostream& os, const Allocation& a);

// Payments hold an entry for every participant, with 0 for losers, so the
// revenue is the plain sum of the map. Surplus entries exist only for
// bidders whose true valuation was supplied.
struct Outcome {
  Allocation allocation;
  std::map<BidderId, Ticks> payments;
  Ticks revenue;
  std::map<BidderId, Ticks> surplus;

  Ticks payment_of(BidderId bidder) const;
  std::vector<BidderId> winners() const;

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

// Sets payments for all bidders 0..n-1 (absent ones get 0) and the revenue.
void finalize_payments(Outcome& outcome, std::size_t bidder_count);

struct Violation {
  BidderId bidder;
  Bundle bundle;
  std::string message;
};

using ValidationReport = std::vector<Violation>;

// Empty report iff every bid is non-negative, every bundle is non-empty and
// duplicate-free over known items, bidders are in range, and no bidder bids
// twice on the same bundle.
ValidationReport validate_profile(const BidProfile& profile,
                                  std::size_t item_count);

}  // namespace auction

#endif  // AUCTION_CORE_H_
