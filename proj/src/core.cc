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

#include "auction/core.h"

#include <algorithm>
#include <set>

namespace auction {

std::ostream& operator<<(std::ostream& os, BidderId b) {
  return os << "bidder#" << b.index;
}

std::ostream& operator<<(std::ostream& os, ItemId i) {
  return os << "item#" << i.index;
}

Bundle::Bundle(std::initializer_list<ItemId> items) : items_(items) {
  std::sort(items_.begin(), items_.end());
}

Bundle::Bundle(std::vector<ItemId> items) : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end());
}

bool Bundle::contains(ItemId item) const {
  return std::binary_search(items_.begin(), items_.end(), item);
}

bool Bundle::has_duplicates() const {
  return std::adjacent_find(items_.begin(), items_.end()) != items_.end();
}

std::uint64_t Bundle::mask() const {
  std::uint64_t m = 0;
  for (ItemId i : items_) {
    if (i.index >= 64) throw AuctionError("item index too large for a mask");
    m |= std::uint64_t{1} << i.index;
  }
  return m;
}

std::ostream& operator<<(std::ostream& os, const Bundle& b) {
  os << '{';
  for (std::size_t k = 0; k < b.items().size(); ++k)
    os << (k ? "," : "") << b.items()[k].index;
  return os << '}';
}

BidProfile::BidProfile(std::size_t bidder_count, std::vector<BundleBid> bids)
    : bidder_count_(bidder_count), bids_(std::move(bids)) {}

void BidProfile::add(BundleBid bid) { bids_.push_back(std::move(bid)); }

BidProfile BidProfile::without(BidderId bidder) const {
  BidProfile out;
  out.bidder_count_ = bidder_count_;
  for (const auto& b : bids_)
    if (b.bidder != bidder) out.bids_.push_back(b);
  return out;
}

const BundleBid* BidProfile::find(BidderId bidder, const Bundle& bundle) const {
  for (const auto& b : bids_)
    if (b.bidder == bidder && b.bundle == bundle) return &b;
  return nullptr;
}

void Allocation::assign(BidderId bidder, Bundle bundle) {
  auto& list = assignment_[bidder];
  list.insert(std::lower_bound(list.begin(), list.end(), bundle),
              std::move(bundle));
}

const std::vector<Bundle>& Allocation::bundles_of(BidderId bidder) const {
  static const std::vector<Bundle> kNone;
  auto it = assignment_.find(bidder);
  return it == assignment_.end() ? kNone : it->second;
}

std::vector<ItemId> Allocation::items_of(BidderId bidder) const {
  std::vector<ItemId> items;
  for (const auto& b : bundles_of(bidder))
    items.insert(items.end(), b.items().begin(), b.items().end());
  std::sort(items.begin(), items.end());
  return items;
}

std::vector<std::int64_t> Allocation::owner_vector(std::size_t item_count) const {
  std::vector<std::int64_t> owner(item_count, -1);
  for (const auto& [bidder, bundles] : assignment_)
    for (const auto& b : bundles)
      for (ItemId i : b.items())
        if (i.index < item_count) owner[i.index] = bidder.index;
  return owner;
}

std::ostream& operator<<(std::ostream& os, const Allocation& a) {
  os << '[';
  bool first = true;
  for (const auto& [bidder, bundles] : a.assignment()) {
    for (const auto& b : bundles) {
      os << (first ? "" : " ") << bidder.index << ':' << b;
      first = false;
    }
  }
  return os << ']';
}

Ticks Outcome::payment_of(BidderId bidder) const {
  auto it = payments.find(bidder);
  return it == payments.end() ? Ticks(0) : it->second;
}

std::vector<BidderId> Outcome::winners() const {
  std::vector<BidderId> out;
  for (const auto& [bidder, bundles] : allocation.assignment())
    if (!bundles.empty()) out.push_back(bidder);
  return out;
}

void finalize_payments(Outcome& outcome, std::size_t bidder_count) {
  for (std::uint32_t i = 0; i < bidder_count; ++i)
    outcome.payments.try_emplace(BidderId{i}, Ticks(0));
  outcome.revenue = Ticks(0);
  for (const auto& [bidder, p] : outcome.payments) outcome.revenue += p;
}

ValidationReport validate_profile(const BidProfile& profile,
                                  std::size_t item_count) {
  ValidationReport report;
  std::set<std::pair<BidderId, Bundle>> seen;
  for (const auto& bid : profile.bids()) {
    auto flag = [&](std::string msg) {
      report.push_back({bid.bidder, bid.bundle, std::move(msg)});
    };
    if (bid.bidder.index >= profile.bidder_count())
      flag("unknown bidder index " + std::to_string(bid.bidder.index));
    if (bid.amount < Ticks(0)) flag("negative bid amount");
    if (bid.bundle.empty()) flag("empty bundle");
    if (bid.bundle.has_duplicates()) flag("bundle lists an item twice");
    for (ItemId i : bid.bundle.items()) {
      if (i.index >= item_count)
        flag("bundle references unknown item index " + std::to_string(i.index));
    }
    if (!seen.emplace(bid.bidder, bid.bundle).second)
      flag("duplicate bid on the same bundle");
  }
  return report;
}

}  // namespace auction
