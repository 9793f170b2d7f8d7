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

#include "auction/combinatorial.h"

#include <bit>
#include <sstream>
#include <string>
#include <unordered_map>

namespace auction {
namespace {

struct MaskedBid {
  std::uint64_t mask;
  std::size_t index;  // position in the profile
  BidderId bidder;
  Ticks amount;
};

std::vector<MaskedBid> prepare(std::size_t item_count, const BidProfile& profile,
                               SearchLimits limits) {
  if (item_count > limits.max_items || item_count > 63)
    throw InstanceTooLarge("instance has " + std::to_string(item_count) +
                           " items; exhaustive search is bounded at " +
                           std::to_string(limits.max_items));
  const auto report = validate_profile(profile, item_count);
  if (!report.empty()) {
    std::ostringstream os;
    os << "invalid bid profile: " << report.front().bidder << ' '
       << report.front().bundle << ": " << report.front().message;
    throw AuctionError(os.str());
  }
  std::vector<MaskedBid> bids;
  for (std::size_t k = 0; k < profile.bids().size(); ++k) {
    const auto& b = profile.bids()[k];
    bids.push_back({b.bundle.mask(), k, b.bidder, b.amount});
  }
  return bids;
}

// Best value and tie-break key for every reachable remaining-item set.
class WinnerSearch {
 public:
  WinnerSearch(std::size_t item_count, const std::vector<MaskedBid>& bids)
      : item_count_(item_count), bids_(bids) {}

  struct Best {
    Ticks value;
    std::vector<std::int64_t> key;   // per item, 0 = unsold
    std::vector<std::size_t> chosen; // bid positions
  };

  const Best& solve(std::uint64_t remaining) {
    if (auto it = memo_.find(remaining); it != memo_.end()) return it->second;
    Best best;
    if (remaining == 0) {
      best.key.assign(item_count_, 0);
      return memo_.emplace(remaining, std::move(best)).first->second;
    }
    const std::uint64_t lowest = remaining & (~remaining + 1);
    // Leave the lowest item unsold.
    best = solve(remaining & ~lowest);
    for (const auto& b : bids_) {
      if (!(b.mask & lowest) || (b.mask & ~remaining)) continue;
      Best candidate = solve(remaining & ~b.mask);
      candidate.value += b.amount;
      const std::int64_t code = owner_code(b);
      for (int i = 0; i < static_cast<int>(item_count_); ++i)
        if (b.mask >> i & 1) candidate.key[static_cast<std::size_t>(i)] = code;
      candidate.chosen.push_back(b.index);
      if (candidate.value > best.value ||
          (candidate.value == best.value && candidate.key < best.key))
        best = std::move(candidate);
    }
    return memo_.emplace(remaining, std::move(best)).first->second;
  }

 private:
  std::int64_t owner_code(const MaskedBid& b) const {
    return static_cast<std::int64_t>(b.bidder.index + 1) *
               static_cast<std::int64_t>(bids_.size() + 1) +
           static_cast<std::int64_t>(b.index);
  }

  std::size_t item_count_;
  const std::vector<MaskedBid>& bids_;
  std::unordered_map<std::uint64_t, Best> memo_;
};

std::uint64_t full_mask(std::size_t item_count) {
  return item_count == 0 ? 0 : (~std::uint64_t{0} >> (64 - item_count));
}

void enumerate(std::uint64_t remaining, const std::vector<MaskedBid>& bids,
               const BidProfile& profile, std::vector<std::size_t>& chosen,
               const std::function<void(const Allocation&)>& visit) {
  if (remaining == 0) {
    Allocation a;
    for (auto k : chosen) a.assign(profile.bids()[k].bidder, profile.bids()[k].bundle);
    visit(a);
    return;
  }
  const std::uint64_t lowest = remaining & (~remaining + 1);
  enumerate(remaining & ~lowest, bids, profile, chosen, visit);
  for (const auto& b : bids) {
    if (!(b.mask & lowest) || (b.mask & ~remaining)) continue;
    chosen.push_back(b.index);
    enumerate(remaining & ~b.mask, bids, profile, chosen, visit);
    chosen.pop_back();
  }
}

Ticks best_welfare(std::size_t item_count, const BidProfile& profile,
                   SearchLimits limits) {
  const auto bids = prepare(item_count, profile, limits);
  WinnerSearch search(item_count, bids);
  return search.solve(full_mask(item_count)).value;
}

}  // namespace

void for_each_allocation(std::size_t item_count, const BidProfile& profile,
                         const std::function<void(const Allocation&)>& visit,
                         SearchLimits limits) {
  const auto bids = prepare(item_count, profile, limits);
  std::vector<std::size_t> chosen;
  enumerate(full_mask(item_count), bids, profile, chosen, visit);
}

std::vector<Allocation> enumerate_allocations(std::size_t item_count,
                                              const BidProfile& profile,
                                              SearchLimits limits) {
  std::vector<Allocation> out;
  for_each_allocation(item_count, profile,
                      [&](const Allocation& a) { out.push_back(a); }, limits);
  return out;
}

std::pair<Allocation, WelfareValue> winner_determination(
    std::size_t item_count, const BidProfile& profile, SearchLimits limits) {
  const auto bids = prepare(item_count, profile, limits);
  WinnerSearch search(item_count, bids);
  const auto& best = search.solve(full_mask(item_count));
  Allocation a;
  for (auto k : best.chosen) a.assign(profile.bids()[k].bidder, profile.bids()[k].bundle);
  return {a, WelfareValue{best.value}};
}

WelfareValue welfare_of(const Allocation& allocation, const BidProfile& profile) {
  Ticks total(0);
  for (const auto& [bidder, bundles] : allocation.assignment()) {
    for (const auto& bundle : bundles) {
      const BundleBid* bid = profile.find(bidder, bundle);
      if (!bid) throw AuctionError("allocation assigns a bundle that was not bid on");
      total += bid->amount;
    }
  }
  return {total};
}

std::map<BidderId, Ticks> vcg_payments(std::size_t item_count,
                                       const BidProfile& profile,
                                       const Allocation& kstar,
                                       SearchLimits limits) {
  const Ticks total = welfare_of(kstar, profile).total;
  std::map<BidderId, Ticks> payments;
  for (std::uint32_t i = 0; i < profile.bidder_count(); ++i) {
    const BidderId bidder{i};
    if (kstar.bundles_of(bidder).empty()) {
      payments[bidder] = Ticks(0);
      continue;
    }
    Ticks own(0);
    for (const auto& bundle : kstar.bundles_of(bidder))
      own += profile.find(bidder, bundle)->amount;
    const Ticks without = best_welfare(item_count, profile.without(bidder), limits);
    payments[bidder] = without - (total - own);
  }
  return payments;
}

Ticks or_value(const BidProfile& valuation, BidderId bidder,
               const std::vector<ItemId>& items) {
  std::uint64_t held = 0;
  for (ItemId i : items) held |= std::uint64_t{1} << i.index;
  std::vector<MaskedBid> own;
  for (std::size_t k = 0; k < valuation.bids().size(); ++k) {
    const auto& b = valuation.bids()[k];
    if (b.bidder == bidder && (b.bundle.mask() & ~held) == 0)
      own.push_back({b.bundle.mask(), k, b.bidder, b.amount});
  }
  const std::size_t width = held == 0 ? 0 : 64 - std::countl_zero(held);
  WinnerSearch search(width, own);
  return search.solve(held).value;
}

Outcome run_generalized_vickrey(std::size_t item_count, const BidProfile& profile,
                                const BidProfile* true_values, SearchLimits limits) {
  Outcome out;
  out.allocation = winner_determination(item_count, profile, limits).first;
  out.payments = vcg_payments(item_count, profile, out.allocation, limits);
  finalize_payments(out, profile.bidder_count());
  if (true_values) {
    for (std::uint32_t i = 0; i < profile.bidder_count(); ++i) {
      const BidderId b{i};
      out.surplus[b] = or_value(*true_values, b, out.allocation.items_of(b)) -
                       out.payment_of(b);
    }
  }
  return out;
}

}  // namespace auction
