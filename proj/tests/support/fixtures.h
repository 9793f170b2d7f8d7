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

// Conversions between plain oracle bids and library types, plus random
// instance generators shared by the suites.

#ifndef AUCTION_TESTS_SUPPORT_FIXTURES_H_
#define AUCTION_TESTS_SUPPORT_FIXTURES_H_

#include <algorithm>
#include <set>
#include <vector>

#include "auction/core.h"
#include "auction/rng.h"
#include "support/oracles.h"

namespace fixtures {

inline auction::BidProfile to_profile(const std::vector<oracle::Bid>& bids, int bidders) {
  auction::BidProfile p(bidders, {});
  for (const auto& b : bids) {
    std::vector<auction::ItemId> items;
    for (int i : b.items) items.push_back({static_cast<std::uint32_t>(i)});
    p.add({{static_cast<std::uint32_t>(b.bidder)}, auction::Bundle(items), auction::Ticks(b.amount)});
  }
  return p;
}

inline std::vector<oracle::Bid> from_profile(const auction::BidProfile& p) {
  std::vector<oracle::Bid> out;
  for (const auto& b : p.bids()) {
    oracle::Bid o{static_cast<int>(b.bidder.index), {}, b.amount.amount()};
    for (auto i : b.bundle.items()) o.items.push_back(static_cast<int>(i.index));
    out.push_back(o);
  }
  return out;
}

struct Instance {
  int items = 0;
  int bidders = 0;
  std::vector<oracle::Bid> bids;
};

// Each bidder gets 1..max_bundles distinct non-empty bundles with amounts in
// [0, max_amount].
inline Instance random_instance(auction::Rng& rng, int max_items, int max_bidders,
                                int max_bundles, std::int64_t max_amount) {
  Instance inst;
  inst.items = static_cast<int>(rng.uniform_int(1, max_items));
  inst.bidders = static_cast<int>(rng.uniform_int(1, max_bidders));
  for (int b = 0; b < inst.bidders; ++b) {
    std::set<std::uint64_t> seen;
    const int bundles = static_cast<int>(rng.uniform_int(1, max_bundles));
    for (int k = 0; k < bundles; ++k) {
      const std::uint64_t mask = rng.uniform_int(1, (std::int64_t{1} << inst.items) - 1);
      if (!seen.insert(mask).second) continue;
      oracle::Bid bid{b, {}, rng.uniform_int(0, max_amount)};
      for (int i = 0; i < inst.items; ++i)
        if (mask >> i & 1) bid.items.push_back(i);
      inst.bids.push_back(bid);
    }
  }
  return inst;
}

}  // namespace fixtures

#endif  // AUCTION_TESTS_SUPPORT_FIXTURES_H_
