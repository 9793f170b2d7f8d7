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

// Randomized property checks shared by the unit suites and the acceptance
// runner. Each returns how many instances it looked at and the first
// counterexample, if any.

#ifndef AUCTION_TESTS_SUPPORT_PROPERTIES_H_
#define AUCTION_TESTS_SUPPORT_PROPERTIES_H_

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "auction/ascending.h"
#include "auction/combinatorial.h"
#include "auction/rng.h"
#include "auction/single_item.h"
#include "support/fixtures.h"
#include "support/oracles.h"

namespace properties {

struct Result {
  int instances = 0;
  int failures = 0;
  std::string first_failure;

  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
  bool ok() const { return instances > 0 && failures == 0; }
};

inline std::string describe(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

inline std::vector<auction::Ticks> ticks(const std::vector<std::int64_t>& v) {
  std::vector<auction::Ticks> out;
  for (auto x : v) out.emplace_back(x);
  return out;
}

// Sealed second price: no report on the grid 0..20 beats the true value.
inline Result vickrey_truthfulness(int instances, std::uint64_t seed) {
  Result r;
  auction::Rng rng(seed);
  for (int t = 0; t < instances; ++t, ++r.instances) {
    const int n = static_cast<int>(rng.uniform_int(2, 5));
    std::vector<std::int64_t> values(n);
    for (auto& v : values) v = rng.uniform_int(0, 20);
    for (int i = 0; i < n; ++i) {
      auto utility = [&](std::int64_t report) {
        auto bids = values;
        bids[i] = report;
        const auto tb = ticks(bids);
        const auto o = auction::run_vickrey(tb);
        const auction::BidderId me{static_cast<std::uint32_t>(i)};
        const bool won = !o.allocation.items_of(me).empty();
        return (won ? values[i] : 0) - o.payment_of(me).amount();
      };
      const auto truthful = utility(values[i]);
      for (std::int64_t d = 0; d <= 20; ++d)
        if (utility(d) > truthful)
          r.fail("values " + describe(values) + ": bidder " + std::to_string(i) +
                 " gains by reporting " + std::to_string(d));
    }
  }
  return r;
}

// Generalized Vickrey: for every bidder, replacing its bid amounts by any
// combination on the grid 0,5,..,50 never raises its true utility (OR value
// of the items won minus payment).
inline Result vcg_truthfulness(int instances, std::uint64_t seed) {
  Result r;
  auction::Rng rng(seed);
  for (int t = 0; t < instances; ++t, ++r.instances) {
    auto inst = fixtures::random_instance(rng, 3, 3, 2, 10);
    for (auto& b : inst.bids) b.amount *= 5;
    const auto truth = inst.bids;
    for (int i = 0; i < inst.bidders; ++i) {
      std::vector<std::size_t> mine;
      for (std::size_t k = 0; k < truth.size(); ++k)
        if (truth[k].bidder == i) mine.push_back(k);
      auto utility = [&](const std::vector<oracle::Bid>& reported) {
        const auto o = auction::run_generalized_vickrey(
            inst.items, fixtures::to_profile(reported, inst.bidders));
        const auction::BidderId me{static_cast<std::uint32_t>(i)};
        std::vector<int> won;
        for (auto item : o.allocation.items_of(me)) won.push_back(static_cast<int>(item.index));
        return oracle::or_value(truth, i, won) - o.payment_of(me).amount();
      };
      const auto honest = utility(truth);
      std::vector<int> digits(mine.size(), 0);
      for (;;) {
        auto reported = truth;
        for (std::size_t k = 0; k < mine.size(); ++k) reported[mine[k]].amount = digits[k] * 5;
        if (utility(reported) > honest) {
          std::vector<std::int64_t> rep;
          for (auto k : mine) rep.push_back(reported[k].amount);
          r.fail("instance " + std::to_string(t) + ": bidder " + std::to_string(i) +
                 " gains by reporting " + describe(rep));
        }
        std::size_t k = 0;
        while (k < digits.size() && ++digits[k] > 10) digits[k++] = 0;
        if (k == digits.size()) break;
      }
    }
  }
  return r;
}

// Winner determination reaches the brute-force optimum, returns a feasible
// allocation made of submitted bids, and reports its welfare correctly.
inline bool wd_matches(const fixtures::Instance& inst, std::string& why) {
  const auto profile = fixtures::to_profile(inst.bids, inst.bidders);
  const auto [alloc, welfare] = auction::winner_determination(inst.items, profile);
  const auto best = oracle::best_welfare(inst.bids);
  std::set<std::uint32_t> used;
  std::int64_t total = 0;
  for (const auto& [bidder, bundles] : alloc.assignment()) {
    for (const auto& b : bundles) {
      const auto* bid = profile.find(bidder, b);
      if (!bid) {
        why = "allocation uses a bundle nobody bid on";
        return false;
      }
      total += bid->amount.amount();
      for (auto item : b.items())
        if (!used.insert(item.index).second) {
          why = "item sold twice";
          return false;
        }
    }
  }
  if (total != best || welfare.total.amount() != best) {
    why = "welfare " + std::to_string(welfare.total.amount()) + " (allocation sums to " +
          std::to_string(total) + "), brute force " + std::to_string(best);
    return false;
  }
  return true;
}

inline Result wd_equivalence(const std::vector<fixtures::Instance>& fixed, int random,
                             std::uint64_t seed) {
  Result r;
  std::string why;
  for (std::size_t k = 0; k < fixed.size(); ++k, ++r.instances)
    if (!wd_matches(fixed[k], why)) r.fail("fixture " + std::to_string(k) + ": " + why);
  auction::Rng rng(seed);
  for (int t = 0; t < random; ++t, ++r.instances) {
    const auto inst = fixtures::random_instance(rng, 4, 5, 3, 50);
    if (!wd_matches(inst, why)) r.fail("random instance " + std::to_string(t) + ": " + why);
  }
  return r;
}

// Descending clock with stops equal to sealed first-price bids: same winner,
// price within one step below the bid.
inline Result dutch_first_price(int instances, std::uint64_t seed) {
  Result r;
  auction::Rng rng(seed);
  for (int t = 0; t < instances; ++t, ++r.instances) {
    const int n = static_cast<int>(rng.uniform_int(1, 6));
    std::vector<std::int64_t> bids(n);
    for (auto& b : bids) b = rng.uniform_int(0, 1000);
    const std::int64_t h = rng.uniform_int(1, 50);
    auction::ClockConfig cfg;
    cfg.step = auction::Ticks(h);
    cfg.start_price = auction::Ticks(*std::max_element(bids.begin(), bids.end()) +
                                     rng.uniform_int(0, 100));
    const auto tb = ticks(bids);
    const auto fp = auction::run_first_price(tb);
    const auto du = auction::run_dutch(tb, cfg);
    const auto w = fp.winners();
    const auto gap = fp.revenue.amount() - du.revenue.amount();
    if (w != du.winners() || gap < 0 || gap > h)
      r.fail("bids " + describe(bids) + " step " + std::to_string(h) + ": first-price " +
             std::to_string(fp.revenue.amount()) + ", Dutch " +
             std::to_string(du.revenue.amount()));
  }
  return r;
}

// One item, one singleton bid per bidder: the generalized mechanism and the
// sealed second-price auction agree exactly.
inline Result single_item_vcg_vickrey(int instances, std::uint64_t seed) {
  Result r;
  auction::Rng rng(seed);
  for (int t = 0; t < instances; ++t, ++r.instances) {
    const int n = static_cast<int>(rng.uniform_int(1, 6));
    std::vector<std::int64_t> bids(n, 0);
    while (*std::max_element(bids.begin(), bids.end()) == 0)
      for (auto& b : bids) b = rng.uniform_int(0, 100);
    std::vector<oracle::Bid> plain;
    for (int i = 0; i < n; ++i) plain.push_back({i, {0}, bids[i]});
    const auto v = auction::run_vickrey(ticks(bids));
    const auto g = auction::run_generalized_vickrey(1, fixtures::to_profile(plain, n));
    if (!(v.allocation == g.allocation && v.payments == g.payments && v.revenue == g.revenue))
      r.fail("bids " + describe(bids));
  }
  return r;
}

// Every format hands the item to the highest value. Values are distinct
// multiples of 100 so that clock steps and equilibrium shading cannot merge
// two bidders.
inline Result efficiency(int instances, std::uint64_t seed) {
  Result r;
  auction::Rng rng(seed);
  for (int t = 0; t < instances; ++t, ++r.instances) {
    const int n = static_cast<int>(rng.uniform_int(2, 5));
    std::vector<std::int64_t> values;
    while (static_cast<int>(values.size()) < n) {
      const auto v = rng.uniform_int(1, 100) * 100;
      if (std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
    }
    const auto top = static_cast<std::uint32_t>(
        std::max_element(values.begin(), values.end()) - values.begin());
    const std::vector<auction::BidderId> want{{top}};

    std::vector<auction::Ticks> shaded;
    for (auto v : values) shaded.push_back(auction::bne_bid_uniform(auction::Ticks(v), n));
    const auto tv = ticks(values);
    auction::ClockConfig clock;
    clock.step = auction::Ticks(10);
    auction::ClockConfig dutch = clock;
    dutch.start_price = auction::Ticks(10000);

    std::vector<auction::StrategySpec> saa;
    for (auto v : values)
      saa.push_back({{auction::TruthfulSingleton{{{auction::ItemId{0}, auction::Ticks(v)}}}}});

    const std::pair<const char*, auction::Outcome> runs[] = {
        {"first_price", auction::run_first_price(shaded)},
        {"vickrey", auction::run_vickrey(tv)},
        {"english", auction::run_english_clock(tv, clock)},
        {"japanese", auction::run_japanese(tv, clock).outcome},
        {"dutch", auction::run_dutch(shaded, dutch)},
        {"ascending", auction::run_saa(1, saa, auction::Ticks(100)).outcome},
    };
    for (const auto& [name, o] : runs)
      if (o.winners() != want) r.fail(std::string(name) + " with values " + describe(values));
  }
  return r;
}

}  // namespace properties

#endif  // AUCTION_TESTS_SUPPORT_PROPERTIES_H_
