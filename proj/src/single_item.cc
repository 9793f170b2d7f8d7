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

#include "auction/single_item.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <thread>

#include "auction/rng.h"

namespace auction {
namespace {

constexpr ItemId kItem{0};

void require_nonempty(std::span<const Ticks> amounts, const char* what) {
  if (amounts.empty()) throw AuctionError(std::string(what) + ": no bidders");
  for (Ticks t : amounts)
    if (t < Ticks(0)) throw AuctionError(std::string(what) + ": negative amount");
}

// Highest amount, ties to the lowest index.
std::uint32_t argmax(std::span<const Ticks> amounts) {
  std::uint32_t best = 0;
  for (std::uint32_t i = 1; i < amounts.size(); ++i)
    if (amounts[i] > amounts[best]) best = i;
  return best;
}

std::optional<Ticks> best_other(std::span<const Ticks> amounts, std::uint32_t skip) {
  std::optional<Ticks> best;
  for (std::uint32_t i = 0; i < amounts.size(); ++i)
    if (i != skip && (!best || amounts[i] > *best)) best = amounts[i];
  return best;
}

Outcome single_winner(std::size_t n, std::uint32_t winner, Ticks payment,
                      std::span<const Ticks> true_values) {
  Outcome out;
  out.allocation.assign(BidderId{winner}, Bundle{kItem});
  out.payments[BidderId{winner}] = payment;
  finalize_payments(out, n);
  if (!true_values.empty()) {
    if (true_values.size() != n)
      throw AuctionError("true values do not match the number of bidders");
    for (std::uint32_t i = 0; i < n; ++i)
      out.surplus[BidderId{i}] = i == winner ? true_values[i] - payment : Ticks(0);
  }
  return out;
}

Ticks round_up_to_grid(Ticks v, Ticks step) {
  const std::int64_t h = step.amount();
  return Ticks((v.amount() + h - 1) / h * h);
}

struct ClockRun {
  std::uint32_t winner = 0;
  std::vector<ClockExit> exits;
};

// Ascending clock, advanced event to event: between exits nothing changes,
// so the price jumps straight to the first grid point above the lowest
// remaining value.
ClockRun run_ascending_clock(std::span<const Ticks> values, Ticks step) {
  require_nonempty(values, "ascending clock");
  if (step <= Ticks(0)) throw AuctionError("ascending clock: step must be positive");
  const std::int64_t h = step.amount();
  std::vector<std::uint32_t> active(values.size());
  for (std::uint32_t i = 0; i < active.size(); ++i) active[i] = i;

  ClockRun run;
  while (active.size() >= 2) {
    Ticks lowest = values[active.front()];
    for (auto i : active) lowest = std::min(lowest, values[i]);
    const std::int64_t next = (lowest.amount() / h + 1) * h;
    const Ticks last_in(next - h);

    std::vector<std::uint32_t> staying, leaving;
    for (auto i : active)
      (values[i].amount() < next ? leaving : staying).push_back(i);
    if (staying.empty()) {
      // Everyone left at once: the highest value is the last to let go.
      std::uint32_t w = leaving.front();
      for (auto i : leaving)
        if (values[i] > values[w]) w = i;
      staying.push_back(w);
      std::erase(leaving, w);
    }
    for (auto i : leaving) run.exits.push_back({next / h, BidderId{i}, last_in});
    active = std::move(staying);
  }
  run.winner = active.front();
  return run;
}

}  // namespace

std::string_view format_name(SingleItemFormat format) {
  switch (format) {
    case SingleItemFormat::kFirstPrice: return "first_price";
    case SingleItemFormat::kVickrey: return "vickrey";
    case SingleItemFormat::kEnglish: return "english";
    case SingleItemFormat::kJapanese: return "japanese";
    case SingleItemFormat::kDutch: return "dutch";
  }
  return "?";
}

SingleItemFormat parse_format(std::string_view name) {
  for (auto f : {SingleItemFormat::kFirstPrice, SingleItemFormat::kVickrey,
                 SingleItemFormat::kEnglish, SingleItemFormat::kJapanese,
                 SingleItemFormat::kDutch})
    if (format_name(f) == name) return f;
  throw AuctionError("unknown single-item format '" + std::string(name) + "'");
}

Outcome run_first_price(std::span<const Ticks> bids,
                        std::span<const Ticks> true_values) {
  require_nonempty(bids, "first-price auction");
  const auto w = argmax(bids);
  return single_winner(bids.size(), w, bids[w], true_values);
}

Outcome run_vickrey(std::span<const Ticks> bids, std::span<const Ticks> true_values) {
  require_nonempty(bids, "Vickrey auction");
  const auto w = argmax(bids);
  return single_winner(bids.size(), w, best_other(bids, w).value_or(Ticks(0)),
                       true_values);
}

Outcome run_english_clock(std::span<const Ticks> values, const ClockConfig& cfg) {
  const ClockRun run = run_ascending_clock(values, cfg.step);
  Ticks payment(0);
  if (auto runner_up = best_other(values, run.winner)) {
    payment = round_up_to_grid(*runner_up, cfg.step);
    if (cfg.payment_rule == PaymentRule::kSecondPricePlusStep) payment += cfg.step;
  }
  return single_winner(values.size(), run.winner, payment, values);
}

JapaneseResult run_japanese(std::span<const Ticks> values, const ClockConfig& cfg) {
  ClockRun run = run_ascending_clock(values, cfg.step);
  const Ticks payment = run.exits.empty() ? Ticks(0) : run.exits.back().last_price;
  return {single_winner(values.size(), run.winner, payment, values),
          std::move(run.exits)};
}

Outcome run_dutch(std::span<const Ticks> stop_prices, const ClockConfig& cfg) {
  require_nonempty(stop_prices, "Dutch auction");
  if (cfg.step <= Ticks(0)) throw AuctionError("Dutch auction: step must be positive");
  const auto top = argmax(stop_prices);
  if (cfg.start_price < stop_prices[top])
    throw AuctionError("Dutch auction: start price " +
                       std::to_string(cfg.start_price.amount()) +
                       " is below a stop price of " +
                       std::to_string(stop_prices[top].amount()));
  // First k with start - k*step <= highest stop.
  const std::int64_t gap = (cfg.start_price - stop_prices[top]).amount();
  const std::int64_t k = (gap + cfg.step.amount() - 1) / cfg.step.amount();
  const Ticks price = std::max(Ticks(0), cfg.start_price - cfg.step * k);
  // Every stop >= price accepts at this grid point; the highest stop (then
  // lowest id) is top by construction.
  return single_winner(stop_prices.size(), top, price, {});
}

Ticks bne_bid_uniform(Ticks value, int n_bidders) {
  if (n_bidders < 2) throw AuctionError("equilibrium bid needs at least 2 bidders");
  if (value < Ticks(0)) throw AuctionError("equilibrium bid: negative value");
  // floor((n-1)v/n) = v - ceil(v/n), without the overflow of (n-1)*v.
  const std::int64_t v = value.amount();
  return Ticks(v - (v / n_bidders + (v % n_bidders != 0)));
}

Ticks revenue_replication(SingleItemFormat format, int n_bidders,
                          std::uint64_t seed, std::uint64_t replication) {
  if (n_bidders < 2) throw AuctionError("revenue estimate needs at least 2 bidders");
  Rng rng = Rng::stream(seed, replication);
  std::vector<Ticks> values(static_cast<std::size_t>(n_bidders));
  for (auto& v : values) v = Ticks(rng.uniform_int(0, kRevenueGrid - 1));

  ClockConfig clock{Ticks(1), PaymentRule::kSecondPrice, Ticks(kRevenueGrid)};
  switch (format) {
    case SingleItemFormat::kVickrey: return run_vickrey(values).revenue;
    case SingleItemFormat::kEnglish: return run_english_clock(values, clock).revenue;
    case SingleItemFormat::kJapanese: return run_japanese(values, clock).outcome.revenue;
    case SingleItemFormat::kFirstPrice:
    case SingleItemFormat::kDutch: {
      std::vector<Ticks> shaded(values.size());
      for (std::size_t i = 0; i < values.size(); ++i)
        shaded[i] = bne_bid_uniform(values[i], n_bidders);
      return format == SingleItemFormat::kDutch ? run_dutch(shaded, clock).revenue
                                                : run_first_price(shaded).revenue;
    }
  }
  throw AuctionError("unknown format");
}

RevenueEstimate estimate_revenue(SingleItemFormat format, int n_bidders,
                                 std::int64_t replications, std::uint64_t seed,
                                 unsigned workers) {
  if (replications < 1) throw AuctionError("replications must be at least 1");
  if (n_bidders < 2) throw AuctionError("revenue estimate needs at least 2 bidders");
  const auto reps = static_cast<std::size_t>(replications);
  std::vector<std::int64_t> revenue(reps);
  auto fill = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k)
      revenue[k] = revenue_replication(format, n_bidders, seed, k).amount();
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(reps)));
  if (workers == 1) {
    fill(0, reps);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (reps + workers - 1) / workers;
    for (std::size_t b = 0; b < reps; b += chunk)
      pool.emplace_back(fill, b, std::min(reps, b + chunk));
  }

  // Summed in replication order so the result is independent of workers.
  const double scale = static_cast<double>(kRevenueGrid);
  double sum = 0;
  for (auto r : revenue) sum += static_cast<double>(r) / scale;
  const double mean = sum / static_cast<double>(reps);
  double ss = 0;
  for (auto r : revenue) {
    const double d = static_cast<double>(r) / scale - mean;
    ss += d * d;
  }
  RevenueEstimate est;
  est.mean = mean;
  est.replications = replications;
  est.std_error = reps > 1 ? std::sqrt(ss / static_cast<double>(reps - 1) /
                                       static_cast<double>(reps))
                           : 0.0;
  return est;
}

}  // namespace auction
