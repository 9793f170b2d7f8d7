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

#include "auction/winners_curse.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <thread>

namespace auction {

void validate(const CurseConfig& cfg) {
  if (cfg.n_deposits < 0) throw AuctionError("n_deposits must be non-negative");
  if (cfg.n_buyers < 1) throw AuctionError("n_buyers must be at least 1");
  if (cfg.side < 1) throw AuctionError("side must be at least 1");
  if (cfg.price <= Ticks(0)) throw AuctionError("price must be positive");
  if (cfg.step <= Ticks(0)) throw AuctionError("step must be positive");
  if (cfg.distinct_cells && cfg.n_buyers > cfg.side * cfg.side)
    throw AuctionError("distinct_cells needs at most " +
                       std::to_string(cfg.side * cfg.side) + " buyers, got " +
                       std::to_string(cfg.n_buyers));
}

Territory generate_territory(const CurseConfig& cfg, Rng& rng) {
  validate(cfg);
  Territory t;
  t.side = cfg.side;
  t.deposits.reserve(static_cast<std::size_t>(cfg.n_deposits));
  for (int i = 0; i < cfg.n_deposits; ++i) {
    const double x = rng.uniform_real(0, cfg.side);
    const double y = rng.uniform_real(0, cfg.side);
    t.deposits.push_back({x, y});
  }
  return t;
}

int count_in_cell(const Territory& territory, Cell cell) {
  int k = 0;
  for (const auto& p : territory.deposits)
    if (cell.cx < p.x && p.x < cell.cx + 1 && cell.cy < p.y && p.y < cell.cy + 1) ++k;
  return k;
}

std::vector<SurveyEstimate> survey(const Territory& territory, const CurseConfig& cfg,
                                   Rng& rng) {
  validate(cfg);
  std::vector<Cell> cells;
  if (cfg.distinct_cells) {
    std::vector<Cell> all;
    for (int cx = 0; cx < cfg.side; ++cx)
      for (int cy = 0; cy < cfg.side; ++cy) all.push_back({cx, cy});
    for (int i = 0; i < cfg.n_buyers; ++i) {
      const auto j = rng.uniform_int(i, static_cast<std::int64_t>(all.size()) - 1);
      std::swap(all[static_cast<std::size_t>(i)], all[static_cast<std::size_t>(j)]);
      cells.push_back(all[static_cast<std::size_t>(i)]);
    }
  } else {
    for (int i = 0; i < cfg.n_buyers; ++i) {
      const auto cx = static_cast<int>(rng.uniform_int(0, cfg.side - 1));
      const auto cy = static_cast<int>(rng.uniform_int(0, cfg.side - 1));
      cells.push_back({cx, cy});
    }
  }
  const std::int64_t cell_count = static_cast<std::int64_t>(cfg.side) * cfg.side;
  std::vector<SurveyEstimate> out;
  for (std::uint32_t i = 0; i < cells.size(); ++i) {
    const int k = count_in_cell(territory, cells[i]);
    out.push_back({BidderId{i}, cells[i], k, k * cell_count});
  }
  return out;
}

double median_estimate(std::span<const SurveyEstimate> estimates) {
  if (estimates.empty()) throw AuctionError("median of no estimates");
  std::vector<std::int64_t> v;
  for (const auto& e : estimates) v.push_back(e.estimated_total);
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  if (n % 2 == 1) return static_cast<double>(v[n / 2]);
  return (static_cast<double>(v[n / 2 - 1]) + static_cast<double>(v[n / 2])) / 2.0;
}

double mean_estimate(std::span<const SurveyEstimate> estimates) {
  if (estimates.empty()) throw AuctionError("mean of no estimates");
  std::int64_t sum = 0;
  for (const auto& e : estimates) sum += e.estimated_total;
  return static_cast<double>(sum) / static_cast<double>(estimates.size());
}

Ticks curse_outcome(std::span<const SurveyEstimate> estimates, const CurseConfig& cfg) {
  if (estimates.size() < 2) throw AuctionError("winner's curse needs at least 2 estimates");
  std::vector<std::int64_t> v;
  for (const auto& e : estimates) v.push_back(e.estimated_total);
  std::nth_element(v.begin(), v.begin() + 1, v.end(), std::greater<>());
  return cfg.price * v[1] + cfg.step - cfg.price * cfg.n_deposits;
}

CurseSample sample_replication(const CurseConfig& cfg, std::uint64_t seed,
                               std::int64_t replication) {
  Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(replication));
  CurseSample s;
  s.territory = generate_territory(cfg, rng);
  s.estimates = survey(s.territory, cfg, rng);
  return s;
}

CurseReplication run_curse_replication(const CurseConfig& cfg, std::uint64_t seed,
                                       std::int64_t replication) {
  const auto s = sample_replication(cfg, seed, replication);
  CurseReplication row;
  row.replication = replication;
  row.median = median_estimate(s.estimates);
  row.mean = mean_estimate(s.estimates);
  for (const auto& e : s.estimates) row.total_count += e.deposit_count;
  if (s.estimates.size() >= 2) {
    row.overpayment = curse_outcome(s.estimates, cfg);
    std::vector<std::int64_t> v;
    for (const auto& e : s.estimates) v.push_back(e.estimated_total);
    std::sort(v.begin(), v.end(), std::greater<>());
    row.second_estimate = v[1];
  }
  return row;
}

CurseSummary run_curse_experiment(const CurseConfig& cfg, std::int64_t replications,
                                  std::uint64_t seed, unsigned workers) {
  validate(cfg);
  if (replications < 1) throw AuctionError("replications must be at least 1");
  if (cfg.n_buyers < 2) throw AuctionError("the experiment needs at least 2 buyers");
  CurseSummary summary;
  summary.config = cfg;
  summary.seed = seed;
  summary.rows.resize(static_cast<std::size_t>(replications));
  auto fill = [&](std::int64_t begin, std::int64_t end) {
    for (std::int64_t k = begin; k < end; ++k)
      summary.rows[static_cast<std::size_t>(k)] = run_curse_replication(cfg, seed, k);
  };
  workers = std::max(1u, workers);
  if (workers == 1) {
    fill(0, replications);
  } else {
    std::vector<std::jthread> pool;
    const std::int64_t chunk = (replications + workers - 1) / workers;
    for (std::int64_t b = 0; b < replications; b += chunk)
      pool.emplace_back(fill, b, std::min(replications, b + chunk));
  }

  double means = 0, medians = 0, over = 0;
  std::int64_t overpaid = 0;
  for (const auto& r : summary.rows) {
    means += r.mean;
    medians += r.median;
    over += static_cast<double>(r.overpayment.amount());
    if (r.overpayment > Ticks(0)) ++overpaid;
  }
  const auto n = static_cast<double>(replications);
  summary.mean_of_means = means / n;
  summary.mean_of_medians = medians / n;
  summary.mean_overpayment = over / n;
  summary.fraction_overpaid = static_cast<double>(overpaid) / n;
  return summary;
}

}  // namespace auction
