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

#ifndef AUCTION_WINNERS_CURSE_H_
#define AUCTION_WINNERS_CURSE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "auction/core.h"
#include "auction/money.h"
#include "auction/rng.h"

namespace auction {

// Common-value experiment: deposits scattered over a square territory,
// buyers each survey one unit cell, scale their count up to the whole
// territory, and the English-auction winner pays the second-highest
// estimate plus one step.

struct Point {
  double x = 0;
  double y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

struct Territory {
  int side = 10;
  std::vector<Point> deposits;
};

struct Cell {
  int cx = 0;
  int cy = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct SurveyEstimate {
  BidderId buyer;
  Cell cell;
  int deposit_count = 0;             // deposits strictly inside the cell
  std::int64_t estimated_total = 0;  // deposit_count * side^2
};

struct CurseConfig {
  int n_deposits = 100;
  int n_buyers = 40;
  Ticks price{100000};  // profit per deposit
  Ticks step{10000};
  int side = 10;
  bool distinct_cells = false;  // false: cells drawn with replacement
};

void validate(const CurseConfig& cfg);

// n_deposits points, each coordinate uniform on [0, side).
Territory generate_territory(const CurseConfig& cfg, Rng& rng);

// Deposits in the open square (cx, cx+1) x (cy, cy+1); points on an edge
// belong to no cell.
int count_in_cell(const Territory& territory, Cell cell);

// One estimate per buyer. Cell corners are drawn uniformly from
// 0..side-1 per axis (x first, then y), or as distinct cells by partial
// shuffle when cfg.distinct_cells is set.
std::vector<SurveyEstimate> survey(const Territory& territory, const CurseConfig& cfg,
                                   Rng& rng);

// Median of estimated_total; even counts average the two middle values.
double median_estimate(std::span<const SurveyEstimate> estimates);
double mean_estimate(std::span<const SurveyEstimate> estimates);

// Winner's overpayment y = second_estimate * price + step - n_deposits * price.
// Positive y means the winner paid more than the territory is worth.
Ticks curse_outcome(std::span<const SurveyEstimate> estimates, const CurseConfig& cfg);

struct CurseReplication {
  std::int64_t replication = 0;
  double median = 0;
  double mean = 0;
  Ticks overpayment;
  int total_count = 0;         // sum of deposit counts over buyers
  std::int64_t second_estimate = 0;
};

struct CurseSummary {
  CurseConfig config;
  std::uint64_t seed = 0;
  std::vector<CurseReplication> rows;
  double mean_of_means = 0;
  double mean_of_medians = 0;
  double mean_overpayment = 0;
  double fraction_overpaid = 0;  // share of replications with y > 0
};

// Replication k runs generate_territory then survey on Rng::stream(seed, k).
CurseReplication run_curse_replication(const CurseConfig& cfg, std::uint64_t seed,
                                       std::int64_t replication);

CurseSummary run_curse_experiment(const CurseConfig& cfg, std::int64_t replications,
                                  std::uint64_t seed, unsigned workers = 1);

// Territory and survey of one replication, for point-data export.
struct CurseSample {
  Territory territory;
  std::vector<SurveyEstimate> estimates;
};
CurseSample sample_replication(const CurseConfig& cfg, std::uint64_t seed,
                               std::int64_t replication);

}  // namespace auction

#endif  // AUCTION_WINNERS_CURSE_H_
