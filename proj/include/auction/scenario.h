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

#ifndef AUCTION_SCENARIO_H_
#define AUCTION_SCENARIO_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "auction/ascending.h"
#include "auction/combinatorial.h"
#include "auction/csv.h"
#include "auction/single_item.h"
#include "auction/winners_curse.h"

namespace auction {

inline constexpr int kScenarioSchemaVersion = 1;

struct SingleScenario {
  SingleItemFormat format = SingleItemFormat::kFirstPrice;
  std::vector<Ticks> amounts;      // bids, values or stop prices by bidder
  std::vector<Ticks> true_values;  // empty when not given
  ClockConfig clock;
};

struct VcgScenario {
  BidProfile bids;
  std::optional<BidProfile> true_values;
  SearchLimits limits;
};

struct SaaScenario {
  Ticks step{1};
  std::vector<StrategySpec> strategies;
};

struct CurseScenario {
  CurseConfig config;
};

struct RevenueScenario {
  std::vector<int> n_bidders;
  std::vector<SingleItemFormat> formats;
};

using Mechanism =
    std::variant<SingleScenario, VcgScenario, SaaScenario, CurseScenario, RevenueScenario>;

std::string_view mechanism_kind(const Mechanism& m);

// Reference values a scenario is expected to reproduce. Every field is
// optional; replicate-paper checks whichever are present.
struct Expected {
  std::optional<Allocation> allocation;
  std::map<BidderId, Ticks> payments;
  std::optional<Ticks> revenue;
  std::map<ItemId, Ticks> item_prices;  // ascending auction closing prices
  // Winner's curse, first replication.
  std::optional<double> median;
  std::optional<double> mean;
  std::optional<Ticks> overpayment;
  // Winner's curse, aggregates.
  std::optional<std::pair<double, double>> mean_of_means;
  std::optional<double> min_fraction_overpaid;
  // Revenue equivalence: allowed |mean - (n-1)/(n+1)|.
  std::optional<double> tolerance;
};

struct ScenarioFile {
  int schema_version = kScenarioSchemaVersion;
  std::string name;
  std::string description;
  Roster roster;
  Mechanism mechanism;
  std::uint64_t seed = 0;
  std::int64_t replications = 1;
  Expected expected;
};

// All problems found in a scenario, one "field: message" line each.
class ScenarioFileError : public std::runtime_error {
 public:
  explicit ScenarioFileError(std::vector<std::string> errors);
  const std::vector<std::string>& errors() const { return errors_; }

 private:
  std::vector<std::string> errors_;
};

ScenarioFile load_scenario(const std::filesystem::path& path);
ScenarioFile parse_scenario(std::string_view json_text);

}  // namespace auction

#endif  // AUCTION_SCENARIO_H_
