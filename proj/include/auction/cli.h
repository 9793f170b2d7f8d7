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

#ifndef AUCTION_CLI_H_
#define AUCTION_CLI_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "auction/scenario.h"

namespace auction {

struct RevenueRow {
  SingleItemFormat format;
  int n_bidders = 0;
  RevenueEstimate estimate;
  double theory = 0;  // (n-1)/(n+1)
};

// Everything a scenario run produced; which members are set depends on the
// mechanism kind.
struct ScenarioRun {
  std::optional<Outcome> outcome;
  std::optional<SaaResult> saa;
  std::optional<CurseSummary> curse;
  std::optional<CurseSample> curse_sample;  // replication 0, for point files
  std::vector<RevenueRow> revenue;
};

struct RunOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> replications;
};

ScenarioRun run_scenario(const ScenarioFile& scenario, const RunOverrides& overrides = {});

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

// Compares a run against the scenario's expected block.
std::vector<Check> check_expected(const ScenarioFile& scenario, const ScenarioRun& run);

// Entry point behind the auction_cli binary. args excludes the program name.
// Returns 0 on success, 1 on a scenario error (or a failed replication
// check), 2 on a usage error.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace auction

#endif  // AUCTION_CLI_H_
