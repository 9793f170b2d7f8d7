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

// Scans seeds for a first replication of the default curse experiment whose
// statistics match a target (total count, second-highest estimate, median).

#include <cstdint>
#include <iostream>

#include "CLI11.hpp"
#include "auction/winners_curse.h"

int main(int argc, char** argv) {
  CLI::App app{"Search for a seed with given first-replication survey statistics"};
  int total = 44;
  std::int64_t second = 400;
  double median = 100.0;
  std::uint64_t from = 0;
  std::uint64_t count = 1'000'000;
  bool distinct = false;
  app.add_option("--total", total, "Sum of deposit counts over all buyers");
  app.add_option("--second", second, "Second-highest estimated total");
  app.add_option("--median", median, "Median estimate");
  app.add_option("--from", from, "First seed to try");
  app.add_option("--count", count, "Number of seeds to try");
  app.add_flag("--distinct", distinct, "Draw distinct cells");
  CLI11_PARSE(app, argc, argv);

  auction::CurseConfig cfg;
  cfg.distinct_cells = distinct;
  for (std::uint64_t seed = from; seed - from < count; ++seed) {
    const auto r = auction::run_curse_replication(cfg, seed, 0);
    if (r.total_count == total && r.second_estimate == second && r.median == median) {
      std::cout << seed << '\n';
      return 0;
    }
  }
  std::cerr << "no matching seed in [" << from << ", " << from + count << ")\n";
  return 1;
}
