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

#ifndef AUCTION_CSV_H_
#define AUCTION_CSV_H_

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "auction/ascending.h"
#include "auction/core.h"
#include "auction/winners_curse.h"

namespace auction {

// Names and money scale used to render ids and ticks in files.
struct Roster {
  std::vector<std::string> bidders;
  std::vector<std::string> items;
  std::int64_t unit_scale = 1;

  BidderId bidder(std::string_view name) const;
  ItemId item(std::string_view name) const;
};

// RFC 4180 field quoting; rows end with LF.
std::string csv_field(std::string_view text);
void write_csv_row(std::ostream& os, const std::vector<std::string>& fields);
std::vector<std::vector<std::string>> read_csv(std::istream& is);

// Outcome as "record,bidder,items,amount" rows:
//   allocation,<bidder>,<item;item...>,
//   payment,<bidder>,,<decimal>
//   surplus,<bidder>,,<decimal>
//   revenue,,,<decimal>
void write_outcome_csv(std::ostream& os, const Outcome& outcome, const Roster& roster);
Outcome read_outcome_csv(std::istream& is, const Roster& roster);

// "bidder,payment" for every bidder that won something.
void write_payments_csv(std::ostream& os, const Outcome& outcome, const Roster& roster);

// "round,bidder,item,price_ticks,action".
void write_round_log_csv(std::ostream& os, const RoundLog& log, const Roster& roster);
RoundLog read_round_log_csv(std::istream& is, const Roster& roster);

// Point data for scatter plots: "x,y" deposits and "buyer,cx,cy,count" cells.
void write_deposits_csv(std::ostream& os, const Territory& territory);
void write_buyer_cells_csv(std::ostream& os, std::span<const SurveyEstimate> estimates);

}  // namespace auction

#endif  // AUCTION_CSV_H_
