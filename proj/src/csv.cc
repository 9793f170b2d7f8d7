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

#include "auction/csv.h"

#include <charconv>
#include <cstdio>
#include <sstream>

namespace auction {
namespace {

template <typename Id>
Id lookup(const std::vector<std::string>& names, std::string_view name,
          const char* what) {
  for (std::uint32_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return Id{i};
  throw AuctionError(std::string("unknown ") + what + " '" + std::string(name) + "'");
}

std::string name_of(const std::vector<std::string>& names, std::uint32_t index) {
  return index < names.size() ? names[index] : "#" + std::to_string(index);
}

void expect_header(const std::vector<std::vector<std::string>>& rows,
                   const std::vector<std::string>& header) {
  if (rows.empty() || rows.front() != header)
    throw AuctionError("unexpected CSV header");
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

BidderId Roster::bidder(std::string_view name) const {
  return lookup<BidderId>(bidders, name, "bidder");
}

ItemId Roster::item(std::string_view name) const {
  return lookup<ItemId>(items, name, "item");
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

void write_csv_row(std::ostream& os, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << csv_field(fields[i]);
  os << '\n';
}

std::vector<std::vector<std::string>> read_csv(std::istream& is) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false, any = false;
  char c;
  while (is.get(c)) {
    any = true;
    if (quoted) {
      if (c == '"') {
        if (is.peek() == '"') {
          field += '"';
          is.get();
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      row.push_back(std::move(field));
      field.clear();
      rows.push_back(std::move(row));
      row.clear();
      any = false;
    } else if (c != '\r') {
      field += c;
    }
  }
  if (any) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_outcome_csv(std::ostream& os, const Outcome& outcome, const Roster& roster) {
  write_csv_row(os, {"record", "bidder", "items", "amount"});
  for (const auto& [bidder, bundles] : outcome.allocation.assignment()) {
    for (const auto& bundle : bundles) {
      std::string items;
      for (ItemId i : bundle.items())
        items += (items.empty() ? "" : ";") + name_of(roster.items, i.index);
      write_csv_row(os, {"allocation", name_of(roster.bidders, bidder.index), items, ""});
    }
  }
  for (const auto& [bidder, p] : outcome.payments)
    write_csv_row(os, {"payment", name_of(roster.bidders, bidder.index), "",
                       format_ticks(p, roster.unit_scale)});
  for (const auto& [bidder, s] : outcome.surplus)
    write_csv_row(os, {"surplus", name_of(roster.bidders, bidder.index), "",
                       format_ticks(s, roster.unit_scale)});
  write_csv_row(os, {"revenue", "", "", format_ticks(outcome.revenue, roster.unit_scale)});
}

Outcome read_outcome_csv(std::istream& is, const Roster& roster) {
  const auto rows = read_csv(is);
  expect_header(rows, {"record", "bidder", "items", "amount"});
  Outcome out;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != 4) throw AuctionError("outcome CSV row " + std::to_string(r) +
                                            " does not have 4 fields");
    const std::string& kind = row[0];
    if (kind == "allocation") {
      std::vector<ItemId> items;
      std::stringstream ss(row[2]);
      std::string name;
      while (std::getline(ss, name, ';')) items.push_back(roster.item(name));
      out.allocation.assign(roster.bidder(row[1]), Bundle(std::move(items)));
    } else if (kind == "payment") {
      out.payments[roster.bidder(row[1])] = ticks_from_decimal(row[3], roster.unit_scale);
    } else if (kind == "surplus") {
      out.surplus[roster.bidder(row[1])] = ticks_from_decimal(row[3], roster.unit_scale);
    } else if (kind == "revenue") {
      out.revenue = ticks_from_decimal(row[3], roster.unit_scale);
    } else {
      throw AuctionError("unknown outcome record '" + kind + "'");
    }
  }
  return out;
}

void write_payments_csv(std::ostream& os, const Outcome& outcome, const Roster& roster) {
  write_csv_row(os, {"bidder", "payment"});
  for (BidderId w : outcome.winners())
    write_csv_row(os, {name_of(roster.bidders, w.index),
                       format_ticks(outcome.payment_of(w), roster.unit_scale)});
}

void write_round_log_csv(std::ostream& os, const RoundLog& log, const Roster& roster) {
  write_csv_row(os, {"round", "bidder", "item", "price_ticks", "action"});
  for (const auto& r : log)
    write_csv_row(os, {std::to_string(r.round), name_of(roster.bidders, r.bidder.index),
                       name_of(roster.items, r.item.index),
                       std::to_string(r.price.amount()),
                       std::string(action_name(r.action))});
}

RoundLog read_round_log_csv(std::istream& is, const Roster& roster) {
  const auto rows = read_csv(is);
  expect_header(rows, {"round", "bidder", "item", "price_ticks", "action"});
  auto integer = [](const std::string& s) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
      throw AuctionError("bad integer '" + s + "' in round log");
    return v;
  };
  RoundLog log;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != 5) throw AuctionError("round log row " + std::to_string(r) +
                                            " does not have 5 fields");
    log.push_back({integer(row[0]), roster.bidder(row[1]), roster.item(row[2]),
                   Ticks(integer(row[3])), parse_action(row[4])});
  }
  return log;
}

void write_deposits_csv(std::ostream& os, const Territory& territory) {
  write_csv_row(os, {"x", "y"});
  for (const auto& p : territory.deposits) write_csv_row(os, {fixed(p.x, 6), fixed(p.y, 6)});
}

void write_buyer_cells_csv(std::ostream& os, std::span<const SurveyEstimate> estimates) {
  write_csv_row(os, {"buyer", "cx", "cy", "count"});
  for (const auto& e : estimates)
    write_csv_row(os, {std::to_string(e.buyer.index), std::to_string(e.cell.cx),
                       std::to_string(e.cell.cy), std::to_string(e.deposit_count)});
}

}  // namespace auction
