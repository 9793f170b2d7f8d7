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

#include "auction/scenario.h"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace auction {
namespace {

using nlohmann::json;

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += (out.empty() ? "" : "\n") + l;
  return out;
}

// Walks the document once and records every problem with its field path.
class Parser {
 public:
  ScenarioFile parse(const json& doc) {
    ScenarioFile file;
    if (!doc.is_object()) {
      fail("", "scenario must be a JSON object");
      throw ScenarioFileError(errors_);
    }
    check_keys(doc, "", {"schema_version", "name", "description", "unit_scale", "items",
                         "bidders", "mechanism", "bids", "amounts", "true_values",
                         "strategies", "seed", "replications", "expected"});

    if (auto v = integer(doc, "schema_version", "", true)) {
      file.schema_version = static_cast<int>(*v);
      if (*v != kScenarioSchemaVersion)
        fail("schema_version", "unsupported version " + std::to_string(*v) +
                                   " (expected " +
                                   std::to_string(kScenarioSchemaVersion) + ")");
    }
    file.name = text(doc, "name", "", true);
    file.description = text(doc, "description", "", false);
    if (auto v = integer(doc, "unit_scale", "", true)) {
      try {
        scale_digits(*v);
        scale_ = *v;
      } catch (const MoneyError& e) {
        fail("unit_scale", e.what());
      }
    }
    file.roster.unit_scale = scale_;
    file.roster.items = names(doc, "items");
    file.roster.bidders = names(doc, "bidders");
    roster_ = &file.roster;
    if (auto v = integer(doc, "seed", "", false)) {
      if (*v < 0) fail("seed", "must be non-negative");
      file.seed = static_cast<std::uint64_t>(*v);
    }
    if (auto v = integer(doc, "replications", "", false)) {
      if (*v < 1) fail("replications", "must be at least 1");
      file.replications = *v;
    }

    if (!doc.contains("mechanism") || !doc["mechanism"].is_object()) {
      fail("mechanism", "required object is missing");
    } else {
      parse_mechanism(doc, file);
    }
    if (doc.contains("expected")) file.expected = parse_expected(doc["expected"]);
    if (!errors_.empty()) throw ScenarioFileError(errors_);
    return file;
  }

 private:
  void fail(const std::string& path, const std::string& message) {
    errors_.push_back((path.empty() ? "<root>" : path) + ": " + message);
  }

  static std::string join(const std::string& base, const std::string& key) {
    return base.empty() ? key : base + "." + key;
  }

  static std::string index(const std::string& base, std::size_t i) {
    return base + "[" + std::to_string(i) + "]";
  }

  void check_keys(const json& obj, const std::string& path,
                  const std::set<std::string>& allowed) {
    for (const auto& [key, value] : obj.items())
      if (!allowed.contains(key)) fail(join(path, key), "unknown key");
  }

  const json* field(const json& obj, const std::string& key, const std::string& path,
                    bool required) {
    if (obj.contains(key)) return &obj[key];
    if (required) fail(join(path, key), "required field is missing");
    return nullptr;
  }

  std::optional<std::int64_t> integer(const json& obj, const std::string& key,
                                      const std::string& path, bool required) {
    const json* v = field(obj, key, path, required);
    if (!v) return std::nullopt;
    if (!v->is_number_integer()) {
      fail(join(path, key), "must be an integer");
      return std::nullopt;
    }
    return v->get<std::int64_t>();
  }

  std::string text(const json& obj, const std::string& key, const std::string& path,
                   bool required) {
    const json* v = field(obj, key, path, required);
    if (!v) return {};
    if (!v->is_string()) {
      fail(join(path, key), "must be a string");
      return {};
    }
    return v->get<std::string>();
  }

  std::optional<double> real(const json& v, const std::string& path) {
    if (!v.is_number()) {
      fail(path, "must be a number");
      return std::nullopt;
    }
    return v.get<double>();
  }

  std::optional<bool> boolean(const json& obj, const std::string& key,
                              const std::string& path) {
    const json* v = field(obj, key, path, false);
    if (!v) return std::nullopt;
    if (!v->is_boolean()) {
      fail(join(path, key), "must be true or false");
      return std::nullopt;
    }
    return v->get<bool>();
  }

  // Money is always a decimal string so it never passes through a double.
  std::optional<Ticks> money(const json& v, const std::string& path) {
    if (!v.is_string()) {
      fail(path, "money must be a decimal string, e.g. \"2.30\"");
      return std::nullopt;
    }
    try {
      return ticks_from_decimal(v.get<std::string>(), scale_);
    } catch (const MoneyError& e) {
      fail(path, e.what());
      return std::nullopt;
    }
  }

  std::optional<Ticks> money_field(const json& obj, const std::string& key,
                                   const std::string& path, bool required) {
    const json* v = field(obj, key, path, required);
    return v ? money(*v, join(path, key)) : std::nullopt;
  }

  std::optional<Ticks> nonneg_money(const json& v, const std::string& path) {
    auto t = money(v, path);
    if (t && *t < Ticks(0)) {
      fail(path, "must not be negative");
      return std::nullopt;
    }
    return t;
  }

  std::vector<std::string> names(const json& doc, const std::string& key) {
    std::vector<std::string> out;
    const json* v = field(doc, key, "", true);
    if (!v) return out;
    if (!v->is_array()) {
      fail(key, "must be an array of names");
      return out;
    }
    std::set<std::string> seen;
    for (std::size_t i = 0; i < v->size(); ++i) {
      const auto& n = (*v)[i];
      if (!n.is_string() || n.get<std::string>().empty()) {
        fail(index(key, i), "must be a non-empty string");
        continue;
      }
      if (!seen.insert(n.get<std::string>()).second)
        fail(index(key, i), "duplicate name '" + n.get<std::string>() + "'");
      out.push_back(n.get<std::string>());
    }
    return out;
  }

  std::optional<BidderId> bidder(const json& v, const std::string& path) {
    if (v.is_string()) {
      for (std::uint32_t i = 0; i < roster_->bidders.size(); ++i)
        if (roster_->bidders[i] == v.get<std::string>()) return BidderId{i};
      fail(path, "unknown bidder '" + v.get<std::string>() + "'");
      return std::nullopt;
    }
    fail(path, "must be a bidder name");
    return std::nullopt;
  }

  std::optional<BidderId> bidder_name(const std::string& name, const std::string& path) {
    return bidder(json(name), path);
  }

  std::optional<ItemId> item(const json& v, const std::string& path) {
    if (v.is_string()) {
      for (std::uint32_t i = 0; i < roster_->items.size(); ++i)
        if (roster_->items[i] == v.get<std::string>()) return ItemId{i};
      fail(path, "unknown item '" + v.get<std::string>() + "'");
      return std::nullopt;
    }
    fail(path, "must be an item name");
    return std::nullopt;
  }

  std::optional<Bundle> bundle(const json& v, const std::string& path) {
    if (!v.is_array() || v.empty()) {
      fail(path, "must be a non-empty array of item names");
      return std::nullopt;
    }
    std::vector<ItemId> items;
    bool ok = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (auto it = item(v[i], index(path, i))) items.push_back(*it); else ok = false;
    }
    if (!ok) return std::nullopt;
    Bundle b(std::move(items));
    if (b.has_duplicates()) {
      fail(path, "lists an item twice");
      return std::nullopt;
    }
    return b;
  }

  // {"Anna": "2.3", ...} keyed by bidder; every bidder must appear.
  std::vector<Ticks> per_bidder(const json& doc, const std::string& key) {
    std::vector<Ticks> out(roster_->bidders.size());
    const json& v = doc[key];
    if (!v.is_object()) {
      fail(key, "must be an object mapping bidder names to amounts");
      return {};
    }
    std::vector<bool> given(out.size(), false);
    for (const auto& [name, amount] : v.items()) {
      auto b = bidder_name(name, join(key, name));
      auto t = nonneg_money(amount, join(key, name));
      if (b && t) {
        out[b->index] = *t;
        given[b->index] = true;
      }
    }
    for (std::size_t i = 0; i < given.size(); ++i)
      if (!given[i]) fail(join(key, roster_->bidders[i]), "missing amount");
    return out;
  }

  BidProfile profile(const json& doc, const std::string& key) {
    BidProfile p(roster_->bidders.size(), {});
    const json& v = doc[key];
    if (!v.is_array()) {
      fail(key, "must be an array of bundle bids");
      return p;
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
      const std::string path = index(key, i);
      const json& b = v[i];
      if (!b.is_object()) {
        fail(path, "must be an object");
        continue;
      }
      check_keys(b, path, {"bidder", "items", "amount"});
      const json* who = field(b, "bidder", path, true);
      const json* what = field(b, "items", path, true);
      const json* amount = field(b, "amount", path, true);
      auto id = who ? bidder(*who, join(path, "bidder")) : std::nullopt;
      auto bun = what ? bundle(*what, join(path, "items")) : std::nullopt;
      auto t = amount ? nonneg_money(*amount, join(path, "amount")) : std::nullopt;
      if (!id || !bun || !t) continue;
      if (p.find(*id, *bun)) {
        fail(path, "duplicate bid by " + roster_->bidders[id->index] + " on the same bundle");
        continue;
      }
      p.add({*id, *bun, *t});
    }
    return p;
  }

  void require_only(const json& doc, std::string_view kind,
                    const std::set<std::string>& allowed_inputs) {
    for (const char* key : {"bids", "amounts", "true_values", "strategies"})
      if (doc.contains(key) && !allowed_inputs.contains(key))
        fail(key, "not used by mechanism kind '" + std::string(kind) + "'");
  }

  void parse_mechanism(const json& doc, ScenarioFile& file) {
    const json& m = doc["mechanism"];
    const std::string kind = text(m, "kind", "mechanism", true);
    if (kind == "single") {
      check_keys(m, "mechanism", {"kind", "format", "step", "payment_rule", "start_price"});
      require_only(doc, kind, {"amounts", "true_values"});
      SingleScenario s;
      const std::string format = text(m, "format", "mechanism", true);
      try {
        s.format = parse_format(format);
      } catch (const AuctionError& e) {
        fail("mechanism.format", e.what());
      }
      if (auto step = money_field(m, "step", "mechanism", false)) {
        if (*step <= Ticks(0)) fail("mechanism.step", "must be positive");
        s.clock.step = *step;
      }
      if (m.contains("payment_rule")) {
        const std::string rule = text(m, "payment_rule", "mechanism", true);
        if (rule == "second_price") {
          s.clock.payment_rule = PaymentRule::kSecondPrice;
        } else if (rule == "second_price_plus_step") {
          s.clock.payment_rule = PaymentRule::kSecondPricePlusStep;
        } else {
          fail("mechanism.payment_rule",
               "must be second_price or second_price_plus_step, got '" + rule + "'");
        }
      }
      if (auto start = money_field(m, "start_price", "mechanism", false))
        s.clock.start_price = *start;
      if (!doc.contains("amounts")) fail("amounts", "required field is missing");
      else s.amounts = per_bidder(doc, "amounts");
      if (doc.contains("true_values")) s.true_values = per_bidder(doc, "true_values");
      file.mechanism = std::move(s);
    } else if (kind == "vcg") {
      check_keys(m, "mechanism", {"kind", "max_items"});
      require_only(doc, kind, {"bids", "true_values"});
      VcgScenario s;
      if (auto bound = integer(m, "max_items", "mechanism", false)) {
        if (*bound < 1 || *bound > 63) fail("mechanism.max_items", "must be in 1..63");
        else s.limits.max_items = static_cast<std::size_t>(*bound);
      }
      if (roster_->items.size() > s.limits.max_items)
        fail("items", "instance has " + std::to_string(roster_->items.size()) +
                          " items; exhaustive search is bounded at " +
                          std::to_string(s.limits.max_items));
      if (!doc.contains("bids")) fail("bids", "required field is missing");
      else s.bids = profile(doc, "bids");
      if (doc.contains("true_values")) s.true_values = profile(doc, "true_values");
      file.mechanism = std::move(s);
    } else if (kind == "saa") {
      check_keys(m, "mechanism", {"kind", "step"});
      require_only(doc, kind, {"strategies"});
      SaaScenario s;
      if (auto step = money_field(m, "step", "mechanism", true)) {
        if (*step <= Ticks(0)) fail("mechanism.step", "must be positive");
        s.step = *step;
      }
      if (!doc.contains("strategies")) fail("strategies", "required field is missing");
      else s.strategies = strategies(doc["strategies"]);
      file.mechanism = std::move(s);
    } else if (kind == "curse") {
      check_keys(m, "mechanism", {"kind", "n_deposits", "n_buyers", "price", "step",
                                  "side", "distinct_cells"});
      require_only(doc, kind, {});
      CurseScenario s;
      auto& c = s.config;
      if (auto v = integer(m, "n_deposits", "mechanism", false)) c.n_deposits = static_cast<int>(*v);
      if (auto v = integer(m, "n_buyers", "mechanism", false)) c.n_buyers = static_cast<int>(*v);
      if (auto v = integer(m, "side", "mechanism", false)) c.side = static_cast<int>(*v);
      if (auto v = money_field(m, "price", "mechanism", false)) c.price = *v;
      if (auto v = money_field(m, "step", "mechanism", false)) c.step = *v;
      if (auto v = boolean(m, "distinct_cells", "mechanism")) c.distinct_cells = *v;
      try {
        validate(c);
        if (c.n_buyers < 2) throw AuctionError("n_buyers must be at least 2");
      } catch (const AuctionError& e) {
        fail("mechanism", e.what());
      }
      file.mechanism = s;
    } else if (kind == "revenue_equiv") {
      check_keys(m, "mechanism", {"kind", "n_bidders", "formats"});
      require_only(doc, kind, {});
      RevenueScenario s;
      if (const json* ns = field(m, "n_bidders", "mechanism", true)) {
        if (!ns->is_array() || ns->empty()) {
          fail("mechanism.n_bidders", "must be a non-empty array of integers");
        } else {
          for (std::size_t i = 0; i < ns->size(); ++i) {
            const auto& n = (*ns)[i];
            if (!n.is_number_integer() || n.get<int>() < 2)
              fail(index("mechanism.n_bidders", i), "must be an integer >= 2");
            else
              s.n_bidders.push_back(n.get<int>());
          }
        }
      }
      if (const json* fs = field(m, "formats", "mechanism", true)) {
        if (!fs->is_array() || fs->empty()) {
          fail("mechanism.formats", "must be a non-empty array of format names");
        } else {
          for (std::size_t i = 0; i < fs->size(); ++i) {
            try {
              s.formats.push_back(parse_format((*fs)[i].is_string()
                                                   ? (*fs)[i].get<std::string>()
                                                   : std::string("?")));
            } catch (const AuctionError& e) {
              fail(index("mechanism.formats", i), e.what());
            }
          }
        }
      }
      file.mechanism = std::move(s);
    } else if (!kind.empty()) {
      fail("mechanism.kind", "unknown mechanism kind '" + kind +
                                 "' (expected single, vcg, saa, curse or revenue_equiv)");
    }
  }

  std::vector<StrategySpec> strategies(const json& v) {
    std::vector<StrategySpec> out(roster_->bidders.size());
    if (!v.is_object()) {
      fail("strategies", "must be an object mapping bidder names to strategy lists");
      return out;
    }
    for (const auto& [name, parts] : v.items()) {
      const std::string path = join("strategies", name);
      auto who = bidder_name(name, path);
      if (!parts.is_array()) {
        fail(path, "must be an array of strategy parts");
        continue;
      }
      std::set<ItemId> covered;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        auto part = strategy_part(parts[i], index(path, i), covered);
        if (who && part) out[who->index].parts.push_back(std::move(*part));
      }
    }
    return out;
  }

  std::optional<StrategyPart> strategy_part(const json& p, const std::string& path,
                                            std::set<ItemId>& covered) {
    if (!p.is_object()) {
      fail(path, "must be an object");
      return std::nullopt;
    }
    auto claim = [&](ItemId item, const std::string& at) {
      if (!covered.insert(item).second)
        fail(at, "item '" + roster_->items[item.index] +
                     "' is already governed by another strategy part");
    };
    const std::string kind = text(p, "kind", path, true);
    if (kind == "truthful_singleton") {
      check_keys(p, path, {"kind", "values"});
      TruthfulSingleton s;
      const json* values = field(p, "values", path, true);
      if (!values) return std::nullopt;
      if (!values->is_object()) {
        fail(join(path, "values"), "must map item names to values");
        return std::nullopt;
      }
      for (const auto& [item_name, amount] : values->items()) {
        const std::string at = join(join(path, "values"), item_name);
        auto it = item(json(item_name), at);
        auto t = nonneg_money(amount, at);
        if (it && t) {
          claim(*it, at);
          s.values[*it] = *t;
        }
      }
      return s;
    }
    if (kind == "package_budget") {
      check_keys(p, path, {"kind", "items", "value"});
      const json* items = field(p, "items", path, true);
      const json* value = field(p, "value", path, true);
      auto b = items ? bundle(*items, join(path, "items")) : std::nullopt;
      auto t = value ? nonneg_money(*value, join(path, "value")) : std::nullopt;
      if (!b || !t) return std::nullopt;
      for (ItemId i : b->items()) claim(i, join(path, "items"));
      return PackageBudget{*b, *t};
    }
    if (kind == "scripted") {
      check_keys(p, path, {"kind", "moves"});
      Scripted s;
      const json* moves = field(p, "moves", path, true);
      if (!moves) return std::nullopt;
      if (!moves->is_array()) {
        fail(join(path, "moves"), "must be an array");
        return std::nullopt;
      }
      std::set<ItemId> items;
      std::map<ItemId, Ticks> last_bid;
      for (std::size_t i = 0; i < moves->size(); ++i) {
        const std::string at = index(join(path, "moves"), i);
        const json& mv = (*moves)[i];
        if (!mv.is_object()) {
          fail(at, "must be an object");
          continue;
        }
        check_keys(mv, at, {"round", "item", "bid", "quit"});
        ScriptedMove move;
        auto round = integer(mv, "round", at, true);
        const json* it_json = field(mv, "item", at, true);
        auto it = it_json ? item(*it_json, join(at, "item")) : std::nullopt;
        if (round && *round < 1) fail(join(at, "round"), "must be at least 1");
        const bool quits = mv.contains("quit");
        if (quits == mv.contains("bid")) {
          fail(at, "needs exactly one of 'bid' or 'quit'");
          continue;
        }
        if (quits && !(mv["quit"].is_boolean() && mv["quit"].get<bool>()))
          fail(join(at, "quit"), "must be true");
        if (!quits) {
          auto t = nonneg_money(mv["bid"], join(at, "bid"));
          if (!t) continue;
          move.amount = *t;
        }
        if (!round || !it) continue;
        move.round = *round;
        move.item = *it;
        if (move.amount) {
          auto prev = last_bid.find(*it);
          if (prev != last_bid.end() && *move.amount <= prev->second)
            fail(join(at, "bid"), "scripted bids on an item must increase");
          last_bid[*it] = *move.amount;
        }
        items.insert(*it);
        s.moves.push_back(move);
      }
      for (ItemId i : items) claim(i, join(path, "moves"));
      return s;
    }
    if (!kind.empty())
      fail(join(path, "kind"), "unknown strategy kind '" + kind +
                                   "' (expected truthful_singleton, package_budget or scripted)");
    return std::nullopt;
  }

  Expected parse_expected(const json& e) {
    Expected out;
    if (!e.is_object()) {
      fail("expected", "must be an object");
      return out;
    }
    check_keys(e, "expected", {"allocation", "payments", "revenue", "item_prices", "median",
                               "mean", "overpayment", "mean_of_means",
                               "min_fraction_overpaid", "tolerance"});
    if (e.contains("allocation")) {
      Allocation a;
      const json& v = e["allocation"];
      if (!v.is_object()) fail("expected.allocation", "must map bidders to bundle lists");
      else {
        for (const auto& [name, bundles] : v.items()) {
          const std::string at = join("expected.allocation", name);
          auto who = bidder_name(name, at);
          if (!bundles.is_array()) {
            fail(at, "must be an array of bundles");
            continue;
          }
          for (std::size_t i = 0; i < bundles.size(); ++i)
            if (auto b = bundle(bundles[i], index(at, i)); b && who) a.assign(*who, *b);
        }
      }
      out.allocation = a;
    }
    if (e.contains("payments")) {
      const json& v = e["payments"];
      if (!v.is_object()) fail("expected.payments", "must map bidders to amounts");
      else
        for (const auto& [name, amount] : v.items()) {
          const std::string at = join("expected.payments", name);
          auto who = bidder_name(name, at);
          auto t = nonneg_money(amount, at);
          if (who && t) out.payments[*who] = *t;
        }
    }
    if (e.contains("item_prices")) {
      const json& v = e["item_prices"];
      if (!v.is_object()) fail("expected.item_prices", "must map items to prices");
      else
        for (const auto& [name, amount] : v.items()) {
          const std::string at = join("expected.item_prices", name);
          auto it = item(json(name), at);
          auto t = nonneg_money(amount, at);
          if (it && t) out.item_prices[*it] = *t;
        }
    }
    if (e.contains("revenue")) out.revenue = money(e["revenue"], "expected.revenue");
    if (e.contains("overpayment")) out.overpayment = money(e["overpayment"], "expected.overpayment");
    if (e.contains("median")) out.median = real(e["median"], "expected.median");
    if (e.contains("mean")) out.mean = real(e["mean"], "expected.mean");
    if (e.contains("min_fraction_overpaid"))
      out.min_fraction_overpaid = real(e["min_fraction_overpaid"], "expected.min_fraction_overpaid");
    if (e.contains("tolerance")) out.tolerance = real(e["tolerance"], "expected.tolerance");
    if (e.contains("mean_of_means")) {
      const json& v = e["mean_of_means"];
      if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        fail("expected.mean_of_means", "must be a [low, high] pair");
      else
        out.mean_of_means = std::pair{v[0].get<double>(), v[1].get<double>()};
    }
    return out;
  }

  std::int64_t scale_ = 1;
  const Roster* roster_ = nullptr;
  std::vector<std::string> errors_;
};

}  // namespace

std::string_view mechanism_kind(const Mechanism& m) {
  static constexpr std::string_view kNames[] = {"single", "vcg", "saa", "curse",
                                                "revenue_equiv"};
  return kNames[m.index()];
}

ScenarioFileError::ScenarioFileError(std::vector<std::string> errors)
    : std::runtime_error(join_lines(errors)), errors_(std::move(errors)) {}

ScenarioFile parse_scenario(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ScenarioFileError({std::string("<json>: ") + e.what()});
  }
  return Parser().parse(doc);
}

ScenarioFile load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioFileError({path.string() + ": cannot open scenario file"});
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

}  // namespace auction
