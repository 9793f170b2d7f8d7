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

#include "auction/cli.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <thread>

#include "CLI11.hpp"

namespace auction {
namespace {

namespace fs = std::filesystem;

std::string real_text(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string money_text(Ticks t, const Roster& roster) {
  return format_ticks(t, roster.unit_scale);
}

std::string bundle_text(const Bundle& b, const Roster& roster) {
  std::string s = "{";
  for (std::size_t i = 0; i < b.items().size(); ++i)
    s += (i ? ", " : "") + roster.items[b.items()[i].index];
  return s + "}";
}

std::string allocation_text(const Allocation& a, const Roster& roster) {
  std::string s;
  for (const auto& [bidder, bundles] : a.assignment())
    for (const auto& b : bundles)
      s += (s.empty() ? "" : " ") + roster.bidders[bidder.index] + bundle_text(b, roster);
  return s.empty() ? "(nothing sold)" : s;
}

Outcome run_single(const SingleScenario& s) {
  switch (s.format) {
    case SingleItemFormat::kFirstPrice: return run_first_price(s.amounts, s.true_values);
    case SingleItemFormat::kVickrey: return run_vickrey(s.amounts, s.true_values);
    case SingleItemFormat::kEnglish: return run_english_clock(s.amounts, s.clock);
    case SingleItemFormat::kJapanese: return run_japanese(s.amounts, s.clock).outcome;
    case SingleItemFormat::kDutch: return run_dutch(s.amounts, s.clock);
  }
  throw AuctionError("unknown format");
}

void print_outcome(std::ostream& out, const Outcome& o, const Roster& roster) {
  out << "allocation: " << allocation_text(o.allocation, roster) << '\n';
  for (BidderId w : o.winners())
    out << "  " << std::left << std::setw(14) << roster.bidders[w.index]
        << " pays " << money_text(o.payment_of(w), roster) << '\n';
  out << "revenue: " << money_text(o.revenue, roster) << '\n';
  if (!o.surplus.empty()) {
    out << "surplus:";
    for (const auto& [b, s] : o.surplus)
      out << ' ' << roster.bidders[b.index] << '=' << money_text(s, roster);
    out << '\n';
  }
}

template <typename Write>
void write_file(const fs::path& dir, const std::string& name, Write&& write,
                std::ostream& out) {
  fs::create_directories(dir);
  const fs::path path = dir / name;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw AuctionError("cannot write " + path.string());
  write(f);
  out << "wrote " << path.string() << '\n';
}

void emit(const ScenarioFile& sc, const ScenarioRun& run, std::ostream& out,
          const std::optional<fs::path>& dir) {
  const Roster& roster = sc.roster;
  out << "scenario: " << sc.name << " (" << mechanism_kind(sc.mechanism) << ")\n";
  if (run.outcome) print_outcome(out, *run.outcome, roster);
  if (run.saa) {
    out << "rounds: " << run.saa->rounds << '\n';
    for (std::size_t i = 0; i < run.saa->board.size(); ++i) {
      const auto& st = run.saa->board[i];
      out << "  " << std::left << std::setw(14) << roster.items[i] << ' '
          << (st.standing ? roster.bidders[st.standing->index] + " at " +
                                money_text(st.price, roster)
                          : std::string("unsold"))
          << '\n';
    }
  }
  if (run.curse) {
    const auto& c = *run.curse;
    out << "cells: " << (c.config.distinct_cells ? "distinct" : "with replacement")
        << ", deposits " << c.config.n_deposits << ", buyers " << c.config.n_buyers
        << ", seed " << c.seed << ", replications " << c.rows.size() << '\n';
    const auto& first = c.rows.front();
    out << "replication 0: median " << real_text(first.median, 1) << ", mean "
        << real_text(first.mean, 2) << ", y " << money_text(first.overpayment, roster)
        << '\n';
    out << "mean_of_means " << real_text(c.mean_of_means) << ", mean_of_medians "
        << real_text(c.mean_of_medians) << ", fraction_y_positive "
        << real_text(c.fraction_overpaid) << '\n';
  }
  for (const auto& r : run.revenue)
    out << std::left << std::setw(12) << format_name(r.format) << " n=" << r.n_bidders
        << " mean " << real_text(r.estimate.mean, 5) << " se "
        << real_text(r.estimate.std_error, 5) << " theory " << real_text(r.theory, 5)
        << '\n';

  if (!dir) return;
  if (run.outcome) {
    write_file(*dir, "outcome.csv", [&](std::ostream& f) {
      write_outcome_csv(f, *run.outcome, roster);
    }, out);
    write_file(*dir, "payments.csv", [&](std::ostream& f) {
      write_payments_csv(f, *run.outcome, roster);
    }, out);
  }
  if (run.saa)
    write_file(*dir, "round_log.csv", [&](std::ostream& f) {
      write_round_log_csv(f, run.saa->log, roster);
    }, out);
  if (run.curse) {
    write_file(*dir, "replications.csv", [&](std::ostream& f) {
      write_csv_row(f, {"replication", "median", "mean", "y", "total_count",
                        "second_estimate"});
      for (const auto& r : run.curse->rows)
        write_csv_row(f, {std::to_string(r.replication), real_text(r.median, 1),
                          real_text(r.mean, 2), money_text(r.overpayment, roster),
                          std::to_string(r.total_count),
                          std::to_string(r.second_estimate)});
    }, out);
    write_file(*dir, "summary.csv", [&](std::ostream& f) {
      const auto& c = *run.curse;
      write_csv_row(f, {"seed", "replications", "cells", "mean_of_means",
                        "mean_of_medians", "mean_y", "fraction_y_positive"});
      write_csv_row(f, {std::to_string(c.seed), std::to_string(c.rows.size()),
                        c.config.distinct_cells ? "distinct" : "with_replacement",
                        real_text(c.mean_of_means), real_text(c.mean_of_medians),
                        real_text(c.mean_overpayment, 1), real_text(c.fraction_overpaid)});
    }, out);
    write_file(*dir, "deposits.csv", [&](std::ostream& f) {
      write_deposits_csv(f, run.curse_sample->territory);
    }, out);
    write_file(*dir, "buyer_cells.csv", [&](std::ostream& f) {
      write_buyer_cells_csv(f, run.curse_sample->estimates);
    }, out);
  }
  if (!run.revenue.empty())
    write_file(*dir, "revenue.csv", [&](std::ostream& f) {
      write_csv_row(f, {"format", "n_bidders", "mean", "std_error", "theory"});
      for (const auto& r : run.revenue)
        write_csv_row(f, {std::string(format_name(r.format)), std::to_string(r.n_bidders),
                          real_text(r.estimate.mean, 6), real_text(r.estimate.std_error, 6),
                          real_text(r.theory, 6)});
    }, out);
}

void print_checks(std::ostream& out, const std::string& scenario,
                  const std::vector<Check>& checks) {
  for (const auto& c : checks)
    out << (c.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(26) << scenario
        << std::setw(30) << c.name << " expected " << std::setw(14) << c.expected
        << " actual " << c.actual << '\n';
}

std::vector<fs::path> scenario_files(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace

ScenarioRun run_scenario(const ScenarioFile& sc, const RunOverrides& overrides) {
  const std::uint64_t seed = overrides.seed.value_or(sc.seed);
  const std::int64_t reps = overrides.replications.value_or(sc.replications);
  const std::size_t items = sc.roster.items.size();
  const int workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  ScenarioRun run;
  std::visit(
      [&](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, SingleScenario>) {
          run.outcome = run_single(m);
        } else if constexpr (std::is_same_v<M, VcgScenario>) {
          run.outcome = run_generalized_vickrey(
              items, m.bids, m.true_values ? &*m.true_values : nullptr, m.limits);
        } else if constexpr (std::is_same_v<M, SaaScenario>) {
          run.saa = run_saa(items, m.strategies, m.step);
          run.outcome = run.saa->outcome;
        } else if constexpr (std::is_same_v<M, CurseScenario>) {
          run.curse = run_curse_experiment(m.config, reps, seed, workers);
          run.curse_sample = sample_replication(m.config, seed, 0);
        } else {
          for (int n : m.n_bidders)
            for (auto f : m.formats)
              run.revenue.push_back({f, n, estimate_revenue(f, n, reps, seed, workers),
                                     (n - 1.0) / (n + 1.0)});
        }
      },
      sc.mechanism);
  return run;
}

std::vector<Check> check_expected(const ScenarioFile& sc, const ScenarioRun& run) {
  const Roster& roster = sc.roster;
  const Expected& e = sc.expected;
  std::vector<Check> checks;
  if (run.outcome) {
    const Outcome& o = *run.outcome;
    if (e.allocation) {
      checks.push_back({"allocation", allocation_text(*e.allocation, roster),
                        allocation_text(o.allocation, roster), *e.allocation == o.allocation});
    }
    for (const auto& [bidder, amount] : e.payments)
      checks.push_back({"payment " + roster.bidders[bidder.index], money_text(amount, roster),
                        money_text(o.payment_of(bidder), roster),
                        o.payment_of(bidder) == amount});
    if (e.revenue)
      checks.push_back({"revenue", money_text(*e.revenue, roster), money_text(o.revenue, roster),
                        o.revenue == *e.revenue});
  }
  if (run.saa) {
    for (const auto& [item, price] : e.item_prices) {
      const auto& st = run.saa->board[item.index];
      checks.push_back({"price " + roster.items[item.index], money_text(price, roster),
                        st.standing ? money_text(st.price, roster) : "unsold",
                        st.standing.has_value() && st.price == price});
    }
  }
  if (run.curse) {
    const auto& c = *run.curse;
    const auto& first = c.rows.front();
    if (e.median)
      checks.push_back({"median (replication 0)", real_text(*e.median, 1),
                        real_text(first.median, 1), first.median == *e.median});
    if (e.mean)
      checks.push_back({"mean (replication 0)", real_text(*e.mean, 2), real_text(first.mean, 2),
                        first.mean == *e.mean});
    if (e.overpayment)
      checks.push_back({"y (replication 0)", money_text(*e.overpayment, roster),
                        money_text(first.overpayment, roster),
                        first.overpayment == *e.overpayment});
    if (e.mean_of_means)
      checks.push_back({"mean of mean estimates",
                        "[" + real_text(e.mean_of_means->first, 1) + ", " +
                            real_text(e.mean_of_means->second, 1) + "]",
                        real_text(c.mean_of_means),
                        c.mean_of_means >= e.mean_of_means->first &&
                            c.mean_of_means <= e.mean_of_means->second});
    if (e.min_fraction_overpaid)
      checks.push_back({"fraction y > 0", ">= " + real_text(*e.min_fraction_overpaid, 2),
                        real_text(c.fraction_overpaid),
                        c.fraction_overpaid >= *e.min_fraction_overpaid});
  }
  if (!run.revenue.empty() && e.tolerance) {
    for (const auto& r : run.revenue) {
      const double gap = std::abs(r.estimate.mean - r.theory);
      checks.push_back({std::string(format_name(r.format)) + " n=" + std::to_string(r.n_bidders),
                        real_text(r.theory) + " +- " + real_text(*e.tolerance, 3),
                        real_text(r.estimate.mean), gap <= *e.tolerance});
    }
    // First-price against Vickrey at each n, within three combined standard errors.
    for (const auto& a : run.revenue) {
      if (a.format != SingleItemFormat::kFirstPrice) continue;
      for (const auto& b : run.revenue) {
        if (b.format != SingleItemFormat::kVickrey || b.n_bidders != a.n_bidders) continue;
        const double se = std::hypot(a.estimate.std_error, b.estimate.std_error);
        const double gap = std::abs(a.estimate.mean - b.estimate.mean);
        checks.push_back({"first_price-vickrey n=" + std::to_string(a.n_bidders),
                          "<= " + real_text(3 * se, 5), real_text(gap, 5), gap <= 3 * se});
      }
    }
  }
  return checks;
}

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Auction mechanisms: single-item formats, combinatorial VCG, "
               "simultaneous ascending auction and the common-value experiment"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> reps;
  std::optional<std::string> out_dir;
  std::string format = "csv";

  auto add_common = [&](CLI::App* sub, bool stochastic) {
    sub->add_option("--out", out_dir, "Directory for CSV output");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv"}));
    if (stochastic) {
      sub->add_option("--seed", seed, "64-bit RNG seed (overrides the scenario)");
      sub->add_option("--reps", reps, "Number of replications (overrides the scenario)")
          ->check(CLI::PositiveNumber);
    }
  };

  struct Command {
    const char* name;
    const char* kind;
    const char* help;
    bool stochastic;
  };
  const Command commands[] = {
      {"single", "single", "Run a single-item auction scenario", false},
      {"vcg", "vcg", "Run a generalized Vickrey (VCG) combinatorial scenario", false},
      {"saa", "saa", "Run a simultaneous ascending auction scenario", false},
      {"curse", "curse", "Run the common-value winner's curse experiment", true},
      {"revenue-equiv", "revenue_equiv", "Monte Carlo revenue of single-item formats", true},
  };
  std::vector<std::pair<CLI::App*, const Command*>> subs;
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("scenario", scenario_path, "Scenario JSON file")->required();
    add_common(sub, c.stochastic);
    subs.emplace_back(sub, &c);
  }
  std::string scenario_dir = AUCTION_SCENARIO_DIR;
  auto* replicate = app.add_subcommand(
      "replicate-paper", "Run every shipped scenario and check its reference values");
  replicate->add_option("directory", scenario_dir, "Scenario directory");
  replicate->add_option("--out", out_dir, "Directory for the check table CSV");
  replicate->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (replicate->parsed()) {
      bool all_pass = true;
      std::vector<std::vector<std::string>> table;
      for (const auto& path : scenario_files(scenario_dir)) {
        const std::string name = path.stem().string();
        try {
          const ScenarioFile sc = load_scenario(path);
          const auto checks = check_expected(sc, run_scenario(sc));
          print_checks(out, name, checks);
          for (const auto& c : checks) {
            all_pass = all_pass && c.pass;
            table.push_back({name, c.name, c.expected, c.actual, c.pass ? "pass" : "fail"});
          }
        } catch (const std::exception& e) {
          all_pass = false;
          out << "FAIL  " << name << ": " << e.what() << '\n';
          table.push_back({name, "run", "", e.what(), "fail"});
        }
      }
      out << (all_pass ? "all checks passed\n" : "some checks FAILED\n");
      if (out_dir)
        write_file(*out_dir, "replication.csv", [&](std::ostream& f) {
          write_csv_row(f, {"scenario", "check", "expected", "actual", "result"});
          for (const auto& row : table) write_csv_row(f, row);
        }, out);
      return all_pass ? 0 : 1;
    }

    for (const auto& [sub, command] : subs) {
      if (!sub->parsed()) continue;
      const ScenarioFile sc = load_scenario(scenario_path);
      if (mechanism_kind(sc.mechanism) != command->kind) {
        err << "mechanism.kind: scenario is '" << mechanism_kind(sc.mechanism)
            << "', but the " << command->name << " command needs '" << command->kind
            << "'\n";
        return 1;
      }
      const ScenarioRun run = run_scenario(sc, {seed, reps});
      std::optional<fs::path> dir;
      if (out_dir) dir = fs::path(*out_dir);
      emit(sc, run, out, dir);
      return 0;
    }
  } catch (const ScenarioFileError& e) {
    for (const auto& line : e.errors()) err << line << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace auction
