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

#ifndef AUCTION_MONEY_H_
#define AUCTION_MONEY_H_

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace auction {

// Exact money: a signed count of minor units ("ticks"). What one tick is
// worth is declared by the scenario through its unit scale (ticks per
// major unit, a power of ten).
class Ticks {
 public:
  constexpr Ticks() = default;
  constexpr explicit Ticks(std::int64_t amount) : amount_(amount) {}

  constexpr std::int64_t amount() const { return amount_; }

  friend constexpr auto operator<=>(Ticks, Ticks) = default;

  friend Ticks operator+(Ticks a, Ticks b);
  friend Ticks operator-(Ticks a, Ticks b);
  friend Ticks operator*(Ticks a, std::int64_t k);
  friend Ticks operator*(std::int64_t k, Ticks a) { return a * k; }
  constexpr Ticks operator-() const { return Ticks(-amount_); }
  Ticks& operator+=(Ticks other) { return *this = *this + other; }
  Ticks& operator-=(Ticks other) { return *this = *this - other; }

 private:
  std::int64_t amount_ = 0;
};

std::ostream& operator<<(std::ostream& os, Ticks t);

// Raised for precision loss, malformed decimals and overflow.
class MoneyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parses a plain decimal ("2.3", "-0.05", "100000") into ticks at the given
// scale. Digits past the scale are accepted only if they are zeros.
Ticks ticks_from_decimal(std::string_view text, std::int64_t unit_scale);

// Fixed-point rendering with exactly log10(unit_scale) fractional digits.
std::string format_ticks(Ticks t, std::int64_t unit_scale);

// Number of fractional digits for a power-of-ten scale; throws otherwise.
int scale_digits(std::int64_t unit_scale);

// Ticks as a real number of major units; for reporting only.
double to_major_units(Ticks t, std::int64_t unit_scale);

}  // namespace auction

#endif  // AUCTION_MONEY_H_
