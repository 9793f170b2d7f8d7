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

#include "auction/money.h"

#include <limits>

namespace auction {
namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw MoneyError("tick overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw MoneyError("tick overflow");
  return r;
}

}  // namespace

Ticks operator+(Ticks a, Ticks b) {
  return Ticks(checked_add(a.amount(), b.amount()));
}

Ticks operator-(Ticks a, Ticks b) {
  return Ticks(checked_add(a.amount(), checked_mul(b.amount(), -1)));
}

Ticks operator*(Ticks a, std::int64_t k) {
  return Ticks(checked_mul(a.amount(), k));
}

std::ostream& operator<<(std::ostream& os, Ticks t) {
  return os << t.amount() << "t";
}

int scale_digits(std::int64_t unit_scale) {
  if (unit_scale <= 0) throw MoneyError("unit scale must be positive");
  int digits = 0;
  for (std::int64_t s = unit_scale; s > 1; s /= 10) {
    if (s % 10 != 0) throw MoneyError("unit scale must be a power of ten");
    ++digits;
  }
  return digits;
}

Ticks ticks_from_decimal(std::string_view text, std::int64_t unit_scale) {
  const int digits = scale_digits(unit_scale);
  const std::string shown(text);
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::int64_t whole = 0;
  std::size_t whole_digits = 0;
  for (; pos < text.size() && text[pos] >= '0' && text[pos] <= '9'; ++pos) {
    whole = checked_add(checked_mul(whole, 10), text[pos] - '0');
    ++whole_digits;
  }
  std::int64_t frac = 0;
  int frac_digits = 0;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    for (; pos < text.size() && text[pos] >= '0' && text[pos] <= '9'; ++pos) {
      const int d = text[pos] - '0';
      if (frac_digits < digits) {
        frac = frac * 10 + d;
      } else if (d != 0) {
        throw MoneyError("'" + shown + "' has more precision than the unit scale " +
                         std::to_string(unit_scale) + " allows");
      }
      ++frac_digits;
    }
    if (frac_digits == 0 || whole_digits == 0)
      throw MoneyError("'" + shown + "' is not a decimal number");
  }
  if (pos != text.size() || (whole_digits == 0 && frac_digits == 0))
    throw MoneyError("'" + shown + "' is not a decimal number");
  for (int i = std::min(frac_digits, digits); i < digits; ++i) frac *= 10;
  std::int64_t total = checked_add(checked_mul(whole, unit_scale), frac);
  return Ticks(negative ? -total : total);
}

std::string format_ticks(Ticks t, std::int64_t unit_scale) {
  const int digits = scale_digits(unit_scale);
  const std::int64_t a = t.amount();
  // Work in unsigned magnitude so INT64_MIN formats correctly.
  const std::uint64_t mag = a < 0 ? ~static_cast<std::uint64_t>(a) + 1
                                  : static_cast<std::uint64_t>(a);
  const auto scale = static_cast<std::uint64_t>(unit_scale);
  std::string out = a < 0 ? "-" : "";
  out += std::to_string(mag / scale);
  if (digits > 0) {
    std::string frac = std::to_string(mag % scale);
    out += '.';
    out.append(static_cast<std::size_t>(digits) - frac.size(), '0');
    out += frac;
  }
  return out;
}

double to_major_units(Ticks t, std::int64_t unit_scale) {
  return static_cast<double>(t.amount()) / static_cast<double>(unit_scale);
}

}  // namespace auction
