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

#include <gtest/gtest.h>

#include "auction/core.h"

namespace auction {
namespace {

constexpr BidderId B0{0}, B1{1}, B2{2};
constexpr ItemId I0{0}, I1{1}, I2{2};

TEST(Bundle, SortsAndKeepsDuplicates) {
  Bundle b{I2, I0};
  EXPECT_EQ(b.items(), (std::vector<ItemId>{I0, I2}));
  EXPECT_TRUE(b.contains(I2));
  EXPECT_FALSE(b.contains(I1));
  EXPECT_EQ(b.mask(), 0b101u);
  EXPECT_FALSE(b.has_duplicates());
  EXPECT_TRUE((Bundle{I1, I1}).has_duplicates());
}

TEST(BidProfile, WithoutDropsOnlyThatBidder) {
  BidProfile p(3, {{B0, {I0}, Ticks(5)}, {B1, {I0}, Ticks(4)}, {B0, {I1}, Ticks(2)}});
  const auto q = p.without(B0);
  EXPECT_EQ(q.bidder_count(), 3u);
  ASSERT_EQ(q.bids().size(), 1u);
  EXPECT_EQ(q.bids()[0].bidder, B1);
  ASSERT_NE(p.find(B0, {I1}), nullptr);
  EXPECT_EQ(p.find(B0, {I1})->amount, Ticks(2));
  EXPECT_EQ(p.find(B2, {I1}), nullptr);
}

TEST(Validate, CleanProfileHasNoViolations) {
  BidProfile p(2, {{B0, {I0, I1}, Ticks(3)}, {B1, {I1}, Ticks(0)}});
  EXPECT_TRUE(validate_profile(p, 2).empty());
}

TEST(Validate, ReportsEachProblem) {
  BidProfile p(2, {});
  p.add({B2, {I0}, Ticks(1)});        // unknown bidder
  p.add({B0, {I0}, Ticks(-1)});       // negative
  p.add({B0, {}, Ticks(1)});          // empty
  p.add({B1, {I1, I1}, Ticks(1)});    // duplicate item
  p.add({B1, {I2}, Ticks(1)});        // unknown item
  p.add({B1, {I0}, Ticks(1)});
  p.add({B1, {I0}, Ticks(2)});        // duplicate bundle
  const auto report = validate_profile(p, 2);
  ASSERT_EQ(report.size(), 6u);
  auto mentions = [&](std::size_t k, const char* word) {
    return report[k].message.find(word) != std::string::npos;
  };
  EXPECT_TRUE(mentions(0, "bidder"));
  EXPECT_TRUE(mentions(1, "negative"));
  EXPECT_TRUE(mentions(2, "empty"));
  EXPECT_TRUE(mentions(3, "twice"));
  EXPECT_TRUE(mentions(4, "item"));
  EXPECT_TRUE(mentions(5, "bundle"));
}

TEST(Allocation, OwnerVectorAndItems) {
  Allocation a;
  a.assign(B1, {I2});
  a.assign(B1, {I0});
  EXPECT_EQ(a.items_of(B1), (std::vector<ItemId>{I0, I2}));
  EXPECT_TRUE(a.items_of(B0).empty());
  EXPECT_EQ(a.owner_vector(3), (std::vector<std::int64_t>{1, -1, 1}));
}

TEST(Outcome, FinalizeFillsZeroPaymentsAndRevenue) {
  Outcome o;
  o.allocation.assign(B1, {I0});
  o.payments[B1] = Ticks(7);
  finalize_payments(o, 3);
  EXPECT_EQ(o.payments.size(), 3u);
  EXPECT_EQ(o.payment_of(B0), Ticks(0));
  EXPECT_EQ(o.revenue, Ticks(7));
  EXPECT_EQ(o.winners(), (std::vector<BidderId>{B1}));
}

}  // namespace
}  // namespace auction
