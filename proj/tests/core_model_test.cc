// Copyright 2026 The Maximin Authors.
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

#include "maximin/core_model.h"

#include <gtest/gtest.h>

#include "maximin/rng.h"
#include "test_util.h"

namespace maximin {
namespace {

using testing::Identical;
using testing::Instance;

TEST(ValueTest, ParsesAndCanonicalizes) {
  EXPECT_EQ(ParseValue("6/8"), Value(3, 4));
  EXPECT_EQ(FormatValue(ParseValue("6/8")), "3/4");
  EXPECT_EQ(FormatValue(ParseValue("-4/2")), "-2");
  EXPECT_EQ(ParseValue("+7"), Value(7));
  EXPECT_THROW(ParseValue("1/0"), Error);
  EXPECT_THROW(ParseValue("1.5"), Error);
  EXPECT_THROW(ParseValue(""), Error);
  EXPECT_EQ(Ratio(6, -8), Value(-3, 4));
}

TEST(ValueTest, ArithmeticIsExact) {
  const Value a = ParseValue("1/3");
  const Value b = ParseValue("10000000000000000000001/7");
  EXPECT_EQ(Value(a + b - b), a);
}

TEST(AdditiveInstanceTest, RejectsWrongSigns) {
  EXPECT_THROW(Instance({{1, -1}}), Error);
  EXPECT_THROW(Instance({{-1, 1}}, ItemKind::kChores), Error);
  EXPECT_THROW(Instance({{1, 2}, {1}}), Error);
  EXPECT_NO_THROW(Instance({{0, -3}}, ItemKind::kChores));
}

TEST(AllocationTest, ValidatesAndTracksOwners) {
  EXPECT_THROW(Allocation({{0, 1}, {1}}, 3), Error);
  EXPECT_THROW(Allocation({{0, 3}}, 3), Error);
  Allocation a({{2, 0}, {}}, 3);
  EXPECT_EQ(a.bundle(0), (Bundle{0, 2}));
  EXPECT_FALSE(a.complete());
  EXPECT_EQ(a.allocated_count(), 2u);
  EXPECT_EQ(a.owner(2), std::optional<std::size_t>(0));
  EXPECT_EQ(a.owner(1), std::nullopt);
  a.Assign(1, 1);
  EXPECT_TRUE(a.complete());
  EXPECT_THROW(a.Assign(1, 1), Error);
}

TEST(AllocationTest, RotateMovesBundlesAlongTheCycle) {
  Allocation a({{0}, {1}, {2}}, 3);
  const std::vector<std::size_t> cycle{0, 2};
  a.Rotate(cycle);
  EXPECT_EQ(a.bundle(0), Bundle{2});
  EXPECT_EQ(a.bundle(2), Bundle{0});
  EXPECT_EQ(a.bundle(1), Bundle{1});
}

TEST(BundleValueTest, SumsEntries) {
  const AdditiveInstance inst = Instance({{3, 1, 2}});
  EXPECT_EQ(BundleValue(inst, 0, Bundle{0, 2}), 5);
  EXPECT_EQ(BundleValue(inst, 0, Bundle{}), 0);
  EXPECT_THROW(BundleValue(inst, 1, Bundle{0}), Error);
  EXPECT_THROW(BundleValue(inst, 0, Bundle{3}), Error);
  EXPECT_EQ(BundleValue(Identical(3, {1, 1, 1, 3, 3}), 0, Bundle{0, 1, 2}), 3);
}

TEST(EnvyTest, StrictComparison) {
  const AdditiveInstance inst = Identical(2, {2, 2, 1});
  EXPECT_FALSE(Envies(inst, Allocation({{0}, {1}}, 3), 0, 1));
  EXPECT_TRUE(Envies(Identical(2, {1, 3}), Allocation({{0}, {1}}, 2), 0, 1));
  EXPECT_TRUE(Envies(Identical(2, {-5, -2}, ItemKind::kChores),
                     Allocation({{0}, {1}}, 2), 0, 1));
  EXPECT_THROW(Envies(inst, Allocation({{0}, {1}}, 3), 0, 0), Error);
}

TEST(Ef1Test, Examples) {
  // n unit goods then n - 1 goods worth n; {g0}, {g1, g3}, {g2, g4}.
  EXPECT_TRUE(IsEf1(Identical(3, {1, 1, 1, 3, 3}),
                    Allocation({{0}, {1, 3}, {2, 4}}, 5)));
  EXPECT_TRUE(IsEf1(Identical(1, {4, 5}), Allocation({{0, 1}}, 2)));
  EXPECT_FALSE(IsEf1(Identical(2, {1, 1}), Allocation({{}, {0, 1}}, 2)));
}

TEST(EfxTest, Examples) {
  EXPECT_TRUE(IsEfx(Identical(2, {5, 1}), Allocation({{0}, {1}}, 2)));
  EXPECT_TRUE(IsEfx(Identical(2, {5, 3, 3}), Allocation({{0}, {1, 2}}, 3)));
  EXPECT_FALSE(IsEfx(Identical(2, {5, 3, 3}), Allocation({{1}, {0, 2}}, 3)));
  EXPECT_THROW(IsEfx(Identical(2, {5, 3, 3}), Allocation({{1}, {0, 2}}, 4)),
               Error);
}

TEST(EfxTest, ImpliesEf1OnRandomAllocations) {
  Rng rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + trial % 3, m = 1 + trial % 6;
    const bool chores = trial % 2 == 1;
    const auto rows = chores ? testing::RandomIntRows(rng, n, m, -5, 0)
                             : testing::RandomIntRows(rng, n, m, 0, 5);
    const AdditiveInstance inst = testing::FromIntRows(
        rows, chores ? ItemKind::kChores : ItemKind::kGoods);
    const Allocation a = testing::RandomAllocation(rng, n, m);
    if (IsEfx(inst, a)) EXPECT_TRUE(IsEf1(inst, a));
  }
}

TEST(AdditivityTest, BundlesSumToTotal) {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const AdditiveInstance inst = testing::FromIntRows(
        testing::RandomIntRows(rng, 3, 7, 0, 50), ItemKind::kGoods);
    const Allocation a = testing::RandomAllocation(rng, 3, 7);
    for (std::size_t i = 0; i < 3; ++i) {
      Value sum = 0;
      for (std::size_t k = 0; k < 3; ++k) sum += BundleValue(inst, i, a.bundle(k));
      EXPECT_EQ(sum, inst.total(i));
    }
  }
}

TEST(AdditivityTest, MonotoneForGoodsAntitoneForChores) {
  const AdditiveInstance goods = Instance({{3, 0, 2}});
  const AdditiveInstance chores = Instance({{-3, 0, -2}}, ItemKind::kChores);
  EXPECT_LE(BundleValue(goods, 0, Bundle{0}), BundleValue(goods, 0, Bundle{0, 2}));
  EXPECT_GE(BundleValue(chores, 0, Bundle{0}), BundleValue(chores, 0, Bundle{0, 2}));
}

}  // namespace
}  // namespace maximin
