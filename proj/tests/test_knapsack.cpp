// Copyright 2026 The BNPG Toolkit Authors
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

#include "bnpg/knapsack.hpp"

#include <doctest.h>

#include "bnpg/gen.hpp"
#include "bnpg/oracle.hpp"

using namespace bnpg;

namespace {

std::vector<KnapsackItem> items_of(std::vector<std::pair<int, int>> profit_weight) {
  std::vector<KnapsackItem> items;
  for (auto [p, w] : profit_weight) items.push_back({Rational(p), w});
  return items;
}

Rational selection_profit(const std::vector<KnapsackItem>& items, const std::vector<int>& chosen) {
  Rational total(0);
  for (int i : chosen) total += items[i].profit;
  return total;
}

std::int64_t selection_weight(const std::vector<KnapsackItem>& items,
                              const std::vector<int>& chosen) {
  std::int64_t total = 0;
  for (int i : chosen) total += items[i].weight;
  return total;
}

}  // namespace

TEST_CASE("meet-in-the-middle maximization") {
  const auto items = items_of({{3, 2}, {4, 3}, {5, 4}});
  SUBCASE("capacity five picks the first two") {
    const auto result = max_knapsack_mitm(items, 5);
    CHECK(result.profit == Rational(7));
    CHECK(result.chosen == std::vector<int>{0, 1});
    CHECK(result.weight == 5);
  }
  SUBCASE("zero capacity with positive weights picks nothing") {
    const auto result = max_knapsack_mitm(items, 0);
    CHECK(result.profit == Rational(0));
    CHECK(result.chosen.empty());
  }
  SUBCASE("ample capacity takes everything") {
    const auto result = max_knapsack_mitm(items, 9);
    CHECK(result.profit == Rational(12));
    CHECK(result.chosen == std::vector<int>{0, 1, 2});
  }
  SUBCASE("guard at forty items") {
    std::vector<KnapsackItem> many(41, {Rational(1), 1});
    CHECK_THROWS_AS(max_knapsack_mitm(many, 3), GuardError);
  }
  SUBCASE("matches subset brute force") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      const auto ks = random_knapsack(seed, 10, 20);
      const auto result = max_knapsack_mitm(ks.items, ks.capacity);
      Rational best(0);
      for (std::uint32_t mask = 0; mask < (1u << ks.items.size()); ++mask) {
        Rational profit(0);
        std::int64_t weight = 0;
        for (std::size_t i = 0; i < ks.items.size(); ++i) {
          if (mask >> i & 1) {
            profit += ks.items[i].profit;
            weight += ks.items[i].weight;
          }
        }
        if (weight <= ks.capacity && profit > best) best = profit;
      }
      CHECK(result.profit == best);
      CHECK(selection_profit(ks.items, result.chosen) == result.profit);
      CHECK(selection_weight(ks.items, result.chosen) <= ks.capacity);
    }
  }
}

TEST_CASE("minimum knapsack by capacity binary search") {
  SUBCASE("worked examples") {
    const auto items = items_of({{3, 2}, {4, 3}, {5, 4}});
    CHECK(min_knapsack(items, Rational(6))->weight == 5);
    CHECK(min_knapsack(items, Rational(0))->weight == 0);
    const auto forced = items_of({{1, 7}, {1, 9}});
    CHECK(min_knapsack(forced, Rational(2))->weight == 16);
    CHECK_FALSE(min_knapsack(items_of({{1, 1}}), Rational(2)).has_value());
  }
  SUBCASE("zero-weight items make zero optimal") {
    const auto items = items_of({{5, 0}, {1, 3}});
    const auto result = min_knapsack(items, Rational(4));
    REQUIRE(result.has_value());
    CHECK(result->weight == 0);
  }
  SUBCASE("threshold equal to the total profit stays feasible") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto ks = random_knapsack(seed, 7, 15);
      const auto result = min_knapsack(ks.items, ks.total_profit());
      REQUIRE(result.has_value());
      CHECK(result->weight <= ks.total_weight());
      KnapsackInstance all = ks;
      all.threshold = ks.total_profit();
      CHECK(*brute_min_knapsack(all) == result->weight);
    }
  }
  SUBCASE("matches the brute-force oracle and returns a valid selection") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      const auto ks = random_knapsack(seed, 9, 25);
      KnapsackInstance inst = ks;
      const auto brute = brute_min_knapsack(inst);
      const auto fast = min_knapsack(ks.items, ks.threshold);
      CHECK(brute.has_value() == fast.has_value());
      if (fast) {
        CHECK(fast->weight == *brute);
        CHECK(selection_profit(ks.items, fast->chosen) >= ks.threshold);
        CHECK(selection_weight(ks.items, fast->chosen) == fast->weight);
      }
    }
  }
}
