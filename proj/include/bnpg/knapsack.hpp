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

#ifndef BNPG_KNAPSACK_HPP
#define BNPG_KNAPSACK_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "bnpg/rational.hpp"

namespace bnpg {

struct KnapsackItem {
  Rational profit;       // non-negative
  std::int64_t weight;   // non-negative integer, required by the binary search
};

/// Decision-form knapsack instance. Minimum-knapsack solving reads the profit
/// threshold; capacity-probe solving reads the capacity; the tree reductions
/// read both.
struct KnapsackInstance {
  std::vector<KnapsackItem> items;
  Rational threshold;        // P: required total profit
  std::int64_t capacity = 0; // W: weight bound of the decision form

  std::int64_t total_weight() const;
  Rational total_profit() const;
};

struct MaxKnapsackResult {
  Rational profit;
  std::int64_t weight = 0;           // weight of the chosen set
  std::vector<int> chosen;           // item indices, ascending
};

/// Maximum-profit selection under a weight capacity, by meet-in-the-middle:
/// both halves enumerated, one half sorted by weight with running profit
/// maxima, then merged. Guarded at 40 items.
MaxKnapsackResult max_knapsack_mitm(const std::vector<KnapsackItem>& items,
                                    std::int64_t capacity);

struct MinKnapsackResult {
  std::int64_t weight = 0;
  std::vector<int> chosen;
};

/// Minimum total weight subject to total profit >= threshold, found by binary
/// search over capacities [0, W] probing the capacity-w maximization at w and
/// w+1 per step. Returns nullopt when the total profit falls short.
std::optional<MinKnapsackResult> min_knapsack(const std::vector<KnapsackItem>& items,
                                              const Rational& threshold);

}  // namespace bnpg

#endif  // BNPG_KNAPSACK_HPP
