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

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "bnpg/errors.hpp"

namespace bnpg {

std::int64_t KnapsackInstance::total_weight() const {
  std::int64_t w = 0;
  for (const auto& item : items) w += item.weight;
  return w;
}

Rational KnapsackInstance::total_profit() const {
  Rational p(0);
  for (const auto& item : items) p += item.profit;
  return p;
}

namespace {

struct HalfEntry {
  std::int64_t weight = 0;
  Rational profit;
  std::uint64_t mask = 0;  // subset over the half's local indices
};

void check_items(const std::vector<KnapsackItem>& items, std::size_t limit) {
  if (items.size() > limit) {
    throw GuardError("knapsack with " + std::to_string(items.size()) +
                     " items exceeds the guard of " + std::to_string(limit));
  }
  for (const auto& item : items) {
    if (item.weight < 0) throw InputError("knapsack weights must be non-negative");
    if (item.profit < Rational(0)) throw InputError("knapsack profits must be non-negative");
  }
}

std::vector<HalfEntry> enumerate_half(const std::vector<KnapsackItem>& items, std::size_t begin,
                                      std::size_t end) {
  const std::size_t k = end - begin;
  std::vector<HalfEntry> entries(std::size_t(1) << k);
  for (std::uint64_t mask = 0; mask < entries.size(); ++mask) {
    HalfEntry e;
    e.mask = mask;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1) {
        e.weight += items[begin + i].weight;
        e.profit += items[begin + i].profit;
      }
    }
    entries[mask] = std::move(e);
  }
  return entries;
}

// Preference order for deterministic selections: more profit, then less
// weight, then smaller subset mask.
bool better(const HalfEntry& a, const HalfEntry& b) {
  if (a.profit != b.profit) return a.profit > b.profit;
  if (a.weight != b.weight) return a.weight < b.weight;
  return a.mask < b.mask;
}

}  // namespace

MaxKnapsackResult max_knapsack_mitm(const std::vector<KnapsackItem>& items,
                                    std::int64_t capacity) {
  check_items(items, 40);
  if (capacity < 0) throw InputError("capacity must be non-negative");

  const std::size_t k = items.size();
  const std::size_t split = (k + 1) / 2;
  auto first = enumerate_half(items, 0, split);
  auto second = enumerate_half(items, split, k);

  // Sort the second half by weight and keep, per prefix, the best entry.
  std::sort(second.begin(), second.end(), [](const HalfEntry& a, const HalfEntry& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    return better(a, b);
  });
  std::vector<std::size_t> best_prefix(second.size());
  for (std::size_t i = 0; i < second.size(); ++i) {
    best_prefix[i] = i;
    if (i > 0 && better(second[best_prefix[i - 1]], second[i])) {
      best_prefix[i] = best_prefix[i - 1];
    }
  }

  bool found = false;
  Rational best_profit;
  std::int64_t best_weight = 0;
  std::uint64_t best_amask = 0;
  std::uint64_t best_bmask = 0;
  for (const auto& a : first) {
    if (a.weight > capacity) continue;
    const std::int64_t room = capacity - a.weight;
    // Largest second-half weight not exceeding the remaining room. The empty
    // subset weighs 0, so at least one entry qualifies.
    auto it = std::upper_bound(second.begin(), second.end(), room,
                               [](std::int64_t w, const HalfEntry& e) { return w < e.weight; });
    const auto& b = second[best_prefix[static_cast<std::size_t>(it - second.begin()) - 1]];
    const Rational profit = a.profit + b.profit;
    const std::int64_t weight = a.weight + b.weight;
    bool take = false;
    if (!found) {
      take = true;
    } else if (profit != best_profit) {
      take = profit > best_profit;
    } else if (weight != best_weight) {
      take = weight < best_weight;
    } else {
      take = a.mask < best_amask || (a.mask == best_amask && b.mask < best_bmask);
    }
    if (take) {
      found = true;
      best_profit = profit;
      best_weight = weight;
      best_amask = a.mask;
      best_bmask = b.mask;
    }
  }

  MaxKnapsackResult result;
  result.profit = best_profit;
  result.weight = best_weight;
  for (std::size_t i = 0; i < split; ++i) {
    if (best_amask >> i & 1) result.chosen.push_back(static_cast<int>(i));
  }
  for (std::size_t i = split; i < k; ++i) {
    if (best_bmask >> (i - split) & 1) result.chosen.push_back(static_cast<int>(i));
  }
  return result;
}

std::optional<MinKnapsackResult> min_knapsack(const std::vector<KnapsackItem>& items,
                                              const Rational& threshold) {
  check_items(items, 40);
  Rational total_profit(0);
  std::int64_t total_weight = 0;
  for (const auto& item : items) {
    total_profit += item.profit;
    total_weight += item.weight;
  }
  if (total_profit < threshold) return std::nullopt;

  const auto probe = [&](std::int64_t w) { return max_knapsack_mitm(items, w).profit; };

  std::int64_t lo = 0;
  std::int64_t hi = total_weight;
  std::int64_t w = (lo + hi) / 2;
  std::int64_t answer = -1;
  // Termination: each probe either returns, shrinks [lo, hi], or hits the
  // w = 0 boundary. Bound the iteration count as a defect trap.
  for (int steps = 0; steps < 128; ++steps) {
    const Rational opt_w = probe(w);
    const Rational opt_next = probe(w + 1);
    if (opt_next < opt_w) {
      throw std::logic_error("capacity-probe optimum must be monotone in the capacity");
    }
    if (w == 0 && opt_w >= threshold) {
      answer = 0;
      break;
    }
    if (opt_w < threshold && opt_next >= threshold) {
      answer = w + 1;
      break;
    }
    if (opt_w < threshold) {
      lo = w + 1;
    } else {
      hi = w;
    }
    w = (lo + hi) / 2;
  }
  if (answer < 0) throw std::logic_error("minimum-knapsack binary search failed to converge");

  MinKnapsackResult result;
  result.weight = answer;
  auto selection = max_knapsack_mitm(items, answer);
  result.chosen = std::move(selection.chosen);
  return result;
}

}  // namespace bnpg
