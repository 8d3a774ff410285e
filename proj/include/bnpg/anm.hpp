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

#ifndef BNPG_ANM_HPP
#define BNPG_ANM_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "bnpg/game.hpp"
#include "bnpg/knapsack.hpp"

namespace bnpg {

/// Altruistic Network Modification: make the target profile a PSNE by adding
/// and deleting altruism edges within the budget. Candidate edits and their
/// costs are listed explicitly; addable edges must join graph-adjacent players
/// and be absent from the altruism network, deletable edges must be present.
struct ANMInstance {
  BNPGGame game;
  StrategyProfile target;
  std::map<EdgePair, std::int64_t> add_cost;
  std::map<EdgePair, std::int64_t> delete_cost;
  std::optional<std::int64_t> budget;  // nullopt means infinite

  ANMInstance(BNPGGame game_in, StrategyProfile target_in,
              std::map<EdgePair, std::int64_t> add_cost_in,
              std::map<EdgePair, std::int64_t> delete_cost_in,
              std::optional<std::int64_t> budget_in);
};

struct EditSet {
  std::vector<EdgePair> additions;  // sorted
  std::vector<EdgePair> deletions;  // sorted
  std::int64_t total_cost = 0;

  bool empty() const { return additions.empty() && deletions.empty(); }
  friend bool operator==(const EditSet&, const EditSet&) = default;
};

/// Returns the game with the edit set applied to its altruism network.
BNPGGame apply_edits(const ANMInstance& anm, const EditSet& edits);

/// One player's share of an asymmetric ANM instance as a minimum-knapsack
/// problem over its own candidate out-edges.
struct PlayerKnapsack {
  enum class Mode {
    raise,  // target action 1: add edges until the invest inequality holds
    lower,  // target action 0: delete edges until the stay-out inequality holds
  };

  PlayerId owner = 0;
  Mode mode = Mode::raise;
  std::vector<EdgePair> edges;      // candidate out-edges, aligned with items
  std::vector<KnapsackItem> items;  // profit: marginal altruistic term; weight: edit cost
  Rational threshold;               // required total profit
};

/// Per-player decomposition of an asymmetric-altruism ANM instance. Under a
/// directed altruism network, editing v's out-edges changes only v's own
/// stability, so the instance splits into independent minimum knapsacks; only
/// players whose target action is not already stable appear in the result.
std::vector<PlayerKnapsack> decompose_anm_asymmetric(const ANMInstance& anm);

/// Exact minimum-cost solution of asymmetric ANM via the per-player
/// decomposition, each knapsack solved by capacity binary search over the
/// meet-in-the-middle maximizer. Returns nullopt when some player cannot be
/// stabilized or the minimum cost exceeds the budget.
std::optional<EditSet> solve_anm_asymmetric(const ANMInstance& anm);

}  // namespace bnpg

#endif  // BNPG_ANM_HPP
