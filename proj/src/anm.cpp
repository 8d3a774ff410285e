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

#include "bnpg/anm.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace bnpg {

namespace {

std::string edge_str(const EdgePair& e) {
  return "(" + std::to_string(e.a) + ", " + std::to_string(e.b) + ")";
}

}  // namespace

ANMInstance::ANMInstance(BNPGGame game_in, StrategyProfile target_in,
                         std::map<EdgePair, std::int64_t> add_cost_in,
                         std::map<EdgePair, std::int64_t> delete_cost_in,
                         std::optional<std::int64_t> budget_in)
    : game(std::move(game_in)),
      target(std::move(target_in)),
      add_cost(std::move(add_cost_in)),
      delete_cost(std::move(delete_cost_in)),
      budget(budget_in) {
  if (target.size() != game.player_count()) {
    throw InputError("target profile length differs from player count");
  }
  if (budget && *budget < 0) throw InputError("budget must be non-negative");
  for (const auto& [edge, cost] : add_cost) {
    if (cost < 0) throw InputError("edit costs must be non-negative");
    if (!game.graph.has_edge(edge.a, edge.b)) {
      throw InputError("addable edge " + edge_str(edge) + " joins non-adjacent players");
    }
    if (game.altruism.has_edge(edge)) {
      throw InputError("addable edge " + edge_str(edge) + " is already in the altruism network");
    }
    if (!game.altruism.directed() && edge.a > edge.b) {
      throw InputError("undirected candidate edge " + edge_str(edge) + " is not normalized");
    }
  }
  for (const auto& [edge, cost] : delete_cost) {
    if (cost < 0) throw InputError("edit costs must be non-negative");
    if (!game.altruism.has_edge(edge)) {
      throw InputError("deletable edge " + edge_str(edge) + " is not in the altruism network");
    }
    if (!game.altruism.directed() && edge.a > edge.b) {
      throw InputError("undirected candidate edge " + edge_str(edge) + " is not normalized");
    }
  }
}

BNPGGame apply_edits(const ANMInstance& anm, const EditSet& edits) {
  AltruismNetwork network = anm.game.altruism;
  for (const auto& e : edits.deletions) network = network.with_edge_removed(e);
  for (const auto& e : edits.additions) network = network.with_edge_added(e);
  return anm.game.with_altruism(std::move(network));
}

std::vector<PlayerKnapsack> decompose_anm_asymmetric(const ANMInstance& anm) {
  if (!anm.game.altruism.directed()) {
    throw InputError("the per-player decomposition needs a directed altruism network");
  }
  const BNPGGame& game = anm.game;
  const StrategyProfile& target = anm.target;
  const Rational& a = game.altruism_weight;

  std::vector<PlayerKnapsack> result;
  for (PlayerId v = 0; v < game.player_count(); ++v) {
    const int n_v = investing_neighbors(game.graph, target, v);

    // Marginal altruistic contribution of the out-edge (v, u) under the
    // target, from the stability inequality of v's target action.
    const auto edge_profit = [&](PlayerId u) {
      const int n_u = investing_neighbors(game.graph, target, u);
      const int arg = target.actions[v] == 1 ? target.actions[u] + n_u - 1
                                             : target.actions[u] + n_u;
      return a * game.externality[u].marginal(arg);
    };

    Rational existing_sum(0);
    for (PlayerId u : game.altruism.out_neighbors(v)) existing_sum += edge_profit(u);
    const Rational own = game.externality[v].marginal(n_v);

    PlayerKnapsack pk;
    pk.owner = v;
    if (target.actions[v] == 1) {
      // Needs own + existing + added >= c_v; shortfall covered by additions.
      pk.mode = PlayerKnapsack::Mode::raise;
      pk.threshold = game.cost[v] - own - existing_sum;
      if (pk.threshold <= Rational(0)) continue;
      for (const auto& [edge, cost] : anm.add_cost) {
        if (edge.a != v) continue;
        pk.edges.push_back(edge);
        pk.items.push_back({edge_profit(edge.b), cost});
      }
    } else {
      // Needs own + existing - deleted <= c_v; excess removed by deletions.
      pk.mode = PlayerKnapsack::Mode::lower;
      pk.threshold = own + existing_sum - game.cost[v];
      if (pk.threshold <= Rational(0)) continue;
      for (const auto& [edge, cost] : anm.delete_cost) {
        if (edge.a != v) continue;
        pk.edges.push_back(edge);
        pk.items.push_back({edge_profit(edge.b), cost});
      }
    }
    result.push_back(std::move(pk));
  }
  return result;
}

std::optional<EditSet> solve_anm_asymmetric(const ANMInstance& anm) {
  const auto knapsacks = decompose_anm_asymmetric(anm);

  EditSet edits;
  for (const auto& pk : knapsacks) {
    const auto solved = min_knapsack(pk.items, pk.threshold);
    if (!solved) return std::nullopt;
    edits.total_cost += solved->weight;
    auto& out = pk.mode == PlayerKnapsack::Mode::raise ? edits.additions : edits.deletions;
    for (int idx : solved->chosen) out.push_back(pk.edges[static_cast<std::size_t>(idx)]);
  }
  if (anm.budget && edits.total_cost > *anm.budget) return std::nullopt;
  std::sort(edits.additions.begin(), edits.additions.end());
  std::sort(edits.deletions.begin(), edits.deletions.end());

  const auto verdict = verify_psne(apply_edits(anm, edits), anm.target);
  if (!verdict.is_psne) {
    throw std::logic_error("asymmetric ANM solution failed the post-edit equilibrium check");
  }
  return edits;
}

}  // namespace bnpg
