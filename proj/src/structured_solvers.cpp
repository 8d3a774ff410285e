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

#include "bnpg/structured_solvers.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "bnpg/tree_solver.hpp"

namespace bnpg {

int circuit_rank(const InputGraph& graph) {
  return graph.edge_count() - graph.player_count() + graph.component_count();
}

StabilitySets clique_stability_sets(const BNPGGame& game, int k) {
  const int n = game.player_count();
  if (k <= 0 || k >= n) throw InputError("stability sets are defined for 0 < k < n");
  StabilitySets sets;
  sets.k = k;
  for (PlayerId v = 0; v < n; ++v) {
    Rational invest_gain = game.externality[v].marginal(k - 1);
    Rational leave_gain = game.externality[v].marginal(k);
    Rational invest_alt(0);
    Rational leave_alt(0);
    for (PlayerId u : game.altruism.out_neighbors(v)) {
      invest_alt += game.externality[u].marginal(k - 1);
      leave_alt += game.externality[u].marginal(k);
    }
    invest_gain += game.altruism_weight * invest_alt;
    leave_gain += game.altruism_weight * leave_alt;
    if (invest_gain >= game.cost[v]) sets.r1.push_back(v);
    if (leave_gain <= game.cost[v]) sets.r0.push_back(v);
  }
  return sets;
}

std::optional<StrategyProfile> solve_clique_psne(const BNPGGame& game) {
  const int n = game.player_count();
  if (!game.graph.is_complete()) throw InputError("clique solver needs a complete graph");
  for (PlayerId v = 0; v < n; ++v) {
    if (game.externality[v].max_index() < n) {
      throw InputError("clique solving needs externality tables covering 0.." +
                       std::to_string(n) + "; player " + std::to_string(v) + " falls short");
    }
  }

  StrategyProfile profile;
  profile.actions.assign(n, 0);
  if (verify_psne(game, profile).is_psne) return profile;
  profile.actions.assign(n, 1);
  if (verify_psne(game, profile).is_psne) return profile;

  for (int k = 1; k < n; ++k) {
    // With k investors every player sees the count k, so stability collapses
    // to membership in the two sets.
    const auto sets = clique_stability_sets(game, k);
    const int r1_size = static_cast<int>(sets.r1.size());
    const int r0_size = static_cast<int>(sets.r0.size());
    if (r1_size < k || r0_size < n - k) continue;

    std::vector<bool> in_r1(n, false);
    for (PlayerId v : sets.r1) in_r1[v] = true;
    int r0_minus_r1 = 0;
    std::vector<PlayerId> both;
    for (PlayerId v : sets.r0) {
      if (in_r1[v]) {
        both.push_back(v);
      } else {
        ++r0_minus_r1;
      }
    }
    if (r0_minus_r1 != n - r1_size) continue;

    // Witness: everyone outside R1 stays out, as do the first |R1| - k
    // members of the intersection; the remaining k players invest.
    profile.actions.assign(n, 1);
    for (PlayerId v = 0; v < n; ++v) {
      if (!in_r1[v]) profile.actions[v] = 0;
    }
    const int surplus = r1_size - k;
    for (int i = 0; i < surplus; ++i) profile.actions[both[i]] = 0;

    if (!verify_psne(game, profile).is_psne) {
      throw std::logic_error("clique witness failed the equilibrium audit at k = " +
                             std::to_string(k));
    }
    return profile;
  }
  return std::nullopt;
}

namespace {

struct ComponentGame {
  std::vector<PlayerId> to_global;
  BNPGGame game;
};

ComponentGame extract_component(const BNPGGame& game, const std::vector<int>& comp, int id) {
  std::vector<PlayerId> to_global;
  std::vector<int> to_local(game.player_count(), -1);
  for (PlayerId v = 0; v < game.player_count(); ++v) {
    if (comp[v] == id) {
      to_local[v] = static_cast<int>(to_global.size());
      to_global.push_back(v);
    }
  }

  std::vector<EdgePair> edges;
  for (const auto& e : game.graph.edges()) {
    if (to_local[e.a] >= 0 && to_local[e.b] >= 0) {
      edges.push_back({to_local[e.a], to_local[e.b]});
    }
  }
  std::vector<EdgePair> alt_edges;
  for (const auto& e : game.altruism.edges()) {
    if (to_local[e.a] < 0 || to_local[e.b] < 0) {
      if (comp[e.a] != comp[e.b]) {
        throw InputError("altruism edge crosses graph components; the game is invalid");
      }
      continue;
    }
    alt_edges.push_back({to_local[e.a], to_local[e.b]});
  }

  const int local_n = static_cast<int>(to_global.size());
  std::vector<ExternalityTable> tables;
  std::vector<Rational> costs;
  for (PlayerId v : to_global) {
    tables.push_back(game.externality[v]);
    costs.push_back(game.cost[v]);
  }
  return {std::move(to_global),
          BNPGGame(InputGraph(local_n, std::move(edges)),
                   AltruismNetwork(game.altruism.directed(), local_n, std::move(alt_edges)),
                   std::move(tables), std::move(costs), game.altruism_weight)};
}

// Spanning tree by BFS from player 0 of the (connected) component.
std::vector<EdgePair> spanning_tree(const InputGraph& graph) {
  std::vector<EdgePair> tree;
  std::vector<bool> seen(graph.player_count(), false);
  std::vector<PlayerId> queue{0};
  seen[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const PlayerId v = queue[head];
    for (PlayerId u : graph.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = true;
        tree.push_back(normalized({v, u}));
        queue.push_back(u);
      }
    }
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

std::optional<StrategyProfile> solve_component(const BNPGGame& game) {
  const int n = game.player_count();
  const auto tree_edges = spanning_tree(game.graph);
  std::vector<EdgePair> non_tree;
  for (const auto& e : game.graph.edges()) {
    if (!std::binary_search(tree_edges.begin(), tree_edges.end(), e)) non_tree.push_back(e);
  }

  // Endpoints of the non-tree edges: the players whose contribution is
  // enumerated rather than solved on the tree.
  std::vector<PlayerId> special;
  for (const auto& e : non_tree) {
    special.push_back(e.a);
    special.push_back(e.b);
  }
  std::sort(special.begin(), special.end());
  special.erase(std::unique(special.begin(), special.end()), special.end());
  const int ell = static_cast<int>(special.size());
  std::vector<int> special_index(n, -1);
  for (int i = 0; i < ell; ++i) special_index[special[i]] = i;

  InputGraph tree_graph(n, tree_edges);
  // Altruism restricted to tree edges; the rest is folded into the costs.
  std::vector<EdgePair> tree_alt;
  for (const auto& e : game.altruism.edges()) {
    if (std::binary_search(tree_edges.begin(), tree_edges.end(), normalized(e))) {
      tree_alt.push_back(e);
    }
  }
  AltruismNetwork tree_altruism(game.altruism.directed(), n, std::move(tree_alt));

  // Non-tree adjacency among the special players, and each special player's
  // remaining altruism out-neighbors (all of which are special themselves).
  std::vector<std::vector<int>> non_tree_adj(ell);
  for (const auto& e : non_tree) {
    non_tree_adj[special_index[e.a]].push_back(special_index[e.b]);
    non_tree_adj[special_index[e.b]].push_back(special_index[e.a]);
  }
  std::vector<std::vector<PlayerId>> folded_neighbors(ell);
  for (int i = 0; i < ell; ++i) {
    const PlayerId v = special[i];
    for (PlayerId u : game.altruism.out_neighbors(v)) {
      if (!tree_altruism.has_edge({v, u})) {
        if (special_index[u] < 0) {
          throw InputError("non-tree altruism edge reaches outside the special set; "
                           "the game is invalid");
        }
        folded_neighbors[i].push_back(u);
      }
    }
  }

  // Per special player, how many graph neighbors are special (their actions
  // are pinned by t) and how many are free tree neighbors.
  std::vector<std::vector<int>> special_graph_neighbors(ell);
  for (int i = 0; i < ell; ++i) {
    for (PlayerId u : game.graph.neighbors(special[i])) {
      if (special_index[u] >= 0) special_graph_neighbors[i].push_back(special_index[u]);
    }
  }

  for (std::uint32_t t = 0; t < (std::uint32_t(1) << ell); ++t) {
    const auto action_of = [&](int i) { return static_cast<int>(t >> i & 1); };

    // Investing neighbor count via non-tree edges under t.
    std::vector<int> shift(ell, 0);
    for (int i = 0; i < ell; ++i) {
      for (int j : non_tree_adj[i]) shift[i] += action_of(j);
    }

    // Feasible window for each special player's total investing-neighbor
    // count: pinned special neighbors plus 0..free tree neighbors, and the
    // tree-restricted count must fit the tree degree.
    std::vector<int> lo(ell);
    std::vector<int> hi(ell);
    bool window_ok = true;
    for (int i = 0; i < ell && window_ok; ++i) {
      int pinned = 0;
      for (int j : special_graph_neighbors[i]) pinned += action_of(j);
      const int free_neighbors = game.graph.degree(special[i]) -
                                 static_cast<int>(special_graph_neighbors[i].size());
      lo[i] = std::max(pinned, shift[i]);
      hi[i] = std::min(pinned + free_neighbors, shift[i] + tree_graph.degree(special[i]));
      if (lo[i] > hi[i]) window_ok = false;
    }
    if (!window_ok) continue;

    std::vector<int> counts = lo;
    while (true) {
      // Build the modified tree game for (t, counts) and solve it under the
      // matching prescriptions.
      bool realizable = true;
      std::vector<ExternalityTable> tables = game.externality;
      std::vector<Rational> costs = game.cost;
      for (int i = 0; i < ell && realizable; ++i) {
        const PlayerId v = special[i];
        if (shift[i] > 0) {
          const auto& orig = game.externality[v].values();
          if (static_cast<std::size_t>(shift[i]) >= orig.size()) {
            realizable = false;
            break;
          }
          tables[v] = ExternalityTable(
              std::vector<Rational>(orig.begin() + shift[i], orig.end()));
        }
        Rational fold(0);
        for (PlayerId u : folded_neighbors[i]) {
          const int j = special_index[u];
          const int arg = action_of(i) == 1 ? action_of(j) + counts[j] - 1
                                            : action_of(j) + counts[j];
          if (arg < 0 || arg > game.graph.degree(u)) {
            realizable = false;  // no profile realizes these counts
            break;
          }
          fold += game.externality[u].marginal(arg);
        }
        if (realizable) costs[v] -= game.altruism_weight * fold;
      }

      if (realizable) {
        ConstraintMap constraints;
        for (int i = 0; i < ell; ++i) {
          constraints[special[i]] = NodeConstraint{action_of(i), counts[i] - shift[i]};
        }
        BNPGGame tree_game(tree_graph, tree_altruism, std::move(tables), std::move(costs),
                           game.altruism_weight);
        auto witness = solve_tree_psne_constrained(tree_game, constraints);
        if (witness) return witness;
      }

      // Odometer step over the count windows.
      int pos = ell - 1;
      while (pos >= 0 && counts[pos] == hi[pos]) {
        counts[pos] = lo[pos];
        --pos;
      }
      if (pos < 0) break;
      ++counts[pos];
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<StrategyProfile> solve_bounded_circuit_rank_psne(const BNPGGame& game,
                                                               int max_rank) {
  const int rank = circuit_rank(game.graph);
  if (rank > max_rank) {
    throw GuardError("circuit rank " + std::to_string(rank) + " exceeds the configured bound " +
                     std::to_string(max_rank));
  }

  const auto comp = game.graph.components();
  const int comp_count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  StrategyProfile profile;
  profile.actions.assign(game.player_count(), 0);
  for (int c = 0; c < comp_count; ++c) {
    auto component = extract_component(game, comp, c);
    const auto witness = solve_component(component.game);
    if (!witness) return std::nullopt;
    for (std::size_t i = 0; i < component.to_global.size(); ++i) {
      profile.actions[component.to_global[i]] = witness->actions[i];
    }
  }

  if (!verify_psne(game, profile).is_psne) {
    throw std::logic_error("bounded-circuit-rank witness failed the equilibrium audit");
  }
  return profile;
}

}  // namespace bnpg
