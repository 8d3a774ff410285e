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

#include "bnpg/oracle.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <string>
#include <utility>

#include "bnpg/parallel.hpp"

namespace bnpg {

namespace {

// Stability check with the investing-neighbor counts already tallied; the
// same weak inequalities as is_stable, saving the per-neighbor recounts
// during full enumeration.
bool stable_given_counts(const BNPGGame& game, const StrategyProfile& profile,
                         const std::vector<int>& counts, PlayerId v) {
  Rational gain = game.externality[v].marginal(counts[v]);
  Rational altruistic(0);
  for (PlayerId u : game.altruism.out_neighbors(v)) {
    const int arg = profile.actions[v] == 1 ? profile.actions[u] + counts[u] - 1
                                            : profile.actions[u] + counts[u];
    altruistic += game.externality[u].marginal(arg);
  }
  gain += game.altruism_weight * altruistic;
  return profile.actions[v] == 1 ? gain >= game.cost[v] : gain <= game.cost[v];
}

}  // namespace

std::vector<StrategyProfile> enumerate_psne(const BNPGGame& game) {
  const int n = game.player_count();
  if (n > 25) {
    throw GuardError("PSNE enumeration guarded at 25 players, got " + std::to_string(n));
  }
  const std::uint64_t limit = std::uint64_t(1) << n;

  // Chunks scan disjoint mask ranges and are concatenated in order, so the
  // output is the lexicographic enumeration regardless of the worker count.
  std::vector<std::vector<StrategyProfile>> partial(configured_threads());
  for_chunks(limit, [&](int chunk, std::uint64_t begin, std::uint64_t end) {
    StrategyProfile profile;
    profile.actions.assign(n, 0);
    std::vector<int> counts(n);
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      for (int v = 0; v < n; ++v) {
        profile.actions[v] = static_cast<std::uint8_t>(mask >> (n - 1 - v) & 1);
      }
      std::fill(counts.begin(), counts.end(), 0);
      for (const auto& e : game.graph.edges()) {
        counts[e.a] += profile.actions[e.b];
        counts[e.b] += profile.actions[e.a];
      }
      bool all_stable = true;
      for (int v = 0; v < n && all_stable; ++v) {
        all_stable = stable_given_counts(game, profile, counts, v);
      }
      if (all_stable) partial[chunk].push_back(profile);
    }
  });

  std::vector<StrategyProfile> result;
  for (auto& part : partial) {
    result.insert(result.end(), std::make_move_iterator(part.begin()),
                  std::make_move_iterator(part.end()));
  }
  return result;
}

std::optional<std::int64_t> brute_min_knapsack(const KnapsackInstance& inst) {
  const std::size_t k = inst.items.size();
  if (k > 24) {
    throw GuardError("brute minimum knapsack guarded at 24 items, got " + std::to_string(k));
  }
  std::optional<std::int64_t> best;
  for (std::uint64_t mask = 0; mask < std::uint64_t(1) << k; ++mask) {
    Rational profit(0);
    std::int64_t weight = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1) {
        profit += inst.items[i].profit;
        weight += inst.items[i].weight;
      }
    }
    if (profit >= inst.threshold && (!best || weight < *best)) best = weight;
  }
  return best;
}

namespace {

struct Candidate {
  EdgePair edge;
  bool is_addition = false;
  std::int64_t cost = 0;
};

// List-lexicographic comparison of two edit sets given as masks over the
// canonically ordered candidates: compare the ascending index sequences
// elementwise, an exhausted prefix winning.
bool edit_mask_less(std::uint32_t a, std::uint32_t b) {
  while (a != 0 && b != 0) {
    const int ia = std::countr_zero(a);
    const int ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

}  // namespace

std::optional<EditSet> brute_anm(const ANMInstance& anm) {
  // Canonical candidate order: additions then deletions, edges ascending.
  std::vector<Candidate> candidates;
  for (const auto& [edge, cost] : anm.add_cost) candidates.push_back({edge, true, cost});
  for (const auto& [edge, cost] : anm.delete_cost) candidates.push_back({edge, false, cost});
  const int c = static_cast<int>(candidates.size());
  if (c > 20) {
    throw GuardError("brute ANM guarded at 20 candidate edits, got " + std::to_string(c));
  }

  const BNPGGame& game = anm.game;
  const StrategyProfile& target = anm.target;
  const int n = game.player_count();
  const bool directed = game.altruism.directed();

  // Stability of player v depends only on which of its incident candidates
  // are applied, and each candidate's altruistic term is fixed by the target
  // (altruism edits never change graph-neighbor counts). Tabulate stability
  // per player over local candidate subsets so the scan over global subsets
  // costs O(1) per affected player.
  std::vector<std::vector<int>> incident(n);
  for (int i = 0; i < c; ++i) {
    incident[candidates[i].edge.a].push_back(i);
    if (!directed) incident[candidates[i].edge.b].push_back(i);
  }

  std::vector<std::vector<bool>> stable(n);
  std::vector<std::vector<int>> local_slot(n, std::vector<int>(c, -1));
  for (int v = 0; v < n; ++v) {
    const auto& inc = incident[v];
    for (std::size_t j = 0; j < inc.size(); ++j) local_slot[v][inc[j]] = static_cast<int>(j);

    const auto term = [&](PlayerId u) {
      const int n_u = investing_neighbors(game.graph, target, u);
      const int arg =
          target.actions[v] == 1 ? target.actions[u] + n_u - 1 : target.actions[u] + n_u;
      return game.altruism_weight * game.externality[u].marginal(arg);
    };

    Rational base = game.externality[v].marginal(investing_neighbors(game.graph, target, v));
    for (PlayerId u : game.altruism.out_neighbors(v)) base += term(u);

    std::vector<Rational> delta(inc.size());
    for (std::size_t j = 0; j < inc.size(); ++j) {
      const auto& cand = candidates[inc[j]];
      const PlayerId other = cand.edge.a == v ? cand.edge.b : cand.edge.a;
      delta[j] = cand.is_addition ? term(other) : -term(other);
    }

    std::vector<Rational> gain(std::size_t(1) << inc.size());
    gain[0] = base;
    stable[v].assign(gain.size(), false);
    for (std::uint32_t m = 0; m < gain.size(); ++m) {
      if (m != 0) gain[m] = gain[m & (m - 1)] + delta[std::countr_zero(m)];
      stable[v][m] =
          target.actions[v] == 1 ? gain[m] >= game.cost[v] : gain[m] <= game.cost[v];
    }
  }

  // Gray-code walk over all subsets, flipping one candidate per step and
  // keeping the unstable-player count current.
  std::vector<std::uint32_t> local_mask(n, 0);
  int unstable = 0;
  for (int v = 0; v < n; ++v) {
    if (!stable[v][0]) ++unstable;
  }
  std::int64_t cost = 0;
  std::uint32_t gray = 0;

  std::optional<std::int64_t> best_cost;
  std::uint32_t best_mask = 0;

  const auto consider = [&]() {
    if (unstable != 0) return;
    if (anm.budget && cost > *anm.budget) return;
    if (!best_cost || cost < *best_cost ||
        (cost == *best_cost && edit_mask_less(gray, best_mask))) {
      best_cost = cost;
      best_mask = gray;
    }
  };

  consider();
  const std::uint64_t limit = std::uint64_t(1) << c;
  for (std::uint64_t step = 1; step < limit; ++step) {
    const int flip = std::countr_zero(step);
    const std::uint32_t bit = std::uint32_t(1) << flip;
    const bool now_applied = (gray & bit) == 0;
    gray ^= bit;
    const auto& cand = candidates[flip];
    cost += now_applied ? cand.cost : -cand.cost;
    const PlayerId affected[2] = {cand.edge.a, cand.edge.b};
    const int affected_count = directed ? 1 : 2;
    for (int idx = 0; idx < affected_count; ++idx) {
      const PlayerId v = affected[idx];
      const int slot = local_slot[v][flip];
      if (slot < 0) continue;
      auto& mask = local_mask[v];
      const bool was = stable[v][mask];
      mask ^= std::uint32_t(1) << slot;
      const bool now = stable[v][mask];
      if (was && !now) ++unstable;
      if (!was && now) --unstable;
    }
    consider();
  }

  if (!best_cost) return std::nullopt;
  EditSet edits;
  edits.total_cost = *best_cost;
  for (int i = 0; i < c; ++i) {
    if (best_mask >> i & 1) {
      const auto& cand = candidates[i];
      (cand.is_addition ? edits.additions : edits.deletions).push_back(cand.edge);
    }
  }
  return edits;
}

}  // namespace bnpg
