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

#include "bnpg/gen.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace bnpg {

int Rng::below(int bound) {
  if (bound <= 0) throw InputError("random bound must be positive");
  return static_cast<int>(next() % static_cast<std::uint64_t>(bound));
}

int Rng::in_range(int lo, int hi) { return lo + below(hi - lo + 1); }

bool Rng::chance(int num, int den) { return below(den) < num; }

Rational Rng::rational(int max_num, int max_den) {
  return Rational(below(max_num + 1), in_range(1, max_den));
}

Rational Rng::probability(int den) { return Rational(below(den + 1), den); }

namespace {

// Non-decreasing table of the requested length with entries in [0, max_value].
ExternalityTable random_table(Rng& rng, int length, int max_value) {
  std::vector<Rational> values;
  values.reserve(length);
  int current = rng.below(2) == 0 ? 0 : rng.below(max_value + 1);
  for (int i = 0; i < length; ++i) {
    values.emplace_back(current);
    current = std::min(max_value, current + rng.below(3));
  }
  return ExternalityTable(std::move(values));
}

BNPGGame finish_game(Rng& rng, InputGraph graph, const GameGenOptions& opts,
                     int table_length_override = 0) {
  const int n = graph.player_count();
  std::vector<ExternalityTable> tables;
  std::vector<Rational> costs;
  tables.reserve(n);
  costs.reserve(n);
  for (int v = 0; v < n; ++v) {
    const int length =
        table_length_override > 0 ? table_length_override : graph.degree(v) + 2;
    tables.push_back(random_table(rng, length, opts.max_g_value));
    costs.push_back(rng.rational(opts.cost_max_num, opts.cost_max_den));
  }

  std::vector<EdgePair> altruism_edges;
  if (opts.directed_altruism) {
    for (const auto& e : graph.edges()) {
      if (rng.chance(opts.altruism_percent, 100)) altruism_edges.push_back({e.a, e.b});
      if (rng.chance(opts.altruism_percent, 100)) altruism_edges.push_back({e.b, e.a});
    }
  } else {
    for (const auto& e : graph.edges()) {
      if (rng.chance(opts.altruism_percent, 100)) altruism_edges.push_back(e);
    }
  }
  AltruismNetwork altruism(opts.directed_altruism, n, std::move(altruism_edges));

  static const int weight_nums[] = {0, 1, 1, 1, 2, 3};
  static const int weight_dens[] = {1, 1, 2, 3, 1, 2};
  const int pick = rng.below(6);
  return BNPGGame(std::move(graph), std::move(altruism), std::move(tables), std::move(costs),
                  Rational(weight_nums[pick], weight_dens[pick]));
}

std::vector<EdgePair> random_tree_edges(Rng& rng, int n, int max_degree) {
  std::vector<EdgePair> edges;
  std::vector<int> degree(n, 0);
  for (int v = 1; v < n; ++v) {
    int parent = rng.below(v);
    if (max_degree > 0) {
      // Resample while the parent is saturated; a tree always has a node of
      // degree < max_degree when the cap is at least 2.
      int guard = 0;
      while (degree[parent] >= max_degree && ++guard < 64 * n) parent = rng.below(v);
      if (degree[parent] >= max_degree) {
        for (parent = 0; parent < v && degree[parent] >= max_degree; ++parent) {
        }
        if (parent == v) {
          throw InputError("cannot honor the degree cap " + std::to_string(max_degree));
        }
      }
    }
    edges.push_back(normalized({parent, v}));
    ++degree[parent];
    ++degree[v];
  }
  return edges;
}

}  // namespace

BNPGGame random_tree_game(std::uint64_t seed, int n, int max_degree, const GameGenOptions& opts) {
  Rng rng(seed);
  InputGraph graph(n, random_tree_edges(rng, n, max_degree));
  return finish_game(rng, std::move(graph), opts);
}

BNPGGame random_clique_game(std::uint64_t seed, int n, const GameGenOptions& opts) {
  Rng rng(seed);
  std::vector<EdgePair> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) edges.push_back({a, b});
  }
  InputGraph graph(n, std::move(edges));
  return finish_game(rng, std::move(graph), opts, n + 1);
}

BNPGGame random_circuit_rank_game(std::uint64_t seed, int n, int rank,
                                  const GameGenOptions& opts) {
  Rng rng(seed);
  auto edges = random_tree_edges(rng, n, 0);
  const int max_extra = n * (n - 1) / 2 - (n - 1);
  if (rank < 0 || rank > max_extra) {
    throw InputError("circuit rank " + std::to_string(rank) + " impossible on " +
                     std::to_string(n) + " nodes");
  }
  std::vector<EdgePair> present = edges;
  std::sort(present.begin(), present.end());
  for (int added = 0; added < rank;) {
    const EdgePair e = normalized({rng.below(n), rng.below(n)});
    if (e.a == e.b) continue;
    if (std::binary_search(present.begin(), present.end(), e)) continue;
    present.insert(std::lower_bound(present.begin(), present.end(), e), e);
    edges.push_back(e);
    ++added;
  }
  InputGraph graph(n, std::move(edges));
  return finish_game(rng, std::move(graph), opts);
}

SatInstance random_sat_3b2(std::uint64_t seed, int n) {
  if (n <= 0 || n % 3 != 0) {
    throw InputError("(3,B2) needs a variable count divisible by 3, got " + std::to_string(n));
  }
  Rng rng(seed);
  const int m = 4 * n / 3;

  // Four occurrence slots per variable (two positive, two negative), dealt
  // into clauses of three distinct variables.
  std::vector<int> slots;
  for (int v = 1; v <= n; ++v) {
    slots.push_back(v);
    slots.push_back(v);
    slots.push_back(-v);
    slots.push_back(-v);
  }
  for (int attempt = 0; attempt < 10000; ++attempt) {
    auto deck = slots;
    for (std::size_t i = deck.size(); i > 1; --i) {
      std::swap(deck[i - 1], deck[rng.below(static_cast<int>(i))]);
    }
    SatInstance sat;
    sat.variable_count = n;
    bool ok = true;
    for (int j = 0; j < m && ok; ++j) {
      SatClause clause;
      for (int t = 0; t < 3; ++t) clause.literals[t] = deck[3 * j + t];
      const auto var = [](int lit) { return lit < 0 ? -lit : lit; };
      ok = var(clause.literals[0]) != var(clause.literals[1]) &&
           var(clause.literals[0]) != var(clause.literals[2]) &&
           var(clause.literals[1]) != var(clause.literals[2]);
      std::sort(clause.literals.begin(), clause.literals.end(),
                [&](int a, int b) { return var(a) < var(b); });
      sat.clauses.push_back(clause);
    }
    if (ok) return sat;
  }
  throw InputError("failed to deal an occurrence-balanced formula");
}

KnapsackInstance random_knapsack(std::uint64_t seed, int items, int max_weight) {
  Rng rng(seed);
  KnapsackInstance ks;
  Rational total_profit(0);
  std::int64_t total_weight = 0;
  for (int i = 0; i < items; ++i) {
    KnapsackItem item;
    item.profit = Rational(rng.below(13));
    item.weight = rng.below(max_weight + 1);
    total_profit += item.profit;
    total_weight += item.weight;
    ks.items.push_back(item);
  }
  // Thresholds around the attainable totals keep both outcomes likely.
  ks.threshold = total_profit * Rational(rng.in_range(0, 5), 4);
  ks.capacity = total_weight > 0 ? rng.below(static_cast<int>(total_weight) + 1) : 0;
  return ks;
}

ANMInstance random_anm(std::uint64_t seed, const BNPGGame& base, const AnmGenOptions& opts) {
  Rng rng(seed);
  const int n = base.player_count();
  const bool directed = base.altruism.directed();

  // Random initial altruism network over the graph edges.
  std::vector<EdgePair> h_edges;
  for (const auto& e : base.graph.edges()) {
    if (directed) {
      if (rng.chance(40, 100)) h_edges.push_back({e.a, e.b});
      if (rng.chance(40, 100)) h_edges.push_back({e.b, e.a});
    } else {
      if (rng.chance(40, 100)) h_edges.push_back(e);
    }
  }
  AltruismNetwork altruism(directed, n, std::move(h_edges));
  BNPGGame game = base.with_altruism(std::move(altruism));

  StrategyProfile target;
  target.actions.resize(n);
  for (auto& a : target.actions) a = static_cast<std::uint8_t>(rng.below(2));

  // Every legal edit is a candidate, then sampled down to the cap.
  std::vector<std::pair<EdgePair, bool>> pool;  // (edge, is_addition)
  for (const auto& e : game.graph.edges()) {
    const EdgePair fwd{e.a, e.b};
    const EdgePair rev{e.b, e.a};
    if (directed) {
      if (!game.altruism.has_edge(fwd)) pool.push_back({fwd, true});
      if (!game.altruism.has_edge(rev)) pool.push_back({rev, true});
    } else if (!game.altruism.has_edge(fwd)) {
      pool.push_back({fwd, true});
    }
  }
  for (const auto& e : game.altruism.edges()) pool.push_back({e, false});

  while (static_cast<int>(pool.size()) > opts.max_candidates) {
    pool.erase(pool.begin() + rng.below(static_cast<int>(pool.size())));
  }

  std::map<EdgePair, std::int64_t> add_cost;
  std::map<EdgePair, std::int64_t> delete_cost;
  std::int64_t total = 0;
  for (const auto& [edge, is_addition] : pool) {
    const std::int64_t cost = rng.below(opts.max_cost + 1);
    total += cost;
    (is_addition ? add_cost : delete_cost)[edge] = cost;
  }

  // Budgets come from the upper two thirds of the total edit cost.
  std::optional<std::int64_t> budget;
  if (!rng.chance(opts.infinite_budget_percent, 100)) {
    const int lo = static_cast<int>(total / 3);
    budget = total > 0 ? rng.in_range(lo, static_cast<int>(total)) : 0;
  }
  return ANMInstance(std::move(game), std::move(target), std::move(add_cost),
                     std::move(delete_cost), budget);
}

}  // namespace bnpg
