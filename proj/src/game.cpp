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

#include "bnpg/game.hpp"

#include <string>
#include <utility>

namespace bnpg {

ExternalityTable::ExternalityTable(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty()) throw InputError("externality table must tabulate at least g(0)");
}

const Rational& ExternalityTable::at(int x) const {
  if (x < 0 || x > max_index()) {
    throw RangeError("externality table evaluated at " + std::to_string(x) +
                     ", tabulated range is [0, " + std::to_string(max_index()) + "]");
  }
  return values_[static_cast<std::size_t>(x)];
}

Rational ExternalityTable::marginal(int x) const { return at(x + 1) - at(x); }

Rational marginal(const ExternalityTable& table, int x) { return table.marginal(x); }

BNPGGame::BNPGGame(InputGraph graph_in, AltruismNetwork altruism_in,
                   std::vector<ExternalityTable> externality_in, std::vector<Rational> cost_in,
                   Rational altruism_weight_in)
    : graph(std::move(graph_in)),
      altruism(std::move(altruism_in)),
      externality(std::move(externality_in)),
      cost(std::move(cost_in)),
      altruism_weight(std::move(altruism_weight_in)) {
  const auto n = static_cast<std::size_t>(graph.player_count());
  if (altruism.player_count() != graph.player_count()) {
    throw InputError("altruism network player count differs from input graph");
  }
  if (externality.size() != n) throw InputError("need one externality table per player");
  if (cost.size() != n) throw InputError("need one investing cost per player");
}

bool BNPGGame::fully_homogeneous() const {
  for (int v = 1; v < player_count(); ++v) {
    if (!(externality[v] == externality[0]) || cost[v] != cost[0]) return false;
  }
  return true;
}

BNPGGame BNPGGame::with_altruism(AltruismNetwork replacement) const {
  return BNPGGame(graph, std::move(replacement), externality, cost, altruism_weight);
}

int investing_neighbors(const InputGraph& graph, const StrategyProfile& profile, PlayerId v) {
  int count = 0;
  for (PlayerId u : graph.neighbors(v)) count += profile.actions[u];
  return count;
}

namespace {

void check_profile(const BNPGGame& game, const StrategyProfile& profile) {
  if (profile.size() != game.player_count()) {
    throw InputError("profile length differs from player count");
  }
  for (auto a : profile.actions) {
    if (a > 1) throw InputError("profile actions must be 0 or 1");
  }
}

}  // namespace

Rational utility(const BNPGGame& game, const StrategyProfile& profile, PlayerId v) {
  check_profile(game, profile);
  const int n_v = investing_neighbors(game.graph, profile, v);
  Rational total = game.externality[v].at(profile.actions[v] + n_v);
  Rational altruistic(0);
  for (PlayerId u : game.altruism.out_neighbors(v)) {
    const int n_u = investing_neighbors(game.graph, profile, u);
    altruistic += game.externality[u].at(profile.actions[u] + n_u);
  }
  total += game.altruism_weight * altruistic;
  if (profile.actions[v] == 1) total -= game.cost[v];
  return total;
}

bool is_stable(const BNPGGame& game, const StrategyProfile& profile, PlayerId v) {
  check_profile(game, profile);
  const int n_v = investing_neighbors(game.graph, profile, v);
  Rational gain = game.externality[v].marginal(n_v);
  Rational altruistic(0);
  for (PlayerId u : game.altruism.out_neighbors(v)) {
    const int n_u = investing_neighbors(game.graph, profile, u);
    // x_u + n_u counted with v at its deviated-from baseline: when v plays 1
    // its own investment sits inside n_u and the marginal starts one lower.
    const int arg = profile.actions[v] == 1 ? profile.actions[u] + n_u - 1
                                            : profile.actions[u] + n_u;
    altruistic += game.externality[u].marginal(arg);
  }
  gain += game.altruism_weight * altruistic;
  return profile.actions[v] == 1 ? gain >= game.cost[v] : gain <= game.cost[v];
}

PsneVerdict verify_psne(const BNPGGame& game, const StrategyProfile& profile) {
  for (PlayerId v = 0; v < game.player_count(); ++v) {
    if (!is_stable(game, profile, v)) return {false, v};
  }
  return {true, std::nullopt};
}

namespace {

void check_mixed(const BNPGGame& game, const MixedProfile& mixed) {
  if (mixed.size() != game.player_count()) {
    throw InputError("mixed profile length differs from player count");
  }
  for (const auto& p : mixed.invest_probability) {
    if (p < Rational(0) || p > Rational(1)) {
      throw InputError("invest probability outside [0, 1]");
    }
  }
}

// Exact distribution of the number of successes among independent Bernoulli
// trials with the given probabilities.
std::vector<Rational> poisson_binomial(const std::vector<Rational>& probs) {
  std::vector<Rational> dist{Rational(1)};
  for (const auto& p : probs) {
    std::vector<Rational> next(dist.size() + 1, Rational(0));
    const Rational q = Rational(1) - p;
    for (std::size_t k = 0; k < dist.size(); ++k) {
      if (dist[k].is_zero()) continue;
      next[k] += dist[k] * q;
      next[k + 1] += dist[k] * p;
    }
    dist = std::move(next);
  }
  return dist;
}

}  // namespace

Rational expected_utility(const BNPGGame& game, const MixedProfile& mixed, PlayerId v,
                          int action) {
  check_mixed(game, mixed);
  if (action != 0 && action != 1) throw InputError("action must be 0 or 1");

  // Own term: n_v is Poisson-binomial over v's neighbors.
  std::vector<Rational> neighbor_probs;
  for (PlayerId w : game.graph.neighbors(v)) {
    neighbor_probs.push_back(mixed.invest_probability[w]);
  }
  Rational total(0);
  const auto own_dist = poisson_binomial(neighbor_probs);
  for (std::size_t k = 0; k < own_dist.size(); ++k) {
    if (own_dist[k].is_zero()) continue;
    total += own_dist[k] * game.externality[v].at(action + static_cast<int>(k));
  }

  // Altruism terms: u's count x_u + n_u includes v's fixed action plus
  // independent draws for u itself and u's other neighbors.
  Rational altruistic(0);
  for (PlayerId u : game.altruism.out_neighbors(v)) {
    std::vector<Rational> probs{mixed.invest_probability[u]};
    for (PlayerId w : game.graph.neighbors(u)) {
      if (w != v) probs.push_back(mixed.invest_probability[w]);
    }
    const auto dist = poisson_binomial(probs);
    for (std::size_t j = 0; j < dist.size(); ++j) {
      if (dist[j].is_zero()) continue;
      altruistic += dist[j] * game.externality[u].at(action + static_cast<int>(j));
    }
  }
  total += game.altruism_weight * altruistic;
  if (action == 1) total -= game.cost[v];
  return total;
}

EpsVerdict verify_eps_ne(const BNPGGame& game, const MixedProfile& mixed, const Rational& eps) {
  check_mixed(game, mixed);
  if (eps < Rational(0)) throw InputError("eps must be non-negative");
  for (PlayerId v = 0; v < game.player_count(); ++v) {
    const Rational& p = mixed.invest_probability[v];
    for (int supported = 0; supported <= 1; ++supported) {
      const bool in_support = supported == 1 ? p > Rational(0) : p < Rational(1);
      if (!in_support) continue;
      const Rational value = expected_utility(game, mixed, v, supported);
      for (int alt = 0; alt <= 1; ++alt) {
        if (value < expected_utility(game, mixed, v, alt) - eps) {
          return {false, EpsWitness{v, supported, alt}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

std::vector<std::string> validate_game(const BNPGGame& game) {
  std::vector<std::string> violations;
  if (game.altruism_weight < Rational(0)) {
    violations.push_back("altruism weight a is negative");
  }
  for (PlayerId v = 0; v < game.player_count(); ++v) {
    if (game.cost[v] < Rational(0)) {
      violations.push_back("cost of player " + std::to_string(v) + " is negative");
    }
    const auto& table = game.externality[v];
    if (table.max_index() < game.graph.degree(v) + 1) {
      violations.push_back("externality table of player " + std::to_string(v) +
                           " does not cover 0.." + std::to_string(game.graph.degree(v) + 1));
    }
    for (int x = 0; x < table.max_index(); ++x) {
      if (table.at(x + 1) < table.at(x)) {
        violations.push_back("externality table of player " + std::to_string(v) +
                             " decreases at index " + std::to_string(x + 1));
        break;
      }
    }
    if (table.at(0) < Rational(0)) {
      violations.push_back("externality table of player " + std::to_string(v) +
                           " has a negative value");
    }
  }
  for (const auto& e : game.altruism.edges()) {
    if (!game.graph.has_edge(e.a, e.b)) {
      violations.push_back("altruism edge (" + std::to_string(e.a) + ", " + std::to_string(e.b) +
                           ") joins players that are not graph-adjacent");
    }
  }
  return violations;
}

}  // namespace bnpg
