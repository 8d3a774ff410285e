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

#include "bnpg/reductions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "bnpg/errors.hpp"

namespace bnpg {

std::vector<std::string> SatInstance::validate() const {
  std::vector<std::string> problems;
  const int n = variable_count;
  const int m = static_cast<int>(clauses.size());
  if (n <= 0) problems.push_back("variable count must be positive");
  if (4 * n != 3 * m) {
    problems.push_back("occurrence balance forces 4n = 3m, got n = " + std::to_string(n) +
                       ", m = " + std::to_string(m));
  }
  std::vector<int> positive(n + 1, 0);
  std::vector<int> negative(n + 1, 0);
  for (std::size_t j = 0; j < clauses.size(); ++j) {
    const auto& lits = clauses[j].literals;
    std::set<int> vars;
    for (int lit : lits) {
      const int var = lit < 0 ? -lit : lit;
      if (lit == 0 || var > n) {
        problems.push_back("clause " + std::to_string(j) + " has an invalid literal " +
                           std::to_string(lit));
        continue;
      }
      vars.insert(var);
      ++(lit > 0 ? positive : negative)[var];
    }
    if (vars.size() != 3) {
      problems.push_back("clause " + std::to_string(j) + " must use three distinct variables");
    }
  }
  for (int v = 1; v <= n; ++v) {
    if (positive[v] != 2 || negative[v] != 2) {
      problems.push_back("variable " + std::to_string(v) + " occurs " +
                         std::to_string(positive[v]) + "+ / " + std::to_string(negative[v]) +
                         "- times, need exactly 2 / 2");
    }
  }
  return problems;
}

bool brute_sat(const SatInstance& sat) {
  if (sat.variable_count > 20) {
    throw GuardError("brute SAT guarded at 20 variables, got " +
                     std::to_string(sat.variable_count));
  }
  const std::uint32_t limit = std::uint32_t(1) << sat.variable_count;
  for (std::uint32_t assignment = 0; assignment < limit; ++assignment) {
    bool all = true;
    for (const auto& clause : sat.clauses) {
      bool any = false;
      for (int lit : clause.literals) {
        const int var = lit < 0 ? -lit : lit;
        const bool value = assignment >> (var - 1) & 1;
        if (lit > 0 ? value : !value) {
          any = true;
          break;
        }
      }
      if (!any) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

Rational DirectedPGG::utility(const StrategyProfile& profile, PlayerId v) const {
  int in_count = 0;
  for (const auto& arc : arcs) {
    if (arc.b == v && profile.actions[arc.a] == 1) ++in_count;
  }
  const int total = profile.actions[v] + in_count;
  Rational value = total > 0 ? Rational(1) : Rational(0);
  if (profile.actions[v] == 1) value -= price;
  return value;
}

bool DirectedPGG::is_pure_equilibrium(const StrategyProfile& profile) const {
  for (PlayerId v = 0; v < node_count; ++v) {
    StrategyProfile flipped = profile;
    flipped.actions[v] ^= 1;
    if (utility(profile, v) < utility(flipped, v)) return false;
  }
  return true;
}

BNPGGame dpgg_to_bnpg(const DirectedPGG& dpgg, const Rational& eps) {
  if (!(eps > Rational(0))) throw InputError("eps must be positive");
  const int n = dpgg.node_count;
  if (n <= 0) throw InputError("directed public goods game needs players");

  const auto in_id = [](PlayerId v) { return 2 * v; };
  const auto out_id = [](PlayerId v) { return 2 * v + 1; };

  std::vector<EdgePair> edges;
  std::vector<EdgePair> altruism_edges;
  for (PlayerId v = 0; v < n; ++v) {
    edges.push_back(normalized({in_id(v), out_id(v)}));
    altruism_edges.push_back(normalized({in_id(v), out_id(v)}));
  }
  for (const auto& arc : dpgg.arcs) {
    if (arc.a < 0 || arc.a >= n || arc.b < 0 || arc.b >= n || arc.a == arc.b) {
      throw InputError("invalid arc in directed public goods game");
    }
    edges.push_back(normalized({out_id(arc.a), in_id(arc.b)}));
  }

  InputGraph graph(2 * n, std::move(edges));
  std::vector<ExternalityTable> tables;
  std::vector<Rational> costs;
  for (PlayerId p = 0; p < 2 * n; ++p) {
    const int length = graph.degree(p) + 2;
    std::vector<Rational> values(length);
    if (p % 2 == 0) {
      for (int x = 1; x < length; ++x) values[x] = Rational(1);  // step reward
      costs.push_back(Rational(1) + Rational(2) * eps);
    } else {
      costs.push_back(dpgg.price);  // zero externality, pays the price
    }
    tables.push_back(ExternalityTable(std::move(values)));
  }
  return BNPGGame(std::move(graph), AltruismNetwork(false, 2 * n, std::move(altruism_edges)),
                  std::move(tables), std::move(costs), Rational(1));
}

MixedProfile map_mixed_back(const MixedProfile& constructed) {
  if (constructed.size() % 2 != 0) {
    throw InputError("constructed-game profile must cover in/out player pairs");
  }
  MixedProfile mapped;
  for (int i = 0; 2 * i < constructed.size(); ++i) {
    if (!constructed.invest_probability[2 * i].is_zero()) {
      throw InputError("profile puts mass on an in-player; it cannot arise from an "
                       "equilibrium of the constructed game");
    }
    mapped.invest_probability.push_back(constructed.invest_probability[2 * i + 1]);
  }
  return mapped;
}

ANMInstance knapsack_to_anm(const KnapsackInstance& ks, Symmetry symmetry) {
  const int n = static_cast<int>(ks.items.size());
  if (n <= 0) throw InputError("knapsack reduction needs items");
  if (ks.threshold < Rational(0)) {
    throw InputError("knapsack reduction needs a non-negative profit threshold");
  }
  for (const auto& item : ks.items) {
    if (item.weight < 0 || item.profit < Rational(0)) {
      throw InputError("knapsack reduction needs non-negative items");
    }
  }

  // Players: items 0..n-1, boosters n..2n-1, hub 2n.
  const int hub = 2 * n;
  std::vector<EdgePair> edges;
  for (int i = 0; i < n; ++i) {
    edges.push_back(normalized({i, n + i}));
    edges.push_back(normalized({i, hub}));
  }
  InputGraph graph(2 * n + 1, std::move(edges));

  const Rational& p_threshold = ks.threshold;
  std::vector<ExternalityTable> tables;
  std::vector<Rational> costs(2 * n + 1, p_threshold);
  for (int v = 0; v < 2 * n + 1; ++v) {
    const int length = graph.degree(v) + 2;
    std::vector<Rational> values(length);
    Rational slope(0);
    if (v < n) {
      slope = ks.items[v].profit;
    } else if (v < hub) {
      slope = p_threshold;
    }
    for (int x = 1; x < length; ++x) values[x] = values[x - 1] + slope;
    tables.push_back(ExternalityTable(std::move(values)));
  }

  StrategyProfile target;
  target.actions.assign(2 * n + 1, 1);

  const bool directed = symmetry == Symmetry::asymmetric;
  AltruismNetwork altruism(directed, 2 * n + 1, {});
  std::map<EdgePair, std::int64_t> add_cost;
  if (directed) {
    for (int i = 0; i < n; ++i) {
      add_cost[{hub, i}] = ks.items[i].weight;
      add_cost[{i, hub}] = 0;
      add_cost[{i, n + i}] = 0;
      add_cost[{n + i, i}] = 0;
    }
  } else {
    for (int i = 0; i < n; ++i) {
      add_cost[normalized({hub, i})] = ks.items[i].weight;
      add_cost[normalized({i, n + i})] = 0;
    }
  }

  return ANMInstance(BNPGGame(std::move(graph), std::move(altruism), std::move(tables),
                              std::move(costs), Rational(1)),
                     std::move(target), std::move(add_cost), {}, ks.capacity);
}

ANMInstance sat_to_anm(const SatInstance& sat, SatAnmVariant variant) {
  const auto problems = sat.validate();
  if (!problems.empty()) throw InputError("malformed (3,B2) formula: " + problems.front());

  const int n = sat.variable_count;
  const int m = static_cast<int>(sat.clauses.size());
  // Players: per variable i the literal players z_i, zbar_i and the buffer
  // b_i at 3i, 3i+1, 3i+2; clause players y_j at 3n + j.
  const auto z_id = [](int i) { return 3 * i; };
  const auto zbar_id = [](int i) { return 3 * i + 1; };
  const auto b_id = [](int i) { return 3 * i + 2; };
  const auto y_id = [n](int j) { return 3 * n + j; };
  const auto literal_vertex = [&](int lit) {
    const int var = lit < 0 ? -lit : lit;
    return lit > 0 ? z_id(var - 1) : zbar_id(var - 1);
  };

  std::vector<EdgePair> edges;
  std::vector<EdgePair> clause_edges;
  std::vector<EdgePair> buffer_edges;
  for (int i = 0; i < n; ++i) {
    buffer_edges.push_back(normalized({z_id(i), b_id(i)}));
    buffer_edges.push_back(normalized({b_id(i), zbar_id(i)}));
  }
  for (int j = 0; j < m; ++j) {
    for (int lit : sat.clauses[j].literals) {
      clause_edges.push_back(normalized({y_id(j), literal_vertex(lit)}));
    }
  }
  edges = buffer_edges;
  edges.insert(edges.end(), clause_edges.begin(), clause_edges.end());

  const int players = 3 * n + m;
  InputGraph graph(players, std::move(edges));
  if (graph.max_degree() > 3) {
    throw std::logic_error("SAT gadget graph must have maximum degree 3");
  }

  const bool all_invest = variant == SatAnmVariant::all_invest;
  const Rational a = all_invest ? Rational(1, 2) : Rational(2);
  const Rational cost_value = all_invest ? Rational(315) : Rational(15);
  const Rational slope_y = all_invest ? Rational(220) : Rational(1);
  const Rational slope_z = all_invest ? Rational(200) : Rational(10);
  const Rational slope_b = all_invest ? Rational(240) : Rational(2);

  std::vector<ExternalityTable> tables;
  std::vector<Rational> costs(players, cost_value);
  for (int v = 0; v < players; ++v) {
    Rational slope = slope_y;
    if (v < 3 * n) slope = v % 3 == 2 ? slope_b : slope_z;
    const int length = graph.degree(v) + 2;
    std::vector<Rational> values(length);
    for (int x = 1; x < length; ++x) values[x] = values[x - 1] + slope;
    tables.push_back(ExternalityTable(std::move(values)));
  }

  StrategyProfile target;
  if (all_invest) {
    target.actions.assign(players, 1);
  } else {
    target.actions.assign(players, 1);
    for (int i = 0; i < n; ++i) {
      target.actions[z_id(i)] = 0;
      target.actions[zbar_id(i)] = 0;
    }
  }

  std::map<EdgePair, std::int64_t> add_cost;
  std::optional<std::int64_t> budget;
  if (all_invest) {
    const std::int64_t buffer_cost = 2 * n + 1;
    for (const auto& e : clause_edges) add_cost[e] = 1;
    for (const auto& e : buffer_edges) add_cost[e] = buffer_cost;
    budget = static_cast<std::int64_t>(n) * (2 + buffer_cost);
  } else {
    for (const auto& e : clause_edges) add_cost[e] = 0;
    for (const auto& e : buffer_edges) add_cost[e] = 0;
    budget = std::nullopt;  // infinite
  }

  return ANMInstance(BNPGGame(std::move(graph), AltruismNetwork(false, players, {}),
                              std::move(tables), std::move(costs), a),
                     std::move(target), std::move(add_cost), {}, budget);
}

namespace {

Rational uniform_cost(const ANMInstance& anm) {
  const auto& cost = anm.game.cost;
  for (const auto& c : cost) {
    if (c != cost.front()) {
      throw InputError("homogenization needs a uniform investing cost");
    }
  }
  return cost.front();
}

// Shared scaffolding of the two homogenization lemmas. Hubs keep the original
// player ids; each hub gains a private star of `padding[v]` always-investing
// leaves; all players share the stitched table built from the block tables,
// which must satisfy
//   stitched_marginal(padding[v] + t) = marginal(g_v, t)
// for every evaluated offset t, i.e. padding[v] = 2 + block_size * block(v).
ANMInstance homogenize_common(const ANMInstance& anm, const std::vector<int>& padding,
                              int block_size,
                              const std::vector<const ExternalityTable*>& block_tables) {
  const Rational c = uniform_cost(anm);
  const BNPGGame& game = anm.game;
  const int n = game.player_count();
  const bool directed = game.altruism.directed();

  int players = n;
  std::vector<int> pad_start(n);
  for (int v = 0; v < n; ++v) {
    pad_start[v] = players;
    players += padding[v];
  }

  std::vector<EdgePair> edges = game.graph.edges();
  for (int v = 0; v < n; ++v) {
    for (int j = 0; j < padding[v]; ++j) edges.push_back(normalized({v, pad_start[v] + j}));
  }
  InputGraph graph(players, std::move(edges));

  // Stitched table: c*x on {0,1,2}, then per-position marginals taken from
  // the block owner's table (zero where the owner's table ends; those
  // positions are never evaluated).
  int needed = 2;
  for (int v = 0; v < players; ++v) needed = std::max(needed, graph.degree(v) + 1);
  std::vector<Rational> stitched(needed + 1);
  for (int x = 0; x <= std::min(needed, 2); ++x) stitched[x] = c * Rational(x);
  for (int x = 3; x <= needed; ++x) {
    const int position = x - 1;
    const int block = (position - 2) / block_size;
    const int offset = (position - 2) % block_size;
    Rational delta(0);
    if (block < static_cast<int>(block_tables.size()) &&
        offset < block_tables[block]->max_index()) {
      delta = block_tables[block]->marginal(offset);
    }
    stitched[x] = stitched[x - 1] + delta;
  }
  ExternalityTable shared(std::move(stitched));

  std::vector<ExternalityTable> tables(players, shared);
  std::vector<Rational> costs(players, c);

  StrategyProfile target;
  target.actions.assign(players, 1);
  for (int v = 0; v < n; ++v) target.actions[v] = anm.target.actions[v];

  AltruismNetwork altruism(directed, players, game.altruism.edges());

  std::map<EdgePair, std::int64_t> add_cost;
  for (const auto& [edge, cost] : anm.add_cost) add_cost[edge] = cost;
  std::map<EdgePair, std::int64_t> delete_cost;
  for (const auto& [edge, cost] : anm.delete_cost) delete_cost[edge] = cost;

  // Every other permitted pair is forbidden via the budget+1 sentinel; with
  // an infinite budget the sentinel means nothing and the pairs are omitted.
  if (anm.budget) {
    const std::int64_t sentinel = *anm.budget + 1;
    const auto consider = [&](const EdgePair& e) {
      if (!altruism.has_edge(e) && add_cost.find(e) == add_cost.end()) add_cost[e] = sentinel;
    };
    for (const auto& e : graph.edges()) {
      if (directed) {
        consider({e.a, e.b});
        consider({e.b, e.a});
      } else {
        consider(e);
      }
    }
  }

  return ANMInstance(BNPGGame(std::move(graph), std::move(altruism), std::move(tables),
                              std::move(costs), game.altruism_weight),
                     std::move(target), std::move(add_cost), std::move(delete_cost), anm.budget);
}

EditSet restrict_to_hubs(const EditSet& edits, int hub_count, const char* direction) {
  EditSet mapped = edits;
  for (const auto& e : edits.additions) {
    if (e.a >= hub_count || e.b >= hub_count) {
      throw InputError(std::string("edit set does not ") + direction +
                       ": it touches a padding player");
    }
  }
  for (const auto& e : edits.deletions) {
    if (e.a >= hub_count || e.b >= hub_count) {
      throw InputError(std::string("edit set does not ") + direction +
                       ": it touches a padding player");
    }
  }
  return mapped;
}

}  // namespace

EditSet HomogenizeResult::map_forward(const EditSet& original) const {
  return restrict_to_hubs(original, original_players, "map forward");
}

EditSet HomogenizeResult::map_backward(const EditSet& homogenized) const {
  return restrict_to_hubs(homogenized, original_players, "map backward");
}

HomogenizeResult homogenize(const ANMInstance& anm) {
  const int n = anm.game.player_count();
  std::vector<int> padding(n);
  std::vector<const ExternalityTable*> block_tables(n);
  for (int v = 0; v < n; ++v) {
    padding[v] = 2 + n * v;
    block_tables[v] = &anm.game.externality[v];
  }
  return {homogenize_common(anm, padding, n, block_tables), n};
}

HomogenizeResult homogenize_bounded_degree(const ANMInstance& anm) {
  const BNPGGame& game = anm.game;
  if (game.altruism.directed()) {
    throw InputError("the degree-13 homogenization is defined for symmetric altruism");
  }
  if (game.graph.max_degree() > 3) {
    throw InputError("the degree-13 homogenization needs maximum degree 3");
  }
  const int n = game.player_count();

  // Externality types in order of first appearance.
  std::vector<const ExternalityTable*> types;
  std::vector<int> type_of(n);
  for (int v = 0; v < n; ++v) {
    int t = -1;
    for (std::size_t i = 0; i < types.size(); ++i) {
      if (*types[i] == game.externality[v]) {
        t = static_cast<int>(i);
        break;
      }
    }
    if (t < 0) {
      t = static_cast<int>(types.size());
      types.push_back(&game.externality[v]);
    }
    type_of[v] = t;
  }
  if (types.size() > 3) {
    throw InputError("the degree-13 homogenization needs at most three externality types");
  }

  std::vector<int> padding(n);
  for (int v = 0; v < n; ++v) padding[v] = 2 + 4 * type_of[v];
  return {homogenize_common(anm, padding, 4, types), n};
}

}  // namespace bnpg
