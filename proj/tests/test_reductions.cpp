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

#include <doctest.h>

#include "bnpg/gen.hpp"
#include "bnpg/oracle.hpp"
#include "bnpg/structured_solvers.hpp"
#include "testutil.hpp"

using namespace bnpg;
using testutil::make_game;

namespace {

KnapsackInstance decision_knapsack(std::vector<std::pair<int, int>> profit_weight, int threshold,
                                   std::int64_t capacity) {
  KnapsackInstance ks;
  for (auto [p, w] : profit_weight) ks.items.push_back({Rational(p), w});
  ks.threshold = Rational(threshold);
  ks.capacity = capacity;
  return ks;
}

bool decision_feasible(const KnapsackInstance& ks) {
  const std::size_t k = ks.items.size();
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    Rational profit(0);
    std::int64_t weight = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1) {
        profit += ks.items[i].profit;
        weight += ks.items[i].weight;
      }
    }
    if (profit >= ks.threshold && weight <= ks.capacity) return true;
  }
  return false;
}

// Assignment decoded from a SAT-gadget edit set: variable i is true when its
// positive literal player kept clear of the buffer edge.
bool decoded_assignment_satisfies(const SatInstance& sat, const EditSet& edits) {
  const int n = sat.variable_count;
  std::vector<bool> value(n, false);
  for (int i = 0; i < n; ++i) {
    const EdgePair z_buffer = normalized({3 * i, 3 * i + 2});
    bool blocked = false;
    for (const auto& e : edits.additions) {
      if (e == z_buffer) blocked = true;
    }
    value[i] = !blocked;
  }
  for (const auto& clause : sat.clauses) {
    bool satisfied = false;
    for (int lit : clause.literals) {
      const int var = (lit < 0 ? -lit : lit) - 1;
      if (lit > 0 ? value[var] : !value[var]) satisfied = true;
    }
    if (!satisfied) return false;
  }
  return true;
}

// Two-player heterogeneous instance with uniform cost 5: both players need
// the mutual altruism arcs, total cost 5.
ANMInstance mutual_need_instance(bool directed, std::int64_t budget) {
  auto game = make_game(2, {{0, 1}}, directed, {}, {{0, 3, 6}, {0, 4, 8}},
                        {Rational(5), Rational(5)}, Rational(1));
  StrategyProfile target;
  target.actions = {1, 1};
  std::map<EdgePair, std::int64_t> add_cost;
  if (directed) {
    add_cost[{0, 1}] = 2;
    add_cost[{1, 0}] = 3;
  } else {
    add_cost[{0, 1}] = 2;
  }
  return ANMInstance(std::move(game), std::move(target), std::move(add_cost), {}, budget);
}

}  // namespace

TEST_CASE("(3,B2) validation and brute satisfiability") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto sat = random_sat_3b2(seed, 3);
    CHECK(sat.validate().empty());
    CHECK(sat.clauses.size() == 4);
  }
  SatInstance broken = random_sat_3b2(1, 3);
  broken.clauses[0].literals[0] = -broken.clauses[0].literals[0];
  CHECK_FALSE(broken.validate().empty());

  SatInstance trivial;
  trivial.variable_count = 3;
  trivial.clauses = {{{1, 2, 3}}, {{-1, -2, -3}}, {{1, 2, 3}}, {{-1, -2, -3}}};
  CHECK(trivial.validate().empty());
  CHECK(brute_sat(trivial));
}

TEST_CASE("knapsack reduction to anm on a tree") {
  SUBCASE("structure") {
    const auto anm = knapsack_to_anm(decision_knapsack({{2, 1}, {3, 2}}, 4, 3),
                                     Symmetry::asymmetric);
    CHECK(anm.game.player_count() == 5);
    CHECK(anm.game.graph.edge_count() == 4);
    CHECK(circuit_rank(anm.game.graph) == 0);
    CHECK(validate_game(anm.game).empty());
    CHECK(anm.game.altruism.directed());
    CHECK(anm.add_cost.size() == 8);
    CHECK(*anm.budget == 3);
  }
  SUBCASE("feasible source gives a solvable image") {
    const auto ks = decision_knapsack({{2, 1}, {3, 2}}, 4, 3);
    REQUIRE(decision_feasible(ks));
    const auto asym = knapsack_to_anm(ks, Symmetry::asymmetric);
    CHECK(brute_anm(asym).has_value());
    CHECK(solve_anm_asymmetric(asym).has_value());
    const auto sym = knapsack_to_anm(ks, Symmetry::symmetric);
    CHECK(brute_anm(sym).has_value());
  }
  SUBCASE("unreachable threshold gives an unsolvable image") {
    const auto ks = decision_knapsack({{2, 1}, {3, 2}}, 6, 100);
    REQUIRE_FALSE(decision_feasible(ks));
    CHECK_FALSE(brute_anm(knapsack_to_anm(ks, Symmetry::asymmetric)).has_value());
    CHECK_FALSE(solve_anm_asymmetric(knapsack_to_anm(ks, Symmetry::asymmetric)).has_value());
    CHECK_FALSE(brute_anm(knapsack_to_anm(ks, Symmetry::symmetric)).has_value());
  }
  SUBCASE("ample capacity buys everything") {
    const auto ks = decision_knapsack({{2, 1}, {3, 2}}, 5, 3);
    CHECK(decision_feasible(ks));
    CHECK(solve_anm_asymmetric(knapsack_to_anm(ks, Symmetry::asymmetric)).has_value());
  }
}

TEST_CASE("sat reduction to anm") {
  SUBCASE("structure") {
    const auto sat = random_sat_3b2(7, 3);
    const auto anm = sat_to_anm(sat, SatAnmVariant::all_invest);
    CHECK(anm.game.player_count() == 3 * 3 + 4);
    CHECK(anm.game.graph.max_degree() <= 3);
    CHECK(anm.game.graph.edge_count() == 3 * 4 + 2 * 3);
    CHECK(validate_game(anm.game).empty());
    CHECK(*anm.budget == 3 * (2 + 7));
    const auto arbitrary = sat_to_anm(sat, SatAnmVariant::arbitrary_target);
    CHECK_FALSE(arbitrary.budget.has_value());
    CHECK(validate_game(arbitrary.game).empty());
  }
  SUBCASE("satisfiable formulas reduce to solvable instances, and solutions decode") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      const auto sat = random_sat_3b2(seed, 3);
      REQUIRE(brute_sat(sat));
      for (const auto variant : {SatAnmVariant::all_invest, SatAnmVariant::arbitrary_target}) {
        const auto anm = sat_to_anm(sat, variant);
        const auto edits = brute_anm(anm);
        REQUIRE(edits.has_value());
        CHECK(verify_psne(apply_edits(anm, *edits), anm.target).is_psne);
        CHECK(decoded_assignment_satisfies(sat, *edits));
      }
    }
  }
  SUBCASE("malformed input is rejected") {
    SatInstance bad;
    bad.variable_count = 2;
    bad.clauses = {{{1, 2, 1}}};
    CHECK_THROWS_AS(sat_to_anm(bad, SatAnmVariant::all_invest), InputError);
  }
}

TEST_CASE("directed public goods reduction") {
  DirectedPGG single_arc{2, {{0, 1}}, Rational(1, 2)};
  SUBCASE("structure") {
    const auto game = dpgg_to_bnpg(single_arc, Rational(1));
    CHECK(game.player_count() == 4);
    CHECK(game.graph.edge_count() == 3);
    CHECK(game.altruism.edges().size() == 2);
    CHECK_FALSE(game.altruism.directed());
    CHECK(validate_game(game).empty());
    CHECK_THROWS_AS(dpgg_to_bnpg(single_arc, Rational(0)), InputError);
  }
  SUBCASE("expensive price keeps everyone out") {
    DirectedPGG pricey{2, {{0, 1}}, Rational(2)};
    const auto game = dpgg_to_bnpg(pricey, Rational(1));
    StrategyProfile zeros;
    zeros.actions.assign(4, 0);
    CHECK(verify_psne(game, zeros).is_psne);
  }
  SUBCASE("cheap price makes the source invest") {
    const auto game = dpgg_to_bnpg(single_arc, Rational(1));
    const auto all = enumerate_psne(game);
    REQUIRE(all.size() == 1);
    // in players at 0, the source's out player invests, the sink's does not
    CHECK(all[0].actions == std::vector<std::uint8_t>{0, 1, 0, 0});
    MixedProfile as_mixed;
    for (auto a : all[0].actions) as_mixed.invest_probability.push_back(Rational(a));
    const auto mapped = map_mixed_back(as_mixed);
    StrategyProfile source_profile;
    for (const auto& p : mapped.invest_probability) {
      source_profile.actions.push_back(p.is_zero() ? 0 : 1);
    }
    CHECK(source_profile.actions == std::vector<std::uint8_t>{1, 0});
    CHECK(single_arc.is_pure_equilibrium(source_profile));
  }
  SUBCASE("mass on an in player cannot be mapped back") {
    MixedProfile bad{{Rational(1, 2), Rational(0), Rational(0), Rational(0)}};
    CHECK_THROWS_AS(map_mixed_back(bad), InputError);
  }
}

TEST_CASE("homogenization, lemma 1/2 shape") {
  SUBCASE("stitched table starts at c times x") {
    const auto result = homogenize(mutual_need_instance(true, 5));
    const auto& table = result.instance.game.externality.front();
    CHECK(table.at(0) == Rational(0));
    CHECK(table.at(1) == Rational(5));
    CHECK(table.at(2) == Rational(10));
    CHECK(result.instance.game.fully_homogeneous());
  }
  SUBCASE("padding sizes follow 2 + n(i-1)") {
    // Three players on a path, uniform cost.
    auto game = make_game(3, {{0, 1}, {1, 2}}, true, {}, {{0, 1, 2}, {0, 1, 2, 3}, {0, 1, 2}},
                          {Rational(1), Rational(1), Rational(1)}, Rational(1));
    StrategyProfile target;
    target.actions = {1, 1, 1};
    ANMInstance anm(std::move(game), std::move(target), {{{0, 1}, 1}}, {}, 4);
    const auto result = homogenize(anm);
    const auto& graph = result.instance.game.graph;
    CHECK(graph.player_count() == 3 + 2 + 5 + 8);
    // Hub degrees: original degree plus the private padding star.
    CHECK(graph.degree(0) == 1 + 2);
    CHECK(graph.degree(1) == 2 + 5);
    CHECK(graph.degree(2) == 1 + 8);
    CHECK(result.instance.game.fully_homogeneous());
    CHECK(validate_game(result.instance.game).empty());
  }
  SUBCASE("solvability is preserved in both directions, directed") {
    for (const std::int64_t budget : {5, 4}) {
      const auto original = mutual_need_instance(true, budget);
      const auto image = homogenize(original).instance;
      const auto original_solution = brute_anm(original);
      const auto image_solution = brute_anm(image);
      CHECK(original_solution.has_value() == image_solution.has_value());
      if (original_solution) {
        CHECK(original_solution->total_cost == image_solution->total_cost);
      }
    }
  }
  SUBCASE("already fully homogeneous input is preserved too") {
    for (const std::int64_t budget : {3, 0}) {
      auto game = make_game(2, {{0, 1}}, true, {}, {{0, 3, 6}, {0, 3, 6}},
                            {Rational(5), Rational(5)}, Rational(1));
      StrategyProfile target;
      target.actions = {1, 1};
      ANMInstance original(std::move(game), std::move(target),
                           {{{0, 1}, 2}, {{1, 0}, 1}}, {}, budget);
      REQUIRE(original.game.fully_homogeneous());
      const auto image = homogenize(original).instance;
      CHECK(brute_anm(original).has_value() == brute_anm(image).has_value());
    }
  }
  SUBCASE("solvability is preserved, symmetric") {
    for (const std::int64_t budget : {2, 1}) {
      const auto original = mutual_need_instance(false, budget);
      const auto image = homogenize(original).instance;
      CHECK(brute_anm(original).has_value() == brute_anm(image).has_value());
    }
  }
  SUBCASE("edit maps carry solutions across") {
    const auto original = mutual_need_instance(true, 5);
    const auto result = homogenize(original);
    const auto image_solution = brute_anm(result.instance);
    REQUIRE(image_solution.has_value());
    const auto back = result.map_backward(*image_solution);
    CHECK(verify_psne(apply_edits(original, back), original.target).is_psne);
    const auto original_solution = brute_anm(original);
    const auto forward = result.map_forward(*original_solution);
    CHECK(verify_psne(apply_edits(result.instance, forward), result.instance.target).is_psne);
  }
  SUBCASE("non-uniform costs are rejected") {
    auto game = make_game(2, {{0, 1}}, true, {}, {{0, 1, 2}, {0, 1, 2}},
                          {Rational(1), Rational(2)}, Rational(1));
    StrategyProfile target;
    target.actions = {1, 1};
    ANMInstance anm(std::move(game), std::move(target), {}, {}, 1);
    CHECK_THROWS_AS(homogenize(anm), InputError);
  }
}

TEST_CASE("homogenization, lemma 3 shape") {
  const auto sat = random_sat_3b2(5, 3);
  const auto original = sat_to_anm(sat, SatAnmVariant::arbitrary_target);
  const auto result = homogenize_bounded_degree(original);
  const auto& image = result.instance;
  SUBCASE("degree bound and full homogeneity") {
    CHECK(image.game.graph.max_degree() <= 13);
    CHECK(image.game.fully_homogeneous());
    CHECK(validate_game(image.game).empty());
    // Padding stars per externality type (order of first appearance):
    // literal players get 2 leaves, buffer players 6, clause players 10.
    CHECK(image.game.graph.degree(0) == original.game.graph.degree(0) + 2);
    CHECK(image.game.graph.degree(2) == original.game.graph.degree(2) + 6);
    CHECK(image.game.graph.degree(9) == original.game.graph.degree(9) + 10);
    int added = 0;
    for (int v = 0; v < original.game.player_count(); ++v) {
      added += image.game.graph.degree(v) - original.game.graph.degree(v);
    }
    CHECK(added == 6 * 2 + 3 * 6 + 4 * 10);
  }
  SUBCASE("solvability is preserved through the degree-13 image") {
    REQUIRE(brute_sat(sat));
    const auto original_solution = brute_anm(original);
    const auto image_solution = brute_anm(image);
    REQUIRE(original_solution.has_value());
    CHECK(image_solution.has_value());
    CHECK(verify_psne(apply_edits(image, *image_solution), image.target).is_psne);
  }
  SUBCASE("directed altruism is rejected") {
    CHECK_THROWS_AS(homogenize_bounded_degree(mutual_need_instance(true, 5)), InputError);
  }
  SUBCASE("degree above three is rejected") {
    CHECK_THROWS_AS(homogenize_bounded_degree(knapsack_to_anm(
                        decision_knapsack({{1, 1}, {1, 1}, {1, 1}, {1, 1}}, 2, 4),
                        Symmetry::symmetric)),
                    InputError);
  }
}
