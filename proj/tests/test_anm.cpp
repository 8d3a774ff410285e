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

#include <doctest.h>

#include "bnpg/gen.hpp"
#include "bnpg/oracle.hpp"
#include "testutil.hpp"

using namespace bnpg;
using testutil::make_game;

namespace {

ANMInstance micro_gadget(std::int64_t budget) {
  auto game = make_game(2, {{0, 1}}, true, {}, {{0, 0, 0}, {0, 2, 4}}, {Rational(1), Rational(1)},
                        Rational(1));
  StrategyProfile target;
  target.actions = {1, 1};
  return ANMInstance(std::move(game), std::move(target), {{{0, 1}, 3}}, {}, budget);
}

// Star whose center must stop being over-incentivized: the center plays 0 in
// the target but its two existing altruism out-edges push it to invest.
ANMInstance overloaded_star() {
  auto game = make_game(3, {{0, 1}, {0, 2}}, true, {{0, 1}, {0, 2}},
                        {{0, 1, 2, 3}, {0, 2, 4}, {0, 2, 4}},
                        {Rational(2), Rational(1), Rational(1)}, Rational(1));
  StrategyProfile target;
  target.actions = {0, 1, 1};
  return ANMInstance(std::move(game), std::move(target), {},
                     {{{0, 1}, 1}, {{0, 2}, 1}}, std::nullopt);
}

}  // namespace

TEST_CASE("per-player decomposition") {
  SUBCASE("an equilibrium target decomposes into nothing") {
    auto game = make_game(2, {{0, 1}}, true, {}, {{0, 2, 4}, {0, 2, 4}},
                          {Rational(1), Rational(1)}, Rational(1));
    StrategyProfile target;
    target.actions = {1, 1};
    ANMInstance anm(std::move(game), std::move(target), {{{0, 1}, 5}}, {}, 10);
    CHECK(decompose_anm_asymmetric(anm).empty());
  }
  SUBCASE("micro gadget: one raise knapsack with one item") {
    const auto knapsacks = decompose_anm_asymmetric(micro_gadget(3));
    REQUIRE(knapsacks.size() == 1);
    const auto& pk = knapsacks.front();
    CHECK(pk.owner == 0);
    CHECK(pk.mode == PlayerKnapsack::Mode::raise);
    CHECK(pk.threshold == Rational(1));
    REQUIRE(pk.items.size() == 1);
    CHECK(pk.edges.front() == EdgePair{0, 1});
    CHECK(pk.items.front().profit == Rational(2));
    CHECK(pk.items.front().weight == 3);
  }
  SUBCASE("over-incentivized center: one lower knapsack with two items") {
    const auto knapsacks = decompose_anm_asymmetric(overloaded_star());
    REQUIRE(knapsacks.size() == 1);
    const auto& pk = knapsacks.front();
    CHECK(pk.owner == 0);
    CHECK(pk.mode == PlayerKnapsack::Mode::lower);
    // Own marginal 1 plus two altruism terms of 2 each, against cost 2.
    CHECK(pk.threshold == Rational(3));
    CHECK(pk.items.size() == 2);
  }
  SUBCASE("undirected altruism is rejected") {
    auto game = make_game(2, {{0, 1}}, false, {}, {{0, 1, 2}, {0, 1, 2}},
                          {Rational(1), Rational(1)}, Rational(1));
    StrategyProfile target;
    target.actions = {1, 1};
    ANMInstance anm(std::move(game), std::move(target), {{{0, 1}, 1}}, {}, 5);
    CHECK_THROWS_AS(decompose_anm_asymmetric(anm), InputError);
  }
}

TEST_CASE("asymmetric anm solver") {
  SUBCASE("micro gadget within and beyond budget") {
    const auto solved = solve_anm_asymmetric(micro_gadget(3));
    REQUIRE(solved.has_value());
    CHECK(solved->total_cost == 3);
    CHECK(solved->additions == std::vector<EdgePair>{{0, 1}});
    CHECK_FALSE(solve_anm_asymmetric(micro_gadget(2)).has_value());
  }
  SUBCASE("equilibrium target needs nothing even with budget zero") {
    auto game = make_game(2, {{0, 1}}, true, {}, {{0, 2, 4}, {0, 2, 4}},
                          {Rational(1), Rational(1)}, Rational(1));
    StrategyProfile target;
    target.actions = {1, 1};
    ANMInstance anm(std::move(game), std::move(target), {{{0, 1}, 5}}, {}, 0);
    const auto solved = solve_anm_asymmetric(anm);
    REQUIRE(solved.has_value());
    CHECK(solved->empty());
  }
  SUBCASE("deletions fix the overloaded center") {
    const auto solved = solve_anm_asymmetric(overloaded_star());
    REQUIRE(solved.has_value());
    CHECK(solved->deletions.size() == 2);
    CHECK(verify_psne(apply_edits(overloaded_star(), *solved), overloaded_star().target).is_psne);
  }
  SUBCASE("a player with no candidates and a deficit is infeasible") {
    auto game = make_game(2, {{0, 1}}, true, {}, {{0, 0, 0}, {0, 2, 4}},
                          {Rational(1), Rational(1)}, Rational(1));
    StrategyProfile target;
    target.actions = {1, 1};
    ANMInstance anm(std::move(game), std::move(target), {}, {}, std::nullopt);
    CHECK_FALSE(solve_anm_asymmetric(anm).has_value());
  }
  SUBCASE("matches the brute oracle on random instances") {
    int compared = 0;
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
      const auto base = random_tree_game(seed, 2 + static_cast<int>(seed % 6));
      AnmGenOptions opts;
      opts.max_candidates = 12;
      const auto anm = random_anm(seed * 19 + 5, base, opts);
      const auto brute = brute_anm(anm);
      const auto fast = solve_anm_asymmetric(anm);
      CHECK(brute.has_value() == fast.has_value());
      if (brute && fast) {
        ++compared;
        CHECK(brute->total_cost == fast->total_cost);
        CHECK(verify_psne(apply_edits(anm, *fast), anm.target).is_psne);
        if (anm.budget) CHECK(fast->total_cost <= *anm.budget);
      }
    }
    CHECK(compared > 10);
  }
}

TEST_CASE("out-edge edits only move their owner under asymmetric altruism") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto base = random_tree_game(seed, 6);
    const auto anm = random_anm(seed * 7 + 3, base);
    const auto& game = anm.game;
    Rng rng(seed * 1001);
    StrategyProfile profile;
    for (int v = 0; v < game.player_count(); ++v) {
      profile.actions.push_back(static_cast<std::uint8_t>(rng.below(2)));
    }
    const auto flip_one = [&](const EdgePair& edge, bool addition) {
      EditSet single;
      (addition ? single.additions : single.deletions).push_back(edge);
      const BNPGGame edited = apply_edits(anm, single);
      for (PlayerId u = 0; u < game.player_count(); ++u) {
        if (u == edge.a) continue;
        CHECK(is_stable(game, profile, u) == is_stable(edited, profile, u));
      }
    };
    for (const auto& [edge, cost] : anm.add_cost) flip_one(edge, true);
    for (const auto& [edge, cost] : anm.delete_cost) flip_one(edge, false);
  }
}
