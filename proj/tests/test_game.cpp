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

#include <doctest.h>

#include "bnpg/gen.hpp"
#include "testutil.hpp"

using namespace bnpg;
using testutil::make_game;

namespace {

StrategyProfile profile_of(std::vector<int> bits) {
  StrategyProfile p;
  for (int b : bits) p.actions.push_back(static_cast<std::uint8_t>(b));
  return p;
}

// The anti-coordination pair on one edge: player 0 wants to invest alone,
// player 1 only alongside; no pure equilibrium exists.
BNPGGame anti_coordination_pair(bool as_clique_edge = true) {
  (void)as_clique_edge;
  return make_game(2, {{0, 1}}, true, {}, {{0, 1, 1}, {0, 0, 1}},
                   {Rational(1, 2), Rational(1, 2)}, Rational(0));
}

}  // namespace

TEST_CASE("marginal gain") {
  ExternalityTable linear({Rational(0), Rational(1), Rational(2)});
  CHECK(marginal(linear, 0) == Rational(1));
  ExternalityTable steep({Rational(0), Rational(5), Rational(10)});
  CHECK(marginal(steep, 1) == Rational(5));
  ExternalityTable best_shot({Rational(0), Rational(1), Rational(1)});
  CHECK(marginal(best_shot, 1) == Rational(0));
  CHECK_THROWS_AS(marginal(linear, 2), RangeError);
  CHECK_THROWS_AS(marginal(linear, -1), RangeError);
}

TEST_CASE("utility") {
  SUBCASE("isolated investor") {
    const auto game = make_game(1, {}, true, {}, {{0, 2}}, {Rational(1)}, Rational(0));
    CHECK(utility(game, profile_of({1}), 0) == Rational(1));
  }
  SUBCASE("altruism term") {
    const auto game = make_game(2, {{0, 1}}, true, {{0, 1}}, {{0, 1, 2}, {0, 1, 2}},
                                {Rational(1), Rational(1)}, Rational(1));
    CHECK(utility(game, profile_of({1, 1}), 0) == Rational(3));
    const auto selfish = make_game(2, {{0, 1}}, true, {{0, 1}}, {{0, 1, 2}, {0, 1, 2}},
                                   {Rational(1), Rational(1)}, Rational(0));
    CHECK(utility(selfish, profile_of({1, 1}), 0) == Rational(1));
  }
}

TEST_CASE("stability") {
  const auto lone = make_game(1, {}, true, {}, {{0, 2}}, {Rational(1)}, Rational(0));
  CHECK(is_stable(lone, profile_of({1}), 0));
  CHECK_FALSE(is_stable(lone, profile_of({0}), 0));

  const auto plateau = make_game(2, {{0, 1}}, true, {}, {{0, 1, 1}, {0, 1, 1}},
                                 {Rational(1, 2), Rational(1, 2)}, Rational(0));
  CHECK_FALSE(is_stable(plateau, profile_of({1, 1}), 0));
}

TEST_CASE("stability equals the utility comparison against the flip") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const auto game = random_tree_game(seed, 6);
    const int n = game.player_count();
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
      StrategyProfile profile;
      for (int v = 0; v < n; ++v) {
        profile.actions.push_back(static_cast<std::uint8_t>(mask >> v & 1));
      }
      for (PlayerId v = 0; v < n; ++v) {
        StrategyProfile flipped = profile;
        flipped.actions[v] ^= 1;
        const bool expected = utility(game, profile, v) >= utility(game, flipped, v);
        CHECK(is_stable(game, profile, v) == expected);
      }
    }
  }
}

TEST_CASE("psne verdicts") {
  SUBCASE("universal indifference") {
    const auto game =
        make_game(2, {}, true, {}, {{0, 0}, {0, 0}}, {Rational(0), Rational(0)}, Rational(0));
    for (auto bits : {std::vector<int>{0, 0}, {0, 1}, {1, 0}, {1, 1}}) {
      CHECK(verify_psne(game, profile_of(bits)).is_psne);
    }
  }
  SUBCASE("no equilibrium in the anti-coordination pair") {
    const auto game = anti_coordination_pair();
    for (auto bits : {std::vector<int>{0, 0}, {0, 1}, {1, 0}, {1, 1}}) {
      const auto verdict = verify_psne(game, profile_of(bits));
      CHECK_FALSE(verdict.is_psne);
      REQUIRE(verdict.deviator.has_value());
      CHECK_FALSE(is_stable(game, profile_of(bits), *verdict.deviator));
      for (PlayerId v = 0; v < *verdict.deviator; ++v) {
        CHECK(is_stable(game, profile_of(bits), v));
      }
    }
  }
  SUBCASE("mutual altruism sustains investment") {
    const auto game = make_game(2, {{0, 1}}, false, {{0, 1}}, {{0, 1, 2}, {0, 1, 2}},
                                {Rational(3, 2), Rational(3, 2)}, Rational(1));
    CHECK(verify_psne(game, profile_of({1, 1})).is_psne);
  }
}

TEST_CASE("scaling all payoffs leaves verdicts unchanged") {
  const Rational factor(3, 2);
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const auto game = random_tree_game(seed, 6);
    std::vector<ExternalityTable> scaled_tables;
    for (const auto& table : game.externality) {
      std::vector<Rational> values;
      for (const auto& v : table.values()) values.push_back(v * factor);
      scaled_tables.push_back(ExternalityTable(std::move(values)));
    }
    std::vector<Rational> scaled_costs;
    for (const auto& c : game.cost) scaled_costs.push_back(c * factor);
    const BNPGGame scaled(game.graph, game.altruism, std::move(scaled_tables),
                          std::move(scaled_costs), game.altruism_weight);
    const int n = game.player_count();
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
      StrategyProfile profile;
      for (int v = 0; v < n; ++v) {
        profile.actions.push_back(static_cast<std::uint8_t>(mask >> v & 1));
      }
      CHECK(verify_psne(game, profile).is_psne == verify_psne(scaled, profile).is_psne);
    }
  }
}

TEST_CASE("zero altruism weight ignores the altruism network") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    GameGenOptions opts;
    opts.altruism_percent = 80;
    auto game = random_tree_game(seed, 6, 0, opts);
    const BNPGGame muted(game.graph, game.altruism, game.externality, game.cost, Rational(0));
    const BNPGGame stripped(game.graph,
                            AltruismNetwork(game.altruism.directed(), game.player_count(), {}),
                            game.externality, game.cost, Rational(0));
    StrategyProfile profile;
    Rng rng(seed);
    for (int v = 0; v < game.player_count(); ++v) {
      profile.actions.push_back(static_cast<std::uint8_t>(rng.below(2)));
    }
    for (PlayerId v = 0; v < game.player_count(); ++v) {
      CHECK(utility(muted, profile, v) == utility(stripped, profile, v));
    }
  }
}

TEST_CASE("expected utility") {
  SUBCASE("linear table, two coin-flip neighbors") {
    const auto game = make_game(3, {{0, 1}, {0, 2}}, true, {}, {{0, 1, 2, 3}, {0, 1}, {0, 1}},
                                {Rational(0), Rational(0), Rational(0)}, Rational(0));
    MixedProfile mixed{{Rational(1, 2), Rational(1, 2), Rational(1, 2)}};
    CHECK(expected_utility(game, mixed, 0, 0) == Rational(1));
  }
  SUBCASE("degenerate probabilities reduce to the pure utility") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto game = random_tree_game(seed, 5);
      Rng rng(seed * 31);
      MixedProfile mixed;
      StrategyProfile pure;
      for (int v = 0; v < game.player_count(); ++v) {
        const int bit = rng.below(2);
        mixed.invest_probability.push_back(Rational(bit));
        pure.actions.push_back(static_cast<std::uint8_t>(bit));
      }
      for (PlayerId v = 0; v < game.player_count(); ++v) {
        StrategyProfile with_action = pure;
        for (int action = 0; action <= 1; ++action) {
          with_action.actions[v] = static_cast<std::uint8_t>(action);
          CHECK(expected_utility(game, mixed, v, action) == utility(game, with_action, v));
        }
      }
    }
  }
  SUBCASE("matches the exhaustive expectation exactly") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto game = random_tree_game(seed, 5);
      Rng rng(seed * 77);
      MixedProfile mixed;
      for (int v = 0; v < game.player_count(); ++v) {
        mixed.invest_probability.push_back(rng.probability(8));
      }
      for (PlayerId v = 0; v < game.player_count(); ++v) {
        for (int action = 0; action <= 1; ++action) {
          CHECK(expected_utility(game, mixed, v, action) ==
                testutil::exhaustive_expected_utility(game, mixed, v, action));
        }
      }
    }
  }
}

TEST_CASE("eps equilibrium verification") {
  SUBCASE("a pure equilibrium is a 0-NE") {
    const auto game = make_game(2, {{0, 1}}, false, {{0, 1}}, {{0, 1, 2}, {0, 1, 2}},
                                {Rational(3, 2), Rational(3, 2)}, Rational(1));
    MixedProfile mixed{{Rational(1), Rational(1)}};
    CHECK(verify_eps_ne(game, mixed, Rational(0)).holds);
  }
  SUBCASE("regret within eps passes, beyond eps fails with a witness") {
    const auto game = anti_coordination_pair();
    // Player 1 invests with probability 1/2 but investing loses 1/4 in
    // expectation when player 0 invests with probability 1/4.
    MixedProfile mixed{{Rational(1, 4), Rational(1, 2)}};
    CHECK(verify_eps_ne(game, mixed, Rational(1)).holds);
    const auto verdict = verify_eps_ne(game, mixed, Rational(0));
    CHECK_FALSE(verdict.holds);
    REQUIRE(verdict.witness.has_value());
    CHECK(verdict.witness->player == 1);
    CHECK(verdict.witness->supported_action == 1);
    CHECK(verdict.witness->better_action == 0);
    CHECK(verify_eps_ne(game, mixed, Rational(1, 4)).holds);
  }
  SUBCASE("the uniform profile is an exact mixed equilibrium here") {
    const auto game = anti_coordination_pair();
    MixedProfile mixed{{Rational(1, 2), Rational(1, 2)}};
    CHECK(verify_eps_ne(game, mixed, Rational(0)).holds);
  }
}

TEST_CASE("game validation") {
  SUBCASE("well-formed") {
    const auto game = make_game(2, {{0, 1}}, true, {{0, 1}}, {{0, 1, 2}, {0, 1, 2}},
                                {Rational(1), Rational(1)}, Rational(1));
    CHECK(validate_game(game).empty());
  }
  SUBCASE("altruism between non-adjacent players") {
    const auto game = make_game(3, {{0, 1}}, true, {{0, 1}}, {{0, 1, 2}, {0, 1, 2}, {0, 5}},
                                {Rational(1), Rational(1), Rational(1)}, Rational(1));
    // Rebuild with an altruism edge the graph does not carry.
    const BNPGGame bad(game.graph, AltruismNetwork(true, 3, {{0, 2}}), game.externality,
                       game.cost, game.altruism_weight);
    const auto violations = validate_game(bad);
    REQUIRE(violations.size() == 1);
    CHECK(violations.front().find("(0, 2)") != std::string::npos);
  }
  SUBCASE("decreasing externality table") {
    const auto game = make_game(1, {}, true, {}, {{3, 1}}, {Rational(0)}, Rational(0));
    REQUIRE(validate_game(game).size() == 1);
    CHECK(validate_game(game).front().find("decreases") != std::string::npos);
  }
  SUBCASE("short table") {
    const auto game =
        make_game(2, {{0, 1}}, true, {}, {{0, 1}, {0, 1, 2}}, {Rational(0), Rational(0)},
                  Rational(0));
    REQUIRE(validate_game(game).size() == 1);
  }
}
