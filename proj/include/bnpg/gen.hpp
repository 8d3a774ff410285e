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

#ifndef BNPG_GEN_HPP
#define BNPG_GEN_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "bnpg/anm.hpp"
#include "bnpg/game.hpp"
#include "bnpg/knapsack.hpp"
#include "bnpg/reductions.hpp"

namespace bnpg {

/// Deterministic random source. Draws come straight off mt19937_64 with
/// modulo reduction, avoiding the implementation-defined std distributions,
/// so identical seeds give identical instances on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  int below(int bound);                 // uniform in [0, bound)
  int in_range(int lo, int hi);         // uniform in [lo, hi]
  bool chance(int num, int den);        // true with probability num/den
  Rational rational(int max_num, int max_den);
  Rational probability(int den);        // k/den with k in [0, den]

 private:
  std::mt19937_64 engine_;
};

struct GameGenOptions {
  bool directed_altruism = true;
  int max_g_value = 6;       // table entries drawn as non-decreasing in 0..max
  int cost_max_num = 12;     // costs are num/den with these bounds
  int cost_max_den = 4;
  int altruism_percent = 50; // chance that an eligible altruism arc is present
};

/// Random tree (or degree-capped tree) game. max_degree 0 means uncapped.
BNPGGame random_tree_game(std::uint64_t seed, int n, int max_degree = 0,
                          const GameGenOptions& opts = {});

/// Random clique game with tables covering 0..n.
BNPGGame random_clique_game(std::uint64_t seed, int n, const GameGenOptions& opts = {});

/// Random connected game whose graph has circuit rank exactly d.
BNPGGame random_circuit_rank_game(std::uint64_t seed, int n, int rank,
                                  const GameGenOptions& opts = {});

/// Random occurrence-balanced (3,B2) formula; n must be divisible by 3 and
/// every clause uses three distinct variables.
SatInstance random_sat_3b2(std::uint64_t seed, int n);

/// Random decision knapsack with integer weights in [0, max_weight].
KnapsackInstance random_knapsack(std::uint64_t seed, int items, int max_weight = 50);

struct AnmGenOptions {
  int max_candidates = 20;  // candidate edits are sampled down to this many
  int max_cost = 20;
  int infinite_budget_percent = 20;
};

/// Random ANM instance over the given game: random target, random initial
/// altruism network, sampled candidate edits with integer costs.
ANMInstance random_anm(std::uint64_t seed, const BNPGGame& base, const AnmGenOptions& opts = {});

}  // namespace bnpg

#endif  // BNPG_GEN_HPP
