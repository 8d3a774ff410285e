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

#ifndef BNPG_REDUCTIONS_HPP
#define BNPG_REDUCTIONS_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bnpg/anm.hpp"
#include "bnpg/game.hpp"
#include "bnpg/knapsack.hpp"

namespace bnpg {

// Instance generators for every reduction used by the hardness results, plus
// the mappings that carry certificates back and forth. They serve as test
// fixtures: each generator's output is checked against independent oracles on
// both sides at desk scale.

/// 3-SAT formula where each variable occurs exactly twice positively and
/// twice negatively. Literals use the DIMACS convention: +v / -v, 1-based.
struct SatClause {
  std::array<int, 3> literals{};
};

struct SatInstance {
  int variable_count = 0;
  std::vector<SatClause> clauses;

  /// Empty when the formula is well-formed occurrence-balanced (3,B2) with
  /// three distinct variables per clause; otherwise describes the defects.
  std::vector<std::string> validate() const;
};

/// Exhaustive satisfiability check, guarded at 20 variables.
bool brute_sat(const SatInstance& sat);

/// Directed public goods game: step reward on own-plus-in-neighbor
/// investments minus a price for investing.
struct DirectedPGG {
  int node_count = 0;
  std::vector<EdgePair> arcs;  // (from, to)
  Rational price;

  /// Y(x_v + n_v^in) - price * x_v with Y the 0/1 step function.
  Rational utility(const StrategyProfile& profile, PlayerId v) const;
  /// True when no player gains by flipping its action.
  bool is_pure_equilibrium(const StrategyProfile& profile) const;
};

/// Edit-set translation between a heterogeneous instance and its fully
/// homogeneous image. Hub players keep the original ids, so the maps carry
/// edge edits across unchanged while validating membership.
struct HomogenizeResult {
  ANMInstance instance;
  EditSet map_forward(const EditSet& original) const;
  EditSet map_backward(const EditSet& homogenized) const;

  int original_players = 0;
};

/// Uniform-cost heterogeneous ANM -> fully homogeneous ANM: each player gains
/// a private padding star sized 2 + n*(i-1) and all players share one stitched
/// externality table; forbidden altruism edges cost budget+1 (omitted under an
/// infinite budget). Works for directed and undirected altruism alike.
HomogenizeResult homogenize(const ANMInstance& anm);

/// Degree-preserving variant for max-degree-3 games with three externality
/// types: padding stars sized 2 + 4*(type-1), output degree at most 13.
/// Symmetric altruism only.
HomogenizeResult homogenize_bounded_degree(const ANMInstance& anm);

enum class Symmetry { asymmetric, symmetric };

/// Decision knapsack -> ANM on a 2n+1-node tree: item players with linear
/// slopes p_i, boosters with slope P, a hub with zero externality, budget W,
/// all-invest target. Hub-to-item edges cost w_i, booster edges cost 0.
ANMInstance knapsack_to_anm(const KnapsackInstance& ks, Symmetry symmetry);

enum class SatAnmVariant {
  all_invest,        // finite budget, a = 1/2, slopes 220/200/240, c = 315
  arbitrary_target,  // infinite budget, a = 2, slopes 1/10/2, c = 15
};

/// (3,B2)-SAT -> ANM with symmetric altruism on the degree-3 gadget graph of
/// literal, buffer and clause players.
ANMInstance sat_to_anm(const SatInstance& sat, SatAnmVariant variant);

/// Directed public goods game -> BNPG game with symmetric altruism on split
/// nodes. Node i of the source becomes players 2i (in) and 2i+1 (out); eps
/// only enters the in-players' cost 1 + 2*eps.
BNPGGame dpgg_to_bnpg(const DirectedPGG& dpgg, const Rational& eps);

/// Projects a mixed profile of the constructed game back onto the source
/// game's players (out-coordinates). Requires every in-player to put all mass
/// on 0, which every equilibrium of the constructed game does; otherwise
/// raises InputError.
MixedProfile map_mixed_back(const MixedProfile& constructed);

}  // namespace bnpg

#endif  // BNPG_REDUCTIONS_HPP
