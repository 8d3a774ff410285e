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

#ifndef BNPG_GAME_HPP
#define BNPG_GAME_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bnpg/graph.hpp"
#include "bnpg/rational.hpp"

namespace bnpg {

/// Finite tabulation of an externality function g on indices 0..max_index().
/// Evaluation beyond the table is a hard error, never an extrapolation, so
/// instance files must be self-contained.
class ExternalityTable {
 public:
  explicit ExternalityTable(std::vector<Rational> values);

  const Rational& at(int x) const;
  /// Marginal gain g(x+1) - g(x).
  Rational marginal(int x) const;
  int max_index() const { return static_cast<int>(values_.size()) - 1; }
  const std::vector<Rational>& values() const { return values_; }

  friend bool operator==(const ExternalityTable&, const ExternalityTable&) = default;

 private:
  std::vector<Rational> values_;
};

/// Free-function spelling of the marginal gain, matching the Delta-g notation.
Rational marginal(const ExternalityTable& table, int x);

struct StrategyProfile {
  std::vector<std::uint8_t> actions;  // one 0/1 entry per player

  int size() const { return static_cast<int>(actions.size()); }
  friend bool operator==(const StrategyProfile&, const StrategyProfile&) = default;
};

struct MixedProfile {
  std::vector<Rational> invest_probability;  // one [0,1] entry per player

  int size() const { return static_cast<int>(invest_probability.size()); }
};

/// A binary networked public goods game with altruism.
///
/// Player v's utility under profile x is
///   g_v(x_v + n_v) + a * sum_{u in N_v} g_u(x_u + n_u) - c_v * x_v
/// where n_w counts investing graph-neighbors of w and N_v is v's altruism
/// out-neighborhood. The object is immutable after construction and every
/// operation on it is a pure function.
struct BNPGGame {
  InputGraph graph;
  AltruismNetwork altruism;
  std::vector<ExternalityTable> externality;  // per player
  std::vector<Rational> cost;                 // per player
  Rational altruism_weight;                   // the constant a

  BNPGGame(InputGraph graph_in, AltruismNetwork altruism_in,
           std::vector<ExternalityTable> externality_in, std::vector<Rational> cost_in,
           Rational altruism_weight_in);

  int player_count() const { return graph.player_count(); }
  bool fully_homogeneous() const;
  BNPGGame with_altruism(AltruismNetwork replacement) const;
};

/// Count of investing graph-neighbors of v (v itself never counted).
int investing_neighbors(const InputGraph& graph, const StrategyProfile& profile, PlayerId v);

Rational utility(const BNPGGame& game, const StrategyProfile& profile, PlayerId v);

/// Marginal-gain stability test for player v at its current action.
/// A player indifferent between actions is stable at either.
bool is_stable(const BNPGGame& game, const StrategyProfile& profile, PlayerId v);

struct PsneVerdict {
  bool is_psne = false;
  std::optional<PlayerId> deviator;  // least-id deviating player when not a PSNE
};

PsneVerdict verify_psne(const BNPGGame& game, const StrategyProfile& profile);

/// Exact expected utility of playing `action` against the product distribution
/// of the other players. Neighbor counts are Poisson-binomial and computed by
/// incremental convolution; altruism terms condition u's count on v's fixed
/// action.
Rational expected_utility(const BNPGGame& game, const MixedProfile& mixed, PlayerId v,
                          int action);

struct EpsWitness {
  PlayerId player = 0;
  int supported_action = 0;
  int better_action = 0;
};

struct EpsVerdict {
  bool holds = false;
  std::optional<EpsWitness> witness;
};

/// Checks the epsilon-Nash condition: every supported action is within eps of
/// every alternative, in expectation.
EpsVerdict verify_eps_ne(const BNPGGame& game, const MixedProfile& mixed, const Rational& eps);

/// Returns human-readable descriptions of violated game invariants
/// (non-monotone tables, altruism outside graph adjacency, short tables,
/// negative constants). Empty means the game is well-formed.
std::vector<std::string> validate_game(const BNPGGame& game);

}  // namespace bnpg

#endif  // BNPG_GAME_HPP
