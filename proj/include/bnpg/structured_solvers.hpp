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

#ifndef BNPG_STRUCTURED_SOLVERS_HPP
#define BNPG_STRUCTURED_SOLVERS_HPP

#include <optional>
#include <vector>

#include "bnpg/game.hpp"

namespace bnpg {

/// Edges minus vertices plus connected components: the number of edges whose
/// removal makes the graph acyclic.
int circuit_rank(const InputGraph& graph);

/// Players that keep investing (R1) respectively keep staying out (R0) when k
/// players invest in a clique, where every count collapses to k.
struct StabilitySets {
  int k = 0;
  std::vector<PlayerId> r1;
  std::vector<PlayerId> r0;
};

StabilitySets clique_stability_sets(const BNPGGame& game, int k);

/// PSNE on a complete graph: the all-out and all-in profiles are checked
/// directly, then each investor count 0 < k < n through the stability-set
/// cardinality conditions, constructing a witness on the first success.
std::optional<StrategyProfile> solve_clique_psne(const BNPGGame& game);

/// PSNE on a graph of bounded circuit rank: per component, fix a spanning
/// tree, enumerate actions and neighbor counts of the non-tree-edge endpoints,
/// shift their tables and costs by the enumerated contributions, and solve the
/// remaining tree game under matching prescriptions.
std::optional<StrategyProfile> solve_bounded_circuit_rank_psne(const BNPGGame& game,
                                                               int max_rank);

}  // namespace bnpg

#endif  // BNPG_STRUCTURED_SOLVERS_HPP
