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

#ifndef BNPG_TREE_SOLVER_HPP
#define BNPG_TREE_SOLVER_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bnpg/game.hpp"

namespace bnpg {

// Polynomial PSNE search on trees and forests. Each node keeps a table of
// valid configurations (parent action, parent count, own action, own count)
// with back-pointers into its children's tables, built bottom-up; the root
// gets an imaginary non-investing parent with an all-zero externality, and a
// non-empty root table certifies an equilibrium.

enum class GreedySense { maximize, minimize };

struct GreedySelection {
  std::vector<std::uint8_t> invest;  // per free child: 1 means x_1 chosen
  Rational value;
};

/// Greedy solver for the per-node ILP: pick exactly `quota` children at their
/// y-value and the rest at their z-value, optimizing the sum. Children are
/// ranked by |y - z| descending (ties by index ascending) and assigned their
/// preferred side until one side's budget runs out.
GreedySelection greedy_select(const std::vector<std::pair<Rational, Rational>>& yz, int quota,
                              GreedySense sense);

/// One valid configuration at a node: parent's action and investing-neighbor
/// count, own action and count, and for each child the index of the
/// supporting tuple in that child's table.
struct ConfigTuple {
  std::uint8_t parent_action = 0;
  int parent_count = 0;
  std::uint8_t action = 0;
  int count = 0;
  std::vector<int> child_choice;
};

struct NodeTable {
  PlayerId node = 0;
  PlayerId parent = -1;  // -1: the root's imaginary parent
  std::vector<PlayerId> children;
  std::vector<ConfigTuple> tuples;
};

/// Prescription for one player: its action and investing tree-neighbor count.
struct NodeConstraint {
  int action = 0;
  int investing_neighbors = 0;
};

using ConstraintMap = std::map<PlayerId, NodeConstraint>;

/// PSNE witness on a tree or forest, or nullopt when none exists.
/// Disconnected inputs are solved per component; the components do not
/// interact, so a PSNE exists iff each component has one.
std::optional<StrategyProfile> solve_tree_psne(const BNPGGame& game);

/// Tree PSNE search additionally honoring per-player prescriptions, realized
/// by discarding non-matching table entries at the prescribed nodes.
std::optional<StrategyProfile> solve_tree_psne_constrained(const BNPGGame& game,
                                                           const ConstraintMap& prescribed);

}  // namespace bnpg

#endif  // BNPG_TREE_SOLVER_HPP
