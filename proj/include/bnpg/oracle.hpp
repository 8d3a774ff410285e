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

#ifndef BNPG_ORACLE_HPP
#define BNPG_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "bnpg/anm.hpp"
#include "bnpg/game.hpp"
#include "bnpg/knapsack.hpp"

namespace bnpg {

// Brute-force reference implementations. These stay deliberately naive:
// exhaustive enumeration with hard size guards, used as ground truth for
// every solver. Guards raise GuardError rather than running unbounded.

/// All PSNE profiles in lexicographic order. Guarded at 25 players.
std::vector<StrategyProfile> enumerate_psne(const BNPGGame& game);

/// Minimum total weight subject to total profit >= threshold by subset
/// enumeration; nullopt when infeasible. Guarded at 24 items.
std::optional<std::int64_t> brute_min_knapsack(const KnapsackInstance& inst);

/// Minimum-cost edit set within budget making the target a PSNE, by
/// enumerating every subset of the candidate edits; nullopt when none exists.
/// Ties broken by the lexicographically smallest edit set (additions before
/// deletions, edges ascending). Guarded at 20 candidate edits.
std::optional<EditSet> brute_anm(const ANMInstance& anm);

}  // namespace bnpg

#endif  // BNPG_ORACLE_HPP
