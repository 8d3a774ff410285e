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

#ifndef BNPG_IO_HPP
#define BNPG_IO_HPP

#include <optional>
#include <string>
#include <string_view>

#include "bnpg/anm.hpp"
#include "bnpg/game.hpp"
#include "bnpg/gen.hpp"
#include "bnpg/knapsack.hpp"
#include "bnpg/reductions.hpp"

namespace bnpg {

/// Parse failures carry the category the CLI reports: malformed JSON, a
/// document that does not match the schema, or a well-formed document whose
/// content violates a type invariant.
class ParseError : public InputError {
 public:
  enum class Category { syntax, schema, invariant };

  ParseError(Category category, const std::string& what)
      : InputError(what), category_(category) {}
  Category category() const { return category_; }

 private:
  Category category_;
};

struct Metadata {
  std::optional<std::uint64_t> seed;
  std::optional<std::string> description;

  bool empty() const { return !seed && !description; }
};

/// One instance file: a kind tag, optional metadata, and the typed body.
/// Documents round-trip byte-identically through serialize(parse(text)) for
/// canonical text; serialization is canonical (fixed key order, sorted edge
/// lists, reduced rationals, integers emitted bare, "inf" for an unlimited
/// budget).
struct InstanceDocument {
  enum class Kind { game, anm, knapsack, sat, dpgg, profile, mixed_profile, edits };

  Kind kind = Kind::game;
  Metadata metadata;

  std::optional<BNPGGame> game;
  std::optional<ANMInstance> anm;
  std::optional<KnapsackInstance> knapsack;
  std::optional<SatInstance> sat;
  std::optional<DirectedPGG> dpgg;
  std::optional<StrategyProfile> profile;
  std::optional<MixedProfile> mixed;
  std::optional<EditSet> edits;

  static InstanceDocument of(BNPGGame value, Metadata meta = {});
  static InstanceDocument of(ANMInstance value, Metadata meta = {});
  static InstanceDocument of(KnapsackInstance value, Metadata meta = {});
  static InstanceDocument of(SatInstance value, Metadata meta = {});
  static InstanceDocument of(DirectedPGG value, Metadata meta = {});
  static InstanceDocument of(StrategyProfile value, Metadata meta = {});
  static InstanceDocument of(MixedProfile value, Metadata meta = {});
  static InstanceDocument of(EditSet value, Metadata meta = {});
};

InstanceDocument parse_instance(std::string_view text);
std::string serialize_instance(const InstanceDocument& doc);

/// Generation request for the CLI and the acceptance fixtures.
struct GenSpec {
  std::string kind;  // tree | clique | circuit-rank | sat | knapsack |
                     // anm-tree | anm-clique | anm-circuit-rank
  int size = 8;
  std::uint64_t seed = 1;
  int rank = 1;         // circuit-rank kinds
  int max_degree = 0;   // tree kinds; 0 = uncapped
  bool directed_altruism = true;
};

/// Deterministic: identical spec and seed give identical document bytes.
InstanceDocument generate_instance(const GenSpec& spec);

}  // namespace bnpg

#endif  // BNPG_IO_HPP
