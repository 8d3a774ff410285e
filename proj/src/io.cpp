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

#include "bnpg/io.hpp"

#include <json.hpp>

#include <utility>

namespace bnpg {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& what) {
  throw ParseError(ParseError::Category::schema, "schema violation: " + what);
}

[[noreturn]] void invariant_error(const std::string& what) {
  throw ParseError(ParseError::Category::invariant, "invariant violation: " + what);
}

const Json& field(const Json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) schema_error(std::string("missing field '") + key + "'");
  return *it;
}

int int_field(const Json& obj, const char* key) {
  const auto& v = field(obj, key);
  if (!v.is_number_integer()) schema_error(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

Rational rational_value(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      schema_error(where + ": " + e.what());
    }
  }
  schema_error(where + " must be an integer or a \"num/den\" string");
}

Json rational_json(const Rational& r) {
  if (r.is_integer()) return Json(r.numerator());
  return Json(r.str());
}

EdgePair edge_value(const Json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() ||
      !v[1].is_number_integer()) {
    schema_error(where + " must be an [a, b] integer pair");
  }
  return {v[0].get<int>(), v[1].get<int>()};
}

std::vector<EdgePair> edge_list(const Json& v, const std::string& where) {
  if (!v.is_array()) schema_error(where + " must be an array of [a, b] pairs");
  std::vector<EdgePair> edges;
  for (const auto& item : v) edges.push_back(edge_value(item, where + " entry"));
  return edges;
}

Json edge_json(const EdgePair& e) { return Json::array({e.a, e.b}); }

// --- game -------------------------------------------------------------

BNPGGame game_from_json(const Json& obj) {
  const int n = int_field(obj, "players");
  auto edges = edge_list(field(obj, "edges"), "edges");

  const auto& alt = field(obj, "altruism");
  if (!alt.is_object()) schema_error("altruism must be an object");
  const auto& directed = field(alt, "directed");
  if (!directed.is_boolean()) schema_error("altruism.directed must be a boolean");
  auto alt_edges = edge_list(field(alt, "edges"), "altruism.edges");

  const auto& ext = field(obj, "externality");
  if (!ext.is_array() || static_cast<int>(ext.size()) != n) {
    schema_error("externality must list one table per player");
  }
  std::vector<ExternalityTable> tables;
  for (std::size_t v = 0; v < ext.size(); ++v) {
    if (!ext[v].is_array() || ext[v].empty()) {
      schema_error("externality table " + std::to_string(v) + " must be a non-empty array");
    }
    std::vector<Rational> values;
    for (const auto& item : ext[v]) {
      values.push_back(rational_value(item, "externality table " + std::to_string(v)));
    }
    tables.push_back(ExternalityTable(std::move(values)));
  }

  const auto& cost = field(obj, "cost");
  if (!cost.is_array() || static_cast<int>(cost.size()) != n) {
    schema_error("cost must list one value per player");
  }
  std::vector<Rational> costs;
  for (const auto& item : cost) costs.push_back(rational_value(item, "cost"));

  const Rational weight = rational_value(field(obj, "altruism_weight"), "altruism_weight");

  try {
    BNPGGame game(InputGraph(n, std::move(edges)),
                  AltruismNetwork(directed.get<bool>(), n, std::move(alt_edges)),
                  std::move(tables), std::move(costs), weight);
    const auto violations = validate_game(game);
    if (!violations.empty()) invariant_error(violations.front());
    return game;
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    schema_error(e.what());
  }
}

Json game_to_json(const BNPGGame& game) {
  Json obj = Json::object();
  obj["players"] = game.player_count();
  Json edges = Json::array();
  for (const auto& e : game.graph.edges()) edges.push_back(edge_json(e));
  obj["edges"] = std::move(edges);
  Json alt = Json::object();
  alt["directed"] = game.altruism.directed();
  Json alt_edges = Json::array();
  for (const auto& e : game.altruism.edges()) alt_edges.push_back(edge_json(e));
  alt["edges"] = std::move(alt_edges);
  obj["altruism"] = std::move(alt);
  Json ext = Json::array();
  for (const auto& table : game.externality) {
    Json values = Json::array();
    for (const auto& r : table.values()) values.push_back(rational_json(r));
    ext.push_back(std::move(values));
  }
  obj["externality"] = std::move(ext);
  Json costs = Json::array();
  for (const auto& c : game.cost) costs.push_back(rational_json(c));
  obj["cost"] = std::move(costs);
  obj["altruism_weight"] = rational_json(game.altruism_weight);
  return obj;
}

// --- profiles ----------------------------------------------------------

StrategyProfile profile_from_json(const Json& v) {
  if (!v.is_array()) schema_error("actions must be an array of 0/1");
  StrategyProfile profile;
  for (const auto& item : v) {
    if (!item.is_number_integer() || (item.get<int>() != 0 && item.get<int>() != 1)) {
      schema_error("actions must contain only 0 and 1");
    }
    profile.actions.push_back(static_cast<std::uint8_t>(item.get<int>()));
  }
  return profile;
}

Json profile_to_json(const StrategyProfile& profile) {
  Json arr = Json::array();
  for (auto a : profile.actions) arr.push_back(static_cast<int>(a));
  return arr;
}

// --- anm ----------------------------------------------------------------

std::map<EdgePair, std::int64_t> cost_map_from_json(const Json& v, const std::string& where) {
  if (!v.is_array()) schema_error(where + " must be an array of {edge, cost} entries");
  std::map<EdgePair, std::int64_t> result;
  for (const auto& item : v) {
    if (!item.is_object()) schema_error(where + " entries must be objects");
    const EdgePair edge = edge_value(field(item, "edge"), where + ".edge");
    const auto& cost = field(item, "cost");
    if (!cost.is_number_integer() || cost.get<std::int64_t>() < 0) {
      schema_error(where + ".cost must be a non-negative integer");
    }
    if (!result.emplace(edge, cost.get<std::int64_t>()).second) {
      schema_error(where + " lists an edge twice");
    }
  }
  return result;
}

Json cost_map_to_json(const std::map<EdgePair, std::int64_t>& costs) {
  Json arr = Json::array();
  for (const auto& [edge, cost] : costs) {
    Json entry = Json::object();
    entry["edge"] = edge_json(edge);
    entry["cost"] = cost;
    arr.push_back(std::move(entry));
  }
  return arr;
}

ANMInstance anm_from_json(const Json& obj) {
  BNPGGame game = game_from_json(field(obj, "game"));
  StrategyProfile target = profile_from_json(field(obj, "target"));
  auto add_cost = cost_map_from_json(field(obj, "add_cost"), "add_cost");
  auto delete_cost = cost_map_from_json(field(obj, "delete_cost"), "delete_cost");

  if (!game.altruism.directed()) {
    const auto normalize_keys = [](std::map<EdgePair, std::int64_t>& costs,
                                   const char* where) {
      std::map<EdgePair, std::int64_t> normalized_map;
      for (const auto& [edge, cost] : costs) {
        if (!normalized_map.emplace(normalized(edge), cost).second) {
          schema_error(std::string(where) + " lists an edge twice");
        }
      }
      costs = std::move(normalized_map);
    };
    normalize_keys(add_cost, "add_cost");
    normalize_keys(delete_cost, "delete_cost");
  }

  std::optional<std::int64_t> budget;
  const auto& b = field(obj, "budget");
  if (b.is_string()) {
    if (b.get<std::string>() != "inf") schema_error("budget must be an integer or \"inf\"");
  } else if (b.is_number_integer()) {
    budget = b.get<std::int64_t>();
  } else {
    schema_error("budget must be an integer or \"inf\"");
  }

  try {
    return ANMInstance(std::move(game), std::move(target), std::move(add_cost),
                       std::move(delete_cost), budget);
  } catch (const InputError& e) {
    invariant_error(e.what());
  }
}

Json anm_to_json(const ANMInstance& anm) {
  Json obj = Json::object();
  obj["game"] = game_to_json(anm.game);
  obj["target"] = profile_to_json(anm.target);
  obj["add_cost"] = cost_map_to_json(anm.add_cost);
  obj["delete_cost"] = cost_map_to_json(anm.delete_cost);
  if (anm.budget) {
    obj["budget"] = *anm.budget;
  } else {
    obj["budget"] = "inf";
  }
  return obj;
}

// --- knapsack / sat / dpgg / edits ---------------------------------------

KnapsackInstance knapsack_from_json(const Json& obj) {
  KnapsackInstance ks;
  const auto& items = field(obj, "items");
  if (!items.is_array()) schema_error("items must be an array");
  for (const auto& item : items) {
    KnapsackItem k;
    k.profit = rational_value(field(item, "profit"), "item profit");
    const auto& w = field(item, "weight");
    if (!w.is_number_integer() || w.get<std::int64_t>() < 0) {
      schema_error("item weight must be a non-negative integer");
    }
    k.weight = w.get<std::int64_t>();
    if (k.profit < Rational(0)) invariant_error("item profits must be non-negative");
    ks.items.push_back(std::move(k));
  }
  ks.threshold = rational_value(field(obj, "threshold"), "threshold");
  const auto& cap = field(obj, "capacity");
  if (!cap.is_number_integer()) schema_error("capacity must be an integer");
  ks.capacity = cap.get<std::int64_t>();
  return ks;
}

Json knapsack_to_json(const KnapsackInstance& ks) {
  Json obj = Json::object();
  Json items = Json::array();
  for (const auto& item : ks.items) {
    Json entry = Json::object();
    entry["profit"] = rational_json(item.profit);
    entry["weight"] = item.weight;
    items.push_back(std::move(entry));
  }
  obj["items"] = std::move(items);
  obj["threshold"] = rational_json(ks.threshold);
  obj["capacity"] = ks.capacity;
  return obj;
}

SatInstance sat_from_json(const Json& obj) {
  SatInstance sat;
  sat.variable_count = int_field(obj, "variables");
  const auto& clauses = field(obj, "clauses");
  if (!clauses.is_array()) schema_error("clauses must be an array of 3-literal arrays");
  for (const auto& clause : clauses) {
    if (!clause.is_array() || clause.size() != 3) {
      schema_error("each clause must have exactly three literals");
    }
    SatClause c;
    for (int i = 0; i < 3; ++i) {
      if (!clause[i].is_number_integer()) schema_error("literals must be integers");
      c.literals[i] = clause[i].get<int>();
    }
    sat.clauses.push_back(c);
  }
  const auto problems = sat.validate();
  if (!problems.empty()) invariant_error(problems.front());
  return sat;
}

Json sat_to_json(const SatInstance& sat) {
  Json obj = Json::object();
  obj["variables"] = sat.variable_count;
  Json clauses = Json::array();
  for (const auto& c : sat.clauses) {
    clauses.push_back(Json::array({c.literals[0], c.literals[1], c.literals[2]}));
  }
  obj["clauses"] = std::move(clauses);
  return obj;
}

DirectedPGG dpgg_from_json(const Json& obj) {
  DirectedPGG dpgg;
  dpgg.node_count = int_field(obj, "nodes");
  dpgg.arcs = edge_list(field(obj, "arcs"), "arcs");
  dpgg.price = rational_value(field(obj, "price"), "price");
  for (const auto& arc : dpgg.arcs) {
    if (arc.a < 0 || arc.a >= dpgg.node_count || arc.b < 0 || arc.b >= dpgg.node_count) {
      schema_error("arc endpoint out of range");
    }
    if (arc.a == arc.b) invariant_error("self-loop arc");
  }
  std::vector<EdgePair> sorted = dpgg.arcs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    invariant_error("duplicate arc");
  }
  dpgg.arcs = std::move(sorted);
  return dpgg;
}

Json dpgg_to_json(const DirectedPGG& dpgg) {
  Json obj = Json::object();
  obj["nodes"] = dpgg.node_count;
  Json arcs = Json::array();
  std::vector<EdgePair> sorted = dpgg.arcs;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& arc : sorted) arcs.push_back(edge_json(arc));
  obj["arcs"] = std::move(arcs);
  obj["price"] = rational_json(dpgg.price);
  return obj;
}

EditSet edits_from_json(const Json& obj) {
  EditSet edits;
  edits.additions = edge_list(field(obj, "additions"), "additions");
  edits.deletions = edge_list(field(obj, "deletions"), "deletions");
  const auto& cost = field(obj, "total_cost");
  if (!cost.is_number_integer()) schema_error("total_cost must be an integer");
  edits.total_cost = cost.get<std::int64_t>();
  std::sort(edits.additions.begin(), edits.additions.end());
  std::sort(edits.deletions.begin(), edits.deletions.end());
  return edits;
}

Json edits_to_json(const EditSet& edits) {
  Json obj = Json::object();
  Json additions = Json::array();
  for (const auto& e : edits.additions) additions.push_back(edge_json(e));
  obj["additions"] = std::move(additions);
  Json deletions = Json::array();
  for (const auto& e : edits.deletions) deletions.push_back(edge_json(e));
  obj["deletions"] = std::move(deletions);
  obj["total_cost"] = edits.total_cost;
  return obj;
}

// --- mixed profile -------------------------------------------------------

MixedProfile mixed_from_json(const Json& v) {
  if (!v.is_array()) schema_error("invest_probability must be an array");
  MixedProfile mixed;
  for (const auto& item : v) {
    const Rational p = rational_value(item, "invest_probability");
    if (p < Rational(0) || p > Rational(1)) {
      invariant_error("invest probability outside [0, 1]");
    }
    mixed.invest_probability.push_back(p);
  }
  return mixed;
}

Json mixed_to_json(const MixedProfile& mixed) {
  Json arr = Json::array();
  for (const auto& p : mixed.invest_probability) arr.push_back(rational_json(p));
  return arr;
}

const char* kind_name(InstanceDocument::Kind kind) {
  switch (kind) {
    case InstanceDocument::Kind::game: return "game";
    case InstanceDocument::Kind::anm: return "anm";
    case InstanceDocument::Kind::knapsack: return "knapsack";
    case InstanceDocument::Kind::sat: return "sat";
    case InstanceDocument::Kind::dpgg: return "dpgg";
    case InstanceDocument::Kind::profile: return "profile";
    case InstanceDocument::Kind::mixed_profile: return "mixed-profile";
    case InstanceDocument::Kind::edits: return "edits";
  }
  return "?";
}

}  // namespace

InstanceDocument InstanceDocument::of(BNPGGame value, Metadata meta) {
  InstanceDocument doc;
  doc.kind = Kind::game;
  doc.metadata = std::move(meta);
  doc.game = std::move(value);
  return doc;
}

InstanceDocument InstanceDocument::of(ANMInstance value, Metadata meta) {
  InstanceDocument doc;
  doc.kind = Kind::anm;
  doc.metadata = std::move(meta);
  doc.anm = std::move(value);
  return doc;
}

InstanceDocument InstanceDocument::of(KnapsackInstance value, Metadata meta) {
  InstanceDocument doc;
  doc.kind = Kind::knapsack;
  doc.metadata = std::move(meta);
  doc.knapsack = std::move(value);
  return doc;
}

InstanceDocument InstanceDocument::of(SatInstance value, Metadata meta) {
  InstanceDocument doc;
  doc.kind = Kind::sat;
  doc.metadata = std::move(meta);
  doc.sat = std::move(value);
  return doc;
}

InstanceDocument InstanceDocument::of(DirectedPGG value, Metadata meta) {
  InstanceDocument doc;
  doc.kind = Kind::dpgg;
  doc.metadata = std::move(meta);
  doc.dpgg = std::move(value);
  return doc;
}

InstanceDocument InstanceDocument::of(StrategyProfile value, Metadata meta) {
  InstanceDocument doc;
  doc.kind = Kind::profile;
  doc.metadata = std::move(meta);
  doc.profile = std::move(value);
  return doc;
}

InstanceDocument InstanceDocument::of(MixedProfile value, Metadata meta) {
  InstanceDocument doc;
  doc.kind = Kind::mixed_profile;
  doc.metadata = std::move(meta);
  doc.mixed = std::move(value);
  return doc;
}

InstanceDocument InstanceDocument::of(EditSet value, Metadata meta) {
  InstanceDocument doc;
  doc.kind = Kind::edits;
  doc.metadata = std::move(meta);
  doc.edits = std::move(value);
  return doc;
}

InstanceDocument parse_instance(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(ParseError::Category::syntax, std::string("syntax error: ") + e.what());
  }
  if (!root.is_object()) schema_error("document must be a JSON object");

  const auto& kind = field(root, "kind");
  if (!kind.is_string()) schema_error("kind must be a string");
  const std::string name = kind.get<std::string>();

  InstanceDocument doc;
  if (const auto it = root.find("metadata"); it != root.end()) {
    if (!it->is_object()) schema_error("metadata must be an object");
    if (const auto seed = it->find("seed"); seed != it->end()) {
      if (!seed->is_number_unsigned()) schema_error("metadata.seed must be an unsigned integer");
      doc.metadata.seed = seed->get<std::uint64_t>();
    }
    if (const auto desc = it->find("description"); desc != it->end()) {
      if (!desc->is_string()) schema_error("metadata.description must be a string");
      doc.metadata.description = desc->get<std::string>();
    }
  }

  if (name == "game") {
    doc.kind = InstanceDocument::Kind::game;
    doc.game = game_from_json(root);
  } else if (name == "anm") {
    doc.kind = InstanceDocument::Kind::anm;
    doc.anm = anm_from_json(root);
  } else if (name == "knapsack") {
    doc.kind = InstanceDocument::Kind::knapsack;
    doc.knapsack = knapsack_from_json(root);
  } else if (name == "sat") {
    doc.kind = InstanceDocument::Kind::sat;
    doc.sat = sat_from_json(root);
  } else if (name == "dpgg") {
    doc.kind = InstanceDocument::Kind::dpgg;
    doc.dpgg = dpgg_from_json(root);
  } else if (name == "profile") {
    doc.kind = InstanceDocument::Kind::profile;
    doc.profile = profile_from_json(field(root, "actions"));
  } else if (name == "mixed-profile") {
    doc.kind = InstanceDocument::Kind::mixed_profile;
    doc.mixed = mixed_from_json(field(root, "invest_probability"));
  } else if (name == "edits") {
    doc.kind = InstanceDocument::Kind::edits;
    doc.edits = edits_from_json(root);
  } else {
    schema_error("unknown kind '" + name + "'");
  }
  return doc;
}

std::string serialize_instance(const InstanceDocument& doc) {
  Json root = Json::object();
  root["kind"] = kind_name(doc.kind);
  if (!doc.metadata.empty()) {
    Json meta = Json::object();
    if (doc.metadata.seed) meta["seed"] = *doc.metadata.seed;
    if (doc.metadata.description) meta["description"] = *doc.metadata.description;
    root["metadata"] = std::move(meta);
  }

  Json body;
  switch (doc.kind) {
    case InstanceDocument::Kind::game: body = game_to_json(*doc.game); break;
    case InstanceDocument::Kind::anm: body = anm_to_json(*doc.anm); break;
    case InstanceDocument::Kind::knapsack: body = knapsack_to_json(*doc.knapsack); break;
    case InstanceDocument::Kind::sat: body = sat_to_json(*doc.sat); break;
    case InstanceDocument::Kind::dpgg: body = dpgg_to_json(*doc.dpgg); break;
    case InstanceDocument::Kind::profile: body["actions"] = profile_to_json(*doc.profile); break;
    case InstanceDocument::Kind::mixed_profile:
      body["invest_probability"] = mixed_to_json(*doc.mixed);
      break;
    case InstanceDocument::Kind::edits: body = edits_to_json(*doc.edits); break;
  }
  for (auto& [key, value] : body.items()) root[key] = std::move(value);
  return root.dump(2) + "\n";
}

InstanceDocument generate_instance(const GenSpec& spec) {
  Metadata meta;
  meta.seed = spec.seed;

  const auto base_game = [&](const std::string& kind) -> BNPGGame {
    if (kind == "tree") return random_tree_game(spec.seed, spec.size, spec.max_degree);
    if (kind == "clique") return random_clique_game(spec.seed, spec.size);
    if (kind == "circuit-rank") {
      return random_circuit_rank_game(spec.seed, spec.size, spec.rank);
    }
    throw InputError("unknown generator kind '" + kind + "'");
  };

  if (spec.kind == "tree" || spec.kind == "clique" || spec.kind == "circuit-rank") {
    meta.description = "random " + spec.kind + " game (n=" + std::to_string(spec.size) + ")";
    return InstanceDocument::of(base_game(spec.kind), std::move(meta));
  }
  if (spec.kind == "sat") {
    meta.description = "random (3,B2) formula (n=" + std::to_string(spec.size) + ")";
    return InstanceDocument::of(random_sat_3b2(spec.seed, spec.size), std::move(meta));
  }
  if (spec.kind == "knapsack") {
    meta.description = "random decision knapsack (k=" + std::to_string(spec.size) + ")";
    return InstanceDocument::of(random_knapsack(spec.seed, spec.size), std::move(meta));
  }
  if (spec.kind.rfind("anm-", 0) == 0) {
    const std::string base_kind = spec.kind.substr(4);
    GameGenOptions opts;
    opts.directed_altruism = spec.directed_altruism;
    BNPGGame base = [&] {
      if (base_kind == "tree") {
        return random_tree_game(spec.seed, spec.size, spec.max_degree, opts);
      }
      if (base_kind == "clique") return random_clique_game(spec.seed, spec.size, opts);
      if (base_kind == "circuit-rank") {
        return random_circuit_rank_game(spec.seed, spec.size, spec.rank, opts);
      }
      throw InputError("unknown generator kind '" + spec.kind + "'");
    }();
    meta.description = "random ANM over a " + base_kind + " game (n=" +
                       std::to_string(spec.size) + ")";
    return InstanceDocument::of(random_anm(spec.seed + 0x9e3779b97f4a7c15ULL, base),
                                std::move(meta));
  }
  throw InputError("unknown generator kind '" + spec.kind + "'");
}

}  // namespace bnpg
