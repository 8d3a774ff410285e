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

#include "bnpg/tree_solver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace bnpg {

GreedySelection greedy_select(const std::vector<std::pair<Rational, Rational>>& yz, int quota,
                              GreedySense sense) {
  const int k = static_cast<int>(yz.size());
  if (quota < 0 || quota > k) {
    throw InputError("greedy quota " + std::to_string(quota) + " outside [0, " +
                     std::to_string(k) + "]");
  }
  std::vector<int> order(yz.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<Rational> gap(yz.size());
  for (std::size_t i = 0; i < yz.size(); ++i) gap[i] = abs(yz[i].first - yz[i].second);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return gap[a] > gap[b]; });

  GreedySelection result;
  result.invest.assign(yz.size(), 0);
  result.value = Rational(0);
  int count1 = 0;
  int count0 = 0;
  for (int idx : order) {
    bool take1;
    if (count1 == quota) {
      take1 = false;
    } else if (count0 == k - quota) {
      take1 = true;
    } else if (sense == GreedySense::maximize) {
      take1 = yz[idx].first > yz[idx].second;
    } else {
      take1 = !(yz[idx].first > yz[idx].second);
    }
    if (take1) {
      result.invest[idx] = 1;
      result.value += yz[idx].first;
      ++count1;
    } else {
      result.value += yz[idx].second;
      ++count0;
    }
  }
  return result;
}

namespace {

// Rooted orientation of one tree component plus the tables built over it.
struct RootedComponent {
  PlayerId root = -1;
  std::vector<PlayerId> order;  // BFS order from the root
  std::vector<PlayerId> parent;
  std::vector<std::vector<PlayerId>> children;
};

// Per-child summary for a fixed (own action, own count) key: which child
// actions are realizable and the extremal altruism value per action, with the
// supporting tuple index for witness reconstruction.
struct ChildOption {
  bool has1 = false;
  bool has0 = false;
  int idx1 = -1;
  int idx0 = -1;
  Rational y;  // extremal value when the child invests (zero off the altruism set)
  Rational z;  // extremal value when it does not
};

class TreeDP {
 public:
  TreeDP(const BNPGGame& game, const ConstraintMap& constraints)
      : game_(game), constraints_(constraints), tables_(game.player_count()) {}

  std::optional<StrategyProfile> solve() {
    if (!game_.graph.is_forest()) throw InputError("tree solver needs an acyclic input graph");
    const int n = game_.player_count();
    for (const auto& [v, c] : constraints_) {
      if (v < 0 || v >= n) throw InputError("constraint on unknown player " + std::to_string(v));
      if (c.action != 0 && c.action != 1) throw InputError("constrained action must be 0 or 1");
    }

    StrategyProfile profile;
    profile.actions.assign(n, 0);
    const auto comp = game_.graph.components();
    const int comp_count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    for (int c = 0; c < comp_count; ++c) {
      PlayerId root = -1;
      for (int v = 0; v < n && root < 0; ++v) {
        if (comp[v] == c) root = v;
      }
      const auto rooted = orient(root);
      for (auto it = rooted.order.rbegin(); it != rooted.order.rend(); ++it) {
        build_table(*it, rooted);
      }
      if (tables_[root].tuples.empty()) return std::nullopt;
      reconstruct(root, 0, profile);
    }

    audit(profile);
    return profile;
  }

 private:
  RootedComponent orient(PlayerId root) const {
    RootedComponent rc;
    rc.root = root;
    rc.parent.assign(game_.player_count(), -1);
    rc.children.resize(game_.player_count());
    rc.order.push_back(root);
    for (std::size_t head = 0; head < rc.order.size(); ++head) {
      const PlayerId v = rc.order[head];
      for (PlayerId u : game_.graph.neighbors(v)) {
        if (u == rc.parent[v]) continue;
        rc.parent[u] = v;
        rc.children[v].push_back(u);
        rc.order.push_back(u);
      }
    }
    return rc;
  }

  bool in_altruism_set(PlayerId v, PlayerId u) const {
    return game_.altruism.has_edge({v, u});
  }

  // Marginal altruism term of out-neighbor u as seen from v's stability
  // condition: when v plays 1 its own investment already sits inside u's
  // count, so the marginal starts one step lower.
  Rational neighbor_term(PlayerId u, int own_action, int u_action, int u_count) const {
    const int arg = own_action == 1 ? u_action + u_count - 1 : u_action + u_count;
    return game_.altruism_weight * game_.externality[u].marginal(arg);
  }

  bool violates_constraint(PlayerId v, int action, int count) const {
    const auto it = constraints_.find(v);
    if (it == constraints_.end()) return false;
    return it->second.action != action || it->second.investing_neighbors != count;
  }

  void build_table(PlayerId v, const RootedComponent& rooted) {
    NodeTable table;
    table.node = v;
    table.parent = rooted.parent[v];
    table.children = rooted.children[v];

    const PlayerId u = table.parent;
    const int deg_u = u < 0 ? 1 : game_.graph.degree(u);
    const int deg_v = game_.graph.degree(v);
    const bool parent_in_set = u >= 0 && in_altruism_set(v, u);

    if (table.children.empty()) {
      // Leaf rule: the count equals the parent's action, the leaf must be
      // stable, and the parent count window must admit the leaf's action.
      for (int action = 0; action <= 1; ++action) {
        for (int parent_action = 0; parent_action <= (u < 0 ? 0 : 1); ++parent_action) {
          const int count = parent_action;
          if (violates_constraint(v, action, count)) continue;
          const Rational own = game_.externality[v].marginal(count);
          for (int parent_count = std::max(action, 0);
               parent_count <= std::min(deg_u, deg_u + action - 1); ++parent_count) {
            Rational gain = own;
            if (parent_in_set) {
              gain += neighbor_term(u, action, parent_action, parent_count);
            }
            const bool stable = action == 1 ? gain >= game_.cost[v] : gain <= game_.cost[v];
            if (!stable) continue;
            table.tuples.push_back(
                {static_cast<std::uint8_t>(parent_action), parent_count,
                 static_cast<std::uint8_t>(action), count, {}});
          }
        }
      }
      tables_[v] = std::move(table);
      return;
    }

    // Internal rule: for each (action, count) summarize the children's
    // tables, then admit (parent_action, parent_count) pairs whose stability
    // threshold the greedy ILP value clears.
    for (int action = 0; action <= 1; ++action) {
      for (int count = 0; count <= deg_v; ++count) {
        if (violates_constraint(v, action, count)) continue;

        std::vector<ChildOption> options;
        options.reserve(table.children.size());
        bool feasible = true;
        for (PlayerId w : table.children) {
          const auto opt = summarize_child(w, v, action, count);
          if (!opt.has1 && !opt.has0) {
            feasible = false;
            break;
          }
          options.push_back(opt);
        }
        if (!feasible) continue;

        // Forced and free children, Algorithm-1 style.
        std::vector<int> forced1;
        std::vector<int> forced0;
        std::vector<int> free_children;
        Rational forced_sum(0);
        for (std::size_t i = 0; i < options.size(); ++i) {
          if (options[i].has1 && options[i].has0) {
            free_children.push_back(static_cast<int>(i));
          } else if (options[i].has1) {
            forced1.push_back(static_cast<int>(i));
            forced_sum += options[i].y;
          } else {
            forced0.push_back(static_cast<int>(i));
            forced_sum += options[i].z;
          }
        }

        std::vector<std::pair<Rational, Rational>> yz;
        yz.reserve(free_children.size());
        for (int i : free_children) yz.push_back({options[i].y, options[i].z});

        const Rational own = game_.externality[v].marginal(count);

        for (int parent_action = 0; parent_action <= (u < 0 ? 0 : 1); ++parent_action) {
          const int quota =
              count - parent_action - static_cast<int>(forced1.size());
          if (quota < 0 || quota > static_cast<int>(free_children.size())) continue;
          const auto greedy = greedy_select(
              yz, quota, action == 1 ? GreedySense::maximize : GreedySense::minimize);

          for (int parent_count = std::max(action, 0);
               parent_count <= std::min(deg_u, deg_u + action - 1); ++parent_count) {
            Rational parent_term(0);
            if (parent_in_set) {
              parent_term = neighbor_term(u, action, parent_action, parent_count);
            }
            const Rational rhs = game_.cost[v] - own - parent_term - forced_sum;
            const bool admitted = action == 1 ? greedy.value >= rhs : greedy.value <= rhs;
            if (!admitted) continue;

            ConfigTuple tuple{static_cast<std::uint8_t>(parent_action), parent_count,
                              static_cast<std::uint8_t>(action), count, {}};
            tuple.child_choice.assign(table.children.size(), -1);
            for (int i : forced1) tuple.child_choice[i] = options[i].idx1;
            for (int i : forced0) tuple.child_choice[i] = options[i].idx0;
            for (std::size_t j = 0; j < free_children.size(); ++j) {
              const int i = free_children[j];
              tuple.child_choice[i] = greedy.invest[j] ? options[i].idx1 : options[i].idx0;
            }
            table.tuples.push_back(std::move(tuple));
          }
        }
      }
    }
    tables_[v] = std::move(table);
  }

  // Extremal realizable options of child w given its parent v plays `action`
  // with `count` investing neighbors. Off the altruism set the value is zero
  // and any matching tuple supports the choice; on it, investing children are
  // scored by the marginal at their own count and the direction follows v's
  // action (maximize when v invests, minimize when it stays out).
  ChildOption summarize_child(PlayerId w, PlayerId v, int action, int count) const {
    ChildOption opt;
    const bool in_set = in_altruism_set(v, w);
    const auto& tuples = tables_[w].tuples;
    for (std::size_t idx = 0; idx < tuples.size(); ++idx) {
      const auto& t = tuples[idx];
      if (t.parent_action != action || t.parent_count != count) continue;
      Rational value(0);
      if (in_set) value = neighbor_term(w, action, t.action, t.count);
      if (t.action == 1) {
        if (!opt.has1 || (in_set && (action == 1 ? value > opt.y : value < opt.y))) {
          opt.has1 = true;
          opt.idx1 = static_cast<int>(idx);
          opt.y = value;
        }
      } else {
        if (!opt.has0 || (in_set && (action == 1 ? value > opt.z : value < opt.z))) {
          opt.has0 = true;
          opt.idx0 = static_cast<int>(idx);
          opt.z = value;
        }
      }
    }
    return opt;
  }

  void reconstruct(PlayerId root, int tuple_idx, StrategyProfile& profile) const {
    std::vector<std::pair<PlayerId, int>> stack{{root, tuple_idx}};
    while (!stack.empty()) {
      const auto [v, idx] = stack.back();
      stack.pop_back();
      const auto& table = tables_[v];
      const auto& tuple = table.tuples[idx];
      profile.actions[v] = tuple.action;
      for (std::size_t i = 0; i < table.children.size(); ++i) {
        stack.push_back({table.children[i], tuple.child_choice[i]});
      }
    }
  }

  // Every witness must realize its tuples' counts and survive the standalone
  // equilibrium check; a violation is a solver defect, not an input problem.
  void audit(const StrategyProfile& profile) const {
    for (PlayerId v = 0; v < game_.player_count(); ++v) {
      if (!is_stable(game_, profile, v)) {
        throw std::logic_error("tree witness failed the equilibrium audit at player " +
                               std::to_string(v));
      }
    }
    for (const auto& [v, c] : constraints_) {
      if (profile.actions[v] != c.action ||
          investing_neighbors(game_.graph, profile, v) != c.investing_neighbors) {
        throw std::logic_error("tree witness violated a prescription at player " +
                               std::to_string(v));
      }
    }
  }

  const BNPGGame& game_;
  const ConstraintMap& constraints_;
  std::vector<NodeTable> tables_;
};

}  // namespace

std::optional<StrategyProfile> solve_tree_psne(const BNPGGame& game) {
  return solve_tree_psne_constrained(game, {});
}

std::optional<StrategyProfile> solve_tree_psne_constrained(const BNPGGame& game,
                                                           const ConstraintMap& prescribed) {
  TreeDP dp(game, prescribed);
  return dp.solve();
}

}  // namespace bnpg
