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

#ifndef BNPG_GRAPH_HPP
#define BNPG_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "bnpg/errors.hpp"

namespace bnpg {

using PlayerId = int;

/// A player pair. Undirected contexts keep it normalized (a <= b); directed
/// contexts read it as the arc a -> b.
struct EdgePair {
  PlayerId a = 0;
  PlayerId b = 0;

  friend bool operator==(const EdgePair&, const EdgePair&) = default;
  friend auto operator<=>(const EdgePair&, const EdgePair&) = default;
};

inline EdgePair normalized(EdgePair e) {
  if (e.a > e.b) std::swap(e.a, e.b);
  return e;
}

/// The undirected, simple network the game is played on.
class InputGraph {
 public:
  InputGraph(int player_count, std::vector<EdgePair> edges);

  int player_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int degree(PlayerId v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;
  const std::vector<PlayerId>& neighbors(PlayerId v) const { return adj_[v]; }
  const std::vector<EdgePair>& edges() const { return edges_; }
  bool has_edge(PlayerId u, PlayerId v) const;

  int component_count() const;
  /// Component id per player, ids assigned in order of the lowest member.
  std::vector<int> components() const;
  bool is_forest() const;
  bool is_complete() const;

 private:
  int n_;
  std::vector<EdgePair> edges_;               // normalized, sorted
  std::vector<std::vector<PlayerId>> adj_;    // sorted neighbor lists
};

/// Altruism network over the same players. Directed edges are arcs (from,to);
/// undirected edges act as arcs in both directions. Only out-neighborhoods
/// enter utilities, so both cases expose the same query surface.
class AltruismNetwork {
 public:
  AltruismNetwork(bool directed, int player_count, std::vector<EdgePair> edges);

  bool directed() const { return directed_; }
  int player_count() const { return n_; }
  /// Canonical edge list: arcs as given (directed) or normalized pairs.
  const std::vector<EdgePair>& edges() const { return edges_; }
  const std::vector<PlayerId>& out_neighbors(PlayerId v) const { return out_[v]; }
  bool has_edge(const EdgePair& e) const;

  AltruismNetwork with_edge_added(const EdgePair& e) const;
  AltruismNetwork with_edge_removed(const EdgePair& e) const;

 private:
  bool directed_;
  int n_;
  std::vector<EdgePair> edges_;
  std::vector<std::vector<PlayerId>> out_;
};

}  // namespace bnpg

#endif  // BNPG_GRAPH_HPP
