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

#include "bnpg/graph.hpp"

#include <algorithm>
#include <string>

namespace bnpg {

namespace {

void check_endpoint(int n, PlayerId v) {
  if (v < 0 || v >= n) {
    throw InputError("player id " + std::to_string(v) + " out of range [0, " +
                     std::to_string(n) + ")");
  }
}

}  // namespace

InputGraph::InputGraph(int player_count, std::vector<EdgePair> edges) : n_(player_count) {
  if (n_ <= 0) throw InputError("player count must be positive");
  for (auto& e : edges) {
    check_endpoint(n_, e.a);
    check_endpoint(n_, e.b);
    if (e.a == e.b) throw InputError("self-loop at player " + std::to_string(e.a));
    e = normalized(e);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw InputError("duplicate edge in input graph");
  }
  edges_ = std::move(edges);
  adj_.resize(n_);
  for (const auto& e : edges_) {
    adj_[e.a].push_back(e.b);
    adj_[e.b].push_back(e.a);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

int InputGraph::max_degree() const {
  int d = 0;
  for (PlayerId v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

bool InputGraph::has_edge(PlayerId u, PlayerId v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  const auto& list = adj_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<int> InputGraph::components() const {
  std::vector<int> comp(n_, -1);
  int next = 0;
  std::vector<PlayerId> stack;
  for (PlayerId s = 0; s < n_; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const PlayerId v = stack.back();
      stack.pop_back();
      for (PlayerId u : adj_[v]) {
        if (comp[u] == -1) {
          comp[u] = next;
          stack.push_back(u);
        }
      }
    }
    ++next;
  }
  return comp;
}

int InputGraph::component_count() const {
  const auto comp = components();
  return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

bool InputGraph::is_forest() const {
  return edge_count() == n_ - component_count();
}

bool InputGraph::is_complete() const {
  return edge_count() == n_ * (n_ - 1) / 2;
}

AltruismNetwork::AltruismNetwork(bool directed, int player_count, std::vector<EdgePair> edges)
    : directed_(directed), n_(player_count) {
  if (n_ <= 0) throw InputError("player count must be positive");
  for (auto& e : edges) {
    check_endpoint(n_, e.a);
    check_endpoint(n_, e.b);
    if (e.a == e.b) throw InputError("self-loop at player " + std::to_string(e.a));
    if (!directed_) e = normalized(e);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw InputError("duplicate edge in altruism network");
  }
  edges_ = std::move(edges);
  out_.resize(n_);
  for (const auto& e : edges_) {
    out_[e.a].push_back(e.b);
    if (!directed_) out_[e.b].push_back(e.a);
  }
  for (auto& list : out_) std::sort(list.begin(), list.end());
}

bool AltruismNetwork::has_edge(const EdgePair& e) const {
  const EdgePair key = directed_ ? e : normalized(e);
  return std::binary_search(edges_.begin(), edges_.end(), key);
}

AltruismNetwork AltruismNetwork::with_edge_added(const EdgePair& e) const {
  if (has_edge(e)) throw InputError("altruism edge already present");
  auto edges = edges_;
  edges.push_back(directed_ ? e : normalized(e));
  return AltruismNetwork(directed_, n_, std::move(edges));
}

AltruismNetwork AltruismNetwork::with_edge_removed(const EdgePair& e) const {
  if (!has_edge(e)) throw InputError("altruism edge not present");
  const EdgePair key = directed_ ? e : normalized(e);
  std::vector<EdgePair> edges;
  edges.reserve(edges_.size() - 1);
  for (const auto& x : edges_) {
    if (!(x == key)) edges.push_back(x);
  }
  return AltruismNetwork(directed_, n_, std::move(edges));
}

}  // namespace bnpg
