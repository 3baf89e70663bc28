// Copyright 2026 The qmprog Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qmp {

/// Undirected weighted graph without self-loops or parallel edges. Edges are
/// stored as (lo, hi) pairs in insertion order.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n_nodes);

  static Graph complete(int n_nodes);
  static Graph from_edges(int n_nodes, const std::vector<std::pair<int, int>>& edges);

  /// Throws ValidationError on self-loops, out-of-range endpoints and
  /// duplicate edges.
  void add_edge(int u, int v, double weight = 1.0);

  int n_nodes() const { return n_; }
  std::size_t n_edges() const { return edges_.size(); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<int>& neighbors(int u) const { return adj_[static_cast<std::size_t>(u)]; }
  bool has_edge(int u, int v) const;
  double total_weight() const;

  /// True iff `nodes` is non-empty and induces a connected subgraph.
  bool is_connected_subset(std::span<const int> nodes) const;

  /// Shortest path from `from` to `to` using only vertices in `allowed`
  /// (a membership mask of size n_nodes), BFS with smallest-index-first
  /// expansion. Empty if unreachable.
  std::vector<int> shortest_path(int from, int to, const std::vector<bool>& allowed) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.weights_ == b.weights_;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<double> weights_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint8_t> matrix_;  // n*n adjacency
};

/// Edge-list text: first token is n_nodes, followed by one `u v [w]` line
/// per edge. `#` starts a comment.
Graph parse_edge_list(const std::string& text);

}  // namespace qmp
