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

#include "qmp/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "qmp/error.hpp"

namespace qmp {

Graph::Graph(int n_nodes) : n_(n_nodes) {
  if (n_nodes < 0) throw ValidationError("n_nodes", "negative");
  adj_.resize(static_cast<std::size_t>(n_nodes));
  matrix_.assign(static_cast<std::size_t>(n_nodes) * static_cast<std::size_t>(n_nodes), 0);
}

Graph Graph::complete(int n_nodes) {
  Graph g(n_nodes);
  for (int u = 0; u < n_nodes; ++u) {
    for (int v = u + 1; v < n_nodes; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph Graph::from_edges(int n_nodes, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n_nodes);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v, double weight) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw ValidationError("edges", "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                       ") references a node outside [0, " + std::to_string(n_) + ")");
  }
  if (u == v) throw ValidationError("edges", "self-loop on node " + std::to_string(u));
  if (has_edge(u, v)) {
    throw ValidationError("edges", "duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
  }
  edges_.emplace_back(std::min(u, v), std::max(u, v));
  weights_.push_back(weight);
  auto insert_sorted = [](std::vector<int>& list, int x) { list.insert(std::lower_bound(list.begin(), list.end(), x), x); };
  insert_sorted(adj_[static_cast<std::size_t>(u)], v);
  insert_sorted(adj_[static_cast<std::size_t>(v)], u);
  const auto n = static_cast<std::size_t>(n_);
  matrix_[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)] = 1;
  matrix_[static_cast<std::size_t>(v) * n + static_cast<std::size_t>(u)] = 1;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  return matrix_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)] != 0;
}

double Graph::total_weight() const {
  double total = 0.0;
  for (double w : weights_) total += w;
  return total;
}

bool Graph::is_connected_subset(std::span<const int> nodes) const {
  if (nodes.empty()) return false;
  std::vector<bool> member(static_cast<std::size_t>(n_), false);
  for (int u : nodes) {
    if (u < 0 || u >= n_) return false;
    member[static_cast<std::size_t>(u)] = true;
  }
  std::vector<bool> seen(static_cast<std::size_t>(n_), false);
  std::vector<int> stack{nodes.front()};
  seen[static_cast<std::size_t>(nodes.front())] = true;
  std::size_t reached = 0;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    ++reached;
    for (int v : neighbors(u)) {
      if (member[static_cast<std::size_t>(v)] && !seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
        stack.push_back(v);
      }
    }
  }
  std::size_t distinct = 0;
  for (bool m : member) distinct += m ? 1 : 0;
  return reached == distinct;
}

std::vector<int> Graph::shortest_path(int from, int to, const std::vector<bool>& allowed) const {
  std::vector<int> parent(static_cast<std::size_t>(n_), -1);
  std::deque<int> queue{from};
  parent[static_cast<std::size_t>(from)] = from;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    if (u == to) break;
    for (int v : neighbors(u)) {
      if (allowed[static_cast<std::size_t>(v)] && parent[static_cast<std::size_t>(v)] < 0) {
        parent[static_cast<std::size_t>(v)] = u;
        queue.push_back(v);
      }
    }
  }
  if (parent[static_cast<std::size_t>(to)] < 0) return {};
  std::vector<int> path{to};
  while (path.back() != from) path.push_back(parent[static_cast<std::size_t>(path.back())]);
  std::reverse(path.begin(), path.end());
  return path;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  std::size_t line_no = 0;
  Graph g;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    try {
      if (n < 0) {
        if (tokens.size() != 1) throw ValidationError("graph", "header must be a single node count");
        n = std::stoi(tokens[0]);
        g = Graph(n);
        continue;
      }
      if (tokens.size() != 2 && tokens.size() != 3) throw ValidationError("graph", "expected 'u v [w]'");
      g.add_edge(std::stoi(tokens[0]), std::stoi(tokens[1]), tokens.size() == 3 ? std::stod(tokens[2]) : 1.0);
    } catch (const std::logic_error&) {
      throw ValidationError("graph", "line " + std::to_string(line_no) + ": malformed number");
    } catch (const ValidationError& e) {
      throw ValidationError("graph", "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (n < 0) throw ValidationError("graph", "missing node-count header");
  return g;
}

}  // namespace qmp
