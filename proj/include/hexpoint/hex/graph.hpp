#pragma once

// Undirected simple graphs with maximum degree two, and their split into
// isolated vertices, simple paths and simple cycles.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hexpoint/error.hpp"

namespace hexpoint::hex {

using NodeId = std::size_t;

class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t node_count) : adjacency_(node_count) {}

  NodeId add_node() {
    adjacency_.emplace_back();
    return adjacency_.size() - 1;
  }

  /// Adds an undirected edge. Self loops and repeated edges are rejected.
  void add_edge(NodeId a, NodeId b) {
    if (a >= adjacency_.size() || b >= adjacency_.size()) {
      throw Error(ErrorCode::InvalidArgument, "edge endpoint out of range");
    }
    if (a == b) throw Error(ErrorCode::InvalidArgument, "self loop");
    if (has_edge(a, b)) throw Error(ErrorCode::InvalidArgument, "repeated edge");
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
    ++edge_count_;
  }

  bool has_edge(NodeId a, NodeId b) const {
    const auto& row = adjacency_.at(a);
    return std::find(row.begin(), row.end(), b) != row.end();
  }

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t degree(NodeId n) const { return adjacency_.at(n).size(); }
  const std::vector<NodeId>& neighbours(NodeId n) const { return adjacency_.at(n); }

  std::size_t max_degree() const {
    std::size_t best = 0;
    for (const auto& row : adjacency_) best = std::max(best, row.size());
    return best;
  }

  /// Edges as (lo, hi) pairs, sorted.
  std::vector<std::pair<NodeId, NodeId>> edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(edge_count_);
    for (NodeId a = 0; a < adjacency_.size(); ++a) {
      for (NodeId b : adjacency_[a]) {
        if (a < b) out.emplace_back(a, b);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t edge_count_ = 0;
};

struct Decomposition {
  std::vector<NodeId> isolated;
  // Node sequences; consecutive nodes are joined by an edge. A path starts and
  // ends at degree-one nodes. A cycle lists each node once, the closing edge
  // runs from back() to front().
  std::vector<std::vector<NodeId>> paths;
  std::vector<std::vector<NodeId>> cycles;

  /// Edge set implied by the pieces, as sorted (lo, hi) pairs.
  std::vector<std::pair<NodeId, NodeId>> edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    auto add = [&out](NodeId a, NodeId b) { out.emplace_back(std::min(a, b), std::max(a, b)); };
    for (const auto& p : paths) {
      for (std::size_t i = 0; i + 1 < p.size(); ++i) add(p[i], p[i + 1]);
    }
    for (const auto& c : cycles) {
      for (std::size_t i = 0; i < c.size(); ++i) add(c[i], c[(i + 1) % c.size()]);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

/// Splits a graph of maximum degree two into its components. Paths are walked
/// from their lower-numbered endpoint, cycles from their lowest node.
inline Decomposition decompose(const Graph& g) {
  for (NodeId n = 0; n < g.node_count(); ++n) {
    if (g.degree(n) > 2) {
      throw Error(ErrorCode::DegreeTooHigh, "node " + std::to_string(n) + " has degree " +
                                                std::to_string(g.degree(n)));
    }
  }

  Decomposition out;
  std::vector<bool> seen(g.node_count(), false);

  auto walk = [&](NodeId start) {
    std::vector<NodeId> seq{start};
    seen[start] = true;
    NodeId prev = start;
    NodeId cur = start;
    for (;;) {
      const NodeId* next = nullptr;
      for (const NodeId& n : g.neighbours(cur)) {
        if (n != prev && !seen[n]) {
          next = &n;
          break;
        }
      }
      if (next == nullptr) break;
      prev = cur;
      cur = *next;
      seen[cur] = true;
      seq.push_back(cur);
    }
    return seq;
  };

  for (NodeId n = 0; n < g.node_count(); ++n) {
    if (seen[n]) continue;
    if (g.degree(n) == 0) {
      seen[n] = true;
      out.isolated.push_back(n);
    } else if (g.degree(n) == 1) {
      out.paths.push_back(walk(n));
    }
  }
  // Whatever remains has every node of degree two: cycles.
  for (NodeId n = 0; n < g.node_count(); ++n) {
    if (!seen[n]) out.cycles.push_back(walk(n));
  }
  return out;
}

}  // namespace hexpoint::hex
