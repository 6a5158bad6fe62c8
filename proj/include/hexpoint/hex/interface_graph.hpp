#pragma once

// Interface graph of a fully colored board.
//
// Tile corners are represented without geometry. Three mutually adjacent
// lattice cells meet at exactly one corner of the hexagonal tiling, so a
// corner is the triangle of those three cells. Every triangle has the form
//
//   lower(a) = {a, a + (1,0), a + (1,1)}
//   upper(a) = {a, a + (0,1), a + (1,1)}
//
// for an anchor a, and a tile side is the lattice edge between two cells;
// its endpoints are the two triangles containing that edge.
//
// The board is surrounded by a ring of virtual cells, one per boundary region:
// West (z1 = 0) and East (z1 = k + 1) belong to H, South (z2 = 0) and North
// (z2 = k + 1) to V. The ring corners (0,0) and (k+1,k+1) sit at the obtuse
// board corners and are given to West and East respectively; the other two
// ring corners touch no tile and are ignored. A triangle containing no board
// cell lies outside the board; the four such triangles reached by an interface
// edge are the boundary nodes.

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hexpoint/hex/board.hpp"
#include "hexpoint/hex/graph.hpp"

namespace hexpoint::hex {

/// Boundary nodes in clockwise order starting at the acute North-West corner.
/// They play the role of u1..u4.
enum class BoundaryNode { WN = 0, NE = 1, ES = 2, SW = 3 };

struct Corner {
  Coord anchor;
  bool upper = false;

  std::array<Coord, 3> cells() const {
    const Coord a = anchor;
    const Coord mid = upper ? Coord{a.z1, a.z2 + 1} : Coord{a.z1 + 1, a.z2};
    return {a, mid, Coord{a.z1 + 1, a.z2 + 1}};
  }

  friend bool operator==(const Corner&, const Corner&) = default;
  friend bool operator<(const Corner& a, const Corner& b) {
    if (!(a.anchor == b.anchor)) return a.anchor < b.anchor;
    return a.upper < b.upper;
  }
};

/// Corner `i` (0..5) of `tile`, lying between neighbour directions i and i+1
/// of kNeighbourOffsets. Shared corners of different tiles compare equal.
inline Corner corner_of(const Coord& tile, int i) {
  const Coord d0 = kNeighbourOffsets[static_cast<std::size_t>(i % 6)];
  const Coord d1 = kNeighbourOffsets[static_cast<std::size_t>((i + 1) % 6)];
  const std::array<Coord, 3> cells{tile, Coord{tile.z1 + d0.z1, tile.z2 + d0.z2},
                                   Coord{tile.z1 + d1.z1, tile.z2 + d1.z2}};
  Coord lo = cells[0];
  for (const auto& c : cells) {
    lo.z1 = std::min(lo.z1, c.z1);
    lo.z2 = std::min(lo.z2, c.z2);
  }
  bool upper = false;
  for (const auto& c : cells) {
    if (c == Coord{lo.z1, lo.z2 + 1}) upper = true;
  }
  return Corner{lo, upper};
}

/// Lattice-space position of a corner: the centroid of its three cells.
inline std::pair<double, double> corner_position(const Corner& c) {
  double x = 0, y = 0;
  for (const auto& cell : c.cells()) {
    x += cell.z1;
    y += cell.z2;
  }
  return {x / 3.0, y / 3.0};
}

struct InterfaceNode {
  Corner corner;
  std::optional<BoundaryNode> boundary;
};

struct InterfaceGraph {
  int k = 0;
  Graph graph;
  std::vector<InterfaceNode> nodes;
  std::array<NodeId, 4> boundary{};
  // Tile side crossed by each edge, keyed by (lo, hi) node pair.
  std::map<std::pair<NodeId, NodeId>, std::pair<Coord, Coord>> sides;

  NodeId boundary_node(BoundaryNode b) const { return boundary[static_cast<std::size_t>(b)]; }
};

namespace detail {

enum class Region { Board, W, E, S, N, None };

inline Region region_of(const Coord& z, int k) {
  const bool z1_in = z.z1 >= 1 && z.z1 <= k;
  const bool z2_in = z.z2 >= 1 && z.z2 <= k;
  if (z1_in && z2_in) return Region::Board;
  if (z.z1 == 0 && (z2_in || z.z2 == 0)) return Region::W;
  if (z.z1 == k + 1 && (z2_in || z.z2 == k + 1)) return Region::E;
  if (z.z2 == 0 && z1_in) return Region::S;
  if (z.z2 == k + 1 && z1_in) return Region::N;
  return Region::None;
}

inline std::optional<BoundaryNode> boundary_between(Region a, Region b) {
  auto is = [&](Region x, Region y) { return (a == x && b == y) || (a == y && b == x); };
  if (is(Region::W, Region::N)) return BoundaryNode::WN;
  if (is(Region::N, Region::E)) return BoundaryNode::NE;
  if (is(Region::E, Region::S)) return BoundaryNode::ES;
  if (is(Region::S, Region::W)) return BoundaryNode::SW;
  return std::nullopt;
}

}  // namespace detail

/// Builds the graph whose edges are the tile sides separating an H face from a
/// V face. Requires a full board.
inline InterfaceGraph interface_graph(const Board& board) {
  if (!board.full()) {
    throw Error(ErrorCode::BoardNotFull, "interface graph needs a fully colored board");
  }
  const int k = board.k();
  using detail::Region;

  auto color = [&](const Coord& z) -> std::optional<Cell> {
    switch (detail::region_of(z, k)) {
      case Region::Board: return board.at(z);
      case Region::W:
      case Region::E: return Cell::H;
      case Region::S:
      case Region::N: return Cell::V;
      case Region::None: return std::nullopt;
    }
    return std::nullopt;
  };
  auto is_core = [&](const Corner& c) {
    for (const auto& cell : c.cells()) {
      if (board.contains(cell)) return true;
    }
    return false;
  };

  InterfaceGraph g;
  g.k = k;
  std::map<Corner, NodeId> ids;
  for (int a2 = 0; a2 <= k; ++a2) {
    for (int a1 = 0; a1 <= k; ++a1) {
      for (bool upper : {false, true}) {
        const Corner c{{a1, a2}, upper};
        if (!is_core(c)) continue;
        ids.emplace(c, g.graph.add_node());
        g.nodes.push_back({c, std::nullopt});
      }
    }
  }

  std::array<bool, 4> boundary_seen{};
  constexpr std::array<Coord, 3> kForward{{{1, 0}, {0, 1}, {1, 1}}};
  for (int z2 = 0; z2 <= k + 1; ++z2) {
    for (int z1 = 0; z1 <= k + 1; ++z1) {
      const Coord a{z1, z2};
      for (const auto& d : kForward) {
        const Coord b{z1 + d.z1, z2 + d.z2};
        const auto ca = color(a);
        const auto cb = color(b);
        if (!ca || !cb || *ca == *cb) continue;

        Corner left, right;
        if (d == Coord{1, 0}) {
          left = {a, false};
          right = {{a.z1, a.z2 - 1}, true};
        } else if (d == Coord{0, 1}) {
          left = {a, true};
          right = {{a.z1 - 1, a.z2}, false};
        } else {
          left = {a, false};
          right = {a, true};
        }
        const bool left_core = is_core(left);
        const bool right_core = is_core(right);
        if (!left_core && !right_core) continue;

        auto node_for = [&](const Corner& c, bool core) -> NodeId {
          if (core) return ids.at(c);
          const auto which = detail::boundary_between(detail::region_of(a, k),
                                                      detail::region_of(b, k));
          if (!which) throw std::logic_error("interface edge leaves the board between equal regions");
          const auto slot = static_cast<std::size_t>(*which);
          if (boundary_seen[slot]) throw std::logic_error("boundary node reached twice");
          boundary_seen[slot] = true;
          const NodeId id = g.graph.add_node();
          g.nodes.push_back({c, *which});
          g.boundary[slot] = id;
          return id;
        };
        const NodeId u = node_for(left, left_core);
        const NodeId v = node_for(right, right_core);
        g.graph.add_edge(u, v);
        g.sides.emplace(std::minmax(u, v), std::make_pair(a, b));
      }
    }
  }
  for (bool seen : boundary_seen) {
    if (!seen) throw std::logic_error("missing boundary node");
  }
  return g;
}

/// The boundary-to-boundary paths of the interface graph. On a full board
/// there are exactly two and they do not share a node.
inline std::vector<std::vector<NodeId>> boundary_paths(const InterfaceGraph& g,
                                                       const Decomposition& d) {
  std::vector<std::vector<NodeId>> out;
  for (const auto& p : d.paths) {
    if (g.nodes[p.front()].boundary && g.nodes[p.back()].boundary) out.push_back(p);
  }
  return out;
}

/// Winner read off the interface graph: the path starting at the North-West
/// boundary node ends at North-East when an H chain runs beneath it, and at
/// South-West when a V chain does.
inline Player winner_via_interface(const Board& board) {
  const InterfaceGraph g = interface_graph(board);
  const Decomposition d = decompose(g.graph);
  const NodeId wn = g.boundary_node(BoundaryNode::WN);
  for (const auto& path : boundary_paths(g, d)) {
    NodeId other;
    if (path.front() == wn) {
      other = path.back();
    } else if (path.back() == wn) {
      other = path.front();
    } else {
      continue;
    }
    if (other == g.boundary_node(BoundaryNode::NE)) return Player::H;
    if (other == g.boundary_node(BoundaryNode::SW)) return Player::V;
    throw std::logic_error("interface path joins opposite corners");
  }
  throw std::logic_error("no interface path leaves the North-West corner");
}

}  // namespace hexpoint::hex
