#pragma once

// Unit-step displacement map built from a Hex coloring that claims to have no
// winner. H cells reachable from the West edge step east, the other H cells
// step west; V cells reachable from the South edge step north, the other V
// cells step south. Every image stays on the board exactly when neither side
// has a winning chain, so on a full board construction must fail.

#include <optional>
#include <string>
#include <vector>

#include "hexpoint/error.hpp"
#include "hexpoint/hex/board.hpp"

namespace hexpoint::brouwer {

using hex::Board;
using hex::Cell;
using hex::Coord;
using hex::Player;

enum class Step { PlusE1, MinusE1, PlusE2, MinusE2 };

constexpr Coord apply(Step s, const Coord& z) {
  switch (s) {
    case Step::PlusE1: return {z.z1 + 1, z.z2};
    case Step::MinusE1: return {z.z1 - 1, z.z2};
    case Step::PlusE2: return {z.z1, z.z2 + 1};
    case Step::MinusE2: return {z.z1, z.z2 - 1};
  }
  return z;
}

struct DisplacementMap {
  int k = 0;
  // Indexed like the board; empty for unassigned cells in partial mode.
  std::vector<std::optional<Step>> steps;
  std::vector<Coord> west, east, south, north;

  std::optional<Coord> image(const Coord& z) const {
    const auto& s = steps.at(static_cast<std::size_t>(z.z2 - 1) * k + (z.z1 - 1));
    if (!s) return std::nullopt;
    return apply(*s, z);
  }
};

struct DisplacementOptions {
  // Allow empty cells; they are left out of the map.
  bool partial = false;
  // Skip the winning-chain test and let the bounds check report the failure.
  bool check_precondition = true;
};

namespace detail {

/// Cells of `color` connected through `color` cells to the given side.
inline std::vector<bool> reach_from(const Board& board, Cell color, hex::Side side) {
  std::vector<bool> seen(board.size(), false);
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < board.size(); ++i) {
    if (board.at_index(i) == color && hex::on_side(board.coord(i), side, board.k())) {
      seen[i] = true;
      stack.push_back(i);
    }
  }
  while (!stack.empty()) {
    const std::size_t cur = stack.back();
    stack.pop_back();
    for (const auto& n : board.neighbours(board.coord(cur))) {
      const std::size_t ni = board.index(n);
      if (!seen[ni] && board.at_index(ni) == color) {
        seen[ni] = true;
        stack.push_back(ni);
      }
    }
  }
  return seen;
}

inline std::string describe_chain(const std::vector<Coord>& chain) {
  std::string out;
  for (const auto& c : chain) out += (out.empty() ? "" : " ") + hex::to_string(c);
  return out;
}

}  // namespace detail

inline DisplacementMap displacement_map(const Board& board, const DisplacementOptions& options = {}) {
  if (!options.partial && !board.full()) {
    throw Error(ErrorCode::BoardNotFull, "displacement map needs every cell assigned to H or V");
  }
  if (options.check_precondition) {
    for (Player p : {Player::H, Player::V}) {
      if (auto chain = hex::winning_chain(board, p)) {
        throw Error(ErrorCode::WinningPathExists,
                    std::string(1, hex::to_char(p)) + " chain " + detail::describe_chain(*chain));
      }
    }
  }

  const int k = board.k();
  const auto west = detail::reach_from(board, Cell::H, hex::Side::W);
  const auto south = detail::reach_from(board, Cell::V, hex::Side::S);

  DisplacementMap map;
  map.k = k;
  map.steps.resize(board.size());
  for (std::size_t i = 0; i < board.size(); ++i) {
    const Coord z = board.coord(i);
    switch (board.at_index(i)) {
      case Cell::H:
        map.steps[i] = west[i] ? Step::PlusE1 : Step::MinusE1;
        (west[i] ? map.west : map.east).push_back(z);
        break;
      case Cell::V:
        map.steps[i] = south[i] ? Step::PlusE2 : Step::MinusE2;
        (south[i] ? map.south : map.north).push_back(z);
        break;
      case Cell::Empty:
        break;
    }
    if (map.steps[i] && !board.contains(apply(*map.steps[i], z))) {
      throw Error(ErrorCode::OutOfBoundsDisplacement,
                  "cell " + hex::to_string(z) + " would be sent to " +
                      hex::to_string(apply(*map.steps[i], z)) + ", off the board");
    }
  }
  return map;
}

}  // namespace hexpoint::brouwer
