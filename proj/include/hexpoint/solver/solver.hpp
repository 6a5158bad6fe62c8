#pragma once

// Exhaustive perfect-play solver for small boards.
//
// Positions are packed into bitboards (one bit per cell, index
// (z2 - 1) * k + (z1 - 1)) and searched by negamax with a transposition table
// keyed on the exact position: both stone sets plus the player to move. There
// is no symmetry reduction.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hexpoint/error.hpp"
#include "hexpoint/hex/board.hpp"

namespace hexpoint::solver {

using hex::Board;
using hex::Cell;
using hex::Coord;
using hex::Player;

enum class Outcome { WinForMover, LossForMover };

struct GameValue {
  Outcome outcome = Outcome::WinForMover;
  std::vector<Coord> pv;
};

struct SolverLimits {
  int max_k = 4;
  // Unlocks k = 5. Nothing above 5 is searchable with 64-bit keys.
  bool extended_budget = false;

  int cap() const { return extended_budget ? std::max(max_k, 5) : max_k; }
};

inline constexpr int kHardCap = 5;

namespace detail {

class BitBoard {
 public:
  explicit BitBoard(int k) : k_(k) {
    const int n = k * k;
    full_ = n == 32 ? 0xffffffffu : ((1u << n) - 1u);
    for (int z2 = 0; z2 < k; ++z2) {
      west_ |= 1u << (z2 * k);
      east_ |= 1u << (z2 * k + k - 1);
    }
    south_ = (1u << k) - 1u;
    north_ = south_ << (k * (k - 1));
  }

  int k() const { return k_; }
  std::uint32_t full() const { return full_; }

  std::uint32_t expand(std::uint32_t b) const {
    const std::uint32_t not_east = b & ~east_;
    const std::uint32_t not_west = b & ~west_;
    const auto k = static_cast<unsigned>(k_);
    std::uint32_t out = b | (not_east << 1) | (not_west >> 1) | (b << k) | (b >> k) |
                        (not_east << (k + 1)) | (not_west >> (k + 1));
    return out & full_;
  }

  bool connects(std::uint32_t stones, std::uint32_t from, std::uint32_t to) const {
    std::uint32_t reach = stones & from;
    if (reach == 0) return false;
    for (;;) {
      if (reach & to) return true;
      const std::uint32_t next = expand(reach) & stones;
      if (next == reach) return false;
      reach = next;
    }
  }

  bool h_wins(std::uint32_t h) const { return connects(h, west_, east_); }
  bool v_wins(std::uint32_t v) const { return connects(v, south_, north_); }

 private:
  int k_;
  std::uint32_t full_ = 0, west_ = 0, east_ = 0, south_ = 0, north_ = 0;
};

struct Packed {
  std::uint32_t h = 0;
  std::uint32_t v = 0;
  Player to_move = Player::H;

  std::uint64_t key() const {
    return static_cast<std::uint64_t>(h) | (static_cast<std::uint64_t>(v) << 25) |
           (static_cast<std::uint64_t>(to_move == Player::V) << 50);
  }
};

inline Packed pack(const Board& board) {
  Packed p;
  for (std::size_t i = 0; i < board.size(); ++i) {
    if (board.at_index(i) == Cell::H) p.h |= 1u << i;
    if (board.at_index(i) == Cell::V) p.v |= 1u << i;
  }
  p.to_move = board.to_move();
  return p;
}

}  // namespace detail

/// Reusable search context. The transposition table persists across calls on
/// the same instance, so batch work (e.g. the monotonicity sweep) shares it.
/// An instance is not safe for concurrent use; the free functions below each
/// own their instance and may be called from any thread.
class Solver {
 public:
  explicit Solver(int k, SolverLimits limits = {}) : bits_(checked_k(k, limits)) {}

  int k() const { return bits_.k(); }
  std::size_t table_size() const { return table_.size(); }

  /// Value of an arbitrary position, alternation not required. A side that
  /// already owns a winning chain has won regardless of whose turn it is.
  bool mover_wins(const Board& board) {
    require_size(board);
    return search(detail::pack(board));
  }

  Outcome outcome(const Board& board) {
    return mover_wins(board) ? Outcome::WinForMover : Outcome::LossForMover;
  }

  /// First move in (z2, z1) order that achieves the position's value.
  Coord best_move(const Board& board) {
    require_size(board);
    const detail::Packed p = detail::pack(board);
    if (terminal(p)) throw Error(ErrorCode::GameOver, "position is already decided");
    std::optional<Coord> fallback;
    for (std::size_t i = 0; i < board.size(); ++i) {
      const std::uint32_t bit = 1u << i;
      if ((p.h | p.v) & bit) continue;
      if (!fallback) fallback = board.coord(i);
      if (!search(child(p, bit))) return board.coord(i);
    }
    return *fallback;
  }

  GameValue solve(const Board& board) {
    GameValue value{outcome(board), {}};
    Board cur = board;
    while (!terminal(detail::pack(cur))) {
      const Coord m = best_move(cur);
      value.pv.push_back(m);
      cur = hex::play(cur, m);
    }
    return value;
  }

 private:
  static int checked_k(int k, const SolverLimits& limits) {
    const int cap = std::min(limits.cap(), kHardCap);
    if (k < 1 || k > cap) {
      throw Error(ErrorCode::BoardTooLarge, "solver handles boards up to k=" +
                                                std::to_string(cap) + ", got k=" + std::to_string(k));
    }
    return k;
  }

  void require_size(const Board& board) const {
    if (board.k() != bits_.k()) {
      throw Error(ErrorCode::InvalidArgument, "solver was built for k=" + std::to_string(bits_.k()));
    }
  }

  bool terminal(const detail::Packed& p) const {
    return bits_.h_wins(p.h) || bits_.v_wins(p.v) || (p.h | p.v) == bits_.full();
  }

  static detail::Packed child(const detail::Packed& p, std::uint32_t bit) {
    detail::Packed c = p;
    if (p.to_move == Player::H) {
      c.h |= bit;
    } else {
      c.v |= bit;
    }
    c.to_move = hex::opponent(p.to_move);
    return c;
  }

  bool search(const detail::Packed& p) {
    const bool h_won = bits_.h_wins(p.h);
    const bool v_won = bits_.v_wins(p.v);
    if (h_won || v_won) return (p.to_move == Player::H) == h_won;

    const std::uint64_t key = p.key();
    if (auto it = table_.find(key); it != table_.end()) return it->second;

    const std::uint32_t empty = ~(p.h | p.v) & bits_.full();
    bool win = false;
    for (std::uint32_t rest = empty; rest != 0 && !win; rest &= rest - 1) {
      const std::uint32_t bit = rest & (~rest + 1);
      win = !search(child(p, bit));
    }
    // A full board without a chain cannot occur; `win` stays false there.
    table_.emplace(key, win);
    return win;
  }

  detail::BitBoard bits_;
  std::unordered_map<std::uint64_t, bool> table_;
};

/// Perfect-play value of a game-mode position.
inline GameValue solve(const Board& board, const SolverLimits& limits = {}) {
  Solver s(board.k(), limits);
  if (!hex::alternation_consistent(board)) {
    throw Error(ErrorCode::InvalidArgument, "stone counts are not reachable by alternating play");
  }
  return s.solve(board);
}

inline Coord best_move(const Board& board, const SolverLimits& limits = {}) {
  Solver s(board.k(), limits);
  return s.best_move(board);
}

struct MonotonicityReport {
  bool holds = true;
  std::size_t positions_checked = 0;
  std::size_t extensions_checked = 0;
  std::optional<Board> counterexample;
  std::optional<Coord> extra_stone;

  std::string describe() const {
    std::string out = holds ? "extra stones never hurt" : "counterexample found";
    out += ": " + std::to_string(positions_checked) + " positions, " +
           std::to_string(extensions_checked) + " extensions";
    if (counterexample && extra_stone) {
      out += "\n" + hex::format_board(*counterexample) + "extra stone at " +
             hex::to_string(*extra_stone);
    }
    return out;
  }
};

/// For every alternation-consistent position P won by side s, adds one more s
/// stone on each empty cell (same player to move) and checks that s still
/// wins.
inline MonotonicityReport check_extra_stone_monotonicity(int k, const SolverLimits& limits = {}) {
  SolverLimits capped = limits;
  capped.max_k = std::min(limits.cap(), 3);
  capped.extended_budget = false;
  Solver solver(k, capped);

  MonotonicityReport report;
  const int n = k * k;
  std::vector<Cell> cells(static_cast<std::size_t>(n), Cell::Empty);

  // Odometer over {Empty, H, V}^n.
  for (;;) {
    for (Player mover : {Player::H, Player::V}) {
      const Board p(k, cells, mover);
      if (!hex::alternation_consistent(p)) continue;
      ++report.positions_checked;
      const bool mover_wins = solver.mover_wins(p);
      const Player side = mover_wins ? mover : hex::opponent(mover);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i] != Cell::Empty) continue;
        ++report.extensions_checked;
        Board extended = p.with(p.coord(i), hex::stone(side));
        const bool still = solver.mover_wins(extended) == (side == mover);
        if (!still && report.holds) {
          report.holds = false;
          report.counterexample = p;
          report.extra_stone = p.coord(i);
        }
      }
    }

    std::size_t digit = 0;
    while (digit < cells.size()) {
      Cell& c = cells[digit];
      if (c == Cell::Empty) {
        c = Cell::H;
        break;
      }
      if (c == Cell::H) {
        c = Cell::V;
        break;
      }
      c = Cell::Empty;
      ++digit;
    }
    if (digit == cells.size()) break;
  }
  return report;
}

}  // namespace hexpoint::solver
