#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hexpoint/error.hpp"
#include "hexpoint/hex/board.hpp"
#include "hexpoint/hex/interface_graph.hpp"

namespace hexpoint::hex {

struct NoDrawReport {
  int k = 0;
  std::uint64_t boards = 0;
  std::uint64_t exactly_one = 0;
  std::uint64_t draws = 0;
  std::uint64_t double_wins = 0;
  // Only filled when the interface cross-check ran.
  std::uint64_t interface_checked = 0;
  std::uint64_t interface_agree = 0;

  bool ok() const {
    return exactly_one == boards && draws == 0 && double_wins == 0 &&
           interface_agree == interface_checked;
  }
};

inline constexpr int kNoDrawMaxK = 5;

/// Visits all 2^(k*k) full colorings and counts winners of each kind. With
/// `cross_check_interface` the interface-graph winner is compared as well.
inline NoDrawReport check_no_draw(int k, bool cross_check_interface = false) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "board size must be positive");
  if (k > kNoDrawMaxK) {
    throw Error(ErrorCode::ResourceLimit, "exhaustive check is limited to k <= " +
                                              std::to_string(kNoDrawMaxK));
  }
  const int n = k * k;
  NoDrawReport r;
  r.k = k;
  std::vector<Cell> cells(static_cast<std::size_t>(n));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (int i = 0; i < n; ++i) cells[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? Cell::H : Cell::V;
    const Board b(k, cells, Player::H);
    const bool h = winning_chain(b, Player::H).has_value();
    const bool v = winning_chain(b, Player::V).has_value();
    ++r.boards;
    if (h && v) {
      ++r.double_wins;
    } else if (!h && !v) {
      ++r.draws;
    } else {
      ++r.exactly_one;
    }
    if (cross_check_interface) {
      ++r.interface_checked;
      const Player expect = h ? Player::H : Player::V;
      if ((h != v) && winner_via_interface(b) == expect) ++r.interface_agree;
    }
  }
  return r;
}

}  // namespace hexpoint::hex
