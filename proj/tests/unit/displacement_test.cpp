#include <gtest/gtest.h>

#include "hexpoint/brouwer/displacement.hpp"

using namespace hexpoint;
using namespace hexpoint::brouwer;
using namespace hexpoint::hex;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

// Every board with cells drawn from {Empty, H, V}.
std::vector<Board> all_partial(int k) {
  std::vector<Board> out;
  const int n = k * k;
  int total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (int code = 0; code < total; ++code) {
    std::vector<Cell> cells(static_cast<std::size_t>(n));
    int c = code;
    for (auto& cell : cells) {
      cell = c % 3 == 0 ? Cell::Empty : c % 3 == 1 ? Cell::H : Cell::V;
      c /= 3;
    }
    out.emplace_back(k, cells, Player::H);
  }
  return out;
}

}  // namespace

TEST(DisplacementMap, EveryFullTwoByTwoBoardHasAChain) {
  int boards = 0;
  for (std::uint32_t mask = 0; mask < 16; ++mask) {
    std::vector<Cell> cells(4);
    for (int i = 0; i < 4; ++i) cells[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? Cell::H : Cell::V;
    EXPECT_EQ(code_of([&] { displacement_map(Board(2, cells, Player::H)); }), ErrorCode::WinningPathExists);
    ++boards;
  }
  EXPECT_EQ(boards, 16);
}

TEST(DisplacementMap, SingleCell) {
  EXPECT_EQ(code_of([] { displacement_map(play(Board(1), {1, 1})); }), ErrorCode::WinningPathExists);
}

TEST(DisplacementMap, NeedsFullBoard) {
  EXPECT_EQ(code_of([] { displacement_map(play(Board(2), {1, 1})); }), ErrorCode::BoardNotFull);
}

TEST(DisplacementMap, BoundsFailureIffChain) {
  // With the precondition check off, a step leaves the board exactly when
  // some player connects.
  for (int k = 1; k <= 3; ++k) {
    for (const Board& b : all_partial(k)) {
      DisplacementOptions opts;
      opts.partial = true;
      opts.check_precondition = false;
      const bool chain = winner(b).has_value();
      if (chain) {
        EXPECT_EQ(code_of([&] { displacement_map(b, opts); }), ErrorCode::OutOfBoundsDisplacement)
            << format_board(b);
      } else {
        EXPECT_NO_THROW(displacement_map(b, opts)) << format_board(b);
      }
    }
  }
}

TEST(DisplacementMap, PartialDemonstration) {
  Board b(3);
  b = b.with({1, 1}, Cell::H).with({2, 2}, Cell::V).with({3, 3}, Cell::H).with({2, 1}, Cell::V);
  DisplacementOptions opts;
  opts.partial = true;
  const auto m = displacement_map(b, opts);
  EXPECT_EQ(m.west, (std::vector<Coord>{{1, 1}}));
  EXPECT_EQ(m.east, (std::vector<Coord>{{3, 3}}));
  EXPECT_EQ(m.south, (std::vector<Coord>{{2, 1}, {2, 2}}));
  EXPECT_TRUE(m.north.empty());
  EXPECT_EQ(m.image({1, 1}), (Coord{2, 1}));
  EXPECT_EQ(m.image({3, 3}), (Coord{2, 3}));
  EXPECT_EQ(m.image({2, 2}), (Coord{2, 3}));
  EXPECT_FALSE(m.image({1, 2}).has_value());
  for (std::size_t i = 0; i < b.size(); ++i) {
    const Coord z = b.coord(i);
    if (auto w = m.image(z)) {
      EXPECT_TRUE(b.contains(*w));
      EXPECT_FALSE(*w == z);
    }
  }
}
