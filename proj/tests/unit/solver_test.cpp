#include <gtest/gtest.h>

#include <random>

#include "hexpoint/solver/solver.hpp"

using namespace hexpoint;
using namespace hexpoint::hex;
using namespace hexpoint::solver;

namespace {

// Plain minimax over Board values, no table and no bit tricks.
bool oracle_mover_wins(const Board& b) {
  if (winning_chain(b, b.to_move())) return true;
  if (winning_chain(b, opponent(b.to_move()))) return false;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b.at_index(i) != Cell::Empty) continue;
    if (!oracle_mover_wins(play(b, b.coord(i)))) return true;
  }
  return false;
}

Board random_position(std::mt19937& rng, int k, int stones) {
  for (;;) {
    Board b(k);
    for (int s = 0; s < stones; ++s) {
      std::vector<Coord> empty;
      for (std::size_t i = 0; i < b.size(); ++i)
        if (b.at_index(i) == Cell::Empty) empty.push_back(b.coord(i));
      b = play(b, empty[rng() % empty.size()]);
    }
    if (!(winning_chain(b, Player::H) && winning_chain(b, Player::V))) return b;
  }
}

}  // namespace

TEST(Solve, TrivialBoard) {
  const auto v = solve(Board(1));
  EXPECT_EQ(v.outcome, Outcome::WinForMover);
  ASSERT_EQ(v.pv.size(), 1u);
  EXPECT_EQ(v.pv[0], (Coord{1, 1}));
}

TEST(Solve, EmptyBoardsEitherMover) {
  for (int k = 2; k <= 3; ++k) {
    for (Player p : {Player::H, Player::V}) {
      EXPECT_EQ(solve(Board(k, p)).outcome, Outcome::WinForMover) << "k=" << k;
    }
  }
}

TEST(Solve, MoverAlreadyConnected) {
  Board b(2, Player::H);
  b = b.with({1, 1}, Cell::H).with({2, 1}, Cell::H).with({1, 2}, Cell::V).with({2, 2}, Cell::V);
  const auto v = solve(b);
  EXPECT_EQ(v.outcome, Outcome::WinForMover);
  EXPECT_TRUE(v.pv.empty());
}

TEST(Solve, PvEndsTheGameWithTheRightWinner) {
  for (int k = 1; k <= 3; ++k) {
    const auto v = solve(Board(k));
    Board b(k);
    for (const auto& m : v.pv) b = play(b, m);
    EXPECT_EQ(winner(b), Player::H);
  }
}

TEST(Solve, RejectsUnreachableCounts) {
  Board b = Board(3).with({1, 1}, Cell::H).with({2, 1}, Cell::H);
  EXPECT_THROW(solve(b), Error);
}

TEST(Solver, AgreesWithPlainMinimax) {
  std::mt19937 rng(99);
  for (int k = 2; k <= 3; ++k) {
    Solver s(k);
    for (int trial = 0; trial < 300; ++trial) {
      const Board b = random_position(rng, k, static_cast<int>(rng() % (k * k)));
      EXPECT_EQ(s.mover_wins(b), oracle_mover_wins(b)) << format_board(b);
    }
  }
}

TEST(Solver, SizeLimits) {
  try {
    Solver s(5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BoardTooLarge);
  }
  EXPECT_NO_THROW(Solver(5, SolverLimits{4, true}));
  EXPECT_THROW(Solver(6, SolverLimits{4, true}), Error);
  EXPECT_THROW(Solver(0), Error);
}

TEST(BestMove, Examples) {
  EXPECT_EQ(best_move(Board(1)), (Coord{1, 1}));
  Solver s(2);
  const Coord m = s.best_move(Board(2));
  EXPECT_FALSE(s.mover_wins(play(Board(2), m)));
}

TEST(BestMove, DeterministicAndLowestWinning) {
  Solver s(3);
  const Board b(3);
  const Coord first = s.best_move(b);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(Solver(3).best_move(b), first);
  // No earlier cell in (z2, z1) order wins.
  for (std::size_t i = 0; i < b.index(first); ++i) EXPECT_TRUE(s.mover_wins(play(b, b.coord(i))));
}

TEST(BestMove, TerminalBoard) {
  const Board b = play(Board(1), {1, 1});
  try {
    best_move(b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GameOver);
  }
}

TEST(Monotonicity, SmallBoards) {
  for (int k = 1; k <= 2; ++k) {
    const auto r = check_extra_stone_monotonicity(k);
    EXPECT_TRUE(r.holds) << r.describe();
    EXPECT_GT(r.positions_checked, 0u);
  }
}

TEST(Monotonicity, CappedAtThree) { EXPECT_THROW(check_extra_stone_monotonicity(4), Error); }
