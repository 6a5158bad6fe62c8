#pragma once

// Hex position on the k x k lattice board. Cell (z1, z2) with 1 <= z1, z2 <= k;
// two cells touch when their max-norm distance is 1 and they are comparable
// componentwise, which gives the six hexagonal neighbours
// (+-1,0), (0,+-1), (+1,+1), (-1,-1).
//
// H connects West (z1 = 1) to East (z1 = k).
// V connects South (z2 = 1) to North (z2 = k).

#include <algorithm>
#include <array>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hexpoint/error.hpp"

namespace hexpoint::hex {

enum class Player { H, V };
enum class Cell { Empty, H, V };
enum class Side { N, S, E, W };

constexpr Player opponent(Player p) { return p == Player::H ? Player::V : Player::H; }
constexpr Cell stone(Player p) { return p == Player::H ? Cell::H : Cell::V; }
constexpr char to_char(Player p) { return p == Player::H ? 'H' : 'V'; }
constexpr char to_char(Cell c) {
  switch (c) {
    case Cell::H: return 'H';
    case Cell::V: return 'V';
    default: return '.';
  }
}

struct Coord {
  int z1 = 1;
  int z2 = 1;

  friend constexpr bool operator==(const Coord&, const Coord&) = default;
  // (z2, z1) lexicographic, the tie-break order used across the library.
  friend constexpr bool operator<(const Coord& a, const Coord& b) {
    return a.z2 != b.z2 ? a.z2 < b.z2 : a.z1 < b.z1;
  }
};

inline std::string to_string(const Coord& c) {
  return "(" + std::to_string(c.z1) + "," + std::to_string(c.z2) + ")";
}

/// Componentwise a <= b.
constexpr bool dominated(const Coord& a, const Coord& b) {
  return a.z1 <= b.z1 && a.z2 <= b.z2;
}

/// Max-norm distance one and comparable.
constexpr bool adjacent(const Coord& a, const Coord& b) {
  const int d1 = a.z1 > b.z1 ? a.z1 - b.z1 : b.z1 - a.z1;
  const int d2 = a.z2 > b.z2 ? a.z2 - b.z2 : b.z2 - a.z2;
  const int dist = d1 > d2 ? d1 : d2;
  return dist == 1 && (dominated(a, b) || dominated(b, a));
}

/// Offsets of the six neighbours, in counter-clockwise order starting East.
inline constexpr std::array<Coord, 6> kNeighbourOffsets{{
    {1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}};

constexpr bool on_side(const Coord& c, Side side, int k) {
  switch (side) {
    case Side::N: return c.z2 == k;
    case Side::S: return c.z2 == 1;
    case Side::E: return c.z1 == k;
    case Side::W: return c.z1 == 1;
  }
  return false;
}

inline constexpr int kMaxBoardSide = 64;

class Board {
 public:
  explicit Board(int k, Player to_move = Player::H) : k_(k), to_move_(to_move) {
    if (k < 1 || k > kMaxBoardSide) {
      throw Error(ErrorCode::InvalidArgument,
                  "board size must be in 1.." + std::to_string(kMaxBoardSide) +
                      ", got " + std::to_string(k));
    }
    cells_.assign(static_cast<std::size_t>(k) * k, Cell::Empty);
  }

  /// Cells in index order: (z1, z2) lives at (z2 - 1) * k + (z1 - 1).
  Board(int k, std::vector<Cell> cells, Player to_move) : Board(k, to_move) {
    if (cells.size() != cells_.size()) {
      throw Error(ErrorCode::InvalidArgument, "cell array does not match board size");
    }
    cells_ = std::move(cells);
  }

  int k() const { return k_; }
  Player to_move() const { return to_move_; }
  std::size_t size() const { return cells_.size(); }

  bool contains(const Coord& c) const {
    return c.z1 >= 1 && c.z1 <= k_ && c.z2 >= 1 && c.z2 <= k_;
  }

  std::size_t index(const Coord& c) const {
    return static_cast<std::size_t>(c.z2 - 1) * k_ + (c.z1 - 1);
  }
  Coord coord(std::size_t index) const {
    return {static_cast<int>(index % k_) + 1, static_cast<int>(index / k_) + 1};
  }

  Cell at(const Coord& c) const {
    require_inside(c);
    return cells_[index(c)];
  }
  Cell at_index(std::size_t i) const { return cells_[i]; }

  /// Analysis-mode edit: any coloring is allowed, alternation is not checked.
  Board with(const Coord& c, Cell value) const {
    require_inside(c);
    Board out = *this;
    out.cells_[index(c)] = value;
    return out;
  }
  Board with_to_move(Player p) const {
    Board out = *this;
    out.to_move_ = p;
    return out;
  }

  std::size_t count(Cell value) const {
    return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), value));
  }
  bool full() const { return count(Cell::Empty) == 0; }

  std::vector<Coord> neighbours(const Coord& c) const {
    std::vector<Coord> out;
    out.reserve(6);
    for (const auto& d : kNeighbourOffsets) {
      Coord n{c.z1 + d.z1, c.z2 + d.z2};
      if (contains(n)) out.push_back(n);
    }
    return out;
  }

  friend bool operator==(const Board&, const Board&) = default;

 private:
  void require_inside(const Coord& c) const {
    if (!contains(c)) {
      throw Error(ErrorCode::OutOfBounds,
                  "coordinate " + to_string(c) + " is outside the " + std::to_string(k_) +
                      "x" + std::to_string(k_) + " board");
    }
  }

  int k_;
  Player to_move_;
  std::vector<Cell> cells_;
};

/// Game-mode move: the mover's stone goes on an empty cell and the turn passes.
inline Board play(const Board& board, const Coord& at) {
  if (board.at(at) != Cell::Empty) {
    throw Error(ErrorCode::OccupiedCell, "cell " + to_string(at) + " is already occupied");
  }
  return board.with(at, stone(board.to_move())).with_to_move(opponent(board.to_move()));
}

/// Whether stone counts are consistent with alternating play from an empty
/// board, whoever moved first.
inline bool alternation_consistent(const Board& board) {
  const auto h = board.count(Cell::H);
  const auto v = board.count(Cell::V);
  if (h == v) return true;
  if (h == v + 1) return board.to_move() == Player::V;
  if (v == h + 1) return board.to_move() == Player::H;
  return false;
}

/// A chain of `player` stones joining that player's two sides, if one exists.
/// Breadth-first, so the chain returned is a shortest one.
inline std::optional<std::vector<Coord>> winning_chain(const Board& board, Player player) {
  const int k = board.k();
  const Cell mine = stone(player);
  const Side from = player == Player::H ? Side::W : Side::S;
  const Side to = player == Player::H ? Side::E : Side::N;

  std::vector<int> parent(board.size(), -2);
  std::vector<std::size_t> queue;
  for (std::size_t i = 0; i < board.size(); ++i) {
    if (board.at_index(i) == mine && on_side(board.coord(i), from, k)) {
      parent[i] = -1;
      queue.push_back(i);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t cur = queue[head];
    const Coord c = board.coord(cur);
    if (on_side(c, to, k)) {
      std::vector<Coord> chain;
      for (int i = static_cast<int>(cur); i >= 0; i = parent[i]) {
        chain.push_back(board.coord(static_cast<std::size_t>(i)));
      }
      std::reverse(chain.begin(), chain.end());
      return chain;
    }
    for (const Coord& n : board.neighbours(c)) {
      const std::size_t ni = board.index(n);
      if (parent[ni] == -2 && board.at_index(ni) == mine) {
        parent[ni] = static_cast<int>(cur);
        queue.push_back(ni);
      }
    }
  }
  return std::nullopt;
}

/// The player owning a side-to-side chain, if any. Partial boards allowed.
inline std::optional<Player> winner(const Board& board) {
  if (winning_chain(board, Player::H)) return Player::H;
  if (winning_chain(board, Player::V)) return Player::V;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Text format
//
//   k=<int>
//   <k rows of '.', 'H', 'V'; row z2 = k first, columns z1 = 1..k>
//   to_move=<H|V>        (optional on input, always written)

inline std::string format_board(const Board& board) {
  std::string out = "k=" + std::to_string(board.k()) + "\n";
  for (int z2 = board.k(); z2 >= 1; --z2) {
    for (int z1 = 1; z1 <= board.k(); ++z1) out.push_back(to_char(board.at({z1, z2})));
    out.push_back('\n');
  }
  out += "to_move=";
  out.push_back(to_char(board.to_move()));
  out.push_back('\n');
  return out;
}

inline Board parse_board(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::string cur;
    for (char ch : text) {
      if (ch == '\n') {
        if (!cur.empty() && cur.back() == '\r') cur.pop_back();
        lines.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(ch);
      }
    }
    if (!cur.empty()) lines.push_back(cur);
  }
  auto fail = [](std::size_t line, std::size_t col, const std::string& what) -> Error {
    return Error(ErrorCode::BoardParseError, "line " + std::to_string(line + 1) + ", column " +
                                                 std::to_string(col + 1) + ": " + what);
  };

  if (lines.empty() || lines[0].rfind("k=", 0) != 0) throw fail(0, 0, "expected 'k=<int>'");
  const std::string digits = lines[0].substr(2);
  if (digits.empty() || digits.size() > 3 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw fail(0, 2, "expected a positive integer board size");
  }
  const int k = std::atoi(digits.c_str());
  if (k < 1 || k > kMaxBoardSide) {
    throw fail(0, 2, "board size must be in 1.." + std::to_string(kMaxBoardSide));
  }
  if (lines.size() < static_cast<std::size_t>(k) + 1) {
    throw fail(lines.size(), 0, "expected " + std::to_string(k) + " board rows");
  }

  std::vector<Cell> cells(static_cast<std::size_t>(k) * k, Cell::Empty);
  for (int row = 0; row < k; ++row) {
    const std::string& line = lines[static_cast<std::size_t>(row) + 1];
    if (line.size() != static_cast<std::size_t>(k)) {
      throw fail(row + 1, std::min(line.size(), static_cast<std::size_t>(k)),
                 "expected exactly " + std::to_string(k) + " cells");
    }
    const int z2 = k - row;
    for (int col = 0; col < k; ++col) {
      Cell cell;
      switch (line[col]) {
        case '.': cell = Cell::Empty; break;
        case 'H': cell = Cell::H; break;
        case 'V': cell = Cell::V; break;
        default:
          throw fail(row + 1, col, std::string("illegal character '") + line[col] + "'");
      }
      cells[static_cast<std::size_t>(z2 - 1) * k + col] = cell;
    }
  }

  Board board(k, std::move(cells), Player::H);
  std::size_t next = static_cast<std::size_t>(k) + 1;
  if (next < lines.size() && lines[next].rfind("to_move=", 0) == 0) {
    const std::string who = lines[next].substr(8);
    if (who == "H") {
      board = board.with_to_move(Player::H);
    } else if (who == "V") {
      board = board.with_to_move(Player::V);
    } else {
      throw fail(next, 8, "expected 'H' or 'V'");
    }
    ++next;
  }
  for (; next < lines.size(); ++next) {
    if (!lines[next].empty()) throw fail(next, 0, "unexpected trailing content");
  }
  return board;
}

}  // namespace hexpoint::hex
