#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "hexpoint/app/session.hpp"

using namespace hexpoint;
using namespace hexpoint::app;

namespace {

std::filesystem::path fresh_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("hexpoint_" + name + "_" + new_session_id());
  std::filesystem::remove_all(dir);
  return dir;
}

GameSession random_game(std::mt19937& rng) {
  GameSession s;
  s.id = new_session_id();
  s.k = 1 + static_cast<int>(rng() % 6);
  s.opponent = rng() % 2 ? Opponent::Solver : Opponent::None;
  s.board = Board(s.k);
  const int moves = static_cast<int>(rng() % (s.k * s.k + 1));
  for (int i = 0; i < moves && !hex::winner(s.board); ++i) {
    std::vector<Coord> empty;
    for (std::size_t c = 0; c < s.board.size(); ++c)
      if (s.board.at_index(c) == hex::Cell::Empty) empty.push_back(s.board.coord(c));
    const Coord at = empty[rng() % empty.size()];
    s.history.push_back({at, s.board.to_move(), now_ms()});
    s.board = hex::play(s.board, at);
  }
  return s;
}

}  // namespace

TEST(Session, Ids) {
  const auto a = new_session_id(), b = new_session_id();
  EXPECT_EQ(a.size(), 32u);
  EXPECT_NE(a, b);
  EXPECT_TRUE(SessionStore::valid_id(a));
  EXPECT_FALSE(SessionStore::valid_id("../etc"));
  EXPECT_FALSE(SessionStore::valid_id(""));
}

TEST(Session, SaveThenLoad) {
  const auto dir = fresh_dir("roundtrip");
  std::mt19937 rng(1);
  SessionStore store(dir);
  const auto s = random_game(rng);
  store.save(s);
  const auto back = store.load(s.id);
  EXPECT_EQ(back.board, s.board);
  EXPECT_EQ(hex::format_board(back.board), hex::format_board(s.board));
  EXPECT_EQ(back.history.size(), s.history.size());
  EXPECT_EQ(to_json(back), to_json(s));
  std::filesystem::remove_all(dir);
}

TEST(Session, HundredRoundTrips) {
  const auto dir = fresh_dir("hundred");
  std::mt19937 rng(2);
  std::vector<GameSession> games;
  {
    SessionStore store(dir);
    for (int i = 0; i < 100; ++i) {
      games.push_back(random_game(rng));
      store.create(games.back());
    }
  }
  SessionStore reopened(dir);
  for (const auto& g : games) {
    const auto back = reopened.load(g.id);
    EXPECT_EQ(replay(back.k, back.history), back.board);
    EXPECT_EQ(hex::format_board(back.board), hex::format_board(g.board));
  }
  std::filesystem::remove_all(dir);
}

TEST(Session, TamperedHistory) {
  const auto dir = fresh_dir("tamper");
  SessionStore store(dir);
  GameSession s;
  s.id = new_session_id();
  s.k = 3;
  s.board = Board(3);
  for (Coord at : {Coord{1, 1}, Coord{2, 2}, Coord{3, 1}}) {
    s.history.push_back({at, s.board.to_move(), now_ms()});
    s.board = hex::play(s.board, at);
  }
  store.save(s);

  json j;
  std::ifstream(store.path_for(s.id)) >> j;
  j["history"][1]["z1"] = 3;
  j["history"][1]["z2"] = 3;
  std::ofstream(store.path_for(s.id)) << j.dump();
  try {
    store.load(s.id);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CorruptSession);
  }

  // Out-of-turn and duplicate moves are caught by the replay itself.
  j["history"][1]["z1"] = 1;
  j["history"][1]["z2"] = 1;
  std::ofstream(store.path_for(s.id)) << j.dump();
  EXPECT_THROW(store.load(s.id), Error);

  std::ofstream(store.path_for(s.id)) << "{ not json";
  try {
    store.load(s.id);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CorruptSession);
  }
  std::filesystem::remove_all(dir);
}

TEST(Session, UnknownId) {
  const auto dir = fresh_dir("unknown");
  SessionStore store(dir);
  try {
    store.get("abcdef");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SessionNotFound);
  }
  EXPECT_THROW(store.get("../../x"), Error);
  std::filesystem::remove_all(dir);
}

TEST(Session, BoardJson) {
  const Board b = hex::play(Board(2), {2, 1});
  const json j = board_json(b);
  EXPECT_EQ(j["k"], 2);
  EXPECT_EQ(j["toMove"], "V");
  EXPECT_EQ(j["cells"][0][1], "H");
  EXPECT_EQ(j["cells"][1][0], ".");
  EXPECT_EQ(hex::parse_board(j["text"].get<std::string>()), b);
}
