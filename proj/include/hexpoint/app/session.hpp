#pragma once

// Game sessions and their on-disk store.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hexpoint/error.hpp"
#include "hexpoint/hex/board.hpp"
#include "hexpoint/solver/solver.hpp"

namespace hexpoint::app {

using hex::Board;
using hex::Coord;
using hex::Player;
using json = nlohmann::json;

enum class Opponent { None, Solver };

struct MoveRecord {
  Coord at;
  Player player = Player::H;
  std::int64_t timestamp_ms = 0;
};

struct GameSession {
  std::string id;
  int k = 0;
  Opponent opponent = Opponent::None;
  // Side played by the solver when there is one.
  Player solver_side = Player::V;
  Board board{1};
  std::vector<MoveRecord> history;
};

inline std::int64_t now_ms() {
  using namespace std::chrono;
  return duration_cast<milliseconds>(system_clock::now().time_since_epoch()).count();
}

inline std::string new_session_id() {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  std::ostringstream os;
  os << std::hex;
  for (int i = 0; i < 2; ++i) {
    os.width(16);
    os.fill('0');
    os << rng();
  }
  return os.str();
}

/// Rebuilds the board by replaying the history from an empty board with H to move.
inline Board replay(int k, const std::vector<MoveRecord>& history) {
  Board b(k);
  for (const auto& m : history) {
    if (m.player != b.to_move()) {
      throw Error(ErrorCode::CorruptSession, "history move at " + hex::to_string(m.at) +
                                                 " is out of turn");
    }
    if (hex::winner(b)) {
      throw Error(ErrorCode::CorruptSession, "history continues after the game was decided");
    }
    try {
      b = hex::play(b, m.at);
    } catch (const Error& e) {
      throw Error(ErrorCode::CorruptSession, std::string("history does not replay: ") + e.what());
    }
  }
  return b;
}

inline json to_json(const MoveRecord& m) {
  return {{"z1", m.at.z1}, {"z2", m.at.z2}, {"player", std::string(1, hex::to_char(m.player))},
          {"timestamp", m.timestamp_ms}};
}

inline json board_json(const Board& b) {
  json rows = json::array();
  for (int z2 = 1; z2 <= b.k(); ++z2) {
    json row = json::array();
    for (int z1 = 1; z1 <= b.k(); ++z1) row.push_back(std::string(1, hex::to_char(b.at({z1, z2}))));
    rows.push_back(row);
  }
  return {{"k", b.k()},
          {"text", hex::format_board(b)},
          {"toMove", std::string(1, hex::to_char(b.to_move()))},
          {"cells", rows}};
}

inline json to_json(const GameSession& s) {
  json history = json::array();
  for (const auto& m : s.history) history.push_back(to_json(m));
  return {{"id", s.id},
          {"k", s.k},
          {"opponent", s.opponent == Opponent::Solver ? "solver" : "none"},
          {"solverSide", std::string(1, hex::to_char(s.solver_side))},
          {"history", history},
          {"board", board_json(s.board)}};
}

/// Parses a stored session and checks that its history replays to its board.
inline GameSession session_from_json(const json& j) {
  try {
    GameSession s;
    s.id = j.at("id").get<std::string>();
    s.k = j.at("k").get<int>();
    s.opponent = j.at("opponent").get<std::string>() == "solver" ? Opponent::Solver : Opponent::None;
    s.solver_side = j.value("solverSide", std::string("V")) == "H" ? Player::H : Player::V;
    for (const auto& m : j.at("history")) {
      MoveRecord r;
      r.at = {m.at("z1").get<int>(), m.at("z2").get<int>()};
      const auto who = m.at("player").get<std::string>();
      if (who != "H" && who != "V") throw Error(ErrorCode::CorruptSession, "bad player in history");
      r.player = who == "H" ? Player::H : Player::V;
      r.timestamp_ms = m.value("timestamp", std::int64_t{0});
      s.history.push_back(r);
    }
    const Board stored = hex::parse_board(j.at("board").at("text").get<std::string>());
    s.board = replay(s.k, s.history);
    if (!(s.board == stored)) {
      throw Error(ErrorCode::CorruptSession, "stored board does not match its move history");
    }
    return s;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::CorruptSession) throw;
    throw Error(ErrorCode::CorruptSession, std::string("session record is invalid: ") + e.what());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::CorruptSession, std::string("session record is invalid: ") + e.what());
  }
}

/// Sessions live in memory and are mirrored to `<dir>/<id>.json` after every
/// change. Moves on one session serialize on that session's mutex; distinct
/// sessions proceed in parallel.
class SessionStore {
 public:
  struct Entry {
    std::mutex mutex;
    GameSession session;
    std::optional<solver::Solver> solver;
  };

  explicit SessionStore(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
  }

  const std::filesystem::path& directory() const { return dir_; }

  std::filesystem::path path_for(const std::string& id) const { return dir_ / (id + ".json"); }

  std::shared_ptr<Entry> create(GameSession s) {
    auto entry = std::make_shared<Entry>();
    entry->session = std::move(s);
    save(entry->session);
    std::lock_guard lock(map_mutex_);
    entries_[entry->session.id] = entry;
    return entry;
  }

  /// In-memory entry, loading from disk when needed.
  std::shared_ptr<Entry> get(const std::string& id) {
    {
      std::lock_guard lock(map_mutex_);
      if (auto it = entries_.find(id); it != entries_.end()) return it->second;
    }
    auto entry = std::make_shared<Entry>();
    entry->session = load(id);
    std::lock_guard lock(map_mutex_);
    auto [it, inserted] = entries_.emplace(id, entry);
    return it->second;
  }

  void save(const GameSession& s) const {
    const auto target = path_for(s.id);
    const auto tmp = target.string() + ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      out << to_json(s).dump(2) << '\n';
    }
    std::filesystem::rename(tmp, target);
  }

  GameSession load(const std::string& id) const {
    if (!valid_id(id)) throw Error(ErrorCode::SessionNotFound, "no game with id '" + id + "'");
    std::ifstream in(path_for(id));
    if (!in) throw Error(ErrorCode::SessionNotFound, "no game with id '" + id + "'");
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw Error(ErrorCode::CorruptSession, std::string("session file is not JSON: ") + e.what());
    }
    return session_from_json(j);
  }

  static bool valid_id(const std::string& id) {
    if (id.empty() || id.size() > 64) return false;
    for (char c : id) {
      if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'))) return false;
    }
    return true;
  }

 private:
  std::filesystem::path dir_;
  std::mutex map_mutex_;
  std::map<std::string, std::shared_ptr<Entry>> entries_;
};

}  // namespace hexpoint::app
