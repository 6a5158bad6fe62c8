#pragma once

// JSON-over-HTTP front end.
//
//   POST /games                  {k, opponent: "none"|"solver", human?: "H"|"V"}
//   GET  /games/{id}
//   POST /games/{id}/moves       {z1, z2}
//   GET  /games/{id}/interface
//   POST /fixedpoint             {map | mapName, eps, lipschitz?, includeGrid?}
//   POST /sperner                {m, n, map | mapName}
//   GET  /catalog
//
// Errors are {code, message} with the status from error_info().

#include <cstdlib>
#include <filesystem>
#include <string>

#include "httplib.h"
#include "json.hpp"

#include "hexpoint/app/session.hpp"
#include "hexpoint/brouwer/covering.hpp"
#include "hexpoint/error.hpp"
#include "hexpoint/funcspec/catalog.hpp"
#include "hexpoint/hex/interface_graph.hpp"
#include "hexpoint/sperner/labeling.hpp"

namespace hexpoint::app {

struct ServiceConfig {
  std::filesystem::path data_dir = "./data";
  int max_k = 4;       // largest board the solver opponent accepts
  int max_n = 256;     // largest Sperner resolution
  int max_lattice = 4096;

  static ServiceConfig from_env() {
    ServiceConfig c;
    if (const char* d = std::getenv("HEXPOINT_DATA"); d && *d) c.data_dir = d;
    if (const char* k = std::getenv("HEXPOINT_MAX_K"); k && *k) c.max_k = std::atoi(k);
    if (const char* n = std::getenv("HEXPOINT_MAX_N"); n && *n) c.max_n = std::atoi(n);
    return c;
  }
};

inline json error_json(const Error& e) {
  return {{"code", std::string(e.name())}, {"message", e.what()}};
}

class Service {
 public:
  explicit Service(ServiceConfig config) : config_(std::move(config)), store_(config_.data_dir) {}

  SessionStore& store() { return store_; }
  const ServiceConfig& config() const { return config_; }

  json create_game(const json& body) {
    const int k = field<int>(body, "k");
    const std::string opp = body.value("opponent", std::string("none"));
    if (opp != "none" && opp != "solver") bad_request("opponent must be \"none\" or \"solver\"");
    const std::string human = body.value("human", std::string("H"));
    if (human != "H" && human != "V") bad_request("human must be \"H\" or \"V\"");

    GameSession s;
    s.id = new_session_id();
    s.k = k;
    s.board = Board(k);
    s.opponent = opp == "solver" ? Opponent::Solver : Opponent::None;
    s.solver_side = human == "H" ? Player::V : Player::H;

    std::optional<solver::Solver> engine;
    if (s.opponent == Opponent::Solver) {
      engine.emplace(k, solver::SolverLimits{config_.max_k, false});
      if (s.solver_side == Player::H) apply_move(s, engine->best_move(s.board));
    }
    auto entry = store_.create(std::move(s));
    std::lock_guard lock(entry->mutex);
    entry->solver = std::move(engine);
    json out = {{"id", entry->session.id}, {"board", board_json(entry->session.board)}};
    if (!entry->session.history.empty()) out["solverMove"] = coord_json(entry->session.history.back().at);
    return out;
  }

  json get_game(const std::string& id) {
    auto entry = store_.get(id);
    std::lock_guard lock(entry->mutex);
    return to_json(entry->session);
  }

  json play_move(const std::string& id, const json& body) {
    const Coord at{field<int>(body, "z1"), field<int>(body, "z2")};
    auto entry = store_.get(id);
    std::lock_guard lock(entry->mutex);
    GameSession& s = entry->session;
    if (hex::winner(s.board) || s.board.full()) throw Error(ErrorCode::GameOver, "the game is over");
    if (s.opponent == Opponent::Solver && s.board.to_move() == s.solver_side) {
      throw Error(ErrorCode::GameOver, "it is the solver's turn");
    }

    GameSession next = s;
    apply_move(next, at);
    json out;
    if (next.opponent == Opponent::Solver && !hex::winner(next.board) && !next.board.full()) {
      if (!entry->solver) entry->solver.emplace(next.k, solver::SolverLimits{std::max(config_.max_k, next.k), false});
      const Coord reply = entry->solver->best_move(next.board);
      apply_move(next, reply);
      out["solverMove"] = coord_json(reply);
    }
    store_.save(next);
    s = std::move(next);

    out["board"] = board_json(s.board);
    if (auto w = hex::winner(s.board)) {
      out["winner"] = std::string(1, hex::to_char(*w));
      json chain = json::array();
      for (const auto& c : *hex::winning_chain(s.board, *w)) chain.push_back(coord_json(c));
      out["winningChain"] = chain;
    }
    return out;
  }

  json interface_paths(const std::string& id) {
    auto entry = store_.get(id);
    Board board{1};
    {
      std::lock_guard lock(entry->mutex);
      board = entry->session.board;
    }
    const auto g = hex::interface_graph(board);
    const auto d = hex::decompose(g.graph);
    static constexpr const char* kNames[] = {"WN", "NE", "ES", "SW"};
    json paths = json::array();
    for (const auto& p : hex::boundary_paths(g, d)) {
      json nodes = json::array();
      for (auto n : p) {
        const auto& node = g.nodes[n];
        const auto [x, y] = hex::corner_position(node.corner);
        json jn = {{"x", x}, {"y", y}};
        if (node.boundary) jn["boundary"] = kNames[static_cast<int>(*node.boundary)];
        nodes.push_back(jn);
      }
      paths.push_back({{"from", kNames[static_cast<int>(*g.nodes[p.front()].boundary)]},
                       {"to", kNames[static_cast<int>(*g.nodes[p.back()].boundary)]},
                       {"nodes", nodes}});
    }
    return {{"paths", paths},
            {"winner", std::string(1, hex::to_char(hex::winner_via_interface(board)))},
            {"nodeCount", g.graph.node_count()},
            {"edgeCount", g.graph.edge_count()}};
  }

  json fixed_point(const json& body) const {
    const funcspec::MapSpec f = map_from(body, funcspec::Domain::square());
    const double eps = field<double>(body, "eps");
    brouwer::HexFixedPointOptions opts;
    opts.max_k = config_.max_lattice;
    if (body.contains("lipschitz") && !body["lipschitz"].is_null()) opts.lipschitz = field<double>(body, "lipschitz");
    const auto r = brouwer::fixed_point_2d_hex(f, eps, opts);
    json out = {{"point", {{"x", r.x}, {"y", r.y}}},
                {"z", coord_json(r.z)},
                {"residual", r.residual},
                {"k", r.k},
                {"coveringCounts",
                 {{"hplus", r.counts.hplus},
                  {"hminus", r.counts.hminus},
                  {"vplus", r.counts.vplus},
                  {"vminus", r.counts.vminus},
                  {"uncovered", r.counts.uncovered}}}};
    if (body.value("includeGrid", false)) {
      // Bits: 1 = H+, 2 = H-, 4 = V+, 8 = V-; rows indexed by z2 - 1.
      const auto cs = brouwer::covering_sets(f, r.k, r.tolerance);
      const auto grid = cs.grid();
      json rows = json::array();
      for (int z2 = 1; z2 <= r.k; ++z2) {
        json row = json::array();
        for (int z1 = 1; z1 <= r.k; ++z1) {
          const auto& m = grid[static_cast<std::size_t>(z2 - 1) * r.k + (z1 - 1)];
          row.push_back((m.hplus ? 1 : 0) | (m.hminus ? 2 : 0) | (m.vplus ? 4 : 0) | (m.vminus ? 8 : 0));
        }
        rows.push_back(row);
      }
      out["membership"] = rows;
    }
    return out;
  }

  json sperner(const json& body) const {
    const int m = field<int>(body, "m");
    const int n = field<int>(body, "n");
    if (m < 1 || m > 3) bad_request("m must be 1, 2 or 3");
    if (n < 1) bad_request("n must be positive");
    if (n > config_.max_n) {
      throw Error(ErrorCode::ResourceLimit, "n=" + std::to_string(n) + " exceeds the configured cap " +
                                                std::to_string(config_.max_n));
    }
    const funcspec::MapSpec f = map_from(body, funcspec::Domain::simplex(m));
    const auto sub = sperner::subdivide(m, n);
    const auto lab = sperner::brouwer_labeling(f, sub);
    const auto cells = sperner::completely_labeled(sub, lab);
    json list = json::array();
    for (auto c : cells) {
      json verts = json::array();
      for (auto v : sub.cell(c)) {
        const auto lv = sub.vertex(v);
        verts.push_back(std::vector<int>(lv.begin(), lv.end()));
      }
      const auto bc = sub.barycenter(c);
      list.push_back({{"id", c},
                      {"vertices", verts},
                      {"barycenter", bc.lambdas()},
                      {"residual", sperner::residual(f, bc.lambdas())}});
    }
    return {{"m", m}, {"n", n}, {"completelyLabeledCells", list}, {"count", cells.size()}};
  }

  static json catalog_json() {
    json out = json::array();
    for (const auto& e : funcspec::catalog()) {
      out.push_back({{"name", e.name},
                     {"map", e.map.print()},
                     {"domain", e.map.domain().describe()},
                     {"description", e.description}});
    }
    return out;
  }

  /// Registers every route on `server`.
  void install(httplib::Server& server) {
    auto wrap = [](auto fn) {
      return [fn](const httplib::Request& req, httplib::Response& res) {
        res.set_header("Access-Control-Allow-Origin", "*");
        try {
          const json out = fn(req);
          res.status = 200;
          res.set_content(out.dump(), "application/json");
        } catch (const Error& e) {
          res.status = error_info(e.code()).http_status;
          res.set_content(error_json(e).dump(), "application/json");
        } catch (const std::exception& e) {
          res.status = 500;
          res.set_content(json{{"code", "Internal"}, {"message", e.what()}}.dump(), "application/json");
        }
      };
    };
    server.Post("/games", wrap([this](const httplib::Request& r) { return create_game(body_of(r)); }));
    server.Get(R"(/games/([0-9A-Za-z]+))",
               wrap([this](const httplib::Request& r) { return get_game(r.matches[1]); }));
    server.Post(R"(/games/([0-9A-Za-z]+)/moves)",
                wrap([this](const httplib::Request& r) { return play_move(r.matches[1], body_of(r)); }));
    server.Get(R"(/games/([0-9A-Za-z]+)/interface)",
               wrap([this](const httplib::Request& r) { return interface_paths(r.matches[1]); }));
    server.Post("/fixedpoint", wrap([this](const httplib::Request& r) { return fixed_point(body_of(r)); }));
    server.Post("/sperner", wrap([this](const httplib::Request& r) { return sperner(body_of(r)); }));
    server.Get("/catalog", wrap([](const httplib::Request&) { return catalog_json(); }));
    server.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) {
      res.set_header("Access-Control-Allow-Origin", "*");
      res.set_header("Access-Control-Allow-Headers", "Content-Type");
      res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
      res.status = 204;
    });
  }

 private:
  [[noreturn]] static void bad_request(const std::string& what) { throw Error(ErrorCode::BadRequest, what); }

  static json body_of(const httplib::Request& r) {
    if (r.body.empty()) return json::object();
    try {
      json j = json::parse(r.body);
      if (!j.is_object()) bad_request("request body must be a JSON object");
      return j;
    } catch (const json::exception& e) {
      bad_request(std::string("request body is not JSON: ") + e.what());
    }
  }

  template <typename T>
  static T field(const json& body, const char* name) {
    if (!body.contains(name)) bad_request(std::string("missing field '") + name + "'");
    try {
      return body.at(name).get<T>();
    } catch (const json::exception&) {
      bad_request(std::string("field '") + name + "' has the wrong type");
    }
  }

  static json coord_json(const Coord& c) { return {{"z1", c.z1}, {"z2", c.z2}}; }

  static funcspec::MapSpec map_from(const json& body, const funcspec::Domain& domain) {
    if (body.contains("mapName")) {
      auto entry = funcspec::lookup(field<std::string>(body, "mapName"));
      if (!(entry.map.domain() == domain)) {
        throw Error(ErrorCode::ArityError, "catalog map '" + entry.name + "' is defined on " +
                                               entry.map.domain().describe() + ", expected " +
                                               domain.describe());
      }
      return entry.map;
    }
    return funcspec::parse(field<std::string>(body, "map"), domain);
  }

  void apply_move(GameSession& s, const Coord& at) const {
    const Player mover = s.board.to_move();
    s.board = hex::play(s.board, at);
    s.history.push_back({at, mover, now_ms()});
  }

  ServiceConfig config_;
  SessionStore store_;
};

}  // namespace hexpoint::app
