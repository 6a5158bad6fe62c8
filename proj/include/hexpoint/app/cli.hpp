#pragma once

// Command-line front end. `run_cli` is the whole program; main() only forwards
// to it so the tests can drive every subcommand in process.
//
// Exit status: 0 success, 2 input error, 3 resource limit (see error_info()).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hexpoint/app/service.hpp"
#include "hexpoint/brouwer/covering.hpp"
#include "hexpoint/brouwer/fixed_point_1d.hpp"
#include "hexpoint/error.hpp"
#include "hexpoint/funcspec/catalog.hpp"
#include "hexpoint/hex/interface_graph.hpp"
#include "hexpoint/hex/no_draw.hpp"
#include "hexpoint/solver/solver.hpp"
#include "hexpoint/sperner/labeling.hpp"

namespace hexpoint::app {

namespace detail {

struct MapArgs {
  std::string expr;
  std::string name;

  void add_to(CLI::App* cmd) {
    auto* m = cmd->add_option("--map", expr, "map expression, coordinates separated by ';'");
    auto* n = cmd->add_option("--map-name", name, "built-in map from the catalog");
    m->excludes(n);
  }

  funcspec::MapSpec resolve(const funcspec::Domain& domain) const {
    if (!name.empty()) {
      auto e = funcspec::lookup(name);
      if (!(e.map.domain() == domain)) {
        throw Error(ErrorCode::ArityError, "catalog map '" + name + "' is defined on " +
                                               e.map.domain().describe() + ", expected " + domain.describe());
      }
      return e.map;
    }
    if (expr.empty()) throw Error(ErrorCode::InvalidArgument, "one of --map or --map-name is required");
    return funcspec::parse(expr, domain);
  }
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline std::string player_name(hex::Player p) { return std::string(1, hex::to_char(p)); }

}  // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"hexpoint: Hex theorem tools and approximate Brouwer fixed points"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  // winner
  std::string board_file;
  auto* winner_cmd = app.add_subcommand("winner", "winner of a board file");
  winner_cmd->add_option("boardfile", board_file)->required();

  // solve
  int solve_k = 0;
  bool extended = false;
  auto* solve_cmd = app.add_subcommand("solve", "perfect-play value of the empty k x k board");
  solve_cmd->add_option("--k", solve_k)->required();
  solve_cmd->add_flag("--extended", extended, "allow k = 5");

  // monotonicity
  int mono_k = 0;
  auto* mono_cmd = app.add_subcommand("monotonicity", "check that an extra own stone never hurts");
  mono_cmd->add_option("--k", mono_k)->required();

  // fixedpoint1d
  detail::MapArgs map1;
  double tol = 1e-6;
  auto* fp1_cmd = app.add_subcommand("fixedpoint1d", "fixed point of a map on [0,1] by bisection");
  map1.add_to(fp1_cmd);
  fp1_cmd->add_option("--tol", tol);

  // fixedpoint2d
  detail::MapArgs map2;
  double eps2 = 1e-2;
  std::optional<double> lipschitz;
  auto* fp2_cmd = app.add_subcommand("fixedpoint2d", "approximate fixed point on the unit square via Hex");
  map2.add_to(fp2_cmd);
  fp2_cmd->add_option("--eps", eps2);
  fp2_cmd->add_option("--lipschitz", lipschitz, "max-norm Lipschitz bound of the map");

  // sperner
  detail::MapArgs map_s;
  int sm = 2, sn = 8;
  std::optional<double> seps;
  std::optional<double> slip;
  bool dump = false;
  auto* sp_cmd = app.add_subcommand("sperner", "completely labeled cells of the Brouwer labeling");
  map_s.add_to(sp_cmd);
  sp_cmd->add_option("--m", sm);
  sp_cmd->add_option("--n", sn);
  sp_cmd->add_option("--eps", seps, "also search for an eps fixed point by refinement");
  sp_cmd->add_option("--lipschitz", slip, "max-norm Lipschitz bound, used by the --eps search");
  sp_cmd->add_flag("--dump", dump, "print the subdivision in the text dump format");

  // hexcheck
  int check_k = 0;
  bool with_interface = false;
  auto* hc_cmd = app.add_subcommand("hexcheck", "exhaustive no-draw check over all full colorings");
  hc_cmd->add_option("--k", check_k)->required();
  hc_cmd->add_flag("--interface", with_interface, "cross-check the interface-graph winner");

  // serve
  int port = 8080;
  std::string host = "0.0.0.0";
  auto* serve_cmd = app.add_subcommand("serve", "run the HTTP/JSON service");
  serve_cmd->add_option("--port", port);
  serve_cmd->add_option("--host", host);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (winner_cmd->parsed()) {
      const hex::Board b = hex::parse_board(detail::read_file(board_file));
      const auto w = hex::winner(b);
      std::optional<hex::Player> via;
      if (b.full()) via = hex::winner_via_interface(b);
      if (as_json) {
        nlohmann::json j = {{"k", b.k()}, {"full", b.full()}};
        j["winner"] = w ? nlohmann::json(detail::player_name(*w)) : nlohmann::json(nullptr);
        if (via) j["winnerViaInterface"] = detail::player_name(*via);
        out << j.dump() << '\n';
      } else {
        out << "winner: " << (w ? detail::player_name(*w) : std::string("none")) << '\n';
        if (via) out << "interface graph agrees: " << (w && *w == *via ? "yes" : "no") << '\n';
      }
    } else if (solve_cmd->parsed()) {
      solver::SolverLimits limits;
      limits.extended_budget = extended;
      const auto v = solver::solve(hex::Board(solve_k), limits);
      const bool win = v.outcome == solver::Outcome::WinForMover;
      if (as_json) {
        nlohmann::json pv = nlohmann::json::array();
        for (const auto& c : v.pv) pv.push_back({{"z1", c.z1}, {"z2", c.z2}});
        out << nlohmann::json{{"k", solve_k}, {"outcome", win ? "WinForMover" : "LossForMover"}, {"pv", pv}}.dump()
            << '\n';
      } else {
        out << "k=" << solve_k << ": " << (win ? "first player wins" : "first player loses") << '\n';
        out << "pv:";
        for (const auto& c : v.pv) out << ' ' << hex::to_string(c);
        out << '\n';
      }
    } else if (mono_cmd->parsed()) {
      const auto r = solver::check_extra_stone_monotonicity(mono_k);
      if (as_json) {
        out << nlohmann::json{{"k", mono_k},
                              {"holds", r.holds},
                              {"positions", r.positions_checked},
                              {"extensions", r.extensions_checked}}
                   .dump()
            << '\n';
      } else {
        out << r.describe() << '\n';
      }
      return r.holds ? 0 : 1;
    } else if (fp1_cmd->parsed()) {
      const auto f = map1.resolve(funcspec::Domain::interval());
      const auto r = brouwer::fixed_point_1d(f, tol);
      if (as_json) {
        out << nlohmann::json{{"x", r.x}, {"residual", r.residual}, {"iterations", r.iterations}}.dump() << '\n';
      } else {
        out << "x = " << funcspec::format_number(r.x) << ", residual " << funcspec::format_number(r.residual)
            << " after " << r.iterations << " bisection steps\n";
      }
    } else if (fp2_cmd->parsed()) {
      const auto f = map2.resolve(funcspec::Domain::square());
      brouwer::HexFixedPointOptions opts;
      opts.lipschitz = lipschitz;
      const auto r = brouwer::fixed_point_2d_hex(f, eps2, opts);
      if (as_json) {
        out << nlohmann::json{{"x", r.x}, {"y", r.y}, {"residual", r.residual}, {"k", r.k}}.dump() << '\n';
      } else {
        out << "(x, y) = (" << funcspec::format_number(r.x) << ", " << funcspec::format_number(r.y)
            << "), residual " << funcspec::format_number(r.residual) << " on the " << r.k << "x" << r.k
            << " board\n";
      }
    } else if (sp_cmd->parsed()) {
      const auto f = map_s.resolve(funcspec::Domain::simplex(sm));
      const auto sub = sperner::subdivide(sm, sn);
      if (dump) {
        out << sub.dump();
        return 0;
      }
      const auto lab = sperner::brouwer_labeling(f, sub);
      const auto cells = sperner::completely_labeled(sub, lab);
      std::optional<sperner::SpernerResult> fp;
      if (seps) {
        sperner::SpernerLimits limits;
        limits.lipschitz = slip;
        fp = sperner::fixed_point_sperner(f, *seps, limits);
      }
      if (as_json) {
        nlohmann::json j = {{"m", sm}, {"n", sn}, {"count", cells.size()}, {"cells", cells}};
        if (fp) j["fixedPoint"] = {{"point", fp->point.lambdas()}, {"residual", fp->residual}, {"n", fp->n}};
        out << j.dump() << '\n';
      } else {
        out << cells.size() << " completely labeled cell(s) out of " << sub.cell_count() << " (m=" << sm
            << ", n=" << sn << ")\n";
        for (auto c : cells) {
          out << "  cell " << c << ':';
          for (auto v : sub.cell(c)) {
            out << " (";
            const auto lv = sub.vertex(v);
            for (std::size_t i = 0; i < lv.size(); ++i) out << (i ? "," : "") << lv[i];
            out << ")";
          }
          out << '\n';
        }
        if (fp) {
          out << "fixed point:";
          for (double l : fp->point.lambdas()) out << ' ' << funcspec::format_number(l);
          out << ", residual " << funcspec::format_number(fp->residual) << " at n=" << fp->n << '\n';
        }
      }
    } else if (hc_cmd->parsed()) {
      const auto r = hex::check_no_draw(check_k, with_interface);
      if (as_json) {
        nlohmann::json j = {{"k", r.k},
                            {"boards", r.boards},
                            {"exactlyOne", r.exactly_one},
                            {"draws", r.draws},
                            {"doubleWins", r.double_wins}};
        if (with_interface) j["interfaceAgreement"] = r.interface_agree;
        out << j.dump() << '\n';
      } else {
        out << r.exactly_one << "/" << r.boards << " colorings: exactly one winner\n";
        if (r.draws || r.double_wins) out << r.draws << " draws, " << r.double_wins << " double wins\n";
        if (with_interface) out << r.interface_agree << "/" << r.boards << " agree with the interface graph\n";
      }
      return r.ok() ? 0 : 1;
    } else if (serve_cmd->parsed()) {
      Service service(ServiceConfig::from_env());
      httplib::Server server;
      service.install(server);
      out << "listening on " << host << ":" << port << ", data in " << service.config().data_dir << std::endl;
      if (!server.listen(host, port)) {
        err << "cannot listen on " << host << ":" << port << '\n';
        return 2;
      }
    }
  } catch (const Error& e) {
    if (as_json) {
      err << error_json(e).dump() << '\n';
    } else {
      err << e.name() << ": " << e.what() << '\n';
    }
    return error_info(e.code()).exit_code;
  }
  return 0;
}

}  // namespace hexpoint::app
