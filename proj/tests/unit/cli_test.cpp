#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hexpoint/app/cli.hpp"

using namespace hexpoint;

namespace {

struct Run {
  int status;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "hexpoint");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = app::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << content;
  return p.string();
}

}  // namespace

TEST(Cli, Hexcheck) {
  const auto r = run({"hexcheck", "--k", "3"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "512/512 colorings: exactly one winner\n");
  const auto j = run({"--json", "hexcheck", "--k", "2", "--interface"});
  EXPECT_EQ(j.status, 0);
  const auto parsed = nlohmann::json::parse(j.out);
  EXPECT_EQ(parsed["boards"], 16);
  EXPECT_EQ(parsed["interfaceAgreement"], 16);
  EXPECT_EQ(run({"hexcheck", "--k", "9"}).status, 3);
}

TEST(Cli, FixedPoint2d) {
  const auto r = run({"--json", "fixedpoint2d", "--map-name", "rotation180", "--eps", "0.01"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_LE(j["residual"].get<double>(), 0.01);
  EXPECT_NEAR(j["x"].get<double>(), 0.5, 0.01);
  EXPECT_NEAR(j["y"].get<double>(), 0.5, 0.01);
  const auto l = run({"fixedpoint2d", "--map", "(x + 0.5) / 2; (y + 0.25) / 2", "--eps", "0.01", "--lipschitz", "0.5"});
  EXPECT_EQ(l.status, 0) << l.err;
}

TEST(Cli, FixedPoint1d) {
  const auto r = run({"--json", "fixedpoint1d", "--map", "1 - x", "--tol", "1e-6"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NEAR(nlohmann::json::parse(r.out)["x"].get<double>(), 0.5, 1e-6);
  const auto bad = run({"fixedpoint1d", "--map", "x*", "--tol", "1e-6"});
  EXPECT_EQ(bad.status, 2);
  EXPECT_NE(bad.err.find("SyntaxError"), std::string::npos);
  EXPECT_NE(bad.err.find("offset 2"), std::string::npos);
}

TEST(Cli, WinnerFile) {
  const auto good = temp_file("hexpoint_cli_good.txt", "k=2\nHV\nHV\nto_move=H\n");
  const auto r = run({"winner", good});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "winner: V\ninterface graph agrees: yes\n");

  const auto bad = temp_file("hexpoint_cli_bad.txt", "k=2\nH?\nHV\n");
  const auto b = run({"winner", bad});
  EXPECT_EQ(b.status, 2);
  EXPECT_NE(b.err.find("line 2, column 2"), std::string::npos) << b.err;
  EXPECT_EQ(run({"winner", "/nonexistent/board.txt"}).status, 2);
}

TEST(Cli, Solve) {
  const auto r = run({"solve", "--k", "3"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("first player wins"), std::string::npos);
  EXPECT_EQ(run({"solve", "--k", "5"}).status, 3);
  const auto j = nlohmann::json::parse(run({"--json", "solve", "--k", "2"}).out);
  EXPECT_EQ(j["outcome"], "WinForMover");
}

TEST(Cli, Monotonicity) {
  const auto r = run({"monotonicity", "--k", "2"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("extra stones never hurt"), std::string::npos);
}

TEST(Cli, Sperner) {
  const auto r = run({"--json", "sperner", "--m", "2", "--n", "8", "--map-name", "simplex-rotation"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["count"].get<int>() % 2, 1);
  const auto d = run({"sperner", "--m", "1", "--n", "2", "--map", "l1; l0", "--dump"});
  EXPECT_EQ(d.out.substr(0, 8), "v 0 2 0\n");
  EXPECT_EQ(run({"sperner", "--m", "2", "--n", "4", "--map-name", "rotation180"}).status, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"solve"}).status, 2);
  EXPECT_EQ(run({"frobnicate"}).status, 2);
  EXPECT_EQ(run({"solve", "--k", "three"}).status, 2);
  EXPECT_EQ(run({"fixedpoint1d"}).status, 2);
  EXPECT_EQ(run({"--help"}).status, 0);
}
