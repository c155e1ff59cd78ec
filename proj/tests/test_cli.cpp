#include "itp/cli.hpp"
#include "itp/formula.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using itp::run_cli;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(Cli, ReproCommandsPassAndAreDeterministic) {
  for (const char* r : {"prop3.2", "prop3.3", "thm6.1", "prop7.1", "thm7.2", "thm5.4"}) {
    Outcome a = cli({"repro", r});
    EXPECT_EQ(a.code, 0) << r << "\n" << a.out << a.err;
    EXPECT_EQ(a.out.find("FAILED"), std::string::npos) << r;
    Outcome b = cli({"repro", r});
    EXPECT_EQ(a.out, b.out) << r;
  }
}

TEST(Cli, ReproResolutionShowsBothRefutations) {
  Outcome r = cli({"repro", "prop3.3"});
  EXPECT_NE(r.out.find("RES 0 1 p"), std::string::npos);
  EXPECT_NE(r.out.find("RES 0 1 q"), std::string::npos);
}

TEST(Cli, EnumerateFour) {
  Outcome r = cli({"enumerate", "p&q", "p|q"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).size(), 4u);
}

TEST(Cli, RealizeThenInterpolate) {
  Outcome r = cli({"realize", "--system", "lk-at", "--interpolant", "p&q", "p&q", "p|q"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto path = std::filesystem::temp_directory_path() / "itp_cli_realize.prf";
  std::ofstream(path) << r.out;
  Outcome c = cli({"check-proof", "--system", "lk-at", path.string()});
  EXPECT_EQ(c.code, 0) << c.out;
  Outcome i = cli({"interpolate", "--system", "lk-at", path.string()});
  ASSERT_EQ(i.code, 0) << i.err;
  auto ls = lines(i.out);
  EXPECT_TRUE(oracle::equiv(itp::parse_formula(ls.back()), itp::parse_formula("p & q")));
  Outcome bad = cli({"check-proof", "--system", "lk-minus", path.string()});
  EXPECT_EQ(bad.code, 1);
}

TEST(Cli, ProveAndCountermodel) {
  Outcome ok = cli({"prove", "--system", "k", "[]p, [](p -> q) ; => []q ;"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("(K "), std::string::npos);
  Outcome no = cli({"prove", "--system", "k", "[]p ; => ; []p & q"});
  EXPECT_EQ(no.code, 1);
  EXPECT_NE(no.out.find("world 0"), std::string::npos);
  Outcome text = cli({"prove", "--format", "text", "p ; => ; p | q"});
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("\n  "), std::string::npos);
  EXPECT_NE(text.out.find("Ax p ; => ; p\n"), std::string::npos) << text.out;
}

TEST(Cli, ResolutionCommands) {
  Outcome r = cli({"refute", "p", "~p"});
  ASSERT_EQ(r.code, 0);
  auto path = std::filesystem::temp_directory_path() / "itp_cli.res";
  std::ofstream(path) << r.out;
  Outcome i = cli({"res-interpolate", path.string()});
  EXPECT_EQ(i.code, 0);
  EXPECT_TRUE(oracle::equiv(itp::parse_formula(lines(i.out).back()), itp::parse_formula("p")));
  EXPECT_EQ(cli({"refute", "p", "q"}).code, 1);
}

TEST(Cli, PruneAndPipeline) {
  EXPECT_EQ(cli({"prune", "p\nr ~p"}).out, "r\n");
  Outcome p = cli({"pipeline", "--trace", "p&q", "p|q", "p\nq"});
  EXPECT_EQ(p.code, 0) << p.err;
  EXPECT_NE(p.out.find("final cnf:"), std::string::npos);
  Outcome ce = cli({"cut-eliminate", "no such proof"});
  EXPECT_EQ(ce.code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"bogus"}).code, 2);
  EXPECT_EQ(cli({"repro", "nothing"}).code, 2);
  EXPECT_EQ(cli({"parse", "p &"}).code, 2);
  EXPECT_EQ(cli({"prove", "--system", "gl", "p ; => p ;"}).code, 2);
  EXPECT_EQ(cli({"parse", "p&q -> r"}).out, "~(p & q) | r\n");
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Cli, UnknownSystemIsAUsageError) {
  EXPECT_EQ(cli({"--system", "foo", "parse", "p"}).code, 2);
  EXPECT_EQ(cli({"parse", "p", "--system", "kd4"}).code, 0);
}

TEST(Cli, DashReadsStdin) {
  Outcome r = cli({"refute", "p\nq", "~p\n~q"});
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  auto* old = std::cin.rdbuf(in.rdbuf());
  Outcome i = cli({"res-interpolate", "-"});
  std::cin.rdbuf(old);
  ASSERT_EQ(i.code, 0) << i.err;
  itp::F f = itp::parse_formula(lines(i.out).back());
  EXPECT_TRUE(oracle::equiv(f, itp::atom("p")) || oracle::equiv(f, itp::atom("q"))) << i.out;
}
