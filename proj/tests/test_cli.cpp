#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <filesystem>
#include <sstream>

#include "fuzzysoft/cli.hpp"

using namespace fuzzysoft;
namespace fs = std::filesystem;

namespace {

const fs::path kData = FUZZYSOFT_TEST_DATA;

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = run_command(args, out, err);
  return {status, out.str(), err.str()};
}

std::string data(const char* name) { return (kData / name).string(); }

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("check prints a witness on failure") {
  auto r = run({"check", data("indiscrete.inst"), "--axiom", "Q_T0"});
  CHECK(r.status == kExitFails);
  CHECK(r.out.rfind("Q_T0 fails witness: ", 0) == 0);
  CHECK(lines(r.out) == 1);
}

TEST_CASE("check --all on the full grid") {
  auto r = run({"check", data("fullgrid.inst"), "--all"});
  CHECK(lines(r.out) == 12);
  CHECK(r.out.find("Q_T2 holds\n") != std::string::npos);
  CHECK(r.out.find("MD_T2 holds\n") != std::string::npos);
  CHECK(r.status == kExitHolds);
  auto q = run({"check", data("fullgrid.inst"), "--axiom", "Q_T3"});
  CHECK(q.status == kExitHolds);
  CHECK(q.out == "Q_T3 holds\n");
}

TEST_CASE("check input errors") {
  CHECK(run({"check", data("indiscrete.inst"), "--axiom", "Q_T9"}).status == kExitInputError);
  CHECK(run({"check", data("indiscrete.inst")}).status == kExitInputError);
  CHECK(run({"check", data("missing.inst"), "--all"}).status == kExitInputError);
  auto r = run({"check", data("offgrid.inst"), "--all"});
  CHECK(r.status == kExitInputError);
  CHECK(r.err.find("/sets/a/0/0") != std::string::npos);
  CHECK(run({"frobnicate"}).status == kExitInputError);
  CHECK(run({}).status == kExitInputError);
}

TEST_CASE("unit height option is accepted") {
  auto r = run({"check", data("indiscrete.inst"), "--axiom", "Q_T1", "--unit-height-nbds"});
  CHECK(r.status == kExitFails);
}

TEST_CASE("closure") {
  auto r = run({"closure", data("indiscrete.inst"), "--set", "f"});
  CHECK(r.status == kExitHolds);
  CHECK(r.out == "closure(f) = [1,1]\n");
  CHECK(run({"closure", data("indiscrete.inst"), "--set", "zz"}).status == kExitInputError);
}

TEST_CASE("verify") {
  auto ok = run({"verify", data("one_open.inst")});
  CHECK(ok.status == kExitHolds);
  CHECK(ok.out == "topology ok: 3 opens\n");
  auto bad = run({"verify", data("broken.inst")});
  CHECK(bad.status == kExitFails);
  CHECK(bad.out.find("axiom (1)") != std::string::npos);
}

TEST_CASE("continuous") {
  auto no = run({"continuous", data("maps.inst"), "--mapping", "to_one_open"});
  CHECK(no.status == kExitFails);
  CHECK(no.out.find("[1,0]") != std::string::npos);
  auto yes = run({"continuous", data("maps.inst"), "--mapping", "to_indiscrete"});
  CHECK(yes.status == kExitHolds);
  CHECK(yes.out == "to_indiscrete continuous\n");
  CHECK(run({"continuous", data("maps.inst"), "--mapping", "nope"}).status == kExitInputError);
}

TEST_CASE("mine and theorems") {
  auto m1 = run({"mine", "--config", data("configs/tiny.json")});
  auto m2 = run({"mine", "--config", data("configs/tiny.json")});
  CHECK(m1.status == kExitHolds);
  CHECK(m1.out == m2.out);
  CHECK(m1.out.find("Q_T2=>Q_T1 holds-on-suite - asserted") != std::string::npos);

  auto t = run({"theorems", "--config", data("configs/clean.json")});
  CHECK(t.status == kExitHolds);
  CHECK(lines(t.out) == 2 + 16);
  auto coarse = run({"theorems", "--config", data("configs/tiny.json")});
  CHECK(coarse.status == kExitFails);
  CHECK(run({"theorems", "--config", data("configs/too_big.json")}).status == kExitInputError);
  CHECK(run({"mine", "--config", data("configs/missing.json")}).status == kExitInputError);
}

TEST_CASE("counterexamples are written with --out") {
  auto dir = fs::temp_directory_path() / "fuzzysoft_test_cli_out";
  fs::remove_all(dir);
  auto r = run({"theorems", "--config", data("configs/tiny.json"), "--out", dir.string()});
  CHECK(r.status == kExitFails);
  CHECK(fs::exists(dir / "oracle.qT0_mutual_closure.inst"));
  auto replay = run({"check", (dir / "oracle.qT0_mutual_closure.inst").string(), "--axiom", "Q_T0"});
  CHECK(replay.status == kExitFails);
  fs::remove_all(dir);
}
