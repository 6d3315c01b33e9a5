#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "oddsym/cli.hpp"

using namespace oddsym;
using nlohmann::json;

namespace {
struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int c = cli_main(args, out, err);
  return {c, out.str(), err.str()};
}
}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("kostka") {
    auto r = run({"kostka", "--degree", "3"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["matrix"].size() == 3);
    CHECK(j["rows"][1] == "[2,1]");
    CHECK(j["matrix"][1][2] == 0);
    CHECK(j["matrix"][0][0] == 1);
    auto c = run({"kostka", "--degree", "2", "--format", "csv"});
    CHECK(c.out == "kostka,[2],\"[1,1]\"\n[2],1,1\n\"[1,1]\",0,1\n");
  }

  TEST_CASE("lr and schur-expand") {
    auto j = json::parse(run({"lr", "--lambda", "1", "--mu", "1"}).out);
    CHECK(j["basis"] == "s");
    CHECK(j["terms"].size() == 2);
    CHECK(run({"lr", "--lambda", "1", "--mu", "1", "--format", "text"}).out == "s[2] + s[1,1]\n");
    CHECK(run({"schur-expand", "--lambda", "2,1", "--format", "text"}).out == "-h[3] + h[2,1]\n");
    CHECK(run({"lr", "--lambda", "1,2", "--mu", "1"}).code == 2);
  }

  TEST_CASE("schubert") {
    auto j = json::parse(run({"schubert", "--n", "3"}).out);
    CHECK(j["polynomials"].size() == 6);
    CHECK(run({"schubert", "--perm", "2,1", "--format", "text"}).out == "[2,1]  x1\n");
    CHECK(run({"schubert", "--perm", "2,2"}).code == 2);
    CHECK(run({"schubert"}).code == 2);
  }

  TEST_CASE("oh-rank and trace-gram") {
    CHECK(run({"oh-rank", "--ell", "2", "--n", "1", "--format", "text"}).out == "1 + pi*q^2\n");
    CHECK(json::parse(run({"oh-rank", "--ell", "2", "--n", "1"}).out)["rank"] == "1 + pi*q^2");
    CHECK(run({"oh-rank", "--ell", "1", "--n", "2"}).code == 2);
    auto g = json::parse(run({"trace-gram", "--ell", "3", "--n", "1"}).out);
    CHECK(g["matrix"] == json::parse("[[0,0,1],[0,1,0],[1,0,0]]"));
  }

  TEST_CASE("rouquier") {
    auto r = run({"rouquier", "--ell", "2", "--k", "0"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["ok"] == true);
    auto& t = j["complex"]["terms"];
    REQUIRE(t.size() == 2);
    CHECK(run({"rouquier", "--ell", "2", "--k", "0", "--format", "csv"}).out ==
          "d,dim,image,homology\n0,1,0,0\n1,1 + pi*q^2,1,pi*q^2\n");
    CHECK(run({"rouquier", "--ell", "1", "--k", "1", "--format", "csv"}).out == "d,dim,image,homology\n0,1,0,1\n");
    CHECK(json::parse(run({"rouquier", "--ell", "3", "--k", "-1"}).out)["ok"] == true);
    auto bad = run({"rouquier", "--ell", "2", "--k", "1"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("error") != std::string::npos);
  }

  TEST_CASE("verify") {
    auto a = run({"verify", "--suite", "osym", "--max-degree", "0"});
    CHECK(a.code == 0);
    CHECK(json::parse(a.out)["ok"] == true);
    auto b = run({"verify", "--suite", "qpi", "--seed", "7"});
    CHECK(b.code == 0);
    CHECK(b.out == run({"verify", "--suite", "qpi", "--seed", "7"}).out);
    CHECK(run({"verify", "--suite", "nope"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
  }
}
