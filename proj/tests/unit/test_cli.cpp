#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "quadfib/cli.hpp"

#ifndef QUADFIB_FIXTURE_DIR
#error "QUADFIB_FIXTURE_DIR must point at tests/data/oeis"
#endif

using namespace quadfib;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("unit") {
  auto r = run({"unit", "5"});
  CHECK(r.code == 0);
  CHECK(r.out == "d=5 unit=(1+√5)/2 norm=-1 discriminant=5\n");
  r = run({"unit", "6"});
  CHECK(r.out == "d=6 unit=5+2√6 norm=1 discriminant=24\n");
}

TEST_CASE("fib and lucas") {
  CHECK(run({"fib", "2", "--from", "1", "--to", "6", "--format", "plain"}).out == "1 2 5 12 29 70\n");
  CHECK(run({"lucas", "6", "--from", "1", "--to", "6"}).out == "1 49/5 97 4801/5 9505 470449/5\n");
  CHECK(run({"fib", "5", "--from", "-3", "--to", "3"}).out == "2 -1 1 0 1 1 2\n");
  CHECK(run({"fib", "5", "--from=-3", "--to=0"}).out == "2 -1 1 0\n");
  // eta = 1/phi: F_{eta,n} = F_{-n}.
  CHECK(run({"fib", "5", "--from", "1", "--to", "6", "--unit-power", "-1"}).out ==
        "1 -1 2 -3 5 -8\n");
  CHECK(run({"fib", "2", "--to", "4", "--unit-power", "2"}).out == "1 6 35 204\n");
  CHECK(run({"fib", "5", "--from", "1", "--to", "3", "--unit-sign", "-"}).out == "1 -1 2\n");
}

TEST_CASE("kfib") {
  const auto r = run({"kfib", "3", "--terms", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "d=13 r=1 unit=(3+√13)/2 norm=-1\n1 3 10 33\n");
}

TEST_CASE("verify") {
  auto r = run({"verify", "5", "--identity", "T25.ii", "--range", "-20..20"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  r = run({"verify", "3", "--identity", "T25.v", "--range", "-2..2"});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL") != std::string::npos);
  r = run({"verify", "2", "--identity", "all", "--range", "-4..4"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 21);
}

TEST_CASE("gf") {
  const auto r = run({"--format", "json", "gf", "5", "--x", "1/2", "--terms", "30"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("reports").at(0).at("closed") == "4");
  CHECK(j.at("reports").at(1).at("closed") == "8");
  CHECK(run({"gf", "5", "--x", "2/3"}).code == 2);
  CHECK(run({"gf", "5", "--x", "1/0"}).code != 0);
}

TEST_CASE("oeis-check offline") {
  const std::string dir = QUADFIB_FIXTURE_DIR;
  auto r = run({"oeis-check", "2", "--offline", "--cache-dir", dir});
  CHECK(r.code == 0);
  CHECK(r.out.find("A000129") != std::string::npos);
  CHECK(r.out.find("A001333") != std::string::npos);
  r = run({"oeis-check", "3", "--a", "A000045", "--offline", "--cache-dir", dir});
  CHECK(r.code == 1);
  r = run({"oeis-check", "19", "--offline", "--cache-dir", dir});
  CHECK(r.code == 2);
  CHECK(r.err.find("--a") != std::string::npos);
  r = run({"oeis-check", "2", "--a", "A999999", "--offline", "--cache-dir", dir});
  CHECK(r.code == 3);
}

TEST_CASE("usage errors are one line on stderr with exit code 2") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {}, {"unit"}, {"unit", "12"}, {"unit", "x"}, {"frobnicate"},
           {"verify", "5", "--identity", "T99"}, {"verify", "5", "--range", "3..1"},
           {"fib", "5", "--from", "4", "--to", "1"}, {"--format", "xml", "unit", "5"},
           {"fib", "5", "--unit-power", "0"}}) {
    const auto r = run(args);
    CAPTURE(args.size());
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
  }
}

TEST_CASE("output formats and --out") {
  auto r = run({"--format", "csv", "lucas", "3", "--to", "3"});
  CHECK(r.out == "n,fib,lucas\n1,1,1\n2,4,7/2\n3,15,13\n");
  const auto path = std::filesystem::temp_directory_path() / "quadfib-cli-out.json";
  r = run({"--format", "json", "--out", path.string(), "unit", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  CHECK(j.at("discriminant") == 8);
  std::filesystem::remove(path);
}

TEST_CASE("identical offline invocations are byte-identical") {
  const std::string dir = QUADFIB_FIXTURE_DIR;
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--format", "json", "oeis-check", "13", "--offline", "--cache-dir", dir},
           {"--format", "json", "verify", "7", "--range", "-5..5"},
           {"--format", "csv", "gf", "2", "--x", "1/7", "--terms", "20"},
           {"fib", "41", "--from", "-10", "--to", "10"}}) {
    const auto a = run(args), b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
  }
}
