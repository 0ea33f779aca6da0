#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "rca/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = rca::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "rca-cli-tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("check eca:90 fails") {
    const auto r = run({"check", "eca:90"});
    CHECK(r.code == 1);
    CHECK(r.out.find("not injective") != std::string::npos);
  }

  TEST_CASE("check eca:170 reports the inverse") {
    const auto r = run({"check", "eca:170"});
    CHECK(r.code == 0);
    CHECK(r.out.find("N = {1}; N^-1 = {-1}; N~ = {1}") != std::string::npos);
  }

  TEST_CASE("bn eca:170") {
    const auto r = run({"bn", "eca:170"});
    CHECK(r.code == 0);
    CHECK(r.out.find("BN = {1}; bound = {1}; slack = {}") != std::string::npos);
  }

  TEST_CASE("verify eca:170 exhaustive") {
    const auto r = run({"verify", "eca:170", "--period", "6", "--exhaustive"});
    CHECK(r.code == 0);
    CHECK(r.out.find("4096/4096 match") != std::string::npos);
  }

  TEST_CASE("census of elementary rules") {
    const auto r = run({"census", "--alphabet", "2", "--radius", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("6 of 256 rules are reversible") != std::string::npos);
    for (const char* line : {"rule 15:", "rule 51:", "rule 85:", "rule 170:", "rule 204:", "rule 240:"})
      CHECK(r.out.find(line) != std::string::npos);
    CHECK(r.out.find("rule 90:") == std::string::npos);
  }

  TEST_CASE("time-symmetry commands") {
    CHECK(run({"ts-check", "eca:51", "--involution", "0 1"}).code == 0);
    CHECK(run({"ts-check", "eca:170", "--involution", "0,1"}).code == 1);
    CHECK(run({"ts-find", "eca:170"}).code == 1);
    CHECK(run({"ts-find", "eca:204"}).code == 0);

    const auto sym = scratch("sym170.rule");
    REQUIRE(run({"symmetrize", "eca:170", "-o", sym.string()}).code == 0);
    const auto e = run({"ebr2", sym.string(), "--involution", "0 2 1 3", "--period", "6"});
    CHECK(e.code == 0);
    CHECK(e.out.find("4096/4096") != std::string::npos);
    CHECK(run({"ebr2", sym.string(), "--involution", "0 1 2 3", "--period", "6"}).code == 1);
  }

  TEST_CASE("invert writes a rule file") {
    const auto path = scratch("inv170.rule");
    CHECK(run({"invert", "eca:170", "-o", path.string()}).code == 0);
    CHECK(run({"bn", "eca:240"}).out == run({"bn", path.string()}).out);
    CHECK(run({"invert", "eca:90"}).code == 1);
  }

  TEST_CASE("usage and input errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"check"}).code == 2);
    CHECK(run({"check", "eca:999"}).code == 2);
    CHECK(run({"check", "/nonexistent/rule"}).code == 2);
    CHECK(run({"verify", "eca:170"}).code == 2);
    CHECK(run({"verify", "eca:170", "--period", "1"}).code == 2);
    CHECK(run({"verify", "eca:170", "--period", "6", "--exhaustive", "--sampled"}).code == 2);
    CHECK(run({"ts-check", "eca:170", "--involution", "1 2 0"}).code == 2);
    const auto bad = scratch("bad.rule");
    std::ofstream(bad) << "alphabet 2\nneighborhood 0\ntable 0 1 1\n";
    const auto r = run({"check", bad.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 3") != std::string::npos);
    CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
  }

  TEST_CASE("help exits 0") { CHECK(run({"--help"}).code == 0); }

  TEST_CASE("dumps are byte-identical across runs") {
    const auto a = scratch("a.dump"), b = scratch("b.dump");
    for (const auto& p : {a, b})
      REQUIRE(run({"verify", "eca:15", "--period", "7", "--sampled", "--samples", "300", "--seed", "4",
                   "--dump", p.string()})
                  .code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a).rfind("period 7\nlayers 2\n", 0) == 0);

    const auto c = scratch("c.dump"), d = scratch("d.dump");
    for (const auto& p : {c, d}) REQUIRE(run({"blocks", "eca:170", "--dump", p.string()}).code == 0);
    CHECK(slurp(c) == slurp(d));
    CHECK_FALSE(slurp(c).empty());
  }

  TEST_CASE("JSON reports round-trip") {
    const auto sym = scratch("sym15.rule");
    REQUIRE(run({"symmetrize", "eca:15", "-o", sym.string()}).code == 0);
    const std::vector<std::vector<std::string>> commands = {
        {"check", "eca:170", "--json"},
        {"check", "eca:90", "--json"},
        {"invert", "eca:15", "--json"},
        {"bn", "eca:15", "--powers", "3", "--json"},
        {"blocks", "eca:170", "--json"},
        {"verify", "eca:170", "--period", "5", "--json"},
        {"ts-check", "eca:51", "--involution", "1 0", "--json"},
        {"ts-find", "eca:204", "--json"},
        {"ebr2", sym.string(), "--involution", "0 2 1 3", "--period", "6", "--json"},
        {"symmetrize", "eca:170", "--json"},
        {"census", "--alphabet", "2", "--radius", "1", "--json"}};
    for (const auto& argv : commands) {
      const auto r = run(argv);
      CAPTURE(argv[0]);
      CHECK(r.code <= 1);
      const auto doc = nlohmann::json::parse(r.out);
      CHECK(doc.dump(2) + "\n" == r.out);
    }
    const auto v = nlohmann::json::parse(run({"verify", "eca:170", "--period", "6", "--json"}).out);
    CHECK(v["report"]["tested"] == 4096);
    CHECK(v["report"]["mismatches"] == 0);
  }
}
