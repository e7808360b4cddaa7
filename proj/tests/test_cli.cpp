#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"
#include "mapblocks/map_json.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(MAPBLOCKS_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  while (std::size_t got = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), got);
  const int status = pclose(p);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("count ranges", "[cli]") {
  auto r = run_cli("count --maps 0..5");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.out == "1 2 9 54 378 2916\n");
  r = run_cli("count --blocks 0..4");
  REQUIRE(r.out == "1 2 1 2 6\n");
  r = run_cli("count --maps 0..0");
  REQUIRE(r.out == "1\n");
  REQUIRE(run_cli("count --maps 5..2").exit_code == 2);
  REQUIRE(run_cli("count").exit_code == 2);

  r = run_cli("count --series 3");
  REQUIRE(r.out == "{\"maps\":[\"1\",\"2\",\"9\",\"54\"],\"two_connected\":[\"1\",\"2\",\"1\",\"2\"]}\n");
  r = run_cli("count --mu 2");
  REQUIRE(r.out == "[\"3/4\",\"2/9\",\"4/243\"]\n");
}

TEST_CASE("verify fast passes and fault injection fails", "[cli]") {
  REQUIRE(run_cli("verify fast").exit_code == 0);
  REQUIRE(run_cli("verify fast --inject-fault compose").exit_code == 1);
  REQUIRE(run_cli("verify fast --inject-fault critical").exit_code == 1);
}

TEST_CASE("sampling is deterministic and honors the schema", "[cli]") {
  const std::string args = "sample --n 2 --count 3 --seed 7";
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  REQUIRE(a.exit_code == 0);
  REQUIRE(a.out == b.out);
  REQUIRE(a.out.substr(0, a.out.find('\n')) == "n,replica,sample,seed,trials,L1,L2,L3,...");

  // different thread counts, same bytes
  const auto t1 = run_cli("sample --n 60 --count 8 --replicas 2 --seed 3 --threads 1");
  const auto t3 = run_cli("sample --n 60 --count 8 --replicas 2 --seed 3 --threads 3");
  REQUIRE(t1.out == t3.out);
}

TEST_CASE("full-map sampling emits valid maps", "[cli]") {
  const auto r = run_cli("sample --full-map --format json --n 3 --count 10 --seed 11");
  REQUIRE(r.exit_code == 0);
  std::istringstream is(r.out);
  std::string line;
  int rows = 0;
  while (std::getline(is, line)) {
    ++rows;
    const auto j = nlohmann::json::parse(line);
    const auto m = mapblocks::map_from_json(j.at("map"));
    REQUIRE(m.edges() == 3);
    REQUIRE(mapblocks::validate(m).empty());
  }
  REQUIRE(rows == 10);
  REQUIRE(run_cli("sample --full-map --format json --n 9 --count 1").exit_code == 2);
  REQUIRE(run_cli("sample --full-map --n 3 --count 1").exit_code == 2);  // csv not allowed
}

TEST_CASE("usage errors exit with 2", "[cli]") {
  REQUIRE(run_cli("sample --n 2").exit_code == 2);            // missing --count
  REQUIRE(run_cli("sample --n 2 --count 0").exit_code == 2);  // zero samples
  REQUIRE(run_cli("experiment --n 100 --count 0").exit_code == 2);
  REQUIRE(run_cli("frobnicate").exit_code == 2);
  REQUIRE(run_cli("sample --n 2 --count 1 --format yaml").exit_code == 2);
}

TEST_CASE("experiment report schema", "[cli]") {
  const auto r = run_cli("experiment --n 500 --count 400 --seed 2 --k 2");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  for (const char* key : {"test", "n", "m", "seed", "k", "mean_L1_over_n", "largest", "kth"})
    REQUIRE(j.contains(key));
  REQUIRE(j["test"] == "block-size-limit-laws");
  REQUIRE(j["m"] == 400);
  REQUIRE(j["kth"].contains("verdict"));
  REQUIRE(j["kth"].contains("discrimination_factor"));

  // determinism of the report
  const auto r2 = run_cli("experiment --n 500 --count 400 --seed 2 --k 2");
  REQUIRE(r.out == r2.out);
}
