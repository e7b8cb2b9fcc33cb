#include "cli.hpp"

#include <json.hpp>

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using antichain::cli::run_cli;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string &name, const std::string &text) {
  const auto path = std::filesystem::temp_directory_path() / ("antichain_cli_" + name + ".json");
  std::ofstream(path) << text;
  return path.string();
}

json without_timing(const std::string &text) {
  auto j = json::parse(text);
  j.erase("timing");
  return j;
}

} // namespace

TEST_CASE("check subcommand") {
  const auto layer = write_temp("layer", R"({"n":4,"sets":[[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]})");
  const auto chain = write_temp("chain", R"({"n":2,"sets":[[1],[1,2]]})");
  const auto broken = write_temp("broken", R"({"n":2,"sets":[[1],)");
  auto ok = run({"check", layer, "--sperner"});
  CHECK(ok.code == 0);
  CHECK(json::parse(ok.out)["result"]["properties"]["lym"] == "1/1");
  CHECK(run({"check", chain, "--sperner"}).code == 1);
  CHECK(run({"check", broken, "--sperner"}).code == 2);
  CHECK(run({"check", "/nonexistent/file.json"}).code == 2);
  CHECK(run({"check", layer, "--uniform", "2", "--L", "0,1", "--setwise", "2"}).code == 0);
  CHECK(run({"check", layer, "--ball", "0"}).code == 1);
}

TEST_CASE("certify subcommand") {
  const auto tri = write_temp("tri", R"({"n":3,"sets":[[1,2],[1,3],[2,3]]})");
  const auto r = run({"certify", tri, "--system", "katona", "--dump-polys"});
  CHECK(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["result"]["polys"].size() == 4);
  CHECK(j["result"]["groups"]["members"] == 3);

  const auto chain = write_temp("chain2", R"({"n":3,"sets":[[1],[1,2]]})");
  const auto s = run({"certify", chain, "--system", "snevily", "--L", "1"});
  CHECK(s.code == 2);
  CHECK(s.err.find("Sperner") != std::string::npos);

  const auto odd = write_temp("odd", R"({"n":3,"sets":[[],[1]]})");
  CHECK(run({"certify", odd, "--system", "symmetric", "--k", "1"}).code == 2);
  CHECK(run({"certify", odd, "--system", "symmetric", "--k", "1", "--normalize"}).code == 0);
  CHECK(run({"certify", tri, "--system", "nonsense"}).code == 2);
}

TEST_CASE("bounds and search subcommands") {
  const auto b = run({"bounds", "--n", "10", "--k", "1", "--d", "3"});
  CHECK(b.code == 0);
  CHECK_FALSE(json::parse(b.out)["result"]["bounds"].empty());

  const auto s = run({"search", "--n", "4", "--mode", "diameter", "--d", "2"});
  CHECK(s.code == 0);
  CHECK(json::parse(s.out)["result"]["optimum"] == 5);
  CHECK(run({"search", "--n", "5", "--mode", "lsperner", "--L", "0,1"}).code == 0);
  CHECK(run({"search", "--n", "5", "--mode", "setwise", "--k", "1", "--sperner"}).code == 0);
  CHECK(run({"search", "--n", "5", "--mode", "audit", "--k", "1"}).code == 0);
  CHECK(run({"search", "--n", "5", "--mode", "setwise-audit", "--k", "1", "--t", "2"}).code == 0);
  CHECK(run({"search", "--n", "6", "--mode", "diameter", "--d", "3", "--node-cap", "1"}).code == 3);
  CHECK(run({"search", "--n", "5", "--mode", "diameter"}).code == 2);
  CHECK(run({"search", "--n", "25", "--mode", "diameter", "--d", "2"}).code == 2);
  CHECK(run({"search", "--mode", "diameter"}).code == 2);
}

TEST_CASE("reports are reproducible") {
  const std::vector<std::string> args{"search", "--n", "5", "--mode", "diameter", "--d", "3"};
  const auto a = run(args), b = run(args);
  CHECK(without_timing(a.out) == without_timing(b.out));
  CHECK(json::parse(a.out)["input_digest"] == json::parse(b.out)["input_digest"]);
  const auto c = run({"search", "--n", "5", "--mode", "diameter", "--d", "2"});
  CHECK(json::parse(a.out)["input_digest"] != json::parse(c.out)["input_digest"]);

  setenv("ANTICHAIN_WORKERS", "3", 1);
  const auto d = run(args);
  unsetenv("ANTICHAIN_WORKERS");
  CHECK(without_timing(d.out)["result"] == without_timing(a.out)["result"]);
  setenv("ANTICHAIN_WORKERS", "zero", 1);
  CHECK(run(args).code == 2);
  unsetenv("ANTICHAIN_WORKERS");
}

TEST_CASE("verify-suite subcommand") {
  CHECK(run({"verify-suite", "--max-n", "20"}).code == 2);
  CHECK(run({"verify-suite", "--max-n", "4", "--node-cap", "1"}).code == 3);
  const auto r = run({"verify-suite", "--max-n", "5", "--seed", "42"});
  CHECK(r.code == 0);
  for (const auto &c : json::parse(r.out)["checks"])
    CHECK(c["outcome"] == "pass");
  const auto p = run({"--pretty", "verify-suite", "--max-n", "3"});
  CHECK(p.code == 0);
  CHECK(p.out.find("[pass]") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({}).code == 2);
}
