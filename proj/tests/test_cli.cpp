#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "operadica/presentations.hpp"

using namespace operadica;
namespace fs = std::filesystem;

namespace {

const std::string kCli = OPERADICA_CLI_PATH;
const std::string kData = OPERADICA_DATA_DIR;

struct RunResult {
  int exit_code;
  std::string stdout_text;
};

RunResult run(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  auto out = fs::temp_directory_path() / ("operadica_cli_" + std::to_string(counter++) + ".out");
  std::string cmd = env + " \"" + kCli + "\" " + args + " > " + out.string() + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  fs::remove(out);
  return {code, text};
}

nlohmann::json parse(const RunResult& r) { return nlohmann::json::parse(r.stdout_text); }

}  // namespace

TEST_CASE("dual of lie1 is com2") {
  auto r = run("dual lie1");
  REQUIRE(r.exit_code == 0);
  auto j = parse(r);
  CHECK(j.at("schema") == 1);
  auto dual = presentation_from_json(j);
  CHECK(dual.relations == catalogue::com2().relations);
}

TEST_CASE("dual is an involution through files") {
  auto tmp = fs::temp_directory_path() / "operadica_dual_once.json";
  REQUIRE(run("dual com2 -o " + tmp.string()).exit_code == 0);
  auto r = run("dual " + tmp.string());
  REQUIRE(r.exit_code == 0);
  CHECK(presentation_from_json(parse(r)).relations == catalogue::com2().relations);
  fs::remove(tmp);
}

TEST_CASE("malformed input exits with usage failure") {
  auto tmp = fs::temp_directory_path() / "operadica_bad.json";
  std::ofstream(tmp) << "{\"generators\": ";
  CHECK(run("dual " + tmp.string()).exit_code == 1);
  fs::remove(tmp);
  CHECK(run("dual no-such-presentation").exit_code == 1);
  CHECK(run("operad-check --operad bogus").exit_code == 1);
  CHECK(run("frobnicate").exit_code == 1);
}

TEST_CASE("poset verb reports the weighted partition figure") {
  auto dot = fs::temp_directory_path() / "operadica_w3.dot";
  auto r = run("poset com2 3 --cm --iso-weighted --dot " + dot.string());
  REQUIRE(r.exit_code == 0);
  auto j = parse(r);
  CHECK(j.at("elements") == 10);
  CHECK(j.at("hasse_edges") == 18);
  CHECK(j.at("isomorphic_to_weighted") == true);
  CHECK(j.at("maximal_intervals").size() == 3);
  for (const auto& i : j.at("maximal_intervals")) {
    CHECK(i.at("graded") == true);
    CHECK(i.at("cm") == true);
  }
  std::ifstream in(dot);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text.find("12^1") != std::string::npos);
  CHECK(text.find("->") != std::string::npos);
  fs::remove(dot);
}

TEST_CASE("poset verb surfaces the semimodularity counterexample") {
  auto r = run("poset weighted 4 --semimodular");
  REQUIRE(r.exit_code == 0);
  auto j = parse(r);
  bool found = false;
  for (const auto& i : j.at("maximal_intervals"))
    if (i.at("semimodular") == false) {
      found = true;
      CHECK(i.contains("witness"));
      CHECK(i.at("witness").at("excluded_covers").size() >= 1);
    }
  CHECK(found);
}

TEST_CASE("report batteries pass") {
  for (const std::string task : {"theorem-black", "corollary-white", "duality-square"}) {
    auto r = run("report " + task);
    REQUIRE(r.exit_code == 0);
    CHECK(parse(r).at("passed") == true);
  }
}

TEST_CASE("OPERAD_DATA_DIR redirects catalogue lookups") {
  auto r = run("dual lie1", "OPERAD_DATA_DIR=\"" + kData + "\"");
  REQUIRE(r.exit_code == 0);
  CHECK(presentation_from_json(parse(r)).relations == catalogue::com2().relations);
  auto empty = fs::temp_directory_path() / "operadica_empty_data";
  fs::create_directories(empty);
  CHECK(run("dual lie1", "OPERAD_DATA_DIR=" + empty.string()).exit_code == 1);
}
