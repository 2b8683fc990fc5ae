#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "doctest.h"
#include "pairloc/cli.hpp"
#include "pairloc/run_cache.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = pairloc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("pairloc-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string data(const std::string& file) { return std::string(PAIRLOC_DATA_DIR) + "/" + file; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("chern numbers") {
  auto r = run({"chern-number", "p1xp2", "--beta", "fiber", "--n", "1", "--index", "0,1"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j.at("schema") == "pairloc.chern-number/1");
  CHECK(j.at("engine_version") == pairloc::cli::kEngineVersion);
  REQUIRE(j.at("values").size() == 1);
  CHECK(j.at("values")[0].at("value") == "3");
  r = run({"--format", "csv", "chern-number", "p1xp2", "--beta", "fiber", "--n", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "I,value\n(2),9\n\"(0,1)\",3\n");
}

TEST_CASE("geometry files") {
  auto r = run({"geometry", "validate", data("p3.json")});
  CHECK(r.code == 0);
  r = run({"chern-number", data("p1xp2.json"), "--beta", "fiber", "--n", "1", "--index", "2"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out).at("values")[0].at("value") == "9");
  r = run({"geometry", "validate", data("broken.json")});
  CHECK(r.code == pairloc::cli::kModuleError);
  const auto j = json::parse(r.out);
  CHECK(j.at("error").at("kind") == "ValidationError");
  CHECK(j.at("error").at("message").get<std::string>().find("edge 2") != std::string::npos);
  r = run({"geometry", "show", "p3"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out).at("document").at("edges").size() == 6);
}

TEST_CASE("partition function") {
  auto r = run({"partition-function", "p1xp2", "--beta", "fiber", "--nmax", "12", "--fit", "--check-symmetry",
                "--check-poles"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  REQUIRE(j.at("records").size() == 2);
  const auto& rec = j.at("records")[0];
  CHECK(rec.at("I") == "(2)");
  CHECK(rec.at("coefficients")[2] == "216");
  CHECK(rec.at("fit").at("num") == json::array({"0", "9", "36", "270", "36", "9"}));
  CHECK(rec.at("fit").at("den") == json::array({"1", "4", "6", "4", "1"}));
  CHECK(rec.at("functional_equation") == true);
  CHECK(j.at("poles").at("same_support") == true);
  CHECK(j.at("poles").at("same_multiplicities") == true);
}

TEST_CASE("other commands") {
  auto r = run({"smooth-class", "p3"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j.at("chern_numbers").at("(3)") == "64");
  CHECK(j.at("class").at("t3") == "-4");
  r = run({"descendents", "p3", "--chk", "1"});
  REQUIRE(r.code == 0);
  j = json::parse(r.out);
  CHECK(j.at("expression") == json::array({"1 * tau[0,0](1)", "-11/3 * tau[0](h1^2)", "-2 * tau[2](1)"}));
  r = run({"descendents", "p3", "--chk", "1", "--reduce"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out).at("reduced").size() == 6);
  r = run({"fixed-points", "p3", "--beta", "line", "--n", "2"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out).at("pairs").size() == 12);
  r = run({"cobordism-class", "p1xp2", "--beta", "fiber", "--n", "1"});
  CHECK(r.code == 0);
}

TEST_CASE("exit codes") {
  CHECK(run({"no-such-command"}).code == pairloc::cli::kUsage);
  CHECK(run({"chern-number", "p3", "--beta", "line", "--n", "1", "--index", "1,1"}).code != 0);
  auto r = run({"chern-number", "p1xp2", "--beta", "2*fiber", "--n", "1"});
  CHECK(r.code == pairloc::cli::kModuleError);
  CHECK(json::parse(r.out).at("error").at("kind") == "EngineUnavailable");
  r = run({"--enable-ptvertex", "chern-number", "p1p1p1", "--beta", "e1+e2+e3", "--n", "3"});
  CHECK(r.code == pairloc::cli::kNonIsolated);
  CHECK(json::parse(r.out).at("error").at("kind") == "NonIsolatedFixedLocus");
}

TEST_CASE("reruns are byte-identical") {
  const std::vector<std::string> args{"partition-function", "p3", "--beta", "line", "--nmax", "6"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto threaded = args;
  threaded.insert(threaded.begin(), {"--threads", "3"});
  CHECK(run(threaded).out == a.out);
}

TEST_CASE("result cache") {
  const auto dir = fresh_dir("cache");
  const std::vector<std::string> args{"--cache", dir.string(), "chern-number", "p3", "--beta", "line", "--n", "3"};
  const auto first = run(args);
  REQUIRE(first.code == 0);
  std::size_t entries = 0;
  fs::path entry;
  for (const auto& e : fs::directory_iterator(dir)) {
    ++entries;
    entry = e.path();
  }
  REQUIRE(entries == 1);
  const auto second = run(args);
  CHECK(second.out == first.out);
  {
    std::ofstream corrupt(entry, std::ios::trunc);
    corrupt << "{\"key\": \"x\", \"payload\": \"garbage\"}";
  }
  const auto third = run(args);
  CHECK(third.code == 0);
  CHECK(third.out == first.out);
  CHECK(third.err.find("verification") != std::string::npos);
  const auto fourth = run(args);
  CHECK(fourth.err.find("verification") == std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("cache store") {
  const auto dir = fresh_dir("store");
  pairloc::RunCache cache(dir);
  CHECK_FALSE(cache.load("k").has_value());
  bool hit = true;
  CHECK(cache.get_or_compute("k", [] { return std::string("v1"); }, &hit) == "v1");
  CHECK_FALSE(hit);
  CHECK(cache.get_or_compute("k", [] { return std::string("v2"); }, &hit) == "v1");
  CHECK(hit);
  CHECK(cache.entry_path("k").filename() == pairloc::sha256_hex("k") + ".json");
  CHECK(pairloc::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  fs::remove_all(dir);
}

}
