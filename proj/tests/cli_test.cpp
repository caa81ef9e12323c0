#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "polya");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = polya::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("quad --d 10") {
  const Result r = run({"quad", "--d", "10"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["d"] == 10);
  CHECK(j["rank"] == 1);
  CHECK(j["ramified"] == nlohmann::json::array({2, 5}));
  CHECK(j["h1_rank"] == 1);
  CHECK(j["unit"]["x"] == 6);
  CHECK(j["unit"]["y"] == 2);
  CHECK(j["unit"]["norm"] == -1);
  for (const char* method : {"full", "midpoint", "genus", "auto"}) {
    const Result m = run({"quad", "--d", "10", "--method", method});
    CHECK(m.code == 0);
    CHECK(nlohmann::json::parse(m.out)["rank"] == 1);
  }
}

TEST_CASE("large integers are emitted as strings") {
  const Result r = run({"quad", "--d", "9901"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["unit"]["x"].is_string());
  CHECK(j["d"].is_number_integer());
}

TEST_CASE("oracle and quad agree") {
  for (const char* d : {"5", "10", "34", "79", "226"}) {
    const auto q = nlohmann::json::parse(run({"quad", "--d", d}).out);
    const auto o = nlohmann::json::parse(run({"oracle", "--d", d}).out);
    INFO("d = ", d);
    CHECK(q["rank"] == o["rank"]);
  }
}

TEST_CASE("biquad") {
  const Result r = run({"biquad", "--m", "5", "--n", "3"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["subfields"] == nlohmann::json::array({5, 3, 15}));
  CHECK(j["s"] == 3);
  CHECK(j["h1_rank"] == 3);
  CHECK(j["rank"] == 0);
  CHECK(j["ramified"][0]["prime"] == 2);
  CHECK(j["ramified"][0]["e"] == 2);
}

TEST_CASE("cubic, tuple and density") {
  const auto c = nlohmann::json::parse(run({"cubic", "--n", "13"}).out);
  CHECK(c["h"] == 217);
  CHECK(c["polya_order"] == 3);
  CHECK(c["r_k"] == 2);

  const Result t = run({"tuple", "--t", "2", "--p", "7", "--q", "3"});
  REQUIRE(t.code == 0);
  CHECK(nlohmann::json::parse(t.out)["r"][0] == 337);

  const Result d = run({"density", "--X", "1000", "--a", "1", "--m", "1", "--cutoff", "1000"});
  REQUIRE(d.code == 0);
  const auto dj = nlohmann::json::parse(d.out);
  CHECK(dj["empirical"].get<int>() <= dj["primes_in_ap"].get<int>());
}

TEST_CASE("verification subcommands") {
  const Result c = run({"verify-cubic", "--M", "25"});
  REQUIRE(c.code == 0);
  const auto j = nlohmann::json::parse(c.out);
  CHECK(j["po_lower_bound"] == 27);
  CHECK(j["modulus"] == 53599);
  CHECK(j["verified"] == true);

  const Result b = run({"verify-biquad", "--t", "3", "--q", "3"});
  REQUIRE(b.code == 0);
  const auto bj = nlohmann::json::parse(b.out);
  CHECK(bj["passed"] == true);
  CHECK(bj["rank_kmp"] == 2);
  CHECK(bj["rank_kmp_minus_1"] == 2);
  CHECK(bj["tuple"]["r"].size() == 3);
}

TEST_CASE("tsv output") {
  const Result r = run({"--tsv", "quad", "--d", "10"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string header, values, extra;
  REQUIRE(std::getline(lines, header));
  REQUIRE(std::getline(lines, values));
  CHECK_FALSE(std::getline(lines, extra));
  CHECK(header.rfind("d\trank\t", 0) == 0);
  CHECK(values.rfind("10\t1\t", 0) == 0);
}

TEST_CASE("exit codes") {
  CHECK(run({"biquad", "--m", "2", "--n", "3"}).code == 2);
  CHECK(run({"cubic", "--n", "5"}).code == 2);
  CHECK(run({"tuple", "--t", "3", "--p", "9", "--q", "3"}).code == 2);
  CHECK(run({"quad", "--d", "12"}).code == 2);
  CHECK(run({"quad", "--d", "abc"}).code == 2);
  CHECK(run({"quad"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify-biquad", "--t", "4", "--q", "3"}).code == 2);
  CHECK(run({"--search-bound", "1", "tuple", "--t", "3", "--p", "7", "--q", "3"}).code == 3);
  CHECK(run({"--cf-bound", "2", "quad", "--d", "94", "--method", "full"}).code == 3);
  CHECK(run({"--help"}).code == 0);
  const Result refused = run({"biquad", "--m", "2", "--n", "3"});
  CHECK(refused.out.empty());
  CHECK(refused.err.find("error") != std::string::npos);
}

TEST_CASE("cache file is used and filled") {
  const std::string path = (std::filesystem::temp_directory_path() / "polya_cli_cache.txt").string();
  std::filesystem::remove(path);
  CHECK(run({"--cache", path, "quad", "--d", "7", "--method", "full"}).code == 0);
  std::ifstream in(path);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "7 16 6 1");
  CHECK(run({"--cache", path, "quad", "--d", "7"}).code == 0);
  std::filesystem::remove(path);
}
