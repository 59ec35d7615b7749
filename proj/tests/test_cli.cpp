#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "invol/cli.hpp"

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = invol::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("construct emits the worked example") {
  const CliResult r = run_cli({"construct", "--q", "7", "--family", "T1", "--k", "0"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["q"] == 7);
  CHECK(j["p"] == 7);
  CHECK(j["n"] == 1);
  CHECK(j["modulus"].is_null());
  CHECK(j["family"] == "T1");
  CHECK(j["gamma"] == 3);
  CHECK(j["terms"] == nlohmann::json::parse("[[5,2],[3,3],[1,3]]"));
  CHECK(j["term_count"] == 3);
}

TEST_CASE("identical invocations are byte-identical") {
  const std::vector<std::string> args = {"survey", "--q", "13"};
  CHECK(run_cli(args).out == run_cli(args).out);
}

TEST_CASE("verify all records of F_13") {
  const CliResult r = run_cli({"verify", "--q", "13", "--all"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["all_passed"] == true);
  CHECK(j["verdicts"].size() == 24);
}

TEST_CASE("domain errors exit with status 2") {
  CHECK(run_cli({"verify", "--q", "15"}).code == 2);   // not a prime power
  CHECK(run_cli({"verify", "--q", "4"}).code == 2);    // even
  CHECK(run_cli({"verify", "--q", "11"}).code == 2);   // 11 = 2 (mod 3)
  CHECK(run_cli({"construct", "--q", "7", "--family", "X9", "--k", "0"}).code == 2);
  CHECK(run_cli({"construct", "--q", "7", "--family", "T1", "--gamma", "2", "--k", "0"}).code == 2);
  CHECK(run_cli({"verify"}).code == 2);                // no field selector
  CHECK(run_cli({}).code == 2);                        // no subcommand
  const CliResult r = run_cli({"verify", "--q", "15"});
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("gamma override") {
  const CliResult r =
      run_cli({"verify", "--q", "7", "--gamma", "5", "--all", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["gamma"] == 5);
  CHECK(j["all_passed"] == true);
}

TEST_CASE("modulus override") {
  const CliResult ok = run_cli({"construct", "--p", "5", "--n", "2", "--modulus", "2,0,1",
                                "--family", "T1", "--k", "0"});
  CHECK(ok.code == 0);
  // t^2 + 4 has root 1 over F_5
  const CliResult bad = run_cli({"construct", "--p", "5", "--n", "2", "--modulus", "4,0,1",
                                 "--family", "T1", "--k", "0"});
  CHECK(bad.code == 2);
}

TEST_CASE("csv output") {
  const CliResult r = run_cli({"verify", "--q", "7", "--all", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("q,family,k,term_count,passed\n", 0) == 0);
  CHECK(r.out.find("7,T1,0,3,true") != std::string::npos);
}

TEST_CASE("pretty output") {
  const CliResult r = run_cli({"verify", "--q", "7", "--format", "pretty"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("format from the environment") {
  setenv("INVOL_FORMAT", "csv", 1);
  const CliResult r = run_cli({"verify", "--q", "7", "--all"});
  unsetenv("INVOL_FORMAT");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("q,family,k,", 0) == 0);
}

TEST_CASE("survey subcommand") {
  const CliResult r = run_cli({"survey", "--q", "7"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["distinct_permutations"] == 6);
  CHECK(j["record_count"] == 12);
  CHECK(j["all_passed"] == true);

  const CliResult range = run_cli({"survey", "--q-min", "8", "--q-max", "12"});
  CHECK(range.code == 0);
  CHECK(nlohmann::json::parse(range.out).empty());

  CHECK(run_cli({"survey", "--q-min", "7"}).code == 2);
}

TEST_CASE("survey-generators subcommand") {
  const CliResult r = run_cli({"survey-generators", "--q", "7"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["per_generator_counts"].size() == 2);
  CHECK(j.contains("union_count"));
  CHECK(j.contains("overlap_matrix"));
}

TEST_CASE("interp subcommand") {
  const CliResult single = run_cli({"interp", "--q", "7", "--family", "T1", "--k", "0"});
  CHECK(single.code == 0);
  const auto j = nlohmann::json::parse(single.out);
  CHECK(j["all_match"] == true);
  CHECK(j["results"][0]["match"] == true);

  const CliResult all = run_cli({"interp", "--q", "13", "--all"});
  CHECK(all.code == 0);
  CHECK(nlohmann::json::parse(all.out)["results"].size() == 24);
}

TEST_CASE("output file option") {
  const auto path = std::filesystem::temp_directory_path() / "invol_cli_test.json";
  const CliResult r =
      run_cli({"construct", "--q", "7", "--family", "T1", "--k", "0", "-o", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream file(path);
  REQUIRE(file.good());
  std::stringstream content;
  content << file.rdbuf();
  CHECK(nlohmann::json::parse(content.str())["family"] == "T1");
  std::filesystem::remove(path);
}

TEST_CASE("help exits cleanly") {
  CHECK(run_cli({"--help"}).code == 0);
  CHECK(run_cli({"construct", "--help"}).code == 0);
}
