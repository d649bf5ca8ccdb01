#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ivhs/nongenericity.hpp"
#include "ivhs_cli/cli.hpp"

using namespace ivhs;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "ivhs");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return std::string(IVHS_FIXTURE_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("ivhs_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("ehrhart prints exact coefficients") {
    const Result r = run({"ehrhart", "--polytope", fixture("simplex4.json")});
    CHECK(r.code == 0);
    CHECK(r.out.find("1 25/12 35/24 5/12 1/24") != std::string::npos);
    const Result j = run({"ehrhart", "--polytope", fixture("simplex4.json"), "--json"});
    CHECK(j.code == 0);
    CHECK(j.out.find("\"25/12\"") != std::string::npos);
  }

  TEST_CASE("check toric emits a round-tripping NonGeneric certificate") {
    const std::vector<std::string> args{"check", "toric", "--fan", fixture("p4.fan"), "--divisor", "1,0,0,0,0",
                                        "--t", "6", "--seed", "1", "--json"};
    const Result r = run(args);
    REQUIRE(r.code == 0);
    const Certificate c = certificate_from_json(r.out);
    CHECK(c.verdict == Verdict::NonGeneric);
    CHECK(to_json(c) + "\n" == r.out);
    CHECK(run(args).out == r.out);
  }

  TEST_CASE("exit codes") {
    const Result cartier = run({"check", "wps", "--weights", "1,1,1,1,2", "--d", "7"});
    CHECK(cartier.code == 3);
    CHECK(cartier.err.find("NotCartier") != std::string::npos);
    CHECK(run({"check", "toric", "--fan", fixture("p4.fan"), "--divisor", "1,0,0", "--t", "5"}).code == 2);
    CHECK(run({"check", "toric", "--fan", "/nonexistent.fan", "--divisor", "1,0,0,0,0", "--t", "5"}).code == 2);
    CHECK(run({"no-such-command"}).code == 2);
    CHECK(run({"check", "wps", "--weights", "1,x", "--d", "2"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    const Result small = run({"moduli", "--weights", "1,1,1,1", "--d", "4"});
    CHECK(small.code == 3);
    CHECK(small.err.find("DimensionTooSmall") != std::string::npos);
  }

  TEST_CASE("fan documents report the offending field") {
    const auto bad = temp_file("bad.fan", R"({"rays": [[1, 0], [0, "a"], [-1, -1]], "max_cones": [[0, 1], [1, 2], [0, 2]]})");
    const Result r = run({"hodge", "--fan", bad, "--divisor", "1,0,0", "--t", "1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("fan.rays[1][1]") != std::string::npos);
    const auto broken = temp_file("broken.fan", "{\"rays\": [[1, 0],\n  [0, 1]");
    const Result b = run({"hodge", "--fan", broken, "--divisor", "1,0,0", "--t", "1"});
    CHECK(b.code == 2);
    CHECK(b.err.find("line 2") != std::string::npos);
    const auto missing = temp_file("missing.fan", R"({"rays": [[1, 0], [0, 1], [-1, -1]]})");
    CHECK(run({"hodge", "--fan", missing, "--divisor", "1,0,0", "--t", "1"}).err.find("max_cones") != std::string::npos);
  }

  TEST_CASE("hodge, moduli and scan") {
    const Result h = run({"hodge", "--fan", fixture("p4.fan"), "--divisor", "1,0,0,0,0", "--t", "5", "--json"});
    CHECK(h.code == 0);
    CHECK(h.out.find("\"h_next\": \"101\"") != std::string::npos);
    const Result w = run({"hodge", "--weights", "1,1,1,1,2", "--d", "8"});
    CHECK(w.code == 0);
    const Result m = run({"moduli", "--fan", fixture("p4.fan"), "--divisor", "1,0,0,0,0", "--t", "6"});
    CHECK(m.out.find("185") != std::string::npos);
    const Result s = run({"scan", "--fan", fixture("p4.fan"), "--divisor", "1,0,0,0,0", "--t-min", "5", "--t-max", "8"});
    CHECK(s.code == 0);
    CHECK(s.out.find("first NonGeneric t: 6") != std::string::npos);
  }

  TEST_CASE("symm and ci") {
    const Result r = run({"symm", "--g0", "2", "--g1", "5", "--g2", "3", "--d", "9", "--trials", "5", "--json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"failures\": \"0\"") != std::string::npos);
    const auto prob = temp_file("prob.json", R"({"g0": 2, "g1": 2, "g2": 2, "e0_basis": [[[1, 0], [0, 1]]]})");
    const Result p = run({"symm", "--problem", prob, "--json"});
    CHECK(p.code == 0);
    CHECK(p.out.find("\"dim\": \"4\"") != std::string::npos);
    const Result c = run({"ci", "--n", "4", "--degrees", "5", "--json"});
    CHECK(c.code == 0);
    CHECK(c.out.find("\"effective_bound\": \"7\"") != std::string::npos);
    CHECK(run({"ci", "--n", "6", "--degrees", "2,2,2"}).code == 0);
    CHECK(run({"check", "ci", "--n", "6", "--degrees", "2,2,2"}).code == 3);
  }

  TEST_CASE("integer lists") {
    CHECK(cli::parse_int_list("1,-2, 3") == std::vector<std::int64_t>{1, -2, 3});
    CHECK_THROWS(cli::parse_int_list(""));
    CHECK_THROWS(cli::parse_int_list("1,,2"));
  }
}
