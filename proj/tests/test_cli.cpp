#include <json.hpp>
#include <sstream>

#include "doctest.h"
#include "lmriv/cli.hpp"

using namespace lmriv;
using Json = nlohmann::json;

namespace {

struct Run {
  int code = 0;
  std::vector<Json> lines;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, in, out, err);
  std::istringstream lines(out.str());
  for (std::string line; std::getline(lines, line);) r.lines.push_back(Json::parse(line));
  r.err = err.str();
  return r;
}

std::string corpus(int n) { return std::string(LMRIV_DATA_DIR) + "/connected_n" + std::to_string(n) + ".g6"; }

}  // namespace

TEST_CASE("poly") {
  const Run c3 = run({"poly", "Bw"});
  CHECK(c3.code == 0);
  REQUIRE(c3.lines.size() == 1);
  CHECK(c3.lines[0]["coefficients"] == Json::array({-2, 9, -6, 1}));
  CHECK(c3.lines[0]["b"] == Json::array({1, 6, 9, 2}));
  CHECK(c3.lines[0]["routes_agree"] == true);

  CHECK(run({"poly", "--kind", "matching", "Bg"}).lines[0]["coefficients"] == Json::array({0, -2, 0, 1}));
  CHECK(run({"poly", "@"}).lines[0]["coefficients"] == Json::array({0, 1}));

  const Run piped = run({"poly"}, ">>graph6<<Bg\n\nBw\n");
  CHECK(piped.lines.size() == 2);

  const Run capped = run({"poly", "--max-size", "2", "Bw"});
  CHECK(capped.code == 0);
  CHECK(capped.lines[0]["routes"]["tu_census"].is_null());
}

TEST_CASE("roots") {
  auto values = [](const Json& line) {
    std::vector<std::string> out;
    for (const auto& r : line["roots"]) out.push_back(r["value"]);
    return out;
  };
  const Run r = run({"roots", "Bg", "Cs", "Bw"});
  CHECK(r.code == 0);
  REQUIRE(r.lines.size() == 3);
  CHECK(values(r.lines[0]) == std::vector<std::string>{"3.0", "1.0", "0.0"});
  CHECK(values(r.lines[1]) == std::vector<std::string>{"4.0", "1.0", "0.0"});
  CHECK(r.lines[1]["roots"][1]["multiplicity"] == 2);
  CHECK(values(r.lines[2]) == std::vector<std::string>{"3.732050808", "2.0", "0.267949192"});
  CHECK(r.lines[2]["real_root_count"] == 3);

  CHECK(run({"roots", "--width", "0", "Bw"}).code == exit_code::input_failure);
  CHECK(run({"roots", "--width", "abc", "Bw"}).code == exit_code::input_failure);
}

TEST_CASE("census and ratio") {
  const Run c5 = run({"census", "Dhc"});
  REQUIRE(c5.lines.size() == 1);
  const Json& j = c5.lines[0];
  CHECK(j["i"] == 5);
  CHECK(j["b_i"] == 2);
  CHECK(j["spanning_trees"] == 5);
  CHECK(j["unicyclic_spanning"] == 1);
  CHECK(j["girth"] == 5);
  CHECK(j["cycle_dim"] == 1);
  CHECK(j["holds"] == true);

  const Run k4 = run({"census", "-i", "4", "C~"});
  CHECK(k4.lines[0]["spanning_trees"] == 16);
  CHECK(k4.lines[0]["unicyclic_spanning"] == 15);

  const Run tree = run({"census", "Bg"});
  CHECK(tree.code == 0);
  CHECK(tree.lines[0]["b_i"] == 0);
  CHECK(tree.lines[0].contains("ratio_error"));

  CHECK(run({"census", "-i", "9", "Bw"}).code == exit_code::input_failure);
  CHECK(run({"census", "--max-size", "3", "C~"}).code == exit_code::size_cap);

  CHECK(run({"ratio", "Bg"}).code == exit_code::input_failure);
  const Run ratio = run({"ratio", "Df{"});
  CHECK(ratio.code == 0);
  CHECK(ratio.lines[0]["lhs"] == 160);
  CHECK(ratio.lines[0]["rhs"] == 144);
  CHECK(ratio.lines[0]["partitions"]["min_ratio"] == "5/6");
}

TEST_CASE("scan") {
  const Run n5 = run({"scan", "--jobs", "2", corpus(5)});
  CHECK(n5.code == 0);
  const Json& s = n5.lines.back()["summary"];
  CHECK(s["one_place"] == 0);
  CHECK(s["two_place"] == 0);
  CHECK(s["graphs"] == 21);

  const Run c6 = run({"scan", "-"}, "EhEG\n");
  CHECK(c6.code == 0);
  REQUIRE(c6.lines.size() == 10);
  for (std::size_t k = 0; k < 9; ++k) CHECK(!c6.lines[k]["obstructions"].empty());
  CHECK(c6.lines.back()["summary"]["covered_false"] == 9);

  const Run empty = run({"scan", "-"});
  CHECK(empty.code == 0);
  REQUIRE(empty.lines.size() == 1);
  CHECK(empty.lines[0]["summary"]["reports"] == 0);

  CHECK(run({"scan", "/nonexistent/corpus.g6"}).code == exit_code::input_failure);
}

TEST_CASE("verify") {
  const Run ok = run({"verify", "--suite", "identities", corpus(5)});
  CHECK(ok.code == 0);
  CHECK(ok.lines.back()["summary"]["failures"] == 0);

  const Run broken = run({"verify", "--suite", "roots", "-"}, "Bw\nBg\nB\x01\n");
  CHECK(broken.code == exit_code::input_failure);
  CHECK(broken.err.find("line 3") != std::string::npos);

  const Run partitions = run({"verify", "--suite", "partitions", "-"}, "Df{\n");
  CHECK(partitions.code == exit_code::invariant_failure);
  CHECK(partitions.lines.front()["invariant"] == "partition_ratio_gt_1");

  CHECK(run({"verify", "--suite", "census", "--max-size", "4", "-"}, "Dhc\n").code == exit_code::size_cap);
  CHECK(run({"verify", "--suite", "bogus", "-"}).code == exit_code::input_failure);
}

TEST_CASE("output does not depend on the job count") {
  std::ostringstream a, b, err;
  std::istringstream in;
  run_cli({"scan", "--jobs", "1", corpus(6)}, in, a, err);
  run_cli({"scan", "--jobs", "3", corpus(6)}, in, b, err);
  CHECK(a.str() == b.str());
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == exit_code::input_failure);
  CHECK(run({"frobnicate"}).code == exit_code::input_failure);
  CHECK(run({"poly", "--kind", "weird", "Bw"}).code == exit_code::input_failure);
  std::istringstream in;
  std::ostringstream out, err;
  CHECK(run_cli({"--help"}, in, out, err) == 0);
  CHECK(out.str().find("verify") != std::string::npos);
}
