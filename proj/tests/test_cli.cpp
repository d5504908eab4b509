#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "zagreb/cli.hpp"
#include "zagreb/graph6.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = {}) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = zagreb::run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("zagreb_cli_test_" + name);
}

}  // namespace

TEST_CASE("compute reads graph6 from stdin") {
  const Run r = run({"compute", "--index", "em1"}, "C~\nDhC\n");
  CHECK(r.code == zagreb::kExitOk);
  CHECK(r.out == "graph6,index,value\nC~,EM1,96\nDhC,EM1,10\n");

  const Run all = run({"compute", "--index", "all", "-"}, "C~\n");
  CHECK(all.out == "graph6,index,value\nC~,M1,36\nC~,M2,54\nC~,EM1,96\nC~,EM2,192\n");
}

TEST_CASE("compute json output") {
  const Run r = run({"compute", "--format", "json", "--index", "m1,em1"}, "Bw\n");
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc.at("kind") == "indices");
  CHECK(doc.at("graphs").at(0).at("EM1") == 12);
  CHECK(doc.at("graphs").at(0).at("M1") == 12);
}

TEST_CASE("malformed input exits with a usage error and names the line") {
  const Run r = run({"compute"}, "C~\nC!\n");
  CHECK(r.code == zagreb::kExitUsage);
  CHECK(r.err.find("line 2") != std::string::npos);
  CHECK(run({"compute", "--index", "zz"}, "C~\n").code == zagreb::kExitUsage);
  CHECK(run({"nonsense"}).code == zagreb::kExitUsage);
  CHECK(run({}).code == zagreb::kExitUsage);
}

TEST_CASE("transform applies a rewrite") {
  // P4 0-1-2-3, shift the pendant of 2 onto 1
  const Run r = run({"transform", "--op", "I", "--graph", "Ch", "--u", "2", "--v", "1"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc.at("em1_before") == 6);
  CHECK(doc.at("em1_after") == 12);
  CHECK(doc.at("delta") == 6);

  const Run bad = run({"transform", "--op", "I", "--graph", "Ch", "--u", "0", "--v", "2"});
  CHECK(bad.code == zagreb::kExitUsage);
  CHECK(bad.err.find("not an edge") != std::string::npos);
  CHECK(run({"transform", "--op", "V", "--graph", "Ch"}).code == zagreb::kExitUsage);
}

TEST_CASE("families emit graph6 and closed forms") {
  const Run r = run({"families", "--family", "snk4", "--n", "4..5", "--em1"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string header, k4, five;
  std::getline(lines, header);
  std::getline(lines, k4);
  std::getline(lines, five);
  CHECK(header == "graph6,n,em1,expected");
  CHECK(k4 == "C~,4,96,96");
  CHECK(five.substr(five.find(',')) == ",5,132,132");

  CHECK(run({"families", "--family", "path", "--n", "5"}).out == "DhC\n");
  CHECK(run({"families", "--family", "snm", "--n", "5", "--m", "7"}).code == 0);
  CHECK(run({"families", "--family", "snm", "--n", "5"}).code == zagreb::kExitUsage);
  CHECK(run({"families", "--family", "gamma1", "--n", "5"}).code == zagreb::kExitUsage);
  CHECK(run({"families", "--family", "path", "--n", "6..5"}).code == zagreb::kExitUsage);
}

TEST_CASE("enumerate writes reports and witness files") {
  const auto mins = scratch("min.g6");
  const auto csv = scratch("summary.csv");
  const Run r = run({"enumerate", "--n", "4..5", "--cyclomatic", "3", "--index", "em1", "--min-witnesses",
                     mins.string(), "--csv", csv.string()});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc.at("kind") == "extremal-scans");
  REQUIRE(doc.at("reports").size() == 2);
  CHECK(doc.at("reports").at(0).at("max").at("value") == 96);
  CHECK(doc.at("reports").at(1).at("max").at("value") == 132);

  std::ifstream min_file(mins);
  std::string line;
  std::size_t count = 0;
  while (std::getline(min_file, line)) ++count;
  CHECK(count >= 2);

  std::ifstream csv_file(csv);
  std::getline(csv_file, line);
  CHECK(line == "n,cyclomatic,index,labeled_graphs,min,min_classes,max,max_classes");
  std::getline(csv_file, line);
  CHECK(line == "4,3,EM1,1,96,1,96,1");
  std::filesystem::remove(mins);
  std::filesystem::remove(csv);

  CHECK(run({"enumerate", "--n", "9", "--cyclomatic", "3"}).code == zagreb::kExitUsage);
}

TEST_CASE("verify reports pass and fail through the exit code") {
  const Run r = run({"verify", "theorem-1", "--n", "4..6"});
  CHECK(r.code == zagreb::kExitOk);
  const json doc = json::parse(r.out);
  CHECK(doc.at("status") == "pass");
  CHECK(doc.at("claim") == "theorem-1");

  const Run many = run({"verify", "theorem-2", "lemma-1", "--n", "4..5", "--trials", "50", "--exhaustive-order", "5",
                        "--min-sites", "5"});
  CHECK(many.code == zagreb::kExitOk);
  CHECK(json::parse(many.out).at("kind") == "verdicts");

  const Run thin = run({"verify", "lemma-2", "--trials", "1", "--exhaustive-order", "4", "--min-sites", "1000"});
  CHECK(thin.code == zagreb::kExitVerificationFailed);
  CHECK(json::parse(thin.out).at("status") == "inconclusive");

  CHECK(run({"verify", "theorem-9"}).code == zagreb::kExitUsage);
}

TEST_CASE("brace census lists pendant-free classes") {
  const Run r = run({"brace-census", "--n", "4", "--cyclomatic", "2"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out.size() == 3);
  const zagreb::Graph g = zagreb::graph6_decode(r.out.substr(0, 2));
  CHECK(g.order() == 4);
  CHECK(g.size() == 5);
  CHECK(run({"brace-census", "--n", "4", "--cyclomatic", "0"}).code == zagreb::kExitUsage);
}
