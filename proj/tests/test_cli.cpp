#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "semires/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = semires::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

json run_json(std::vector<std::string> args) {
  const auto r = run(std::move(args));
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    if (!l.empty()) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("generator parsing") {
  CHECK(semires::cli::parse_generators("7,9,10") == std::vector<long long>{7, 9, 10});
  CHECK(semires::cli::parse_generators(" 13, 9,11 ,14") == std::vector<long long>{13, 9, 11, 14});
  CHECK_THROWS(semires::cli::parse_generators("7,,9"));
  CHECK_THROWS(semires::cli::parse_generators("7,x"));
}

TEST_CASE("classify") {
  const auto j = run_json({"classify", "7,9,10"});
  CHECK(j["class"] == "ThreeGenNonSymmetric");
  CHECK(j["generators"] == json::array({7, 9, 10}));
  CHECK(j["params"]["alpha1"] == 4);
  CHECK(j["ideal"].size() == 3);

  const auto k = run_json({"classify", "13,9,11,14"});
  CHECK(k["class"] == "FourGenPseudosymmetric");

  // unsupported semigroups still get their classification printed, with exit 2
  const auto u = run({"classify", "6,7,8,9"});
  CHECK(u.code == 2);
  CHECK(json::parse(u.out)["class"] == "Unsupported");
}

TEST_CASE("resolve") {
  const auto j = run_json({"resolve", "7,9,8,13"});
  CHECK(j["betti_numbers"] == json::array({1, 5, 5, 1}));
  CHECK(j["betti_degrees"][3] == json::array({56}));
  CHECK(j["maps"].size() == 3);

  const auto text = run({"resolve", "7,9,10", "--format", "text"});
  CHECK(text.code == 0);
  CHECK(text.out.find("x1^4") != std::string::npos);
}

TEST_CASE("pf, frobenius and hilbert") {
  const auto pf = run_json({"pf", "13,9,11,14"});
  CHECK(pf["betti_route"] == json::array({15, 30}));
  CHECK(pf["definition_route"] == json::array({15, 30}));
  CHECK(pf["closed_form"] == json::array({15, 30}));
  CHECK(pf["match"] == true);

  const auto f = run_json({"frobenius", "7,9,8,13"});
  CHECK(f["betti_route"] == 19);
  CHECK(f["match"] == true);

  const auto h = run_json({"hilbert", "2,3", "--max-degree", "5"});
  CHECK(h["series"] == json::array({1, 0, 1, 1, 1, 1}));
  CHECK(h["passed"] == true);
  CHECK(h["k_polynomial"]["text"] == "1 - z^6");
}

TEST_CASE("indisp") {
  CHECK(run_json({"indisp", "75,180,119,136"})["verdict"] == true);
  CHECK(run_json({"indisp", "4,6,9"})["verdict"] == false);
  const auto k = run_json({"indisp", "13,9,11,14"});
  CHECK(k["verdict"] == false);
  CHECK(k["method"] == "PseudoLevels12");
  CHECK(k["levels_checked"] == json::array({1, 2}));
}

TEST_CASE("exit codes") {
  CHECK(run({"classify", "2,4"}).code == 1);
  CHECK(run({"classify", "3,5,8"}).code == 1);
  CHECK(run({"classify", "3,x"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"nosuch"}).code == 1);
  CHECK(run({"resolve", "7,9,10", "--format", "xml"}).code == 1);
  CHECK(run({"--help"}).code == 0);

  const auto u = run({"resolve", "6,7,8,9"});
  CHECK(u.code == 2);
  CHECK_FALSE(u.err.empty());
  CHECK(run({"indisp", "4,5,6,7"}).code == 2);
  CHECK(run({"classify", "6,7,8,9,10"}).code == 2);
}

TEST_CASE("output is deterministic") {
  for (const auto& cmd : {"classify", "resolve", "indisp", "pf", "hilbert"}) {
    const auto a = run({cmd, "13,9,11,14"});
    const auto b = run({cmd, "13,9,11,14"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  const auto s1 = run({"scan", "--gens-max", "15", "--dim", "3", "--jobs", "1"});
  const auto s4 = run({"scan", "--gens-max", "15", "--dim", "3", "--jobs", "4"});
  CHECK(s1.out == s4.out);
}

TEST_CASE("scan") {
  const auto csv = run({"scan", "--gens-max", "12", "--dim", "3", "--format", "csv"});
  REQUIRE(csv.code == 0);
  const auto rows = lines(csv.out);
  REQUIRE(rows.size() > 1);
  CHECK(rows[0] == "generators,class,frobenius,type,verdict,witness");
  CHECK(rows[1].rfind("\"3,4,5\",ThreeGenNonSymmetric,2,2,true,", 0) == 0);

  const auto js = run({"scan", "--gens-max", "14", "--dim", "4", "--class", "FourGenCI"});
  REQUIRE(js.code == 0);
  const auto items = lines(js.out);
  REQUIRE_FALSE(items.empty());
  for (const auto& l : items) CHECK(json::parse(l)["class"] == "FourGenCI");

  const auto kom = run({"scan", "--komeda", "3"});
  REQUIRE(kom.code == 0);
  for (const auto& l : lines(kom.out)) {
    const auto j = json::parse(l);
    CHECK(j["class"] == "FourGenPseudosymmetric");
    CHECK(j["type"] == 2);
  }

  const auto bre = run({"scan", "--bresinsky", "2"});
  REQUIRE(bre.code == 0);
  for (const auto& l : lines(bre.out)) CHECK(json::parse(l)["verdict"] == true);
}

TEST_CASE("selftest") {
  const auto r = run({"selftest"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS") != std::string::npos);
}
