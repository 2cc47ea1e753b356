#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "symcap/cli.hpp"
#include "symcap/ech.hpp"

using namespace symcap;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream o, e;
  int c = cli::run(args, o, e);
  return {c, o.str(), e.str()};
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run({"weights", "22/9"}).code == 0);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({}).code == 2);
  CHECK(run({"weights", "22/9", "--bogus"}).code == 2);
  CHECK(run({"capacities", "--tuple", "2:1,1", "--K", "ten"}).code == 2);
  auto bad = run({"capacities", "--tuple", "x"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("usage error") != std::string::npos);
  CHECK(run({"weights", "1/0"}).code == 2);
  auto dom = run({"capacities", "--tuple", "1:2"});
  CHECK(dom.code == 1);
  CHECK(dom.err.find("domain error") != std::string::npos);
  CHECK(dom.out.empty());
  CHECK(run({"weights", "1/2"}).code == 1);
  CHECK(run({"cremona"}).code == 2);
  CHECK(run({"staircase", "--verify", "sometimes"}).code == 2);
}

TEST_CASE("weights output") {
  auto r = run({"weights", "22/9"});
  CHECK(r.out == "cf [2;2,4]\nW(22,9) = 9,9,4,4,1,1,1,1\n");
  auto j = nlohmann::json::parse(run({"weights", "22/9", "--format", "json"}).out);
  CHECK(j.dump().find("[2;2,4]") != std::string::npos);
}

TEST_CASE("capacities of (2;1,1) are those of E(1,2)") {
  auto r = run({"capacities", "--tuple", "2:1,1", "--K", "10"});
  REQUIRE(r.code == 0);
  auto e = ellipsoid_capacities(Rational(1), Rational(2), 10);
  std::ostringstream want;
  want << "k,c_k\n";
  for (size_t k = 0; k <= 10; ++k) want << k << "," << e.at(k).str() << "\n";
  CHECK(r.out == want.str());
  auto j = nlohmann::json::parse(run({"capacities", "--tuple", "2:1,1", "--K", "10", "--format", "json"}).out);
  CHECK(!j.empty());
}

TEST_CASE("staircase verdicts") {
  auto r = run({"staircase", "--n", "3", "--k", "8"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["steps"].size() == 9);
  CHECK(j["limit"]["identities_hold"] == true);
  for (auto& [key, v] : j["verdicts"].items()) {
    INFO(key);
    CHECK(v == true);
  }
  auto csv = run({"staircase", "--n", "3", "--k", "4", "--format", "csv"});
  CHECK(csv.out.rfind("k,p,q,center,center_float,z_inf_float,diff\n", 0) == 0);
}

TEST_CASE("other subcommands produce parseable output") {
  CHECK(nlohmann::json::parse(run({"cremona", "--tuple", "5:2,2,2,2,2"}).out).size() > 0);
  auto tr = nlohmann::json::parse(run({"cremona", "--class", "3; 2,1,1,1,1,1,1"}).out);
  CHECK(tr.contains("exceptional"));
  auto cls = nlohmann::json::parse(run({"classes", "--tuple", "1:", "--dmax", "3"}).out);
  CHECK(cls.is_array());
  auto acc = nlohmann::json::parse(run({"accumulation", "--tuple", "2:1,1", "--K", "50", "--dmax", "4"}).out);
  CHECK(acc["exceeds"] == false);
  auto gh = nlohmann::json::parse(run({"ghost", "--alpha", "1 + sqrt(2)", "--N", "4"}).out);
  CHECK(!gh.empty());
  auto emb = run({"embed-fn", "--tuple", "1:", "--grid", "1,2,3", "--K", "20", "--dmax", "3"});
  CHECK(emb.code == 0);
  CHECK(emb.out.rfind("z,ech_lower,class_lower,volume,best,corner\n", 0) == 0);
  auto sub = run({"subleading", "--tuple", "1:", "--K", "5"});
  CHECK(sub.out.rfind("k,c_k,e_k\n", 0) == 0);
}

TEST_CASE("property: output is deterministic") {
  std::vector<std::vector<std::string>> cmds{
      {"staircase", "--n", "2", "--k", "5"},
      {"embed-fn", "--tuple", "3:1,1", "--points", "12", "--K", "30", "--dmax", "4", "--jobs", "4"},
      {"classes", "--tuple", "3:1,1", "--dmax", "4"},
      {"subleading", "--tuple", "2:1", "--K", "40"}};
  for (const auto& c : cmds) {
    auto a = run(c), b = run(c);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  auto one = run({"embed-fn", "--tuple", "3:1,1", "--points", "12", "--K", "30", "--dmax", "4", "--jobs", "1"});
  CHECK(one.out == run(cmds[1]).out);
}

TEST_CASE("--out writes the file instead of stdout") {
  auto path = std::filesystem::temp_directory_path() / "symcap_cli_out.csv";
  std::filesystem::remove(path);
  auto r = run({"capacities", "--tuple", "2:1,1", "--K", "4", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  CHECK(s.str() == run({"capacities", "--tuple", "2:1,1", "--K", "4"}).out);
  std::filesystem::remove(path);
}
