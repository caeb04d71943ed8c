#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "polyrep/verify.hpp"

using namespace polyrep;
using nlohmann::json;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("polyrep-test-" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("group recipes") {
  CHECK(build_recipe_group("a4")->order() == 12);
  CHECK(build_recipe_group("a4 x c2")->order() == 24);
  CHECK(build_recipe_group("c2 x c2 x c3")->order() == 12);
  CHECK(build_recipe_group("gl2_z4")->order() == 96);
  CHECK(build_recipe_group("q8")->order() == 8);
  CHECK(build_recipe_group("heis_3")->order() == 216);
  CHECK_THROWS_AS(build_recipe_group("d8"), std::invalid_argument);
  CHECK_THROWS_AS(build_recipe_group("c2000"), std::invalid_argument);
  CHECK_THROWS_AS(build_recipe_group("heis_7"), std::invalid_argument);
  CHECK_THROWS_AS(build_recipe_group(""), std::invalid_argument);
}

TEST_CASE("reports serialize losslessly and deterministically") {
  ReportRecord rep = run_symrank("A1", 0, 4);
  CHECK(rep.pass());
  json j = rep.to_json();
  CHECK(j["schema_version"] == 1);
  CHECK(j["command"] == "symrank");
  for (const auto& a : j["assertions"]) {
    CHECK(!a["name"].get<std::string>().empty());
    CHECK(!a["computed"].get<std::string>().empty());
    CHECK(!a["expected"].get<std::string>().empty());
  }
  // round trip: parse(dump) == original
  json reparsed = json::parse(j.dump(2));
  CHECK(reparsed == j);
  // two runs emit identical bytes
  CHECK(run_symrank("A1", 0, 4).to_json().dump(2) == j.dump(2));
}

TEST_CASE("character table cache round trips") {
  TempDir tmp;
  VerifyOptions opt;
  opt.cache_dir = tmp.path.string();

  GroupPtr g = build_recipe_group("sl2_3");
  bool hit = true;
  CharacterTable cold = character_table_cached(g, opt.cache_dir, &hit);
  CHECK_FALSE(hit);
  CharacterTable warm = character_table_cached(g, opt.cache_dir, &hit);
  CHECK(hit);
  REQUIRE(cold.irreducibles.size() == warm.irreducibles.size());
  for (size_t i = 0; i < cold.irreducibles.size(); ++i) {
    CHECK(cold.irreducibles[i].degree == warm.irreducibles[i].degree);
    CHECK(cold.irreducibles[i].values == warm.irreducibles[i].values);
  }

  // identical downstream numbers from a cache hit
  auto mins = minimal_normal_subgroups(g);
  CHECK(rdim_split(cold, mins).value == rdim_split(warm, mins).value);
}

TEST_CASE("corrupt cache entries are recomputed") {
  TempDir tmp;
  VerifyOptions opt;
  opt.cache_dir = tmp.path.string();
  GroupPtr g = build_recipe_group("q8");
  character_table_cached(g, opt.cache_dir);
  // clobber every cache file
  for (const auto& entry : std::filesystem::directory_iterator(tmp.path)) {
    std::ofstream out(entry.path(), std::ios::binary);
    out << "{not json";
  }
  bool hit = true;
  CharacterTable t = character_table_cached(g, opt.cache_dir, &hit);
  CHECK_FALSE(hit);
  CHECK(t.irreducibles.size() == 5);
}

TEST_CASE("extensions report carries the exact CSV schema") {
  TempDir tmp;
  VerifyOptions opt;
  opt.cache_dir = tmp.path.string();
  ReportRecord rep = run_extensions("c2", "a5", opt);
  std::string csv = rep.values["csv"].get<std::string>();
  CHECK(csv.rfind("name,N,P,order,computed_rdim_split,computed_rdim_Q_lower,paper_rdim_Q,"
                  "paper_rdim_k,status\n",
                  0) == 0);
  CHECK(csv.find("Atilde5,C2,A5,120,2,4,4,2,PASS") != std::string::npos);
  CHECK(rep.pass());
}

TEST_CASE("extensions runs agree across jobs settings") {
  TempDir tmp;
  VerifyOptions serial;
  serial.cache_dir = (tmp.path / "a").string();
  VerifyOptions parallel;
  parallel.cache_dir = (tmp.path / "b").string();
  parallel.jobs = 4;
  json a = run_extensions("c2c2", "a4", serial).to_json();
  json b = run_extensions("c2c2", "a4", parallel).to_json();
  // jobs is an input knob; everything computed must agree
  a["inputs"].erase("jobs");
  b["inputs"].erase("jobs");
  CHECK(a == b);
}

TEST_CASE("rdim recipe report") {
  TempDir tmp;
  VerifyOptions opt;
  opt.cache_dir = tmp.path.string();
  ReportRecord rep = run_rdim_recipe("a4 x c2", opt);
  CHECK(rep.values["rdim_split"] == 3);
  CHECK(rep.pass());
}

TEST_CASE("table1 csv lists every reference row") {
  std::string csv = table1_csv();
  CHECK(csv.find("4,F4,W(F4),short roots,24,4,24,PASS") != std::string::npos);
  CHECK(csv.find("7,B7,2^7 : S7,spinors,128,4,128,PASS") != std::string::npos);
}

TEST_CASE("extensions filters must be given together") {
  TempDir tmp;
  VerifyOptions opt;
  opt.cache_dir = tmp.path.string();
  CHECK_THROWS_AS(run_extensions("c2", "", opt), std::invalid_argument);
  CHECK_THROWS_AS(run_extensions("", "a4", opt), std::invalid_argument);
  CHECK_THROWS_AS(run_extensions("c8", "a4", opt), std::invalid_argument);
}

TEST_CASE("heisenberg precondition message") {
  TempDir tmp;
  VerifyOptions opt;
  opt.cache_dir = tmp.path.string();
  CHECK_THROWS_WITH_AS(run_heisenberg(4, false, opt), "p must be an odd prime",
                       std::invalid_argument);
}
