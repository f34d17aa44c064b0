#include "growthlab/cli.hpp"
#include "growthlab/corpus.hpp"
#include "growthlab/io.hpp"

#include <doctest.h>

#include <cstdlib>
#include <unistd.h>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace growthlab;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  Json json() const { return Json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str()};
}

fs::path scratch() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("growthlab_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write(const std::string& name, const std::string& text) {
  fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

const std::string kSquare = R"({"dim": 2, "vertices": [["0","0"],["2","0"],["0","2"],["2","2"]]})";
const std::string kSimplex = R"({"dim": 2, "vertices": [["0/1","0/1"],["1/1","0/1"],["0/1","1/1"]]})";
const std::string kBad = R"({"dim": 2, "vertices": [["0","0"],["2","0"],["0","1"]]})";

}  // namespace

TEST_CASE("growth report for the square") {
  auto sq = write("square2.json", kSquare);
  auto r = run({"growth", "--polytope", sq, "--vertex", "0,0", "--k", "1,2,4", "--samples", "2000"});
  REQUIRE(r.code == 0);
  auto j = r.json();
  CHECK(j["volume_MA"] == "8/1");
  CHECK(j["seshadri"] == "2/1");
  CHECK(j["seshadri_domination"] == "2/1");
  CHECK(j["seed"] == 0);
  CHECK(j.contains("gap_inequality"));
}

TEST_CASE("check-delzant reports the failing vertex") {
  auto bad = write("bad.json", kBad);
  auto r = run({"check-delzant", "--polytope", bad});
  REQUIRE(r.code == 0);
  auto j = r.json();
  CHECK(j["delzant"] == false);
  CHECK(j["failing_vertices"] == Json::array({Json::array({"0/1", "1/1"})}));
}

TEST_CASE("embed-ball refuses a source that grows too fast") {
  auto s = write("simplex.json", kSimplex);
  auto r = run({"embed-ball", "--polytope", s, "--fs-lambda", "2", "--R", "5"});
  CHECK(r.code == 2);
  auto j = r.json();
  CHECK(j["error"] == "GrowthViolation");
  CHECK(j["witness"].contains("violations"));
}

TEST_CASE("embed-ball succeeds below the Seshadri constant") {
  auto s = write("simplex.json", kSimplex);
  auto prof = (scratch() / "profile.csv").string();
  auto r = run({"embed-ball", "--polytope", s, "--fs-lambda", "1/2", "--R", "5", "--profile", prof});
  REQUIRE(r.code == 0);
  auto j = r.json();
  CHECK(j["certificate"]["passed"] == true);
  std::ifstream f(prof);
  std::string header;
  std::getline(f, header);
  CHECK(header.find("glued") != std::string::npos);
}

TEST_CASE("precondition and usage errors exit with 2") {
  auto bad = write("bad.json", kBad);
  CHECK(run({"growth", "--polytope", bad}).code == 2);
  CHECK(run({"growth", "--polytope", bad}).json()["error"] == "NotDelzantVertex");
  CHECK(run({"growth"}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"growth", "--polytope", (scratch() / "missing.json").string()}).code == 2);
  auto sq = write("square2.json", kSquare);
  CHECK(run({"volume", "--polytope", sq, "--format", "svg"}).code == 2);
  CHECK(run({"okounkov", "--polytope", sq, "--perm", "0,0"}).code == 2);
  auto garbage = write("garbage.json", "{not json");
  CHECK(run({"seshadri", "--polytope", garbage}).json()["error"] == "ParseError");
}

TEST_CASE("every subcommand runs on the square") {
  auto sq = write("square2.json", kSquare);
  for (std::vector<std::string> args : std::vector<std::vector<std::string>>{
           {"normalize", "--polytope", sq, "--vertex", "2,2"},
           {"volume", "--polytope", sq, "--samples", "1000"},
           {"seshadri", "--polytope", sq},
           {"decompose", "--polytope", sq, "--lambda", "0,1,2,3,4"},
           {"okounkov", "--polytope", sq, "--k-max", "2", "--perm", "1,0"},
           {"chebyshev", "--polytope", sq, "--point", "1,1", "--k", "2"},
           {"chebyshev", "--polytope", sq, "--point", "1/2,1/2", "--fs-lambda", "3/2"},
           {"gromov", "--polytope", sq}}) {
    auto r = run(args);
    CAPTURE(args[0]);
    CHECK(r.code == 0);
    CHECK_NOTHROW(r.json());
  }
  auto dec = run({"decompose", "--polytope", sq, "--lambda", "0,1,2,3,4"}).json();
  CHECK(dec["equals_representative"] == true);
  auto ses = run({"seshadri", "--polytope", sq, "--format", "svg"});
  CHECK(ses.code == 0);
  CHECK(ses.out.rfind("<svg", 0) == 0);
}

TEST_CASE("okounkov from a series file") {
  auto series = write("series.json", R"({"degrees": {"1": [[0,0],[1,0],[0,1]], "2": [[0,0],[1,0],[0,1],[2,0],[1,1],[0,2]]}})");
  auto r = run({"okounkov", "--series", series, "--k-max", "2"});
  REQUIRE(r.code == 0);
  auto j = r.json();
  CHECK(j["multiplicative"] == true);
  CHECK(j["seshadri_from_body"] == "1/1");
}

TEST_CASE("seed precedence and determinism") {
  auto sq = write("square2.json", kSquare);
  std::vector<std::string> args{"volume", "--polytope", sq, "--samples", "500"};
  ::unsetenv("GROWTHLAB_SEED");
  auto a = run(args), b = run(args);
  CHECK(a.out == b.out);
  CHECK(a.json()["seed"] == 0);
  ::setenv("GROWTHLAB_SEED", "17", 1);
  CHECK(run(args).json()["seed"] == 17);
  auto flagged = args;
  flagged.insert(flagged.end(), {"--seed", "3"});
  CHECK(run(flagged).json()["seed"] == 3);
  ::setenv("GROWTHLAB_SEED", "oops", 1);
  CHECK(run(args).code == 2);
  ::unsetenv("GROWTHLAB_SEED");
}

TEST_CASE("--out writes the artifact to a file") {
  auto sq = write("square2.json", kSquare);
  auto target = (scratch() / "gromov.json").string();
  auto r = run({"gromov", "--polytope", sq, "--out", target});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(target);
  CHECK(Json::parse(f)["width_lower_bound"] == "2/1");
}

TEST_CASE("corpus isolates bad entries") {
  fs::path dir = scratch() / "corpus";
  fs::create_directories(dir);
  std::ofstream(dir / "a_bad.json") << kBad;
  std::ofstream(dir / "b_broken.json") << "[]";
  auto r = run({"corpus", "--dir", dir.string()});
  REQUIRE(r.code == 0);
  auto rows = r.json()["rows"];
  int flagged = 0, good = 0;
  for (const auto& row : rows) {
    if (row["flagged"] == true)
      ++flagged;
    else
      ++good;
  }
  CHECK(flagged == 2);
  CHECK(good > 10);
  auto again = run({"corpus", "--dir", dir.string()});
  CHECK(again.out == r.out);

  fs::path empty = scratch() / "empty";
  fs::create_directories(empty);
  auto plain = run({"corpus", "--dir", empty.string()}).json()["rows"];
  CHECK(plain.size() == rows.size() - 2);

  auto csv = run({"corpus", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.find("volume_MA") != std::string::npos);
}

TEST_CASE("polytope JSON round trip") {
  auto p = polytope_from_json(Json::parse(kSquare));
  CHECK(polytope_from_json(to_json(p)) == p);
  auto q = polytope_from_json(Json::parse(R"({"dim": 2, "facets": [{"normal": [-1,0], "offset": "0"},
      {"normal": [0,-1], "offset": "0"}, {"normal": [1,1], "offset": "1"}]})"));
  CHECK(q.vertices().size() == 3);
  CHECK(number(1.0 / 0.0) == "+inf");
}
