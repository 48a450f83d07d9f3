#include "mapdist/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace mapdist;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("three-point series") {
  Run r = run({"three-point", "--family", "general", "--d", "2", "2", "2", "--order", "8", "--ring", "q"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  std::vector<std::string> expect = {"0", "0", "0", "2", "39", "558", "7123", "86139", "1011954"};
  CHECK(j["series"]["coeffs"].get<std::vector<std::string>>() == expect);
}

TEST_CASE("usage errors") {
  Run tri = run({"three-point", "--d", "1", "1", "3"});
  CHECK(tri.code == 2);
  CHECK(tri.err.find("triangular inequality violated") != std::string::npos);
  Run par = run({"three-point", "--family", "bipartite", "--d", "1", "1", "1"});
  CHECK(par.code == 2);
  CHECK(par.err.find("bipartite requires even total distance") != std::string::npos);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"two-point", "--d", "0"}).code == 2);
  CHECK(run({"two-point", "--d", "3", "--family", "cubic"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("default orders") {
  CHECK(nlohmann::json::parse(run({"two-point", "--d", "2"}).out)["order"] == 24);
  CHECK(nlohmann::json::parse(run({"two-point", "--d", "2", "--ring", "qz"}).out)["order"] == 12);
}

TEST_CASE("verification commands") {
  Run v = run({"verify-identities", "--order", "12"});
  CHECK(v.code == 0);
  CHECK(run({"seed-paper-checks"}).code == 0);
  CHECK(run({"verify-bijections", "--faces", "2"}).code == 0);
}

TEST_CASE("scaling tables as csv") {
  Run r = run({"scaling", "converge", "--D", "1", "--z", "1", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("eps,g,d,discrete,continuum,rel_error\n", 0) == 0);
  CHECK(r.out.find("\n0.05,") != std::string::npos);
}

TEST_CASE("byte-deterministic output") {
  std::vector<std::string> args = {"two-point", "--d", "3", "--ring", "qz", "--order", "6"};
  CHECK(run(args).out == run(args).out);
  std::vector<std::string> conv = {"scaling", "converge", "--D", "1", "1", "1", "--z", "2"};
  CHECK(run(conv).out == run(conv).out);
}

TEST_CASE("--out writes to a file") {
  auto path = std::filesystem::temp_directory_path() / "mapdist_cli_out.json";
  std::filesystem::remove(path);
  Run r = run({"--out", path.string(), "series", "--order", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream body;
  body << in.rdbuf();
  CHECK(body.str() == run({"series", "--order", "4"}).out);
  std::filesystem::remove(path);
}
