#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nonroot/cli.hpp"
#include "nonroot/json_io.hpp"
#include "oracles.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace nonroot;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string c(const std::string& name) { return oracle::corpus(name); }

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("nonroot_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

fs::path copy_corpus(const std::string& name) {
  const fs::path dir = scratch(name);
  for (const auto& e : fs::directory_iterator(NONROOT_CORPUS_DIR)) fs::copy_file(e.path(), dir / e.path().filename());
  return dir;
}

std::vector<std::string> failed_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (line.rfind("FAIL ", 0) == 0) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("certify-pl on f1 gives C3 at 3/4") {
  const Run r = cli({"certify-pl", "--input", c("f1.json")});
  REQUIRE(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j["certificate"]["case"] == "C3");
  CHECK(j["certificate"]["x0"] == "3/4");
  CHECK(j["certificate"]["evidence"]["fiber2"] == "continuum");
}

TEST_CASE("find-root returns a witness for the constant collapse map") {
  const Run r = cli({"find-root", "--order", "2", "--input", c("remark2_f.json")});
  REQUIRE(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j["status"] == "found");
  const Endofunction g(j["witness"]["map"].get<std::vector<Point>>());
  const auto f = decode_endo(read_json_file(c("remark2_f.json")));
  CHECK(oracle::apply_n(g.table(), 2) == f.map.table());
}

TEST_CASE("certify abstains on the nine-fiber map with exit 2") {
  const Run r = cli({"certify", "--input", c("remark3_f.json")});
  CHECK(r.code == kExitAbstain);
  const Json j = Json::parse(r.out);
  CHECK(j["certificate"].is_null());
  CHECK(j["reason"] == "inequality_fails");
  const Run t = cli({"certify", "--input", c("remark3_f.json"), "--format", "text"});
  CHECK(t.out.find("abstain (inequality_fails)") != std::string::npos);
}

TEST_CASE("certify uses labels") {
  const Run r = cli({"certify", "--input", c("six_point.json")});
  CHECK(r.code == kExitOk);
  CHECK(Json::parse(r.out)["certificate"]["x0"] == "x0");
}

TEST_CASE("find-root reports none and budget exhaustion") {
  const Run none = cli({"find-root", "--order", "3", "--input", c("six_point.json")});
  CHECK(none.code == kExitOk);
  CHECK(Json::parse(none.out)["status"] == "none");
  const Run budget = cli({"find-root", "--order", "2", "--budget", "1", "--input", c("remark3_f.json")});
  CHECK(budget.code == kExitBudget);
  CHECK(Json::parse(budget.out)["status"] == "budget_exceeded");
  const Run all = cli({"find-root", "--order", "2", "--all", "--input", c("remark2_f.json")});
  CHECK(all.code == kExitOk);
  CHECK(Json::parse(all.out)["count"].get<std::uint64_t>() >= 1);
}

TEST_CASE("input errors exit 4") {
  CHECK(cli({"certify"}).code == kExitInput);
  CHECK(cli({"certify", "--input", "/nonexistent/x.json"}).code == kExitInput);
  CHECK(cli({"find-root", "--order", "1", "--input", c("six_point.json")}).code == kExitInput);
  CHECK(cli({"certify-pl", "--input", c("six_point.json")}).code == kExitInput);
  CHECK(cli({"construct", "--input", c("circle_5bp.json"), "--epsilon", "3/2"}).code == kExitInput);
  CHECK(cli({"construct", "--input", c("circle_5bp.json"), "--epsilon", "abc"}).code == kExitInput);
  CHECK(cli({"bogus"}).code == kExitInput);
  CHECK(cli({}).code == kExitInput);

  const fs::path dir = scratch("bad_input");
  std::ofstream(dir / "bad.json") << R"({"n": 3, "map": [0, 1, 7]})";
  const Run r = cli({"certify", "--input", (dir / "bad.json").string()});
  CHECK(r.code == kExitInput);
  CHECK(r.err.find("map[2]") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("construct writes a certified map and a trace") {
  const fs::path dir = scratch("construct");
  const std::string trace = (dir / "trace.json").string();
  const Run r = cli({"construct", "--input", c("circle_rotation_third.json"), "--epsilon", "1/2", "--trace", trace});
  REQUIRE(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j["certificate"]["case"] == "C3");
  const Json t = read_json_file(trace);
  for (const char* key : {"epsilon", "delta", "P", "W", "f0", "J", "a", "K", "x0", "x1", "Q", "f"})
    CHECK(t.contains(key));
  CHECK(t["f"] == j["f"]);

  const Run iv = cli({"construct", "--input", c("f1.json"), "--epsilon", "1/10", "--format", "text"});
  CHECK(iv.code == kExitOk);
  CHECK(iv.out.find("C3") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("export-plot emits SVG") {
  const Run r = cli({"export-plot", "--input", c("f2.json")});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("<svg", 0) == 0);
  const Run s = cli({"export-plot", "--input", c("circle_5bp.json")});
  CHECK(s.code == kExitOk);
  CHECK(s.out.find("</svg>") != std::string::npos);
}

TEST_CASE("verify-paper") {
  const Run r = cli({"verify-paper", "--corpus", NONROOT_CORPUS_DIR});
  INFO(r.out << r.err);
  CHECK(r.code == kExitOk);
  CHECK(failed_lines(r.out).empty());
  CHECK(r.out.find("all anchors passed") != std::string::npos);

  const Run j = cli({"verify-paper", "--corpus", NONROOT_CORPUS_DIR, "--format", "json"});
  CHECK(Json::parse(j.out)["anchors"].size() == 10);
}

TEST_CASE("verify-paper without a corpus file") {
  const fs::path dir = copy_corpus("missing");
  fs::remove(dir / "f2.json");
  const Run r = cli({"verify-paper", "--corpus", dir.string()});
  CHECK(r.code == kExitInput);
  CHECK(r.err.find("f2.json") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("a corrupted root file fails only its own anchor") {
  const fs::path dir = copy_corpus("corrupt");
  fs::copy_file(dir / "remark4_f.json", dir / "remark4_g.json", fs::copy_options::overwrite_existing);
  Run r = cli({"verify-paper", "--corpus", dir.string()});
  CHECK(r.code == kExitAnchorFailed);
  auto failed = failed_lines(r.out);
  REQUIRE(failed.size() == 1);
  CHECK(failed[0].find("ray pair: g o g = f") != std::string::npos);

  std::ofstream(dir / "remark4_g.json") << "{ not json";
  r = cli({"verify-paper", "--corpus", dir.string()});
  CHECK(r.code == kExitAnchorFailed);
  failed = failed_lines(r.out);
  REQUIRE(failed.size() == 1);
  CHECK(failed[0].find("ray pair") != std::string::npos);
  fs::remove_all(dir);
}
