#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "enriques/catalog.hpp"
#include "enriques/curve_graph.hpp"
#include "enriques/fibrations.hpp"
#include "enriques/graph_lattice.hpp"

using namespace enriques;
using enriques::cli::run_cli;
using nlohmann::json;

namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "enriques");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliRun r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// Points the catalog at a directory for the lifetime of the object.
class CatalogDir {
 public:
  explicit CatalogDir(const std::string& tag)
      : dir_(std::filesystem::path(::testing::TempDir()) / ("enriques-cli-" + tag)) {
    std::filesystem::remove_all(dir_);
    std::filesystem::create_directories(dir_);
    setenv("ENRIQUES_CATALOG_DIR", dir_.c_str(), 1);
  }
  ~CatalogDir() {
    unsetenv("ENRIQUES_CATALOG_DIR");
    std::filesystem::remove_all(dir_);
  }
  void write(const std::string& name, const std::string& text) const {
    std::ofstream(dir_ / (name + ".json")) << text;
  }
  std::string path(const std::string& file) const { return (dir_ / file).string(); }

 private:
  std::filesystem::path dir_;
};

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"analyze", "/nonexistent/missing.json"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"no-such-command"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"analyze", "--max-seq", "11", "--catalog", kE8ExtraSpecial}).code, cli::kExitUsage);
  EXPECT_EQ(run({"catalog", "--show", "nope"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
  EXPECT_EQ(run({"verify-paper"}).code, cli::kExitOk);
}

TEST(Cli, ParseErrorsAreReportedWithTheLine) {
  CatalogDir dir("parse");
  const std::string file = dir.path("bad.json");
  std::ofstream(file) << "{\"name\": \"b\", \"vertices\": [\"a\"],\n \"edges\": [[\"a\", \"a\", 1]]}";
  const CliRun r = run({"analyze", file});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_NE(r.err.find("parse error"), std::string::npos) << r.err;
}

TEST(Cli, CatalogListAndShow) {
  const CliRun list = run({"catalog", "--list"});
  ASSERT_EQ(list.code, 0);
  for (const auto& name : catalog_names()) EXPECT_NE(list.out.find(name), std::string::npos);
  const CliRun show = run({"catalog", "--show", kD8ExtraSpecial, "--json"});
  ASSERT_EQ(show.code, 0);
  EXPECT_NO_THROW(static_cast<void>(json::parse(show.out)));
}

TEST(Cli, JsonOutputIsDeterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"analyze", "--catalog", kD8ExtraSpecial, "--json", "--max-seq", "3"},
           {"analyze", "--catalog", kTypeI, "--json"},
           {"verify-paper", "--json"}}) {
    const CliRun a = run(args);
    const CliRun b = run(args);
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, AnalyzeE8) {
  const CliRun r = run({"analyze", "--catalog", kE8ExtraSpecial, "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  ASSERT_EQ(j["fibrations"].size(), 1u);
  EXPECT_EQ(j["vinberg"]["finite_index"], true);
  const CliRun text = run({"analyze", "--catalog", kE8ExtraSpecial});
  EXPECT_NE(text.out.find("II* {R2,R3,R4,R5,R6,R7,R8,R9,RX} half-fiber"), std::string::npos) << text.out;
  EXPECT_NE(text.out.find("fibrations: 1"), std::string::npos);
}

TEST(Cli, AnalyzeD8Sequences) {
  const CliRun r = run({"analyze", "--catalog", kD8ExtraSpecial, "--max-seq", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("fibrations: 3"), std::string::npos);
  EXPECT_NE(r.out.find("2-sequences: 2 (2 non-extendable)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("3-sequences: 0"), std::string::npos) << r.out;
}

TEST(Cli, AnalyzeGraphFile) {
  CatalogDir dir("file");
  const std::string file = dir.path("e8.json");
  std::ofstream(file) << serialize_graph(catalog(kE8ExtraSpecial).graph);
  const CliRun a = run({"analyze", file, "--json"});
  const CliRun b = run({"analyze", "--catalog", kE8ExtraSpecial, "--json"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(json::parse(a.out)["fibrations"], json::parse(b.out)["fibrations"]);
}

TEST(Cli, ReduceExamples) {
  const CliRun u = run({"reduce", "--gram", "[[0,1],[1,0]]", "--vector", "1,0", "--roots", "[[1,-1]]", "--json"});
  ASSERT_EQ(u.code, 0) << u.err;
  const json j = json::parse(u.out);
  EXPECT_EQ(j["nef_rep"], json::array({0, 1}));
  EXPECT_EQ(j["steps"], 1);
  EXPECT_EQ(j["square"], 0);

  // a single curve has square -2
  EXPECT_EQ(run({"reduce", "--catalog", kE8ExtraSpecial, "--vector", "1,0,0,0,0,0,0,0,0,0"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"reduce", "--gram", "[[0,1],[1,0]]", "--vector", "1,0,0"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"reduce", "--gram", "[[0,1],[1,0]]", "--vector", "1,0", "--order", "sideways"}).code,
            cli::kExitUsage);

  // two fiber classes plus a curve; every order reaches the same nef class
  const GraphLattice gl = analyze_graph_lattice(catalog(kD8ExtraSpecial).graph);
  const auto fibs = enumerate_fibrations(gl);
  ASSERT_GE(fibs.size(), 2u);
  const std::size_t n = gl.graph.size();
  IntVector coeffs = add(fibs[0].fibers.front().null_class(n), fibs[1].fibers.front().null_class(n));
  coeffs[0] += 1;
  const IntVector v = gl.to_ambient(coeffs);
  ASSERT_GE(gl.ambient->pairing(v, v), 0);
  std::string vec;
  for (const auto& c : coeffs) vec += (vec.empty() ? "" : ",") + to_string(c);
  std::set<std::string> reps;
  for (const char* order : {"smallest", "largest", "most-negative"}) {
    const CliRun r = run({"reduce", "--catalog", kD8ExtraSpecial, "--vector", vec, "--order", order, "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    reps.insert(json::parse(r.out)["nef_rep"].dump());
  }
  EXPECT_EQ(reps.size(), 1u);
}

TEST(Cli, ExportDot) {
  const CliRun r = run({"export-dot", "--catalog", kTypeI});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(count(r.out, " -- "), 16u);
}

// A corrupted catalog graph must make the corresponding claim fail.
TEST(Cli, VerifyPaperDetectsACorruptedGraph) {
  CatalogDir dir("mutant");
  json g = json::parse(serialize_graph(catalog(kD8ExtraSpecial).graph));
  ASSERT_FALSE(g["edges"].empty());
  g["edges"][0][2] = 2;
  dir.write(kD8ExtraSpecial, g.dump());
  const CliRun r = run({"verify-paper"});
  EXPECT_EQ(r.code, cli::kExitClaimFailure) << r.out;
  EXPECT_NE(r.out.find("FAIL fibrations.D8-extra-special"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("PASS fibrations.E8-extra-special"), std::string::npos) << r.out;
}

TEST(Cli, OracleModeReverifiesDerivedClaims) {
  const CliRun r = run({"verify-paper", "--oracle", "--json"});
  ASSERT_EQ(r.code, 0) << r.out;
  const json j = json::parse(r.out);
  std::set<std::string> ids;
  for (const auto& c : j["claims"]) {
    EXPECT_NE(c["status"], "fail") << c.dump();
    ids.insert(c["claim_id"].get<std::string>());
  }
  for (const auto& name : catalog_names()) EXPECT_TRUE(ids.count("oracle.fibrations." + name)) << name;
  EXPECT_EQ(run({"verify-paper", "--json"}).out.find("oracle."), std::string::npos);
}
