#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "apolar/cli.hpp"
#include "apolar/search.hpp"

using namespace apolar;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("apolar_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
  static inline int counter_ = 0;
};

void write(const std::string& path, const std::string& text) {
  std::ofstream(path) << text;
}

std::string last_line(const std::string& text) {
  auto trimmed = text.substr(0, text.find_last_not_of('\n') + 1);
  return trimmed.substr(trimmed.find_last_of('\n') + 1);
}

}  // namespace

TEST(Cli, HfPowerSum) {
  auto r = run_cli({"hf", "--form", "y0^4+y1^4", "--vars", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(last_line(r.out), "(1,2,2,2,1)");
  EXPECT_NE(r.out.find("seed=0"), std::string::npos);
  EXPECT_NE(r.out.find(cli::kToolVersion), std::string::npos);
}

TEST(Cli, HfOverRationalsAsJson) {
  auto r = run_cli({"hf", "--form", "y0^2*y1^2", "--vars", "2", "--field", "q", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["field"], "Q");
  EXPECT_EQ(j["hilbert_function"], nlohmann::json({1, 2, 3, 2, 1}));
  EXPECT_EQ(j["version"], cli::kToolVersion);
}

TEST(Cli, UsageErrorsExitTwo) {
  auto unknown = run_cli({"hf", "--form", "y0", "--vars", "1", "--frobnicate"});
  EXPECT_EQ(unknown.code, 2);
  EXPECT_NE(unknown.err.find("--frobnicate"), std::string::npos);
  auto missing = run_cli({"hf", "--form", "y0"});
  EXPECT_EQ(missing.code, 2);
  EXPECT_NE(missing.err.find("--vars"), std::string::npos);
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"hf", "--form", "y0^", "--vars", "1"}).code, 2);
  EXPECT_EQ(run_cli({"hf", "--form", "y0", "--vars", "1", "--field", "p:5"}).code, 2);
  EXPECT_EQ(run_cli({"hf", "--form", "y0", "--vars", "1", "--field", "p:9"}).code, 2);
  EXPECT_EQ(run_cli({"hf", "--form", "y0", "--vars", "1", "--format", "xml"}).code, 2);
  EXPECT_EQ(run_cli({"search-f", "--e", "6", "--r", "3"}).code, 2);
}

TEST(Cli, RestrictWithExplicitH) {
  auto r = run_cli({"restrict", "--form", "y0^4+y1^4+y2^4", "--vars", "3", "--H", "1,0,0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("F^H: y0^4 + y1^4"), std::string::npos);
  EXPECT_NE(r.out.find("codimension: 3 -> 2"), std::string::npos);
  EXPECT_EQ(run_cli({"restrict", "--form", "y0^2", "--vars", "1", "--H", "1,1"}).code, 2);
}

TEST(Cli, CheckLemmasPasses) {
  auto r = run_cli({"check-lemmas", "--seed", "7", "--trials", "20"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(last_line(r.out), "all passed: true");
}

TEST(Cli, ReportsAreDeterministic) {
  TempDir dir;
  auto cache = dir.file("c.json");
  std::vector<std::vector<std::string>> commands = {
      {"check-lemmas", "--seed", "3", "--trials", "10", "--format", "json"},
      {"restrict", "--form", "y0^3+y1^3+y2^3", "--vars", "3", "--seed", "5"},
      {"search-f", "--e", "4", "--r", "7", "--budget", "3", "--cache", cache, "--format", "tsv"},
      {"realize", "--e", "4", "--r", "3", "--seed", "2"},
      {"gic", "--e", "4", "--rmin", "3", "--rmax", "6", "--budget", "2", "--cache", cache},
  };
  for (const auto& argv : commands) {
    auto a = run_cli(argv), b = run_cli(argv);
    EXPECT_EQ(a.code, 0) << argv.front() << ": " << a.err;
    EXPECT_EQ(a.out, b.out) << argv.front();
  }
}

TEST(Cli, GicEndsWithVerdict) {
  TempDir dir;
  auto r = run_cli({"gic", "--e", "4", "--rmin", "3", "--rmax", "13", "--budget", "2", "--cache", dir.file("c.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(last_line(r.out), "nondecreasing: true");
  EXPECT_TRUE(fs::exists(dir.file("c.json")));
}

TEST(Cli, CacheEnvironmentVariable) {
  TempDir dir;
  auto path = dir.file("env.json");
  ::setenv("APOLAR_CACHE", path.c_str(), 1);
  EXPECT_EQ(cli::default_cache_path(), path);
  auto r = run_cli({"search-f", "--e", "4", "--r", "4", "--budget", "1"});
  ::unsetenv("APOLAR_CACHE");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(fs::exists(path));
  EXPECT_EQ(cli::default_cache_path(), "apolar_bounds.json");
}

TEST(Cache, EmptyFileLoadsEmpty) {
  TempDir dir;
  write(dir.file("c.json"), "");
  std::ostringstream warn;
  EXPECT_TRUE(cli::cache_load(dir.file("c.json"), warn).empty());
}

TEST(Cache, MissingFileIsAnError) {
  std::ostringstream warn;
  EXPECT_THROW(cli::cache_load("/nonexistent/dir/c.json", warn), Error);
}

TEST(Cache, MergeKeepsSmallerBound) {
  TempDir dir;
  auto path = dir.file("c.json");
  std::ostringstream warn;
  auto bipartite = f_upper_bound(4, 13, 1, 0, PrimeField());
  ASSERT_EQ(bipartite.upper, 12u);
  cli::cache_merge_store(path, {bipartite}, warn);
  FBoundEntry power;
  power.e = 4;
  power.r = 13;
  power.upper = 13;
  power.certificate = to_string(power_sum_form(13, 4, PrimeField()));
  auto table = cli::cache_merge_store(path, {power}, warn);
  EXPECT_EQ(table.find(4, 13)->upper, 12u);
  EXPECT_EQ(cli::cache_load(path, warn).find(4, 13)->upper, 12u);
}

TEST(Cache, RoundTripIsIdentity) {
  TempDir dir;
  auto path = dir.file("c.json");
  std::ostringstream warn;
  std::vector<FBoundEntry> entries;
  for (std::size_t r = 2; r <= 8; ++r) entries.push_back(f_upper_bound(r % 2 ? 5 : 4, r, 2, r, PrimeField()));
  entries.push_back(f_upper_bound(4, 5, 1, 0, RationalField()));
  auto stored = cli::cache_merge_store(path, entries, warn);
  auto loaded = cli::cache_load(path, warn);
  ASSERT_EQ(stored.size(), loaded.size());
  auto a = stored.entries(), b = loaded.entries();
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(to_json(a[i]).dump(), to_json(b[i]).dump());
  EXPECT_TRUE(warn.str().empty());
}

TEST(Cache, TamperedCertificateIsDropped) {
  TempDir dir;
  auto path = dir.file("c.json");
  std::ostringstream warn;
  cli::cache_merge_store(path, {f_upper_bound(4, 6, 1, 0, PrimeField()), f_upper_bound(4, 7, 1, 0, PrimeField())}, warn);
  std::ifstream in(path);
  auto doc = nlohmann::json::parse(in);
  doc[0]["certificate"] = "y0^4 + y1^4 + y2^4 + y3^4 + y4^4 + y0*y1*y2*y3";
  write(path, doc.dump());
  auto table = cli::cache_load(path, warn);
  EXPECT_EQ(table.size(), 1u);
  EXPECT_EQ(table.find(4, 6), nullptr);
  EXPECT_NE(warn.str().find("dropping"), std::string::npos);
}

TEST(Cache, CorruptContentReportsOffset) {
  TempDir dir;
  auto path = dir.file("c.json");
  write(path, "[{\"e\": 4,, }]");
  std::ostringstream warn;
  try {
    cli::cache_load(path, warn);
    FAIL();
  } catch (const CorruptCache& e) {
    EXPECT_EQ(e.offset(), 10u);
  }
  write(path, "{\"e\": 4}");
  EXPECT_THROW(cli::cache_load(path, warn), CorruptCache);
  write(path, "[{\"e\": 4}]");
  EXPECT_THROW(cli::cache_load(path, warn), CorruptCache);
  auto r = run_cli({"gic", "--e", "4", "--rmin", "3", "--rmax", "3", "--cache", path});
  EXPECT_EQ(r.code, 2);
}
