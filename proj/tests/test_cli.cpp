#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cli_app.hpp"
#include "solvkit/report.hpp"

using nlohmann::json;
namespace cli = solvkit::cli;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

void strip_timings(json& j) {
  if (j.is_object()) {
    j.erase("millis");
    for (auto& [key, value] : j.items()) strip_timings(value);
  } else if (j.is_array()) {
    for (auto& value : j) strip_timings(value);
  }
}

class TempFile {
 public:
  explicit TempFile(const std::string& stem)
      : path_(fs::temp_directory_path() / (stem + "-" + std::to_string(::getpid()) + "-" +
                                           std::to_string(counter_++))) {
    fs::remove(path_);
  }
  ~TempFile() { fs::remove(path_); }
  const fs::path& path() const { return path_; }
  std::string str() const { return path_.string(); }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

std::size_t line_count(const fs::path& p) {
  std::ifstream in(p);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) n += !line.empty();
  return n;
}

}  // namespace

TEST(Cli, CountText) {
  const auto r = run({"count", "-g", "a:5"});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("32"), std::string::npos);
}

TEST(Cli, CountBothMethodsAgree) {
  const auto r = run({"count", "-g", "psl2:7", "-m", "both", "--json"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_TRUE(j["agree"].get<bool>());
  EXPECT_EQ(j["naive"]["total"], 79);
  EXPECT_EQ(j["rational"]["total"], 79);
}

TEST(Cli, JsonIsDeterministicAcrossRunsAndJobCounts) {
  const auto a = run({"count", "-g", "psl2:11", "--json", "-j", "1"});
  const auto b = run({"count", "-g", "psl2:11", "--json", "-j", "4"});
  ASSERT_EQ(a.code, cli::kOk);
  ASSERT_EQ(b.code, cli::kOk);
  auto ja = json::parse(a.out), jb = json::parse(b.out);
  EXPECT_EQ(ja["schema"], solvkit::kReportSchemaVersion);
  strip_timings(ja);
  strip_timings(jb);
  EXPECT_EQ(ja.dump(), jb.dump());
  EXPECT_EQ(ja["total"], 244);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"count", "-g", "a:"}).code, cli::kParseError);
  EXPECT_EQ(run({"count"}).code, cli::kParseError);
  EXPECT_EQ(run({"bogus"}).code, cli::kParseError);
  EXPECT_EQ(run({"count", "-g", "psl2:6"}).code, cli::kParseError);
  EXPECT_EQ(run({"count", "-g", "psl2:11", "-m", "naive", "--naive-cap", "100"}).code, cli::kLimit);
  EXPECT_EQ(run({"count", "-g", "a:7", "--closure-cap", "100"}).code, cli::kLimit);
  EXPECT_EQ(run({"verify", "-g", "a:6"}).code, cli::kNotCovered);
  EXPECT_EQ(run({"verify", "-g", "psl2:8"}).code, cli::kOk);
  EXPECT_EQ(run({"formula"}).code, cli::kParseError);
  EXPECT_EQ(run({"formula", "--family", "psl2-prime", "--param", "5"}).code, cli::kNotCovered);
  EXPECT_EQ(run({"--version"}).code, cli::kOk);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST(Cli, TimeoutMapsToLimit) {
  const auto r = run({"count", "-g", "a:7", "--timeout", "0.000001"});
  EXPECT_EQ(r.code, cli::kLimit) << r.out << r.err;
}

TEST(Cli, Verify) {
  const auto r = run({"verify", "-g", "psl2:13", "--json"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["formula"], 366);
  EXPECT_EQ(j["computed"], 366);
  EXPECT_TRUE(j["match"].get<bool>());
}

TEST(Cli, Tables) {
  const auto ok = run({"tables", "-g", "psl2:8"});
  EXPECT_EQ(ok.code, cli::kOk) << ok.out << ok.err;
  const auto special = run({"tables", "-g", "psl2:7"});
  EXPECT_EQ(special.code, cli::kNotCovered);
  EXPECT_NE((special.out + special.err).find("excluded"), std::string::npos);
  EXPECT_EQ(run({"tables", "-g", "s:5"}).code, cli::kNotCovered);
  EXPECT_EQ(run({"tables", "-g", "a:5"}).code, cli::kOk);
  const auto js = run({"tables", "-g", "psl2:11", "--json"});
  ASSERT_EQ(js.code, cli::kOk);
  EXPECT_EQ(json::parse(js.out)["cells_failed"], 0);
}

TEST(Cli, Formula) {
  const auto r = run({"formula", "--family", "suzuki", "--param", "8", "--json"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("6372"), std::string::npos);
  const auto d = run({"formula", "--distinctness", "--json"});
  ASSERT_EQ(d.code, cli::kOk) << d.err;
  EXPECT_TRUE(json::parse(d.out)["collisions"].empty());
}

TEST(Cli, Radical) {
  const auto r = run({"radical", "-g", "direct(a:5,s:4)", "--json"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("24"), std::string::npos);
  EXPECT_NE(r.out.find("32"), std::string::npos);
}

TEST(Cli, CacheAppendsAndDetectsMismatch) {
  TempFile cache("solvkit-cache");
  ASSERT_EQ(run({"count", "-g", "a:5", "--cache", cache.str()}).code, cli::kOk);
  ASSERT_EQ(run({"count", "-g", "a:5", "--cache", cache.str()}).code, cli::kOk);
  EXPECT_EQ(line_count(cache.path()), 2u);

  solvkit::ResultCache store(cache.path());
  const auto prior = store.lookup("a:5", solvkit::library_version(), "rational");
  ASSERT_TRUE(prior.has_value());
  EXPECT_EQ(prior->total, 32u);

  auto tampered = *prior;
  tampered.total = 33;
  {
    std::ofstream out(cache.path(), std::ios::trunc);
    out << tampered.to_json().dump() << '\n';
  }
  EXPECT_EQ(run({"count", "-g", "a:5", "--cache", cache.str()}).code, cli::kConsistency);

  {
    std::ofstream out(cache.path(), std::ios::trunc);
    out << "{not json\n";
  }
  EXPECT_EQ(run({"count", "-g", "a:5", "--cache", cache.str()}).code, cli::kParseError);
}

TEST(Cli, Batch) {
  TempFile list("solvkit-batch");
  {
    std::ofstream out(list.path());
    out << "# corpus\n\na:5\npsl2:7\ns:4\n";
  }
  const auto r = run({"batch", "-f", list.str(), "--json"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["entries"].size(), 3u);
  EXPECT_EQ(j["failures"], 0);

  TempFile bad("solvkit-batch-bad");
  {
    std::ofstream out(bad.path());
    out << "a:5\nnot-a-group\n";
  }
  EXPECT_EQ(run({"batch", "-f", bad.str()}).code, cli::kMismatch);

  TempFile empty("solvkit-batch-empty");
  { std::ofstream out(empty.path()); }
  EXPECT_EQ(run({"batch", "-f", empty.str()}).code, cli::kOk);
  EXPECT_EQ(run({"batch", "-f", "/nonexistent/solvkit"}).code, cli::kParseError);
}
