#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <regex>
#include <sstream>

#include "gfan/cache.hpp"
#include "gfan/cli.hpp"
#include "gfan/error.hpp"
#include "gfan/presentation.hpp"
#include "gfan/records.hpp"
#include "gfan/svg.hpp"

using namespace gfan;
namespace fs = std::filesystem;

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

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("gfan-cli-test-" + std::to_string(std::random_device{}()));
    fs::create_directories(dir_);
    setenv("GFAN_CACHE_DIR", (dir_ / "cache").c_str(), 1);
  }
  void TearDown() override {
    unsetenv("GFAN_CACHE_DIR");
    fs::remove_all(dir_);
  }
  fs::path dir_;
};

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_F(CliTest, ConeExample) {
  auto r = run({"cone", "--algebra", "a2", "--g", "1,-2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("t=1: {(0,-1):1, (1,-1):1}"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("rays: (0,-1) (1,-1)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("simplicial: yes, rational: yes"), std::string::npos);
}

TEST_F(CliTest, TauTiltingCountOnThreeCycle) {
  auto r = run({"tautilt", "--algebra", "cycle3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("20 pairs (complete)"), std::string::npos);
}

TEST_F(CliTest, FanSliceOfThreeCycle) {
  auto path = (dir_ / "fan.svg").string();
  auto r = run({"fan-svg", "--algebra", "cycle3", "--plane", "1,1,1=1", "--out", path});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  const std::string svg = s.str();
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_GE(count_of(svg, "<polygon class=\"chamber\""), 3u);
  EXPECT_GE(count_of(svg, "<line class=\"wall\""), 7u);
  // Everything is drawn inside the viewport.
  std::regex number(R"re((x1|y1|x2|y2)="(-?[0-9.]+)")re");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), number); it != std::sregex_iterator(); ++it) {
    double v = std::stod((*it)[2]);
    EXPECT_GE(v, -1e-6);
    EXPECT_LE(v, 480 + 1e-6);
  }
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run({"decompose", "--algebra", "a2", "--g", "1,x"}).code, 2);
  EXPECT_EQ(run({"decompose", "--algebra", "a2", "--g", "1,2,3"}).code, 2);
  EXPECT_EQ(run({"decompose", "--algebra", "no-such-algebra", "--g", "1"}).code, 2);
  EXPECT_EQ(run({"decompose", "--algebra", "a2"}).code, 2);
  EXPECT_EQ(run({"scan", "--algebra", "a2", "--grid", "3:1"}).code, 2);
  EXPECT_EQ(run({"fan-svg", "--algebra", "a2", "--out", (dir_ / "x.svg").string()}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  auto r = run({"decompose", "--algebra", "a2", "--g", "1,x"});
  EXPECT_NE(r.err.find("ParseError"), std::string::npos);
}

TEST_F(CliTest, AlgebraFromFile) {
  auto path = dir_ / "k.alg";
  {
    std::ifstream src(fs::path(GFAN_DATA_DIR) / "kronecker2.alg");
    std::ofstream dst(path);
    dst << src.rdbuf();
  }
  auto r = run({"decompose", "--algebra", path.string(), "--g", "2,-2", "--format", "records"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto recs = parse_records(r.out);
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(*recs[0].find("summands"), "1,-1:2");
}

TEST_F(CliTest, RecordsRoundTrip) {
  auto svg = (dir_ / "a.svg").string();
  std::vector<std::vector<std::string>> commands{
      {"decompose", "--algebra", "a3", "--g", "1,-1,1"},
      {"cone", "--algebra", "cycle3", "--g", "2,-1,0", "--tmax", "6"},
      {"tautilt", "--algebra", "a3"},
      {"scan", "--algebra", "a2", "--grid", "-1:1"},
      {"fan-svg", "--algebra", "a3", "--out", svg},
      {"verify", "--algebra", "a2", "--suite", "fan"},
  };
  for (auto c : commands) {
    c.push_back("--format");
    c.push_back("records");
    auto r = run(c);
    ASSERT_EQ(r.code, 0) << c[0] << ": " << r.err;
    auto recs = parse_records(r.out);
    ASSERT_FALSE(recs.empty()) << c[0];
    EXPECT_EQ(format_records(recs), r.out) << c[0];
    for (const auto& rec : recs)
      for (const auto& [k, v] : rec.fields)
        if (k == "g" && rec.kind != "pair") EXPECT_NO_THROW(parse_g(v));
  }
}

TEST_F(CliTest, CacheIsTransparent) {
  std::mt19937_64 rng(2024);
  const std::vector<std::string> algebras{"a2", "a3", "kronecker2", "cycle3"};
  for (int k = 0; k < 20; ++k) {
    const auto& alg = algebras[rng() % algebras.size()];
    const int n = alg == "a2" || alg == "kronecker2" ? 2 : 3;
    std::string g;
    for (int i = 0; i < n; ++i) g += (i ? "," : "") + std::to_string(static_cast<int>(rng() % 7) - 3);
    std::vector<std::string> c;
    switch (k % 4) {
      case 0: c = {"decompose", "--algebra", alg, "--g", g}; break;
      case 1: c = {"cone", "--algebra", alg, "--g", g, "--tmax", "4"}; break;
      case 2: c = {"scan", "--algebra", alg, "--grid", "-1:1", "--dim-cap", "6"}; break;
      default: c = {"tautilt", "--algebra", alg, "--max-pairs", "30", "--max-depth", "6"}; break;
    }
    c.push_back("--seed");
    c.push_back(std::to_string(rng() % 5 + 1));
    if (rng() % 2) {
      c.push_back("--format");
      c.push_back("records");
    }
    auto first = run(c);
    auto cached = run(c);
    clear_decomposition_memo();
    auto fresh_args = c;
    fresh_args.push_back("--no-cache");
    auto fresh = run(fresh_args);
    ASSERT_EQ(first.code, 0) << first.err;
    EXPECT_EQ(cached.out, first.out);
    EXPECT_EQ(fresh.out, first.out);
  }
}

TEST_F(CliTest, VerifyRunsAllSuites) {
  auto r = run({"verify", "--algebra", "semisimple2", "--count", "8", "--gate-boundary"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(count_of(r.out, "PASS "), 7u) << r.out;
  EXPECT_EQ(run({"verify", "--algebra", "a2", "--suite", "nonsense"}).code, 2);
}

TEST(Records, ParseAndFormat) {
  std::vector<Record> recs{Record{"a"}.add("x", "1,2").add("y", "p=q"), Record{"b"}};
  auto text = format_records(recs);
  EXPECT_EQ(text, "a x=1,2 y=p=q\nb\n");
  EXPECT_EQ(parse_records(text), recs);
  EXPECT_THROW(parse_records("a x\n"), Error);
  EXPECT_THROW(parse_records("k=v\n"), Error);
  EXPECT_THROW(format_records({Record{"a"}.add("x", "two words")}), Error);
}

TEST(Cache, StoresAtomically) {
  auto dir = fs::temp_directory_path() / ("gfan-cache-test-" + std::to_string(std::random_device{}()));
  ResultCache c(dir);
  EXPECT_FALSE(c.get(7));
  c.put(7, "hello\n");
  c.put(7, "hello again\n");
  EXPECT_EQ(c.get(7), "hello again\n");
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    ++files;
    EXPECT_EQ(e.path().filename().string().size(), 16u);
  }
  EXPECT_EQ(files, 1u);
  EXPECT_NE(cache_key("alg", "cone", "p", 1), cache_key("alg", "cone", "p", 2));
  EXPECT_NE(cache_key("alg", "cone", "p", 1), cache_key("alg", "decompose", "p", 1));
  fs::remove_all(dir);
}

TEST(Plane, Parsing) {
  auto p = parse_plane("1,1,1=1");
  EXPECT_EQ(p.normal.size(), 3u);
  EXPECT_EQ(p.offset, 1);
  EXPECT_EQ(parse_plane("1/2,0,-1=3/4").normal[0], Rational(1, 2));
  EXPECT_THROW(parse_plane("1,1,1"), Error);
  EXPECT_THROW(parse_plane("0,0,0=1"), Error);
  EXPECT_THROW(parse_plane("a,1,1=1"), Error);
}
