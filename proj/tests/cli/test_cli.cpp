#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Invocation {
  int code = -1;
  std::string out;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("sgach_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static Invocation run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + (env.empty() ? "" : " ") + SGACH_CLI_PATH + " " + args + " 2>/dev/null";
    Invocation r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    while (auto n = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
  }

  static bool has(const Invocation& r, const std::string& line) {
    return r.out.find(line + "\n") != std::string::npos;
  }

  fs::path dir_;
};

constexpr const char* kHexagon =
    "signed 6\nv a\nv b\nv c\nv d\nv e\nv f\n"
    "e f a -\ne a b +\ne b c +\ne c d -\ne d e +\ne e a +\n";
constexpr const char* kUc4 = "signed 4\ne v0 v1 +\ne v1 v2 +\ne v2 v3 +\ne v3 v0 -\n";
constexpr const char* kUp3 = "signed 3\nv a\nv b\nv c\ne a b -\ne b c +\n";
constexpr const char* kP3 = "signed 3\nv a\nv b\nv c\ne a b +\ne b c +\n";

}  // namespace

TEST_F(Cli, ComputePsi2OnHexagon) {
  auto r = run("compute --param psi2 " + file("hexagon.sg", kHexagon));
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r, "value: 3")) << r.out;
  EXPECT_TRUE(has(r, "certified: yes"));
}

TEST_F(Cli, SignedCliqueUc4) {
  auto r = run("clique --mode signed " + file("uc4.sg", kUc4));
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r, "clique: yes"));
  auto p = run("clique --mode signed " + file("p3.sg", kP3));
  EXPECT_EQ(p.code, 1);
  EXPECT_TRUE(has(p, "identifiable-pair: a c"));
}

TEST_F(Cli, EquivUp3AndPositiveP3) {
  auto r = run("equiv " + file("up3.sg", kUp3) + " " + file("p3pos.sg", kP3));
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r, "equivalent: yes"));
  auto no = run("equiv " + file("uc4.sg", kUc4) + " " +
                file("c4.sg", "signed 4\ne v0 v1 +\ne v1 v2 +\ne v2 v3 +\ne v3 v0 +\n"));
  EXPECT_EQ(no.code, 1);
  auto mismatch = run("equiv " + path("uc4.sg") + " " + path("up3.sg"));
  EXPECT_EQ(mismatch.code, 1);
  EXPECT_TRUE(has(mismatch, "equivalent: no"));
}

TEST_F(Cli, WitnessesReverify) {
  const auto g = file("hexagon.sg", kHexagon);
  for (std::string param : {"psi2", "psis", "psi-max-class", "psi-min-class", "psi-max",
                            "psi-min-signed", "chi2", "chis", "psi"}) {
    const auto w = path(param + ".col");
    auto r = run("compute --param " + param + " --witness " + w + " " + g);
    ASSERT_EQ(r.code, 0) << param;
    std::string target = g;
    if (auto pos = r.out.find("witness-graph: "); pos != std::string::npos) {
      target = r.out.substr(pos + 15, r.out.find('\n', pos) - pos - 15);
    }
    const bool is_signed = r.out.find("verify-mode: signed") != std::string::npos;
    const bool complete = r.out.find("verify-complete: yes") != std::string::npos;
    auto v = run(std::string("verify-coloring --mode ") + (is_signed ? "signed" : "2ec") +
                 (complete ? " --complete " : " ") + target + " " + w);
    EXPECT_EQ(v.code, 0) << param << "\n" << r.out << v.out;
    EXPECT_TRUE(has(v, "valid: yes"));
  }
}

TEST_F(Cli, IdentifiableAndTwins) {
  const auto up3 = file("up3.sg", kUp3);
  auto s = run("identifiable --mode signed " + up3 + " a c");
  EXPECT_EQ(s.code, 0);
  EXPECT_TRUE(has(s, "resign: a"));
  EXPECT_EQ(run("identifiable --mode 2ec " + up3 + " a c").code, 1);
  EXPECT_EQ(run("identifiable --mode 2ec " + up3 + " a zz").code, 4);
  auto t = run("twins " + up3);
  EXPECT_EQ(t.code, 0);
  EXPECT_TRUE(has(t, "twins-signed: a c"));
  EXPECT_TRUE(has(t, "rc-classes: 2"));
}

TEST_F(Cli, VerifyColoringReportsReasons) {
  const auto g = file("hexagon.sg", kHexagon);
  auto bad = run("verify-coloring --mode 2ec " + g + " " +
                 file("bad.col", "c a 1\nc b 1\nc c 2\nc d 3\nc e 4\nc f 5\n"));
  EXPECT_EQ(bad.code, 1);
  EXPECT_TRUE(has(bad, "valid: no"));
  auto id = run("verify-coloring --mode 2ec --complete " + g + " " +
                file("id.col", "c a 1\nc b 2\nc c 3\nc d 4\nc e 5\nc f 6\n"));
  EXPECT_EQ(id.code, 1);
  EXPECT_TRUE(has(id, "valid: yes"));
  EXPECT_TRUE(has(id, "complete: no"));
  EXPECT_EQ(run("verify-coloring --mode 2ec " + g + " " + file("x.col", "c a 9\n")).code, 4);
}

TEST_F(Cli, Reductions) {
  const auto inst = file("a444.3p", "3p 1 12\na 4\na 4\na 4\n");
  auto r = run("reduce3p --override-params 2,2,3 --witness " + path("w.col") + " --out " +
               path("h.sg") + " " + inst);
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r, "vertices: 64"));
  EXPECT_TRUE(has(r, "k: 49"));
  EXPECT_TRUE(has(r, "witness-colors: 49"));
  std::ifstream in(path("h.sg"));
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first, "# q=2 r=2 p=3 connected=false");
  auto v = run("verify-coloring --mode 2ec --complete " + path("h.sg") + " " + path("w.col"));
  EXPECT_EQ(v.code, 0) << v.out;

  EXPECT_EQ(run("reduce3p --out " + path("big.sg") + " " + inst, "SGACH_MAX_N=1000").code, 3);
  EXPECT_EQ(run("reduce3p --override-params 2,2 --out " + path("h.sg") + " " + inst).code, 2);
  EXPECT_EQ(run("reduce3p --override-params 2,2,1 --out " + path("h.sg") + " " + inst).code, 4);

  auto a = run("reduce-apex --out " + path("apex.sg") + " " + file("p3.sg", kP3));
  EXPECT_EQ(a.code, 0);
  EXPECT_TRUE(has(a, "vertices: 4"));
  EXPECT_TRUE(has(a, "edges: 5"));
}

TEST_F(Cli, ExitCodes) {
  const auto g = file("hexagon.sg", kHexagon);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("compute --param psi7 " + g).code, 2);
  EXPECT_EQ(run("compute --bogus " + g).code, 2);
  EXPECT_EQ(run("clique --mode signed " + file("bad.sg", "signed 2\ne v0 v0 +\n")).code, 4);
  EXPECT_EQ(run("clique --mode signed " + path("missing.sg")).code, 4);
  EXPECT_EQ(run("--help").code, 0);

  std::ostringstream path13;
  path13 << "signed 13\n";
  for (int i = 0; i + 1 < 13; ++i) path13 << "e v" << i << " v" << i + 1 << " +\n";
  const auto p13 = file("p13.sg", path13.str());
  EXPECT_EQ(run("compute --param psi2 " + p13).code, 3);
  auto over = run("compute --param psi2 " + p13, "SGACH_MAX_N=13");
  EXPECT_EQ(over.code, 0);
  EXPECT_TRUE(has(over, "value: 5"));
  EXPECT_EQ(run("compute --param psi2 " + p13, "SGACH_MAX_N=abc").code, 2);
}

TEST_F(Cli, OutputIsByteStableAcrossThreadCounts) {
  const auto g = file("hexagon.sg", kHexagon);
  auto one = run("compute --param psi-max-class --threads 1 --witness " + path("a.col") + " " + g);
  auto four = run("compute --param psi-max-class --threads 4 --witness " + path("b.col") + " " + g);
  auto strip = [](std::string s) {
    for (auto name : {"a.col", "b.col"}) {
      for (auto pos = s.find(name); pos != std::string::npos; pos = s.find(name)) s.replace(pos, 5, "W");
    }
    return s;
  };
  EXPECT_EQ(strip(one.out), strip(four.out));
  std::ifstream a(path("a.col")), b(path("b.col"));
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  EXPECT_EQ(sa.str(), sb.str());
}
