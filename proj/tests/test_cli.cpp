#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI through the shell; stdin comes from `input` when given.
Run run(const std::string& args, const std::string& input = "") {
  std::string cmd = std::string(METASP_CLI) + " " + args + " 2>/dev/null";
  std::string path;
  if (!input.empty()) {
    // ctest runs the cases as parallel processes; keep the files apart.
    static int serial = 0;
    path = testing::TempDir() + "metasp_cli_" + std::to_string(getpid()) + "_" + std::to_string(serial++) + ".json";
    std::ofstream(path) << input;
    cmd += " < " + path;
  }
  Run r;
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, got);
  const int status = pclose(f);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, Hilbert) {
  auto r = run("hilbert pi pi --p 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "-1\n");
  r = run("hilbert 1 pi --p 5");
  EXPECT_EQ(r.out, "1\n");
  r = run("hilbert u pi --p 3 --verify");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "-1"));
  EXPECT_TRUE(contains(r.out, "agree"));
  EXPECT_EQ(run("hilbert x pi").code, 2);
}

TEST(Cli, Satake) {
  auto r = run("satake --i 2 --n 2 --emit json");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "\"c\": 1"));
  EXPECT_TRUE(contains(r.out, "-2"));
  r = run("satake --i 1 --n 2");
  EXPECT_EQ(r.out, "{\"terms\":[{\"mu\":[-2,0],\"c\":1},{\"mu\":[-1,-1],\"c\":-1}]}\n");
  r = run("satake --i 1 --n 2 --oracle --p 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "oracle: agree"));
  EXPECT_EQ(run("satake --i 3 --n 2").code, 2);
}

TEST(Cli, Classify) {
  auto r = run("classify --n 3 --input - --emit json", R"({"xi":[[0,0],[0,0],[0,0]]})");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "\"length\": 4"));
  r = run("classify --n 3 --p 7 --input - --emit json", R"({"xi":[[0,0],[1,0],[0,1]]})");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "\"irreducible\": true"));
  r = run("classify --siegel --n 2 --P 1 --Q 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "GL2"));
  EXPECT_EQ(run("classify --n 3 --input -", R"({"xi":[[0,0]]})").code, 2);
  EXPECT_EQ(run("classify --n 2 --input -", "not json").code, 2);
  EXPECT_EQ(run("classify --n 2 --input -", R"({"levi":[],"flags":{"1":true,"2":true}})").code, 2);
  r = run("classify --n 2 --input - --emit csv", R"({"xi":[[0,0],[0,0]]})");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, ","));
}

TEST(Cli, OutputIsByteStable) {
  const std::string args = "classify --n 3 --input - --emit json";
  const std::string in = R"({"xi":[[0,0],[0,0],[1,0]],"psi_class":"u"})";
  EXPECT_EQ(run(args, in).out, run(args, in).out);
  EXPECT_EQ(run("oracle --group sl2 --lambda=-2 --p 5 --emit json").out,
            run("oracle --group sl2 --lambda=-2 --p 5 --emit json --threads 1").out);
}

TEST(Cli, OracleAndWeights) {
  auto r = run("oracle --group sl2 --lambda=-2 --p 5 --depth 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "raw 4"));
  EXPECT_TRUE(contains(r.out, "raw 20"));
  EXPECT_EQ(run("oracle --group sl2 --lambda=1").code, 2);
  r = run("weights --nu 1,0 --emit json");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "\"q\": 3"));
  EXPECT_EQ(run("weights --nu 3,0").code, 2);
  EXPECT_EQ(run("aset --i 2 --n 2").code, 0);
  EXPECT_EQ(run("cover --n 3").code, 0);
}

TEST(Cli, ConfigValidation) {
  EXPECT_EQ(run("hilbert pi pi --p 4").code, 2);
  EXPECT_EQ(run("hilbert pi pi --p 3 --N 3").code, 2);
  EXPECT_EQ(run("hilbert pi pi --p 3 --N 6").code, 2);
  EXPECT_EQ(run("satake --i 1 --depth 0").code, 2);
  EXPECT_EQ(run("no-such-command").code, 2);
  EXPECT_EQ(run("--help").code, 0);

  const std::string path = testing::TempDir() + "metasp_cli_" + std::to_string(getpid()) + ".conf";
  std::ofstream(path) << "p=5\n";
  EXPECT_EQ(run("--config " + path + " hilbert pi pi").out, "1\n");
  EXPECT_EQ(run("--config " + path + " --p 3 hilbert pi pi").out, "-1\n");
}
