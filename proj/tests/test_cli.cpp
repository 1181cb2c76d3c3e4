#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <string>

namespace {

struct CliRun {
  std::string out;
  int code = -1;
};

CliRun run(const std::string& args) {
  CliRun r;
  const std::string cmd = std::string(INJRES_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, ReduceExample) {
  const CliRun r = run("reduce \"[1 / Z^1, W-3*Z^1]\"");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "canonical={(1,1): 1}")) << r.out;
}

TEST(Cli, ExtPowerExample) {
  const CliRun r = run("ext-power --n 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "dim=6")) << r.out;
  EXPECT_TRUE(contains(r.out, "Omega^0(Z^-2 W^0)")) << r.out;
}

TEST(Cli, DhmExtExample) {
  const CliRun r = run("dhm --ext --max-i 5");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "ext=0,0,6,7,0,0")) << r.out;
}

TEST(Cli, DhmDualListsFifteen) {
  const CliRun r = run("dhm --dual --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  int rows = 0;
  for (const auto& t : j["tables"])
    if (t["title"] == "dual basis") rows = static_cast<int>(t["rows"].size());
  EXPECT_EQ(rows, 15);
  EXPECT_TRUE(j["ok"].get<bool>());
}

TEST(Cli, JsonSchema) {
  const CliRun r = run("--format json --seed 7 ext-self --i 2");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["command"], "ext-self");
  EXPECT_EQ(j["config"]["seed"], 7);
  EXPECT_EQ(j["config"]["field"], "Q");
  for (const auto& v : j["values"]) EXPECT_FALSE(v["provenance"].get<std::string>().empty());
  for (const auto& c : j["checks"]) EXPECT_FALSE(c["provenance"].get<std::string>().empty());
}

TEST(Cli, LocalCohomologyIdeals) {
  EXPECT_TRUE(contains(run("lc --ideal Z,W").out, "H^i_I(A/p), I = (Z, W, X, Y)"));
  EXPECT_EQ(run("lc --ideal Z").code, 0);
  EXPECT_EQ(run("lc --ideal 0").code, 0);
  EXPECT_EQ(run("lc --ideal W-Z^2").code, 0);
}

TEST(Cli, YonedaTable) {
  const CliRun r = run("yoneda --table");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "-e4")) << r.out;
}

TEST(Cli, DeterministicOutput) {
  for (const char* args : {"--seed 11 --samples 20 --trunc 2 resolution-check", "--format json dhm --ext --max-i 4",
                           "--field 7 reduce \"[Z+W / Z^2, W^1]\""}) {
    const CliRun a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_FALSE(a.out.empty());
  }
  EXPECT_TRUE(contains(run("--seed 11 --samples 20 --trunc 2 resolution-check").out, "seed=11"));
}

TEST(Cli, PrimeField) {
  const CliRun r = run("--field 5 reduce \"[1 / Z^1, W-3*Z^1]\"");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "field=F_5")) << r.out;
}

TEST(Cli, UsageErrors) {
  EXPECT_NE(run("").code, 0);
  EXPECT_NE(run("frobnicate").code, 0);
  EXPECT_NE(run("reduce \"[1 / Z^1\"").code, 0);
  EXPECT_NE(run("reduce \"[1 / Z^1, Z^2]\"").code, 0);
  EXPECT_NE(run("--field 3 reduce \"[1 / Z^1, W^1]\"").code, 0);
  EXPECT_NE(run("--field 2 reduce \"[1 / Z^1, W^1]\"").code, 0);
  EXPECT_NE(run("--field 9 reduce \"[1 / Z^1, W^1]\"").code, 0);
  EXPECT_NE(run("--field R reduce \"[1 / Z^1, W^1]\"").code, 0);
  EXPECT_NE(run("--format xml dhm").code, 0);
  EXPECT_NE(run("ext-power --n 0").code, 0);
  EXPECT_NE(run("ext-power --n x").code, 0);
  EXPECT_NE(run("lc --ideal \"Z,,W\"").code, 0);
  EXPECT_NE(run("--trunc 3 verify-all").code, 0);
  EXPECT_EQ(run("--help").code, 0);
}
