#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "prodschur/io.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(PRODSCHUR_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string tmp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("prodschur_cli_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, SchurValue) {
  const auto r = run("schur --k 4 --system double-sum");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("value 41\n"), std::string::npos);
}

TEST(Cli, SchurInconclusiveAndGuard) {
  const auto r = run("schur --k 4 --node-limit 100");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("status inconclusive"), std::string::npos);
  EXPECT_EQ(run("schur --k 5").code, 3);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("schur").code, 1);
  EXPECT_EQ(run("schur --k 2 --system bogus").code, 1);
  EXPECT_EQ(run("count --what nothing --n 10").code, 1);
  EXPECT_EQ(run("construct --name blocker --n 100000 --alpha 2").code, 1);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, CountTriples) {
  const auto r = run("count --what triples --n 100");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("off_diagonal 137\n"), std::string::npos);
}

TEST(Cli, CountTableAndDivisors) {
  const auto t = run("count --what table --n 20 --y 2 --z 5");
  EXPECT_NE(t.out.find("exact 10\n"), std::string::npos);
  const auto d = run("count --what divisors --n 100");
  EXPECT_NE(d.out.find("max 12\nargmax 60\n"), std::string::npos);
}

TEST(Cli, GStarBothReadings) {
  const auto r = run("gstar --k 1 --n 9 --exact");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("largest_non_schur_subset 6\n"), std::string::npos);
  EXPECT_NE(r.out.find("smallest_schur_subset 2\n"), std::string::npos);
  EXPECT_NE(r.out.find("upper_condition_met false"), std::string::npos);
}

TEST(Cli, ConstructRoundTrips) {
  const auto path = tmp("mod5.txt");
  const auto r = run("construct --name mod5 --n 200 --out " + path);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("violations 0"), std::string::npos);
  std::ifstream f(path);
  const auto c = prodschur::read_colouring(f);
  EXPECT_EQ(c.ground_size(), 160u);
  const auto m = run("count --what mono --system sum --input " + path);
  EXPECT_NE(m.out.find("monochromatic 0\n"), std::string::npos);

  const auto lp = tmp("log.txt");
  EXPECT_NE(run("construct --name log-product --k 2 --n 20000 --out " + lp).out.find("violations 0"), std::string::npos);
  EXPECT_NE(run("count --what mono --system product --input " + lp).out.find("monochromatic 0\n"), std::string::npos);
}

TEST(Cli, ThresholdCsvIsByteIdentical) {
  const std::string args = "threshold --n 20000 --c 0.2,1,5 --trials 20 --seed 7";
  const auto a = run(args);
  const auto b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.substr(0, a.out.find('\n')), "n,c,p,trials,successes,frequency");
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 4);
}

TEST(Cli, PerturbedCsvColumnsAndManifest) {
  const auto mf = tmp("manifest.json");
  const auto r = run("--manifest " + mf + " perturbed --n 100000 --c 0.01,1 --trials 5 --seed 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "n,c,p,trials,successes,frequency,alpha,beta_alpha,blocker_size");
  EXPECT_NE(r.out.find(",36262\n"), std::string::npos);
  const auto j = nlohmann::json::parse(slurp(mf));
  EXPECT_EQ(j.at("seed").get<std::uint64_t>(), 3u);
  EXPECT_EQ(j.at("tool_version").get<std::string>(), prodschur::tool_version);
  EXPECT_EQ(j.at("config_digest").get<std::string>().size(), 16u);
  EXPECT_TRUE(j.contains("wall_time_s"));
  const auto mf2 = tmp("manifest2.json");
  run("--manifest " + mf2 + " perturbed --n 100000 --c 0.01,1 --trials 5 --seed 3");
  EXPECT_EQ(nlohmann::json::parse(slurp(mf2)).at("config_digest"), j.at("config_digest"));
}
