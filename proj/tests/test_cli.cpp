#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "cprsa/io.hpp"
#include "cprsa/keygen.hpp"

using namespace cprsa;
namespace fs = std::filesystem;

namespace {

const fs::path kTmp = fs::temp_directory_path() / "cprsa_cli_test";

int run(const std::string& args, std::string* out = nullptr) {
  fs::create_directories(kTmp);
  const fs::path stdout_path = kTmp / "stdout.txt";
  const std::string cmd = std::string(CPRSA_CLI) + " " + args + " > " + stdout_path.string() + " 2> " +
                          (kTmp / "stderr.txt").string();
  const int status = std::system(cmd.c_str());
  if (out) *out = read_text_file(stdout_path.string());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string tmp(const char* name) { return (kTmp / name).string(); }

}  // namespace

TEST(Cli, HelpAndVersion) {
  std::string out;
  EXPECT_EQ(run("--version", &out), 0);
  EXPECT_NE(out.find(kVersion), std::string::npos);
  EXPECT_EQ(run("--help"), 0);
  EXPECT_EQ(run(""), 2);
  EXPECT_EQ(run("frobnicate"), 2);
}

TEST(Cli, KeygenUsageAndInfeasible) {
  EXPECT_EQ(run("keygen --gamma-bits 102 --delta-bits 80"), 2);
  EXPECT_EQ(run("keygen --bits abc --gamma-bits 102 --delta-bits 80"), 2);
  EXPECT_NE(run("keygen --bits 512 --gamma-bits 300 --delta-bits 80"), 0);
}

TEST(Cli, KeygenWritesAVerifiableInstance) {
  const std::string path = tmp("inst.json");
  ASSERT_EQ(run("keygen --bits 512 --gamma-bits 102 --delta-bits 80 --seed 1 --out " + path), 0);
  const auto inst = read_instance(path);
  EXPECT_EQ(inst.seed, 1u);
  EXPECT_EQ(bit_length(inst.n), 512u);
  EXPECT_TRUE(verify_instance(inst).all_passed());
  // Deterministic in the seed.
  const std::string again = tmp("inst2.json");
  ASSERT_EQ(run("keygen --bits 512 --gamma-bits 102 --delta-bits 80 --seed 1 --out " + again), 0);
  EXPECT_EQ(read_text_file(path), read_text_file(again));
}

TEST(Cli, AttackSuccessAndFailurePaths) {
  const std::string path = tmp("inst_small.json");
  ASSERT_EQ(run("keygen --bits 256 --gamma-bits 51 --delta-bits 24 --seed 2 --out " + path), 0);
  std::string out;
  ASSERT_EQ(run("attack --instance " + path + " --s 2 --t 1", &out), 0);
  const auto report = nlohmann::json::parse(out);
  const auto inst = read_instance(path);
  EXPECT_EQ(report.at("status"), "success");
  EXPECT_EQ(report.at("seed"), "2");
  EXPECT_EQ(report.at("version"), kVersion);
  EXPECT_EQ(report.at("parameters").at("omega"), 36);
  EXPECT_TRUE(report.contains("condition"));
  EXPECT_TRUE(report.contains("timings"));
  EXPECT_EQ(from_decimal(report.at("key").at("p").get<std::string>()) *
                from_decimal(report.at("key").at("q").get<std::string>()),
            inst.n);

  // s = 1 cannot reach this delta: failure reported with a nonzero code.
  const int code = run("attack --instance " + path + " --s 1 --t 0", &out);
  EXPECT_GE(code, 3);
  EXPECT_NE(nlohmann::json::parse(out).at("status"), "success");

  // Raw (N, e) with size hints.
  const std::string raw = "attack --n " + to_decimal(inst.n) + " --e " + to_decimal(inst.e) +
                          " --delta 24/256 --gamma 50/256 --s 2 --t 1";
  EXPECT_EQ(run(raw, &out), 0) << out;

  EXPECT_EQ(run("attack --n 77"), 2);
  EXPECT_EQ(run("attack --instance " + path + " --lll fancy"), 2);
}

TEST(Cli, AutoTau) {
  const std::string path = tmp("inst_tau.json");
  ASSERT_EQ(run("keygen --bits 256 --gamma-bits 51 --delta-bits 28 --seed 3 --out " + path), 0);
  std::string out;
  run("attack --instance " + path + " --s 2 --auto-tau", &out);
  const auto report = nlohmann::json::parse(out);
  // optimal tau at gamma = 51/256, delta = 28/256 is (2 gamma - 8 delta + 1) / (4 delta) = 134/112,
  // so t = round(2.39) = 2.
  EXPECT_EQ(report.at("parameters").at("t"), 2);
}

TEST(Cli, ExportAndReduceLattice) {
  const std::string path = tmp("inst_lat.json");
  ASSERT_EQ(run("keygen --bits 128 --gamma-bits 26 --delta-bits 12 --seed 4 --out " + path), 0);
  const std::string lat = tmp("basis.txt");
  run("attack --instance " + path + " --s 2 --t 0 --export-lattice " + lat);
  std::ifstream in(lat);
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first, "27");
  const auto labels = nlohmann::json::parse(read_text_file(lat + ".labels.json"));
  EXPECT_EQ(labels.size(), 27u);
  std::string reduced;
  EXPECT_EQ(run("reduce --in " + lat, &reduced), 0);
  EXPECT_EQ(reduced.substr(0, 3), "27\n");
  EXPECT_EQ(run("reduce --in " + lat + " --lll exact"), 0);
  EXPECT_NE(run("reduce --in " + tmp("missing.txt")), 0);
}

TEST(Cli, RegionCsv) {
  const std::string path = tmp("region.csv");
  ASSERT_EQ(run("region --grid-points 500 --out " + path), 0);
  std::istringstream in(read_text_file(path));
  std::string line, header, row_03, last;
  std::size_t rows = 0;
  std::getline(in, header);
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    ++rows;
    if (line.rfind("0.3,", 0) == 0) row_03 = line;
    last = line;
  }
  EXPECT_EQ(rows, 500u);
  EXPECT_EQ(header.substr(0, 6), "gamma,");
  ASSERT_FALSE(row_03.empty());
  EXPECT_EQ(row_03.substr(row_03.rfind(',') + 1), "0.2");
  // Wiener hits 0 at gamma = 1/2.
  EXPECT_EQ(last.substr(0, 6), "0.5,0,");
}

TEST(Cli, BoundsTable) {
  std::string out;
  ASSERT_EQ(run("bounds --gamma 0.3", &out), 0);
  EXPECT_NE(out.find("corrected: 0.2\n"), std::string::npos);
  EXPECT_NE(out.find("ml_flawed: 0.3546"), std::string::npos);
  EXPECT_EQ(run("bounds --gamma 0.7"), 1);
  EXPECT_EQ(run("bounds --gamma zz"), 2);
}

TEST(Cli, SmallExperiment) {
  std::string out;
  ASSERT_EQ(run("experiment --bits 128 --gamma 0.2 --s 2 --t 0 --trials 1 --seed 5", &out), 0);
  EXPECT_NE(out.find("binary search"), std::string::npos);
  EXPECT_NE(out.find("\n128,0.2,26,"), std::string::npos);
}
