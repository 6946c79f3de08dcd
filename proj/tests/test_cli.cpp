// Copyright 2026 The FairConf Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end checks of the installed binary: spawns the CLI and inspects
// exit codes and outputs.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr interleaved
};

RunResult RunCli(const std::string& args) {
  const std::string command = std::string(FAIRCONF_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buffer{};
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::size_t got = fread(buffer.data(), 1, buffer.size(), pipe))
    result.output.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string Fixture(const std::string& name) {
  return std::string(FAIRCONF_FIXTURE_DIR) + "/" + name;
}

std::filesystem::path TempDir() {
  auto dir = std::filesystem::temp_directory_path() / "fairconf_cli_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("help exits zero") {
  CHECK(RunCli("--help").exit_code == 0);
  CHECK(RunCli("schedule --help").exit_code == 0);
}

TEST_CASE("schedule em on example 2 reports TEP 1.4") {
  const auto result =
      RunCli("schedule --instance " + Fixture("example2.json") + " --method em --stdout");
  REQUIRE(result.exit_code == 0);
  const auto metrics = nlohmann::json::parse(result.output);
  CHECK(metrics["tep"].get<double>() == doctest::Approx(1.4));
}

TEST_CASE("missing lambdas for mfairconf exit 2 with usage") {
  const auto result =
      RunCli("schedule --instance " + Fixture("example2.json") + " --method mfairconf");
  CHECK(result.exit_code == 2);
  CHECK(result.output.find("--lambda1") != std::string::npos);
}

TEST_CASE("exact on a large instance exits 3 with BudgetExceeded") {
  const auto dir = TempDir();
  const auto instance_path = (dir / "big.json").string();
  REQUIRE(RunCli("generate --kind uniform --m 3 --n 12 --l 30 --seed 1 --out " +
                 instance_path)
              .exit_code == 0);
  const auto result = RunCli("schedule --instance " + instance_path +
                             " --method exact --lambda1 0.5 --lambda2 0.5");
  CHECK(result.exit_code == 3);
  CHECK(result.output.find("BudgetExceeded") != std::string::npos);
}

TEST_CASE("generate is byte-identical for a fixed seed") {
  const auto dir = TempDir();
  const auto a = (dir / "a.json").string();
  const auto b = (dir / "b.json").string();
  REQUIRE(RunCli("generate --kind uniform --m 10 --n 10 --l 10 --seed 7 --out " + a)
              .exit_code == 0);
  REQUIRE(RunCli("generate --kind uniform --m 10 --n 10 --l 10 --seed 7 --out " + b)
              .exit_code == 0);
  const std::string ja = ReadFile(a), jb = ReadFile(b);
  CHECK(ja == jb);
  CHECK_FALSE(ja.empty());
}

TEST_CASE("evaluate rejects a schedule from another instance") {
  const auto dir = TempDir();
  const auto schedule_path = (dir / "sched_ex3.json").string();
  REQUIRE(RunCli("schedule --instance " + Fixture("example3.json") +
                 " --method em --out-schedule " + schedule_path)
              .exit_code == 0);
  const auto result = RunCli("evaluate --instance " + Fixture("example1.json") +
                             " --schedule " + schedule_path);
  CHECK(result.exit_code == 2);
  CHECK(result.output.find("UnknownTalkId") != std::string::npos);
}

TEST_CASE("sweep on the bundled 6x6x6 fixture prints 4 grid and 4 baseline rows") {
  const auto dir = TempDir();
  const auto instance_path = (dir / "sweep6.json").string();
  REQUIRE(RunCli("generate --kind uniform --m 6 --n 6 --l 6 --seed 13 --out " +
                 instance_path)
              .exit_code == 0);
  const auto result = RunCli("sweep --instance " + instance_path +
                             " --method exact --l1 0,0.25,0.5,1 --l2 0.5 --stdout");
  REQUIRE(result.exit_code == 0);
  std::istringstream lines(result.output);
  std::string line;
  int rows = 0;
  bool header = false;
  while (std::getline(lines, line)) {
    if (line.rfind("method,", 0) == 0) {
      header = true;
      continue;
    }
    if (!line.empty()) ++rows;
  }
  CHECK(header);
  CHECK(rows == 8);
}

TEST_CASE("schedule outputs are reproducible run to run") {
  const auto dir = TempDir();
  const auto s1 = (dir / "s1.json").string();
  const auto s2 = (dir / "s2.json").string();
  const std::string base = "schedule --instance " + Fixture("example3.json") +
                           " --method rrfs --lambda1 0.5 --lambda2 0.5 --out-schedule ";
  REQUIRE(RunCli(base + s1).exit_code == 0);
  REQUIRE(RunCli(base + s2).exit_code == 0);
  CHECK(ReadFile(s1) == ReadFile(s2));
}

TEST_CASE("priority subcommand writes a multi-round schedule") {
  const auto dir = TempDir();
  const auto instance_path = (dir / "pri.json").string();
  const auto schedule_path = (dir / "pri_sched.json").string();
  REQUIRE(RunCli("generate --kind uniform --m 5 --n 6 --l 14 --seed 3 --out " +
                 instance_path)
              .exit_code == 0);
  const auto result = RunCli("priority --instance " + instance_path +
                             " --groups 3 --sequence 1,2,3,1 --lambda1 0.1 --lambda2 0.1 "
                             "--out-schedule " +
                             schedule_path);
  REQUIRE(result.exit_code == 0);
  const auto doc = nlohmann::json::parse(ReadFile(schedule_path));
  CHECK(doc["rounds"].size() == 4);
}

TEST_CASE("cluster subcommand emits the reduced instance") {
  const auto dir = TempDir();
  const auto instance_path = (dir / "clu.json").string();
  REQUIRE(RunCli("generate --kind uniform --m 9 --n 3 --l 5 --seed 6 --out " +
                 instance_path)
              .exit_code == 0);
  const auto result = RunCli("cluster --instance " + instance_path +
                             " --clusters 3 --cluster-seed 4 --stdout");
  REQUIRE(result.exit_code == 0);
  const auto doc = nlohmann::json::parse(result.output);
  CHECK(doc["participants"].size() == 3);
  CHECK(doc["weights"].size() == 3);
}
