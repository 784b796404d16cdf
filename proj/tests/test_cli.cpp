// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The nashcone authors
//
// End-to-end runs of the installed CLI binary.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string stdout_text;
};

RunResult run(const std::string& args) {
  const std::string command = std::string(NASHCONE_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.stdout_text.append(buffer.data(), n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string verdict_block(const std::string& text) {
  const auto start = text.find("verdicts\n--------\n");
  REQUIRE(start != std::string::npos);
  auto end = text.find("\n\n", start);
  if (end == std::string::npos) end = text.size();
  std::string block = text.substr(start, end - start);
  while (!block.empty() && block.back() == '\n') block.pop_back();
  return block;
}

}  // namespace

TEST_CASE("classify exit codes follow the verdict table") {
  const RunResult bijective = run("classify --genus 0 --d1 1 --d2 1 --x1 2 --x2 2");
  CHECK(bijective.exit_code == 0);
  CHECK(bijective.stdout_text.find("certified-bijective") != std::string::npos);
  CHECK(bijective.stdout_text.find("toric model") != std::string::npos);

  const RunResult undetermined = run("classify --genus 2 --d1 1 --d2 1 --x1 1 --x2 3");
  CHECK(undetermined.exit_code == 10);
  const std::string block = verdict_block(undetermined.stdout_text);
  CHECK(block.find("undetermined") != std::string::npos);
  CHECK(block.find("missing F[S1<S2]") != std::string::npos);

  const RunResult flat = run("classify --genus 0 --d1 1 --d2 1 --x1 1 --x2 1");
  CHECK(flat.exit_code == 20);
  CHECK(flat.stdout_text.find("toric model") == std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("classify --genus 0 --d1 0 --d2 1 --x1 1 --x2 1").exit_code == 2);
  CHECK(run("classify --d1 1 --d2 1").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("scan --range 3:2").exit_code == 2);
  CHECK(run("scan --range nonsense").exit_code == 2);
  CHECK(run("check-resolution --input /nonexistent.json").exit_code == 2);
}

TEST_CASE("classify output is byte-identical across runs") {
  const std::string args = "classify --genus 1 --d1 2 --d2 3 --x1 2 --x2 2 --format json";
  const RunResult first = run(args);
  const RunResult second = run(args);
  CHECK(first.exit_code == 0);
  CHECK(first.stdout_text == second.stdout_text);
  CHECK_FALSE(first.stdout_text.empty());
}

TEST_CASE("scan covers the box and counts verdicts") {
  const RunResult scan = run("scan --genus 0 --range 1:2");
  CHECK(scan.exit_code == 0);
  // 16 tuple lines, one blank, four count lines
  int lines = 0;
  for (char c : scan.stdout_text) lines += (c == '\n');
  CHECK(lines == 21);
  CHECK(scan.stdout_text.find("tuples               16") != std::string::npos);
  CHECK(scan.stdout_text.find("certified-bijective  4") != std::string::npos);
  CHECK(scan.stdout_text.find("undetermined         8") != std::string::npos);
  CHECK(scan.stdout_text.find("not-contractible     4") != std::string::npos);

  const RunResult single = run("scan --range 1:1");
  CHECK(single.stdout_text.find("tuples               1") != std::string::npos);
  CHECK(single.stdout_text.find("not-contractible     1") != std::string::npos);

  const RunResult nice = run("scan --range 2:2");
  CHECK(nice.stdout_text.find("certified-bijective  1") != std::string::npos);

  const RunResult json = run("scan --genus 0 --range 1:2 --format json");
  CHECK(json.exit_code == 0);
  CHECK(json.stdout_text.find("\"certified_bijective\": 4") != std::string::npos);
}

TEST_CASE("check-resolution matches classify on the serialized family") {
  const std::string path = "/tmp/nashcone_cli_test_family.json";
  {
    std::ofstream file(path);
    file << R"({
  "components": ["S1", "S2"],
  "curves": [
    {"name": "C", "intersections": [-1, -1]},
    {"name": "F1", "component": "S1", "intersections": [-2, 1]},
    {"name": "F2", "component": "S2", "intersections": [1, -2]}
  ]
})";
  }
  const RunResult checked = run("check-resolution --input " + path);
  const RunResult classified = run("classify --genus 0 --d1 1 --d2 1 --x1 2 --x2 2");
  CHECK(checked.exit_code == 0);
  CHECK(verdict_block(checked.stdout_text) == verdict_block(classified.stdout_text));
  std::remove(path.c_str());
}

TEST_CASE("check-resolution accepts stdin and runs the self test") {
  const std::string path = "/tmp/nashcone_cli_test_single.json";
  {
    std::ofstream file(path);
    file << R"({"components": ["E1"],
                "curves": [{"name": "z", "intersections": [-3]}]})";
  }
  const RunResult checked = run("check-resolution --self-test --input " + path);
  CHECK(checked.exit_code == 0);
  CHECK(checked.stdout_text.find("certified") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("non-contractible user data exits 20") {
  const std::string path = "/tmp/nashcone_cli_test_flat.json";
  {
    std::ofstream file(path);
    // x1 = x2 = 1 rows: no full-support divisor is negative on both fibers
    file << R"({
  "components": ["S1", "S2"],
  "curves": [
    {"name": "C", "intersections": [-1, -1]},
    {"name": "F1", "component": "S1", "intersections": [-1, 1]},
    {"name": "F2", "component": "S2", "intersections": [1, -1]}
  ]
})";
  }
  const RunResult checked = run("check-resolution --input " + path);
  CHECK(checked.exit_code == 20);
  CHECK(verdict_block(checked.stdout_text).find("grauert certificate  none") !=
        std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("toric-fan emits the model or refuses") {
  const RunResult ok = run("toric-fan --genus 0 --d1 1 --d2 1 --x1 2 --x2 2");
  CHECK(ok.exit_code == 0);
  CHECK(ok.stdout_text.find("intersection table") != std::string::npos);
  CHECK(ok.stdout_text.find("(-1, 2, 0)") != std::string::npos);  // ray c
  CHECK(ok.stdout_text.find("convexity certificate") != std::string::npos);

  const RunResult other = run("toric-fan --genus 0 --d1 2 --d2 3 --x1 1 --x2 2");
  CHECK(other.exit_code == 0);
  CHECK(other.stdout_text.find("(-2, 5, -1)") != std::string::npos);  // v_f

  const RunResult json = run("toric-fan --genus 0 --d1 2 --d2 3 --x1 1 --x2 2 --format json");
  CHECK(json.exit_code == 0);
  CHECK(json.stdout_text.find("\"on_f\": 8") != std::string::npos);  // d1 + x2 d2

  const RunResult refused = run("toric-fan --genus 0 --d1 1 --d2 1 --x1 1 --x2 1");
  CHECK(refused.exit_code == 20);
  CHECK(refused.stdout_text.empty());
}
