#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "horn/io.hpp"

#ifndef SPECTRAL_HORN_CLI
#error "SPECTRAL_HORN_CLI must point at the command line binary"
#endif

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string command = std::string(SPECTRAL_HORN_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buffer;
  size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    output.append(buffer.data(), got);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, output};
}

fs::path temp_dir() {
  auto dir = fs::temp_directory_path() / ("spectral-horn-test-" + std::to_string(getpid()));
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& path, const std::string& body) {
  std::ofstream out(path);
  out << body;
}

}  // namespace

TEST_CASE("ineqs emits the system and round-trips", "[cli]") {
  auto result = run("ineqs --n 2 --m 3 --r 1");
  CHECK(result.exit_code == 0);
  auto parsed = horn::system_from_text(result.output);
  auto expected = horn::build_system(2, 3, 1);
  CHECK(parsed.majors == expected.majors);
  CHECK(parsed.rank_bounds == expected.rank_bounds);

  auto no_rank = run("ineqs --n 3 --m 3 --r 3");
  CHECK(no_rank.exit_code == 0);
  CHECK(no_rank.output.find("rank") == std::string::npos);

  auto dagger = run("ineqs --n 2 --m 3 --r 1 --include-dagger");
  CHECK(dagger.output.find("dagger s=1 i=1") != std::string::npos);

  CHECK(run("ineqs --n 2").exit_code == 2);
  CHECK(run("ineqs --n 2 --m 3 --r 9").exit_code == 2);
}

TEST_CASE("check exit codes", "[cli]") {
  auto dir = temp_dir();
  write_file(dir / "feasible.json", R"({"n":2,"m":2,"r":1,"alpha":[["2","-1"],["1","0"]]})");
  write_file(dir / "infeasible.json", R"({"n":2,"m":2,"r":1,"alpha":[["1","1"],["-2","-2"]]})");
  write_file(dir / "malformed.json", R"({"n":2,"m":2,"r":1,"alpha":[["1/0","0"],["1","0"]]})");

  auto feasible = run("check " + (dir / "feasible.json").string());
  CHECK(feasible.exit_code == 0);
  CHECK(!feasible.output.empty());

  auto infeasible = run("check " + (dir / "infeasible.json").string());
  CHECK(infeasible.exit_code == 1);

  CHECK(run("check " + (dir / "malformed.json").string()).exit_code == 2);
  CHECK(run("check " + (dir / "missing.json").string()).exit_code == 2);

  auto extended = run("check --extended " + (dir / "feasible.json").string());
  CHECK(extended.exit_code == 0);

  auto as_json = nlohmann::json::parse(
      run("check --format json " + (dir / "feasible.json").string()).output);
  CHECK(as_json["feasible"].get<bool>());
  CHECK(as_json["tight"] == nlohmann::json::array({"major[1]"}));
  CHECK(as_json["violated"].empty());

  auto bad_json = nlohmann::json::parse(
      run("check --format json " + (dir / "infeasible.json").string()).output);
  CHECK_FALSE(bad_json["feasible"].get<bool>());
  CHECK(!bad_json["violated"].empty());
}

TEST_CASE("realize exit codes and determinism", "[cli]") {
  auto dir = temp_dir();
  write_file(dir / "feasible.json", R"({"n":2,"m":2,"r":1,"alpha":[["2","-1"],["1","0"]]})");
  write_file(dir / "infeasible.json", R"({"n":2,"m":2,"r":1,"alpha":[["1","1"],["-2","-2"]]})");

  auto first = run("realize --seed 42 " + (dir / "feasible.json").string());
  CHECK(first.exit_code == 0);
  auto second = run("realize --seed 42 " + (dir / "feasible.json").string());
  CHECK(second.output == first.output);

  auto report = nlohmann::json::parse(first.output);
  CHECK(report["found"].get<bool>());
  CHECK(report["residual"].get<double>() < 1e-7);
  CHECK(report["verification"]["spectra_ok"].get<bool>());

  auto failure =
      run("realize --seed 1 --restarts 5 --max-iters 300 " + (dir / "infeasible.json").string());
  CHECK(failure.exit_code == 3);
  auto failure_report = nlohmann::json::parse(failure.output);
  CHECK_FALSE(failure_report["found"].get<bool>());
  CHECK(failure_report["residual"].get<double>() > 0);
}

TEST_CASE("facets certifies and flags duplicates", "[cli]") {
  auto ok = run("facets --n 2 --m 3 --r 1");
  CHECK(ok.exit_code == 0);

  auto dup = run("facets --n 2 --m 3 --r 1 --extra-row \"major t=1 I1={1} I2={1} I3={2}\" "
                 "--format json");
  CHECK(dup.exit_code == 1);
  auto rows = nlohmann::json::parse(dup.output);
  int uncertified = 0;
  for (const auto& row : rows)
    if (!row["certified"].get<bool>()) ++uncertified;
  CHECK(uncertified >= 2);  // the duplicate and its twin
}

TEST_CASE("lr coefficient queries", "[cli]") {
  auto one = run("lr --lambdas \"(1);(1);(2)\" --bound 2x2 --target \"(2,2)\"");
  CHECK(one.exit_code == 0);
  CHECK(one.output == "1\n");

  auto unit = run("lr --lambdas \"\" --bound 2x2 --target \"()\"");
  CHECK(unit.exit_code == 0);
  CHECK(unit.output == "1\n");

  auto zero = run("lr --lambdas \"(1);(1)\" --bound 1x1 --target \"(1)\"");
  CHECK(zero.exit_code == 0);
  CHECK(zero.output == "0\n");
}

TEST_CASE("forward-sample writes reproducible feasible instances", "[cli]") {
  auto dir_a = temp_dir() / "a";
  auto dir_b = temp_dir() / "b";
  fs::create_directories(dir_a);
  fs::create_directories(dir_b);

  auto first = run("forward-sample --n 3 --m 3 --r 1 --count 2 --seed 9 -o " + dir_a.string());
  CHECK(first.exit_code == 0);
  auto second = run("forward-sample --n 3 --m 3 --r 1 --count 2 --seed 9 -o " + dir_b.string());
  CHECK(second.exit_code == 0);

  for (const auto& name : {"sample_000.json", "sample_001.json"}) {
    std::ifstream fa(dir_a / name), fb(dir_b / name);
    std::string a((std::istreambuf_iterator<char>(fa)), std::istreambuf_iterator<char>());
    std::string b((std::istreambuf_iterator<char>(fb)), std::istreambuf_iterator<char>());
    CHECK(a == b);
    CHECK(!a.empty());
    CHECK(run("check " + (dir_a / name).string()).exit_code == 0);
  }
  CHECK(fs::exists(dir_a / "sample_000_matrices.json"));
}
