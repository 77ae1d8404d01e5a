#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(TURNOVER_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const fs::path dir = fs::temp_directory_path() / "turnover_cli_test";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << text;
  return p.string();
}

const char* kFpf = R"({"schema_version":"1","signature":[6,10,15],"order":30,"images":[5,27,28]})";

}  // namespace

TEST_CASE("validate") {
  const auto good = write_temp("good.json", kFpf);
  const auto r = run("validate " + good);
  CHECK(r.code == 0);
  const auto bad = write_temp("bad.json", R"({"schema_version":"1","signature":[3,3,4],"order":12,"images":[4,4,3]})");
  const auto rb = run("validate " + bad);
  CHECK(rb.code == 1);
  CHECK(rb.out.find("relation_violated") != std::string::npos);
  CHECK(run("validate " + write_temp("junk.json", "{oops")).code == 2);
  CHECK(run("validate " + write_temp("old.json", R"({"schema_version":"0"})")).code == 2);
  CHECK(run("frobnicate").code == 2);
}

TEST_CASE("certify") {
  const auto good = write_temp("good.json", kFpf);
  const auto r = run("certify " + good + " --all-generators --no-timestamp");
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  const auto j = nlohmann::json::parse(r.out, nullptr, false);
  int count = 0;
  if (j.is_array()) {
    for (const auto& c : j) {
      CHECK(c["crossing_bound"] == 0);
      CHECK(!c.contains("timestamp"));
      ++count;
    }
  } else {
    std::string line;
    while (std::getline(lines, line)) {
      if (line.empty()) continue;
      const auto c = nlohmann::json::parse(line);
      CHECK(c["crossing_bound"] == 0);
      ++count;
    }
  }
  CHECK(count == 8);
  CHECK(run("certify " + good + " --no-timestamp").out == run("certify " + good + " --no-timestamp").out);
}

TEST_CASE("enumerate and min-fpf") {
  const auto r = run("enumerate --max-order 12 --jobs 1");
  CHECK(r.code == 0);
  CHECK(!r.out.empty());
  CHECK(run("enumerate --max-order 12 --max-genus 3").code == 2);
  const auto m = run("min-fpf --max-genus 11 --jobs 1");
  CHECK(m.code == 0);
  CHECK(m.out.find("30") != std::string::npos);
  CHECK(run("min-fpf --max-genus 4 --jobs 1").code == 3);
}

TEST_CASE("torus") {
  const auto r = run("torus 0 -1 1 0 --no-timestamp");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["case_tag"] == "torus");
  CHECK(j["crossing_bound"] == 1);
  CHECK(run("torus 1 1 0 1").code == 1);
  CHECK(run("torus 2 0 0 1").code == 1);
}

TEST_CASE("render and reproduce") {
  const auto good = write_temp("good.json", kFpf);
  const auto a = run("render " + good + " --depth 1 --no-timestamp");
  const auto b = run("render " + good + " --depth 1 --no-timestamp");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run("render " + good + " --depth 9").code == 2);
  CHECK(run("reproduce 3.2").code == 0);
  CHECK(run("reproduce 3.1 --genus 3").code == 0);
}
