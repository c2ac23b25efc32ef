#include <gtest/gtest.h>
#include <nlohmann/json.hpp>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(LENS_SCATTER_BIN) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / ("lens-cli-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

std::string bump_metric_file() {
  const fs::path p = scratch_dir() / "bump.json";
  std::ofstream(p) << R"({"kind": "radial-profile", "profile": [[0, 1.3], [0.25, 1.28125], [0.5, 1.225], [0.75, 1.13125], [1, 1]]})";
  return p.string();
}

}  // namespace

TEST(Cli, Version) {
  const CliRun r = run("--version");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("lens-scatter ", 0), 0u);
}

TEST(Cli, ParseErrorsExitTwo) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("compare --tol -1").status, 2);
  EXPECT_EQ(run("scatter --grid 63").status, 2);
  EXPECT_EQ(run("trace --metric nowhere.json").status, 2);
  EXPECT_EQ(run("invariant --curve rose-2").status, 2);
}

TEST(Cli, CompareExitCodes) {
  EXPECT_EQ(run("compare --m1 vacuum --m2 eaton --grid 4x4 --expect-equal").status, 0);
  EXPECT_EQ(run("compare --m1 vacuum --m2 " + bump_metric_file() + " --grid 4x4 --expect-equal").status, 1);
  EXPECT_EQ(run("compare --m1 vacuum --m2 " + bump_metric_file() + " --grid 4x4").status, 0);
}

TEST(Cli, InvariantReports) {
  const CliRun lem = run("invariant --curve lemniscate");
  ASSERT_EQ(lem.status, 0);
  const auto j = nlohmann::json::parse(lem.out);
  EXPECT_EQ(j["command"], "invariant");
  EXPECT_EQ(j["windings"]["theta"], 0);
  EXPECT_EQ(j["crossings"].size(), 1u);
  EXPECT_EQ(j["W"], nlohmann::json::parse(R"({"2": 1})"));
  EXPECT_EQ(j["certificate"]["kind"], "nonzero_invariant");

  const auto c = nlohmann::json::parse(run("invariant --curve circle").out);
  EXPECT_EQ(c["windings"]["line"], 2);
  EXPECT_TRUE(c["W"].empty());
  EXPECT_EQ(c["certificate"]["kind"], "non_contractible");
}

TEST(Cli, WritesFiles) {
  const fs::path dir = scratch_dir();
  const fs::path json = dir / "trace.json", svg = dir / "rays.svg", csv = dir / "stages.csv";
  ASSERT_EQ(run("trace --metric eaton --arc 0.1 --angle 1.2 -o " + json.string() + " --emit-svg " + svg.string()).status, 0);
  EXPECT_FALSE(nlohmann::json::parse(std::ifstream(json))["path"]["exit"].is_null());
  std::ifstream s(svg);
  std::string head;
  std::getline(s, head);
  EXPECT_NE(head.find("<svg"), std::string::npos);
  ASSERT_EQ(run("approx-pl --curve lemniscate --eps 0.2 --report " + csv.string()).status, 0);
  EXPECT_TRUE(fs::file_size(csv) > 0);
}

TEST(Cli, ReportsAreDeterministic) {
  for (const std::string args : {"trace --metric eaton --arc 0.3 --angle 0.9", "scatter --metric eaton --grid 4x4",
                                 "compare --m1 vacuum --m2 eaton --grid 4x4", "eaton --check index --radii 100",
                                 "invariant --curve rose-3", "approx-pl --curve lemniscate --eps 0.3",
                                 "render --metric eaton"}) {
    const CliRun a = run(args), b = run(args);
    EXPECT_EQ(a.status, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_FALSE(a.out.empty()) << args;
  }
}
