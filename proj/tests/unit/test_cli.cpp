#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = r3::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Golden file layout: line 1 is a JSON array of arguments, line 2 is
// "exit: <code>", the rest is the expected standard output.
struct Golden {
  std::vector<std::string> args;
  int code = 0;
  std::string out;
};

Golden load(const fs::path& path) {
  std::ifstream in(path);
  Golden g;
  std::string line;
  std::getline(in, line);
  g.args = nlohmann::json::parse(line).get<std::vector<std::string>>();
  std::getline(in, line);
  g.code = std::stoi(line.substr(line.find(':') + 1));
  std::ostringstream rest;
  rest << in.rdbuf();
  g.out = rest.str();
  return g;
}

std::vector<fs::path> golden_files() {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(R3_GOLDEN_DIR))
    if (e.path().extension() == ".golden") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace

TEST(Cli, GoldenFiles) {
  const auto files = golden_files();
  ASSERT_FALSE(files.empty());
  for (const auto& f : files) {
    SCOPED_TRACE(f.filename().string());
    const Golden g = load(f);
    const Outcome o = run(g.args);
    EXPECT_EQ(o.code, g.code) << o.err;
    EXPECT_EQ(o.out, g.out);
  }
}

TEST(Cli, SpecExamples) {
  EXPECT_EQ(run({"split", "e1"}).out, "(-e23 | e23)\n");
  EXPECT_EQ(run({"cone-check", "e123"}).out, "false\n");
  const Outcome d = run({"det", "--matrix", "[[e1, e2+e23],[-1, e2]]"});
  EXPECT_EQ(d.code, 0);
  EXPECT_EQ(d.out.rfind("1.7320508", 0), 0u);
}

TEST(Cli, ExitCodes) {
  const Outcome p = run({"split", "e1 + e5"});
  EXPECT_EQ(p.code, 2);
  EXPECT_NE(p.err.find('^'), std::string::npos);

  const Outcome d = run({"eval", "--stem", "identity", "--at", "e123"});
  EXPECT_EQ(d.code, 1);
  EXPECT_NE(d.err.find("NotInCone"), std::string::npos);

  EXPECT_EQ(run({"mult", "--factored", "coeffs: [1, 0, 1]", "--sphere", "0,1"}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"det"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, RecordsAreOneJsonObjectPerLine) {
  const std::vector<std::vector<std::string>> commands = {
      {"split", "e2+e23"},
      {"cone-check", "e1"},
      {"eval", "--poly", "x^2", "--at", "e1"},
      {"star", "--left", "(x - e12)", "--right", "(x - e23)", "--at", "2"},
      {"roots", "--factored", "(x - e12)*(x - e23)"},
      {"mult", "--factored", "(x - e1)*(x - e23)", "--sphere", "0,1"},
      {"det", "--matrix", "[[e1, e2+e23],[-1, e2]]"},
      {"cauchy-verify", "--poly", "x^3", "--at", "0.5e1"},
      {"dbar-check", "--stem", "monomial:3", "--at", "0.3 + 0.4e1"},
      {"kernel", "--source", "3", "--at", "e1"},
  };
  for (auto args : commands) {
    args.insert(args.begin(), {"--output", "records"});
    const Outcome o = run(args);
    ASSERT_EQ(o.code, 0) << args[2] << ": " << o.err;
    std::istringstream lines(o.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
      const auto j = nlohmann::json::parse(line);
      EXPECT_TRUE(j.is_object());
      EXPECT_EQ(j.at("command"), args[2]);
      ++count;
    }
    EXPECT_EQ(count, 1);
  }
}

TEST(Cli, RecordsCarryFullPrecision) {
  const Outcome o = run({"--output", "records", "det", "--matrix", "[[e1, e2+e23],[-1, e2]]"});
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_NEAR(j.at("det").get<double>(), std::sqrt(3.0), 1e-15);
}
