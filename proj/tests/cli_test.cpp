#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "process.hpp"
#include "spheretri/plane_map.hpp"
#include "spheretri/text_format.hpp"
#include "support.hpp"

namespace spheretri {
namespace {

namespace fs = std::filesystem;
using testing::cli;
using testing::run_command;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("spheretri_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write_input(const std::string& text) {
    const auto path = dir_ / "input.rot";
    std::ofstream(path) << text;
    return path.string();
  }

  fs::path dir_;
};

TEST_F(CliTest, EnumeratePrintsCounts) {
  const auto r = run_command(cli("enumerate --max-n 8"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output, "n mu(n)\n4 1\n5 1\n6 2\n7 5\n8 14\n");
}

TEST_F(CliTest, EnumerateWritesFiles) {
  ASSERT_EQ(run_command(cli("enumerate --max-n 6 --out " + dir_.string())).exit_code, 0);
  std::ifstream four(dir_ / "triangulations_n4.rot");
  std::string line;
  ASSERT_TRUE(std::getline(four, line));
  EXPECT_TRUE(is_isomorphic(parse_rotation_text(line), tetrahedron()));

  std::ifstream six(dir_ / "triangulations_n6.rot");
  std::size_t lines = 0;
  while (std::getline(six, line)) ++lines;
  EXPECT_EQ(lines, 2u);

  ASSERT_EQ(run_command(cli("enumerate --max-n 5 --format dot --out " + dir_.string())).exit_code, 0);
  std::stringstream dot;
  dot << std::ifstream(dir_ / "triangulations_n5.dot").rdbuf();
  EXPECT_NE(dot.str().find("graph T5_1 {"), std::string::npos);
}

TEST_F(CliTest, EnumerateRejectsLargeOrders) {
  const auto r = run_command(cli("enumerate --max-n 12 2>&1"));
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.output.find("n < 12"), std::string::npos);
  EXPECT_EQ(run_command(cli("enumerate --max-n 3 2>&1")).exit_code, 2);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run_command(cli("2>&1")).exit_code, 2);
  EXPECT_EQ(run_command(cli("enumerate 2>&1")).exit_code, 2);
  EXPECT_EQ(run_command(cli("enumerate --max-n 5 --format png 2>&1")).exit_code, 2);
  EXPECT_EQ(run_command(cli("color --in /nonexistent/file 2>&1")).exit_code, 2);
  const auto in = write_input(to_rotation_text(tetrahedron()) + "\n");
  EXPECT_EQ(run_command(cli("color --count --list --in " + in + " 2>&1")).exit_code, 2);
}

TEST_F(CliTest, ColorCounts) {
  const auto in = write_input("# octahedron, then the other six-vertex triangulation\n" +
                              to_rotation_text(octahedron()) + "\n\n" +
                              to_rotation_text(testing::named("G6,2")) + "\n");
  const auto r = run_command(cli("color --count --in " + in));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output, "line 2: n=6 colorings=4\nline 4: n=6 colorings=1\n");
}

TEST_F(CliTest, ColorListAndSummaries) {
  const auto in = write_input(to_rotation_text(octahedron()) + "\n");
  const auto r = run_command(cli("color --list --summaries --in " + in));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("  coloring 4: 0-1:"), std::string::npos);
  EXPECT_NE(r.output.find("r[4c] g[4c] b[4c]"), std::string::npos);
  EXPECT_EQ(r.output.find("coloring 5:"), std::string::npos);
}

TEST_F(CliTest, ColorReportsBadLine) {
  const auto in = write_input(to_rotation_text(tetrahedron()) + "\n4 | 0: 1,3,2 | 1: 0,3,2 | 2: 0,1,3 | 3: 0,2,1\n");
  const auto r = run_command(cli("color --in " + in + " 2>&1"));
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.output.find("line 2"), std::string::npos);
}

TEST_F(CliTest, VerifyIsByteIdentical) {
  const auto a = run_command(cli("verify"));
  const auto b = run_command(cli("verify --paper"));
  EXPECT_EQ(a.output, b.output);
  EXPECT_EQ(a.exit_code, b.exit_code);
  // Four stated colouring counts disagree with the renaming-only count.
  EXPECT_EQ(a.exit_code, 1);
  EXPECT_NE(a.output.find("33 checks, 4 failed"), std::string::npos);
  EXPECT_NE(a.output.find("PASS  count  mu(8) = 14"), std::string::npos);
}

}  // namespace
}  // namespace spheretri
