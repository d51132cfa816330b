#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "eucdom/cli.hpp"
#include "support/reference_data.hpp"

using namespace eucdom;
using namespace eucdom::testing;

namespace {

struct Outcome {
  int status;
  std::string out, err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "eucdom");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("eucdom_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST(Cli, TableReproducesReferenceDistances) {
  const auto r = run_cli({"table", "--k", "4", "--format", "tsv"});
  ASSERT_EQ(r.status, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line.substr(0, 6), "s\td2\td");
  for (int s = 1; s <= 8; ++s) {
    ASSERT_TRUE(std::getline(lines, line));
    std::string expected = std::to_string(s);
    for (int d : kDistanceRowsK4[s - 1]) expected += "\t" + std::to_string(d);
    EXPECT_EQ(line, expected);
  }
  EXPECT_FALSE(std::getline(lines, line));
}

TEST(Cli, TextTableHasOneRowPerDeletedVoter) {
  const auto r = run_cli({"table", "--k", "4"});
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("E_1  15   2   3"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("E_8"), std::string::npos);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 9);
}

TEST_F(CliFiles, RecognizeSmallExample) {
  const auto file = write("small.profile", kSmallNonEuclidean);
  const auto r = run_cli({"recognize", file});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("single-peaked: yes"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("axis: 1 2 3 4 5 6"), std::string::npos);
  EXPECT_NE(r.out.find("single-crossing: yes\n  order: v1 v2 v3"), std::string::npos);
  EXPECT_NE(r.out.find("euclidean: NO"), std::string::npos);
  EXPECT_LT(r.out.find("single-peaked"), r.out.find("single-crossing"));
  EXPECT_LT(r.out.find("single-crossing"), r.out.find("euclidean"));
}

TEST_F(CliFiles, RecognizeEuclideanPrintsEmbedding) {
  const auto file = write("line.profile", "3 2\n2 1 3\n3 2 1\n");
  const auto r = run_cli({"recognize", file});
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("euclidean: yes"), std::string::npos);
  EXPECT_NE(r.out.find("  EMBED 3 2"), std::string::npos);
}

TEST_F(CliFiles, GenerateEmbedVerifyPipeline) {
  ASSERT_EQ(run_cli({"generate", "--k", "4", "-o", path("p4.profile")}).status, 0);
  ASSERT_EQ(parse_profile(slurp(path("p4.profile"))), family::gen_profile(4));
  const auto minus = delete_voter(parse_profile(slurp(path("p4.profile"))), 1);
  const auto profile = write("p4_minus_v1.profile", serialize_profile(minus));
  ASSERT_EQ(run_cli({"embed", "--k", "4", "--s", "1", "-o", path("e4_s1.embed")}).status, 0);
  const auto r = run_cli({"verify", profile, path("e4_s1.embed")});
  EXPECT_EQ(r.status, 0) << r.out << r.err;
  EXPECT_EQ(r.out, "OK\n");
  EXPECT_EQ(run_cli({"verify", profile, path("e4_s1.embed"), "--mode", "reduced"}).out, "OK\n");
}

TEST_F(CliFiles, VerifyReportsViolations) {
  const auto profile = write("p.profile", serialize_profile(delete_voter(family::gen_profile(4), 2)));
  const auto embed = write("e.embed", serialize_embedding(family::gen_embedding(4, 2)));
  const auto good = run_cli({"verify", profile, embed});
  EXPECT_EQ(good.status, 0);
  const auto wrong = write("w.embed", "EMBED 3 1\nA 1 0\nA 2 1\nA 3 2\nV 1 0\n");
  const auto small = write("s.profile", "3 1\n3 2 1\n");
  const auto r = run_cli({"verify", small, wrong});
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.out.substr(0, 13), "VIOLATIONS 3\n");
  EXPECT_NE(r.out.find("v1: prefers 3 over 2"), std::string::npos) << r.out;
}

TEST_F(CliFiles, Witness) {
  const auto sp = write("sp.profile", "3 3\n2 3 1\n1 3 2\n1 2 3\n");
  const auto r = run_cli({"witness", sp, "--property", "sp"});
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.out, "Triple\n  voters: v1 v2 v3\n  alternatives: 1 2 3\n");
  const auto none = run_cli({"witness", write("ok.profile", kSmallNonEuclidean), "--property", "sc"});
  EXPECT_EQ(none.status, 0);
  EXPECT_EQ(none.out, "NONE\n");
}

TEST(Cli, Minimality) {
  const auto r = run_cli({"minimality", "--k", "2"});
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("full profile euclidean: NO, certificates valid"), std::string::npos);
  EXPECT_NE(r.out.find("minimal non-euclidean: confirmed"), std::string::npos);
}

TEST(Cli, Deterministic) {
  EXPECT_EQ(run_cli({"generate", "--k", "5"}).out, run_cli({"generate", "--k", "5"}).out);
  EXPECT_EQ(run_cli({"embed", "--k", "5", "--s", "3"}).out, run_cli({"embed", "--k", "5", "--s", "3"}).out);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run_cli({}).status, 2);
  EXPECT_EQ(run_cli({"bogus"}).status, 2);
  EXPECT_EQ(run_cli({"table"}).status, 2);
  EXPECT_EQ(run_cli({"table", "--k", "1"}).status, 2);
  EXPECT_EQ(run_cli({"embed", "--k", "4", "--s", "9"}).status, 2);
  EXPECT_EQ(run_cli({"witness", "x", "--property", "ep"}).status, 2);
  const auto missing = run_cli({"recognize", "/nonexistent/file.profile"});
  EXPECT_EQ(missing.status, 2);
  EXPECT_TRUE(missing.out.empty());
  EXPECT_NE(missing.err.find("cannot open"), std::string::npos);
}

TEST_F(CliFiles, MalformedInputReportsLine) {
  const auto bad = write("bad.profile", "3 2\n1 2 3\n1 2 2\n");
  const auto r = run_cli({"recognize", bad});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}

TEST(Cli, HelpExitsZero) {
  const auto r = run_cli({"--help"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("recognize"), std::string::npos);
}
