#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dynkin/cli.hpp"

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int status = dynkin::cli::run(args, in, out, err);
  return {status, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("dynkin_cli_test_" + name);
}

}  // namespace

TEST(Cli, ClassifyRankTwoHyperbolic) {
  const auto r = run({"classify", "--matrix", "2 -3; -2 2"});
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("kind=indefinite\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("hyperbolic=true\n"), std::string::npos);
  EXPECT_NE(r.out.find("compact=true\n"), std::string::npos);
  EXPECT_NE(r.out.find("symmetrizable=true\n"), std::string::npos);
  EXPECT_NE(r.out.find("root_lengths=2\n"), std::string::npos);
}

TEST(Cli, ClassifyReadsStdinAndFiles) {
  const auto from_stdin = run({"classify", "--input", "-"}, "2 -3\n-2 2\n");
  EXPECT_EQ(from_stdin.status, 0);
  const auto path = temp_path("matrix.txt");
  std::ofstream(path) << "# rank two\n2 -3\n-2 2\n";
  const auto from_file = run({"classify", "--input", path.string()});
  EXPECT_EQ(from_file.status, 0);
  EXPECT_EQ(from_file.out, from_stdin.out);
  EXPECT_EQ(run({"classify"}, "2 -3\n-2 2\n").out, from_stdin.out);
  std::filesystem::remove(path);
}

TEST(Cli, ClassifyJsonRoundTrips) {
  const auto r = run({"classify", "--format", "json", "--matrix", "2 -1 -1; -2 2 -2; -2 -1 2"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["kind"], "indefinite");
  EXPECT_EQ(j["symmetrizable"], false);
  EXPECT_TRUE(j["symmetrizer"].is_null());
  EXPECT_EQ(j["witness"]["cycle"], nlohmann::json({1, 2, 3, 1}));
  EXPECT_EQ(j["orbit_semantics"], "unverified");
  // the embedded matrix reclassifies to the same record
  const auto again = run({"classify", "--format", "json", "--input", "-"}, j.dump());
  ASSERT_EQ(again.status, 0) << again.err;
  EXPECT_EQ(nlohmann::json::parse(again.out), j);
}

TEST(Cli, ClassifyDecomposable) {
  const auto r = run({"classify", "--matrix", "2 -1 0; -1 2 0; 0 0 2"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("components=2"), std::string::npos) << r.out;
}

TEST(Cli, SymmetrizeWitnessExitsOne) {
  const auto r = run({"symmetrize", "--matrix", "2 -1 -1; -2 2 -2; -2 -1 2"});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("witness=(1,2,3,1)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("forward_product=-4"), std::string::npos);
  EXPECT_NE(r.out.find("reverse_product=-2"), std::string::npos);
}

TEST(Cli, SymmetrizeSuccess) {
  const auto r = run({"symmetrize", "--format", "json", "--matrix", "2 -1; -4 2"});
  EXPECT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["symmetrizer"], nlohmann::json({4, 1}));
  EXPECT_EQ(j["bilinear_form"], nlohmann::json({{8, -4}, {-4, 2}}));
}

TEST(Cli, Orbits) {
  const auto r = run({"orbits", "--matrix", "2 -1 0; -1 2 -2; 0 -1 2", "--height", "8"});
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("orbit_blocks={1,2} {3}"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("bruteforce_blocks={1,2} {3}"), std::string::npos) << r.out;
}

TEST(Cli, Extend) {
  const auto affine = run({"extend", "--mode", "affine", "--matrix", "2"});
  EXPECT_EQ(affine.status, 0) << affine.err;
  EXPECT_NE(affine.out.find("2 -2\n-2 2\n"), std::string::npos) << affine.out;

  const auto over = run({"extend", "--mode", "overextend", "--format", "json", "--matrix", "2 -2; -2 2"});
  EXPECT_EQ(over.status, 0) << over.err;
  const auto j = nlohmann::json::parse(over.out);
  EXPECT_EQ(j["rank"], 3);
  EXPECT_EQ(j["hyperbolic"], true);

  EXPECT_EQ(run({"extend", "--mode", "sideways", "--matrix", "2"}).status, 2);
  EXPECT_EQ(run({"extend", "--mode", "overextend", "--zero-vertex", "5", "--matrix", "2 -2; -2 2"}).status, 2);
  EXPECT_EQ(run({"extend", "--mode", "affine", "--matrix", "2 -2; -2 2"}).status, 1);
}

TEST(Cli, ErrorsAndUsage) {
  const auto parse = run({"classify", "--matrix", "2 -1; -4 3"});
  EXPECT_EQ(parse.status, 1);
  EXPECT_NE(parse.err.find("diagonal entry 3 at (2,2)"), std::string::npos) << parse.err;
  EXPECT_EQ(run({"classify", "--matrix", "2 -1; 0 2"}).status, 1);
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"frobnicate"}).status, 2);
  EXPECT_EQ(run({"classify", "--format", "yaml", "--matrix", "2"}).status, 2);
  EXPECT_EQ(run({"classify", "--input", "-", "--matrix", "2"}).status, 2);
  EXPECT_EQ(run({"classify", "--input", "/nonexistent/file"}).status, 1);
  EXPECT_EQ(run({"enumerate", "--min-rank", "2"}).status, 2);
  EXPECT_EQ(run({"verify-catalog"}).status, 2);
  EXPECT_EQ(run({"--help"}).status, 0);
}

TEST(Cli, EnumerateWriteVerifyAndDeterminism) {
  const auto path = temp_path("catalog.jsonl");
  const auto r = run({"enumerate", "--min-rank", "3", "--max-rank", "10", "--out", path.string()});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("total=238 symmetrizable=142\n"), std::string::npos) << r.out;

  std::ifstream first(path);
  std::stringstream first_text;
  first_text << first.rdbuf();

  const auto again = run({"enumerate", "--min-rank", "3", "--max-rank", "10", "--out", path.string(), "--jobs", "3"});
  ASSERT_EQ(again.status, 0);
  EXPECT_EQ(again.out, r.out);
  std::ifstream second(path);
  std::stringstream second_text;
  second_text << second.rdbuf();
  EXPECT_EQ(first_text.str(), second_text.str());

  setenv("DYNKIN_SEED", "5", 1);
  const auto v = run({"verify-catalog", "--in", path.string(), "--samples", "500"});
  unsetenv("DYNKIN_SEED");
  EXPECT_EQ(v.status, 0) << v.out;
  EXPECT_NE(v.out.find("seed 5"), std::string::npos) << v.out;
  EXPECT_NE(v.out.find("verification passed"), std::string::npos);

  // drop one record (and fix the header count): counts no longer match
  std::istringstream lines(first_text.str());
  std::string header, line, truncated;
  std::getline(lines, header);
  std::size_t kept = 0;
  std::string body;
  while (std::getline(lines, line))
    if (kept++ < 237) body += line + "\n";
  header.replace(header.find("238"), 3, "237");
  std::ofstream(path) << header << "\n" << body;
  EXPECT_EQ(run({"verify-catalog", "--in", path.string(), "--samples", "0"}).status, 3);
  std::filesystem::remove(path);
}

TEST(Cli, EnumerateFormatsAndOracle) {
  const auto tsv = temp_path("catalog.tsv");
  const auto r = run({"enumerate", "--min-rank", "3", "--max-rank", "4", "--out", tsv.string(), "--format", "tsv",
                      "--oracle"});
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("oracle rank=3 pruned=123 unpruned=123 match"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("oracle rank=4 pruned=53 unpruned=53 match"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("total=176 symmetrizable=84"), std::string::npos) << r.out;
  std::ifstream in(tsv);
  std::string head;
  std::getline(in, head);
  EXPECT_EQ(head.rfind("canonical_id\trank\tmatrix", 0), 0u);
  std::filesystem::remove(tsv);

  EXPECT_EQ(run({"enumerate", "--max-rank", "3", "--format", "xml"}).status, 2);
}
