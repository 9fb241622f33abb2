#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

#include <sumij/sumij.hpp>
#include <typedmatrices/typedmatrices.hpp>

#include "cli.hpp"

using namespace tmat;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  std::vector<std::string> lines() const {
    std::vector<std::string> v;
    std::istringstream in(out);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
  }
};

class Cli : public ::testing::Test {
 protected:
  Cli() {
    register_builtin_families(families);
    groups = std::make_unique<GroupRegistry>(families);
    sumij::install(families, *groups);
  }
  void SetUp() override {
    dir = std::filesystem::temp_directory_path() /
          ("tm_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir);
    ::setenv("TM_GROUP_DIR", dir.c_str(), 1);
  }
  void TearDown() override {
    std::filesystem::remove_all(dir);
    ::unsetenv("TM_GROUP_DIR");
  }

  Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "tm");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), families, *groups, out, err);
    return {code, out.str(), err.str()};
  }

  FamilyRegistry families;
  std::unique_ptr<GroupRegistry> groups;  // created once the builtins are registered
  std::filesystem::path dir;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_F(Cli, List) {
  EXPECT_EQ(run({"list"}).lines().size(), 19u);
  EXPECT_EQ(run({"list", "--prop", "symmetric", "--prop", "posdef", "--prop", "eigen"}).lines(),
            (std::vector<std::string>{"minij", "pascal", "poisson"}));
  EXPECT_EQ(run({"list", "--group", "user"}).lines(), std::vector<std::string>{"sumij"});
  const Result bad = run({"list", "--prop", "nosuch"});
  EXPECT_EQ(bad.code, cli::kDomainError);
  EXPECT_NE(bad.err.find("symmetric"), std::string::npos);
  EXPECT_EQ(run({"list", "--group", "nosuch"}).code, cli::kDomainError);
}

TEST_F(Cli, Show) {
  const Result h = run({"show", "hilbert", "3", "--type", "rat"});
  EXPECT_EQ(h.code, 0);
  EXPECT_EQ(h.out, "1\t1/2\t1/3\n1/2\t1/3\t1/4\n1/3\t1/4\t1/5\n");
  EXPECT_EQ(run({"show", "pei", "3", "--param", "alpha=2"}).out, "3\t1\t1\n1\t3\t1\n1\t1\t3\n");
  EXPECT_EQ(run({"show", "hilbert", "2", "--type", "f64"}).out, "1\t0.5\n0.5\t0.3333333333333333\n");
  EXPECT_EQ(run({"show", "sumij", "2"}).out, "2\t3\n3\t4\n");
  EXPECT_EQ(run({"show", "hilbert", "-1"}).code, cli::kUsageError);
  EXPECT_EQ(run({"show", "pei", "3", "--param", "beta=2"}).code, cli::kUsageError);
  EXPECT_EQ(run({"show", "pei", "3", "--param", "alpha=two"}).code, cli::kUsageError);
  EXPECT_EQ(run({"show", "hilbert", "3", "--type", "int"}).code, cli::kUsageError);
  EXPECT_EQ(run({"show", "nosuch", "3"}).code, cli::kDomainError);
  EXPECT_EQ(run({"show"}).code, cli::kUsageError);
  EXPECT_EQ(run({}).code, cli::kUsageError);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(Cli, Export) {
  const auto h = dir / "h.mtx";
  EXPECT_EQ(run({"export", "hilbert", "2", "--format", "mm-array", "-o", h.string()}).code, 0);
  EXPECT_EQ(slurp(h), slurp(std::filesystem::path(TM_FIXTURE_DIR) / "hilbert2.mtx"));
  const auto j = dir / "j.mtx";
  EXPECT_EQ(run({"export", "jordbloc", "3", "--param", "lambda=0", "--format", "mm-coordinate", "-o", j.string()}).code,
            0);
  EXPECT_EQ(slurp(j), "%%MatrixMarket matrix coordinate real general\n3 3 2\n1 2 1\n2 3 1\n");
  EXPECT_EQ(run({"export", "hilbert", "2", "--format", "mm-array"}).code, cli::kUsageError);
  EXPECT_EQ(run({"export", "hilbert", "2", "--format", "hb", "-o", h.string()}).code, cli::kUsageError);
  EXPECT_EQ(run({"export", "frank", "3", "--symmetric", "-o", h.string()}).code, cli::kDomainError);
}

TEST_F(Cli, Audit) {
  const Result all = run({"audit", "--group", "builtin", "--size", "4", "--size", "5"});
  EXPECT_EQ(all.code, 0) << all.err;
  for (const auto& line : all.lines()) {
    EXPECT_TRUE(line.find("\tpass") != std::string::npos || line.find("\tnot-checkable") != std::string::npos)
        << line;
  }
  const Result s = run({"audit", "--family", "sumij", "--size", "3"});
  EXPECT_EQ(s.code, 0);
  EXPECT_NE(s.out.find("sumij\t3\trankdef\tpass"), std::string::npos);
  const Result j = run({"audit", "--family", "jordbloc", "--size", "4", "--param", "lambda=0"});
  EXPECT_NE(j.out.find("nilpotent\tpass"), std::string::npos);
}

TEST_F(Cli, AuditOfMistaggedFamilyFails) {
  Family f = *families.find("minij");
  f.descriptor.id = "badminij";
  f.descriptor.tags = {PropertyTag::toeplitz};
  f.descriptor.capabilities = {};
  f.ops.eigvals = nullptr;
  f.ops.inverse = nullptr;
  f.ops.predicates = nullptr;
  families.add(f);
  const Result r = run({"audit", "--family", "badminij", "--size", "3"});
  EXPECT_EQ(r.code, cli::kDomainError);
  EXPECT_NE(r.out.find("badminij\t3\ttoeplitz\tfail"), std::string::npos);
}

TEST_F(Cli, Bench) {
  const Result r = run({"bench", "hilbert", "3", "--op", "det"});
  ASSERT_EQ(r.code, 0);
  std::istringstream fields(r.out);
  std::vector<std::string> f;
  for (std::string x; std::getline(fields, x, '\t');) f.push_back(x);
  ASSERT_EQ(f.size(), 8u);
  EXPECT_EQ(f[0], "hilbert");
  EXPECT_EQ(f[3], "lazy");
  EXPECT_EQ(f[4], "5");
  EXPECT_EQ(f[6], "0.000462962962962963");
  EXPECT_EQ(f[7], "1/2160\n");
  EXPECT_EQ(run({"bench", "hilbert", "3", "--reps", "2"}).code, cli::kUsageError);
  EXPECT_EQ(run({"bench", "hilbert", "3", "--op", "trace"}).code, cli::kUsageError);
}

TEST_F(Cli, Groups) {
  EXPECT_EQ(run({"group", "list"}).lines(), (std::vector<std::string>{"user", "builtin"}));
  const Result saved = run({"group", "save", "mygroup", "--add", "minij"});
  EXPECT_EQ(saved.code, 0) << saved.err;
  EXPECT_EQ(slurp(dir / "mygroup.grp"), "typedmatrices-group v1\nminij\n");
  const Result loaded = run({"group", "load", "mynewgroup", (dir / "mygroup.grp").string()});
  EXPECT_EQ(loaded.out, "minij\n");
  EXPECT_EQ(run({"group", "show", "mynewgroup"}).out, "minij\n");
  {
    std::ofstream bad(dir / "bad.grp");
    bad << "typedmatrices-group v1\nwathen\n";
  }
  const Result b = run({"group", "load", "bad", (dir / "bad.grp").string()});
  EXPECT_EQ(b.code, cli::kDomainError);
  EXPECT_NE(b.err.find("wathen"), std::string::npos);
  EXPECT_EQ(run({"group", "save", "builtin", "-o", (dir / "x.grp").string(), "--add", "minij"}).code,
            cli::kDomainError);
}

TEST_F(Cli, GroupsResolveFromGroupDirectory) {
  {
    std::ofstream g(dir / "saved.grp");
    g << "typedmatrices-group v1\nkms\npascal\n";
  }
  EXPECT_EQ(run({"list", "--group", "saved"}).lines(), (std::vector<std::string>{"pascal", "kms"}));
}

TEST_F(Cli, Harness) {
  const Result r = run({"harness", "--fn", "sum", "--size", "1", "--size", "2", "--size", "3", "--size", "4",
                        "--prop", "eigen", "--prop", "inverse", "--prop", "integer", "--exclude", "pascal",
                        "--ignore-errors"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.lines(), (std::vector<std::string>{"minij\t1\t1", "minij\t2\t5", "minij\t3\t14", "minij\t4\t30"}));
  const Result strict = run({"harness", "--fn", "sum", "--size", "2", "--prop", "sparse"});
  EXPECT_EQ(strict.code, cli::kDomainError);
  const Result warn = run({"harness", "--fn", "sum", "--size", "2", "--prop", "sparse", "--prop", "eigen", "--warn"});
  EXPECT_EQ(warn.code, 0);
  EXPECT_EQ(warn.lines().size(), 1u);
  EXPECT_EQ(warn.lines()[0].rfind("poisson\t2\twarning\t", 0), 0u);
  EXPECT_NE(warn.err.find("warning:"), std::string::npos);
}
