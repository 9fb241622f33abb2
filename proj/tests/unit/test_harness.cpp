#include <gtest/gtest.h>

#include <atomic>

#include <typedmatrices/typedmatrices.hpp>

using namespace tmat;

namespace {

double entry_sum(const MatrixHandle& h) {
  double s = 0;
  for (std::size_t i = 1; i <= h.rows(); ++i)
    for (std::size_t j = 1; j <= h.cols(); ++j) s += h.element(i, j).to_double();
  return s;
}

HarnessOptions ignoring(std::vector<std::size_t> sizes) {
  HarnessOptions o;
  o.sizes = std::move(sizes);
  o.policy.ignore_errors = true;
  return o;
}

}  // namespace

TEST(FeasibleSize, PoissonNeedsPerfectSquares) {
  EXPECT_EQ(feasible_size("poisson", 4)->integer("n"), 2);
  EXPECT_FALSE(feasible_size("poisson", 3));
  EXPECT_EQ(feasible_size("poisson", 1)->integer("n"), 1);
  EXPECT_EQ(feasible_size("hilbert", 7)->integer("n"), 7);
  EXPECT_FALSE(feasible_size("hilbert", 0));
}

TEST(Harness, MinijSums) {
  auto opts = ignoring({1, 2, 3, 4});
  opts.exclude = builtin_family_ids();
  std::erase(opts.exclude, "minij");
  const auto recs = test_algorithm(entry_sum, opts);
  ASSERT_EQ(recs.size(), 4u);
  const double want[] = {1, 5, 14, 30};
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_EQ(recs[k].family, "minij");
    EXPECT_EQ(recs[k].size, k + 1);
    EXPECT_EQ(recs[k].value(), want[k]);
  }
}

TEST(Harness, RecordCountMatchesIndependentEnumeration) {
  const std::vector<std::size_t> sizes = {1, 2, 3, 4};
  const auto recs = test_algorithm([](const MatrixHandle& h) { return h.rows(); }, ignoring(sizes));
  // [DERIVED] every family is feasible at every size except poisson, which
  // only has instances of perfect-square size.
  std::size_t want = 0;
  for (const auto& id : builtin_family_ids())
    for (auto s : sizes) want += (id != "poisson" || s == 1 || s == 4);
  EXPECT_EQ(recs.size(), want);
  for (const auto& r : recs) EXPECT_EQ(r.value(), r.size);
}

TEST(Harness, DetPositiveOverSymmetricPosdef) {
  HarnessOptions opts;
  opts.sizes = {4};
  opts.props = {PropertyTag::symmetric, PropertyTag::posdef};
  const auto recs = test_algorithm([](const MatrixHandle& h) { return determinant(h).to_double() > 0; }, opts);
  std::vector<std::string> ids;
  for (const auto& r : recs) {
    ids.push_back(r.family);
    EXPECT_TRUE(r.value()) << r.family;
  }
  EXPECT_EQ(ids, (std::vector<std::string>{"hilbert", "inversehilbert", "cauchy", "minij", "lehmer", "pei", "pascal",
                                           "kms", "moler", "poisson"}));
}

TEST(Harness, StrictPolicyAbortsWithContext) {
  HarnessOptions opts;
  opts.sizes = {2};
  opts.groups = {"builtin"};
  try {
    (void)test_algorithm(entry_sum, opts);
    FAIL() << "expected HarnessError";
  } catch (const HarnessError& e) {
    EXPECT_EQ(e.family(), "poisson");
    EXPECT_EQ(e.size(), 2u);
  }
}

TEST(Harness, WarningsPolicyRecordsAndContinues) {
  HarnessOptions opts;
  opts.sizes = {1, 2, 3, 4};
  opts.policy.errors_as_warnings = true;
  std::vector<std::string> warnings;
  opts.warning_sink = [&](const std::string& m) { warnings.push_back(m); };
  const auto recs = test_algorithm(
      [](const MatrixHandle& h) {
        if (h.rows() == 3) throw ArgumentError("no threes");
        return 1;
      },
      opts);
  std::size_t warned = 0;
  for (const auto& r : recs)
    if (!r.ok()) {
      ++warned;
      EXPECT_NE(r.warning().message.find(r.family), std::string::npos);
    }
  EXPECT_EQ(warned, warnings.size());
  // 18 families fail at n = 3 and poisson fails at sizes 2 and 3.
  EXPECT_EQ(warned, 18u + 2u);
}

TEST(Harness, IgnoreWinsOverWarnings) {
  HarnessOptions opts;
  opts.sizes = {1, 2, 3, 4};
  opts.policy = {true, true};
  std::size_t warnings = 0;
  opts.warning_sink = [&](const std::string&) { ++warnings; };
  const auto none = test_algorithm([](const MatrixHandle&) -> int { throw ArgumentError("always"); }, opts);
  EXPECT_TRUE(none.empty());
  EXPECT_EQ(warnings, 0u);

  auto minij_only = ignoring({1, 2, 3, 4});
  minij_only.props = {PropertyTag::symmetric, PropertyTag::eigen, PropertyTag::posdef, PropertyTag::integer};
  minij_only.exclude = {"pascal", "poisson"};
  const auto recs = test_algorithm(
      [](const MatrixHandle& h) {
        if (h.rows() == 3) throw ArgumentError("no threes");
        return h.rows();
      },
      minij_only);
  std::vector<std::size_t> sizes;
  for (const auto& r : recs) sizes.push_back(r.size);
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 2, 4}));
}

TEST(Harness, ParallelMatchesSequential) {
  auto seq = ignoring({1, 2, 3, 4, 5});
  auto par = seq;
  par.parallel = true;
  std::atomic<int> calls{0};
  auto fn = [&](const MatrixHandle& h) {
    ++calls;
    return entry_sum(h);
  };
  EXPECT_EQ(test_algorithm(fn, seq), test_algorithm(fn, par));
  EXPECT_GT(calls.load(), 0);
}

TEST(Harness, DenseWrapperAndValidation) {
  auto opts = ignoring({3});
  opts.props = {PropertyTag::totpos};
  const auto recs = test_algorithm(on_dense([](const DenseMatrix& a) { return a.rows() * a.cols(); }), opts);
  ASSERT_EQ(recs.size(), 2u);  // hilbert, pascal
  EXPECT_EQ(recs[0].value(), 9u);
  HarnessOptions empty;
  EXPECT_THROW(test_algorithm(entry_sum, empty), ArgumentError);
  empty.sizes = {0};
  EXPECT_THROW(test_algorithm(entry_sum, empty), ArgumentError);
}
