#include <gtest/gtest.h>

#include <map>
#include <sstream>
#include <string>

#include <typedmatrices/typedmatrices.hpp>

#include "support/oracles.hpp"

using namespace tmat;

namespace {

// [DERIVED] Hand-evaluated n = 4 instances of every builtin family at its
// default parameters, written out from each family's defining formula.
// Rows are separated by ';', entries by spaces.
const std::map<std::string, std::string> kFixtures = {
    {"hilbert", "1 1/2 1/3 1/4; 1/2 1/3 1/4 1/5; 1/3 1/4 1/5 1/6; 1/4 1/5 1/6 1/7"},
    {"inversehilbert", "16 -120 240 -140; -120 1200 -2700 1680; 240 -2700 6480 -4200; -140 1680 -4200 2800"},
    {"cauchy", "1/2 1/3 1/4 1/5; 1/3 1/4 1/5 1/6; 1/4 1/5 1/6 1/7; 1/5 1/6 1/7 1/8"},
    {"minij", "1 1 1 1; 1 2 2 2; 1 2 3 3; 1 2 3 4"},
    {"clement", "0 1 0 0; 3 0 2 0; 0 2 0 3; 0 0 1 0"},
    {"lehmer", "1 1/2 1/3 1/4; 1/2 1 2/3 1/2; 1/3 2/3 1 3/4; 1/4 1/2 3/4 1"},
    {"pei", "2 1 1 1; 1 2 1 1; 1 1 2 1; 1 1 1 2"},
    {"pascal", "1 1 1 1; 1 2 3 4; 1 3 6 10; 1 4 10 20"},
    {"kms", "1 1/2 1/4 1/8; 1/2 1 1/2 1/4; 1/4 1/2 1 1/2; 1/8 1/4 1/2 1"},
    {"moler", "1 -1 -1 -1; -1 2 0 0; -1 0 3 1; -1 0 1 4"},
    {"forsythe", "0 1 0 0; 0 0 1 0; 0 0 0 1; 1e-10 0 0 0"},
    {"jordbloc", "1 1 0 0; 0 1 1 0; 0 0 1 1; 0 0 0 1"},
    {"frank", "4 3 2 1; 3 3 2 1; 0 2 2 1; 0 0 1 1"},
    {"lotkin", "1 1 1 1; 1/2 1/3 1/4 1/5; 1/3 1/4 1/5 1/6; 1/4 1/5 1/6 1/7"},
    {"grcar", "1 1 1 1; -1 1 1 1; 0 -1 1 1; 0 0 -1 1"},
    {"wilkinson", "3/2 1 0 0; 1 1/2 1 0; 0 1 1/2 1; 0 0 1 3/2"},
    {"companion", "0 1 0 0; 0 0 1 0; 0 0 0 1; -1 -1 -1 -1"},
    {"triw", "1 -1 -1 -1; 0 1 -1 -1; 0 0 1 -1; 0 0 0 1"},
};

// poisson(2) is the 4 x 4 instance; poisson(4) is 16 x 16 and is checked
// against the Kronecker-sum oracle below.
const char* kPoisson2 = "4 -1 -1 0; -1 4 0 -1; -1 0 4 -1; 0 -1 -1 4";

std::vector<std::vector<Scalar>> parse_grid(const std::string& text) {
  std::vector<std::vector<Scalar>> rows;
  std::stringstream all(text);
  for (std::string row; std::getline(all, row, ';');) {
    std::istringstream cells(row);
    std::vector<Scalar> r;
    for (std::string cell; cells >> cell;) r.push_back(Scalar::parse(cell));
    rows.push_back(std::move(r));
  }
  return rows;
}

void expect_matches(const MatrixHandle& h, const std::string& grid) {
  const auto want = parse_grid(grid);
  ASSERT_EQ(h.rows(), want.size()) << h.label();
  for (std::size_t i = 0; i < want.size(); ++i) {
    ASSERT_EQ(h.cols(), want[i].size()) << h.label();
    for (std::size_t j = 0; j < want[i].size(); ++j) {
      const Scalar got = h.element(i + 1, j + 1);
      if (h.kind() == ScalarKind::rational64) {
        EXPECT_EQ(got.to_rational(), want[i][j].to_rational()) << h.label() << " at " << i + 1 << "," << j + 1;
      } else {
        EXPECT_EQ(got.to_double(), want[i][j].to_double()) << h.label() << " at " << i + 1 << "," << j + 1;
      }
    }
  }
}

std::pair<std::size_t, std::size_t> dims_of(std::size_t m, std::size_t n) { return {m, n}; }

}  // namespace

TEST(Catalog, NineteenFamiliesInCatalogOrder) {
  const auto ids = list_families();
  ASSERT_EQ(ids.size(), 19u);
  EXPECT_EQ(ids.front(), "hilbert");
  EXPECT_EQ(ids.back(), "triw");
  EXPECT_EQ(ids, builtin_family_ids());
}

class FamilyFixture : public ::testing::TestWithParam<std::string> {};

TEST_P(FamilyFixture, MatchesHandEvaluatedInstance) {
  const std::string id = GetParam();
  const MatrixHandle h = construct(id, {{"n", std::int64_t{4}}});
  expect_matches(h, kFixtures.at(id));
  // The dense copy agrees with the element formula.
  const DenseMatrix a = h.materialize();
  for (std::size_t i = 1; i <= 4; ++i)
    for (std::size_t j = 1; j <= 4; ++j) EXPECT_EQ(a.at(i, j), h.element(i, j));
}

INSTANTIATE_TEST_SUITE_P(Builtin, FamilyFixture,
                         ::testing::Values("hilbert", "inversehilbert", "cauchy", "minij", "clement", "lehmer", "pei",
                                           "pascal", "kms", "moler", "forsythe", "jordbloc", "frank", "lotkin",
                                           "grcar", "wilkinson", "companion", "triw"),
                         [](const auto& info) { return info.param; });

TEST(Poisson, SmallInstanceAndKroneckerSum) {
  expect_matches(poisson(2), kPoisson2);
  // [DERIVED] I (x) T + T (x) I with T = tridiag(-1, 2, -1), k = 4.
  const std::size_t k = 4;
  auto t = [](std::size_t a, std::size_t b) { return a == b ? 2 : (a + 1 == b || b + 1 == a ? -1 : 0); };
  const MatrixHandle h = poisson(k);
  ASSERT_EQ(h.dims(), std::make_pair(k * k, k * k));
  for (std::size_t r = 0; r < k * k; ++r)
    for (std::size_t c = 0; c < k * k; ++c) {
      const std::size_t r1 = r / k, r2 = r % k, c1 = c / k, c2 = c % k;
      const int want = (r1 == c1 ? t(r2, c2) : 0) + (r2 == c2 ? t(r1, c1) : 0);
      EXPECT_EQ(h.element(r + 1, c + 1), Scalar(want)) << r << "," << c;
    }
}

TEST(Families, DimensionsAndElements) {
  EXPECT_EQ(hilbert(3).dims(), dims_of(3, 3));
  EXPECT_EQ(hilbert(2, 5).dims(), dims_of(2, 5));
  EXPECT_EQ(poisson(3).dims(), dims_of(9, 9));
  EXPECT_EQ(hilbert(3).element(2, 3), Scalar(Rational(1, 4)));
  EXPECT_EQ(minij(4).element(2, 3), Scalar(2));
  EXPECT_EQ(inversehilbert(3).element(1, 2), Scalar(-36));
  EXPECT_THROW(hilbert(3).element(4, 1), BoundsError);
  EXPECT_THROW(hilbert(3).element(0, 1), BoundsError);
}

TEST(Families, DefaultKinds) {
  EXPECT_EQ(hilbert(3).kind(), ScalarKind::rational64);
  EXPECT_EQ(hilbert(3).label(), "hilbert(3x3, rational64)");
  EXPECT_EQ(cauchy(3).kind(), ScalarKind::float64);
  EXPECT_EQ(cauchy(3, ScalarKind::rational64).element(1, 1), Scalar(Rational(1, 2)));
  EXPECT_EQ(kms(3).kind(), ScalarKind::float64);
  EXPECT_EQ(pascal(3).kind(), ScalarKind::rational64);
}

TEST(Families, ConstructionValidation) {
  EXPECT_EQ(construct("hilbert", {{"m", std::int64_t{0}}, {"n", std::int64_t{0}}}).dims(),
            dims_of(0, 0));
  EXPECT_THROW(construct("hilbert", {{"m", std::int64_t{-1}}}), ArgumentError);
  EXPECT_THROW(construct("minij", {}), ArgumentError);
  EXPECT_THROW(construct("minij", {{"n", std::int64_t{3}}, {"bogus", std::int64_t{1}}}), ArgumentError);
  EXPECT_THROW(construct("nosuch", {{"n", std::int64_t{3}}}), LookupError);
  // Irrational entries cannot be stored exactly.
  EXPECT_THROW(clement(4, true, ScalarKind::rational64), ArgumentError);
}

TEST(Families, Parameters) {
  expect_matches(pei(3, 2), "3 1 1; 1 3 1; 1 1 3");
  expect_matches(jordbloc(2, 0), "0 1; 0 0");
  expect_matches(clement(3, true), "0 1.4142135623730951 0; 1.4142135623730951 0 1.4142135623730951; 0 1.4142135623730951 0");
  expect_matches(cauchy({Scalar(1), Scalar(2)}, {Scalar(3), Scalar(5)}, ScalarKind::rational64), "1/4 1/6; 1/5 1/7");
  expect_matches(companion({Scalar(2), Scalar(3)}), "0 1; -2 -3");
  expect_matches(triw(3, 2, 1), "1 2 0; 0 1 2; 0 0 1");
  expect_matches(grcar(4, 1), "1 1 0 0; -1 1 1 0; 0 -1 1 1; 0 0 -1 1");
  expect_matches(moler(2, 2), "1 2; 2 5");
}

TEST(Families, SymmetricByConstruction) {
  for (const Family* f : FamilyRegistry::global().families()) {
    const auto& tags = f->descriptor.tags;
    if (std::find(tags.begin(), tags.end(), PropertyTag::symmetric) == tags.end()) continue;
    const MatrixHandle h = construct(*f, {{"n", std::int64_t{6}}});
    const DenseMatrix a = h.materialize();
    for (std::size_t i = 1; i <= a.rows(); ++i)
      for (std::size_t j = 1; j <= a.cols(); ++j) EXPECT_EQ(a.at(i, j), a.at(j, i)) << h.label();
  }
}

TEST(Footprint, HandleIsIndependentOfSize) {
  EXPECT_EQ(handle_footprint(hilbert(10)), handle_footprint(hilbert(1000000)));
  EXPECT_LE(handle_footprint(cauchy(1000)), 64u);
  EXPECT_EQ(hilbert(100, ScalarKind::float64).materialize().data_bytes(), 80000u);
  EXPECT_EQ(dense_footprint(cauchy(1000), ScalarKind::float64), 8000000u);
}

TEST(Registry, CustomFamilyRegistration) {
  FamilyRegistry reg;
  register_builtin_families(reg);
  EXPECT_EQ(reg.size(), 19u);
  Family dup = *reg.find("hilbert");
  EXPECT_THROW(reg.add(dup), LookupError);

  Family bad = dup;
  bad.descriptor.id = "shinyhilbert";
  bad.descriptor.capabilities = {Capability::closed_eigvals};  // no routine backs it
  EXPECT_THROW(reg.add(bad), ArgumentError);

  Family ok = dup;
  ok.descriptor.id = "hilbertcopy";
  reg.add(ok);
  EXPECT_EQ(reg.size(), 20u);
  EXPECT_EQ(reg.construct("hilbertcopy", {{"n", std::int64_t{2}}}).element(2, 2), Scalar(Rational(1, 3)));
}
