#include "pglsym/verify.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace pglsym;
using testing_support::census;

namespace {

void expect_all_pass(const VerificationReport &r) {
  EXPECT_FALSE(r.checks.empty());
  for (const auto &c : r.checks)
    EXPECT_TRUE(c.passed) << r.triangulation << " n=" << r.n << " " << c.id << ": " << c.details;
}

} // namespace

class Census : public ::testing::TestWithParam<std::tuple<std::string, int>> {};

TEST_P(Census, EveryCheckPasses) {
  const auto [name, n] = GetParam();
  expect_all_pass(verify_all(census(name), n));
}

INSTANTIATE_TEST_SUITE_P(Manifolds, Census,
                         ::testing::Combine(::testing::Values(std::string("m003"), std::string("m004"), std::string("m129")),
                                            ::testing::Values(2, 3, 4)),
                         [](const auto &info) {
                           return std::get<0>(info.param) + "_n" +
                                  std::to_string(std::get<1>(info.param));
                         });

TEST(Verify, GeneratedCurvesAlsoPass) {
  for (const char *name : {"m003", "m004", "m129"})
    expect_all_pass(verify_all(with_curves(census(name), {}), 3));
}

TEST(Verify, RangeMatchesSingleRuns) {
  const auto tri = census("m004");
  const auto reports = verify_range(tri, 2, 4);
  ASSERT_EQ(reports.size(), 3u);
  for (std::size_t k = 0; k < reports.size(); ++k) {
    EXPECT_EQ(reports[k].n, static_cast<int>(k) + 2);
    EXPECT_EQ(reports[k].checks.size(), verify_all(tri, reports[k].n).checks.size());
  }
}

TEST(Verify, ReportAggregation) {
  VerificationReport r{"x", 2, {}};
  EXPECT_TRUE(r.pass());
  r.add("a", "first", true);
  EXPECT_TRUE(r.pass());
  VerificationReport other{"x", 2, {}};
  other.add("b", "second", false, "off by one");
  r.append(other);
  EXPECT_EQ(r.checks.size(), 2u);
  EXPECT_FALSE(r.pass());
}

TEST(Verify, ClosedManifoldStillGetsHomology) {
  const auto r = verify_homology(testing_support::sphere_triangulation(), 2);
  for (const auto &c : r.checks)
    EXPECT_TRUE(c.passed) << c.id << ": " << c.details;
}
