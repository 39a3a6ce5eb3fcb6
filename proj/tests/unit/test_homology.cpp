#include "pglsym/cusp.hpp"
#include "pglsym/error.hpp"
#include "pglsym/homology.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace pglsym;
using testing_support::census;

namespace {

IntMatrix dense(std::vector<std::vector<long>> rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m.set(r, c, rows[r][c]);
  return m;
}

Integer determinant_abs_via_snf(const IntMatrix &m) {
  const auto s = smith_normal_form(m);
  if (s.rank() < m.rows())
    return 0;
  Integer d = 1;
  for (const auto &x : s.diagonal)
    d *= x;
  return d;
}

} // namespace

TEST(Smith, TextbookExample) {
  const auto m = dense({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}, 3);
  const auto s = smith_normal_form(m);
  ASSERT_EQ(s.diagonal.size(), 3u);
  EXPECT_EQ(s.diagonal[0], 2);
  EXPECT_EQ(s.diagonal[1], 6);
  EXPECT_EQ(s.diagonal[2], 12);
  EXPECT_EQ(s.U * m * s.V, s.D);
}

TEST(Smith, RandomMatricesFactorCorrectly) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-5, 5), dim(1, 7);
  for (int trial = 0; trial < 60; ++trial) {
    const auto r = static_cast<std::size_t>(dim(rng)), c = static_cast<std::size_t>(dim(rng));
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (trial % 3 || entry(rng) > 0)
          m.set(i, j, entry(rng));
    const auto s = smith_normal_form(m);
    ASSERT_EQ(s.U * m * s.V, s.D);
    EXPECT_EQ(determinant_abs_via_snf(s.U), 1);
    EXPECT_EQ(determinant_abs_via_snf(s.V), 1);
    for (std::size_t k = 0; k + 1 < s.diagonal.size(); ++k)
      EXPECT_EQ(s.diagonal[k + 1] % s.diagonal[k], 0);
    EXPECT_EQ(s.rank(), testing_support::rational_rank(m));
    EXPECT_EQ(matrix_rank(m), s.rank());
  }
}

TEST(Smith, ZeroAndEmpty) {
  EXPECT_EQ(smith_normal_form(IntMatrix(3, 2)).rank(), 0u);
  EXPECT_EQ(smith_normal_form(IntMatrix(0, 0)).rank(), 0u);
}

TEST(ImageSolver, FindsIntegerPreimagesOnly) {
  const auto m = dense({{2, 0}, {0, 3}}, 2);
  const ImageSolver s(m);
  const IntVector in{Integer(4), Integer(9)}, out{Integer(1), Integer(0)};
  const auto pre = s.preimage(in);
  ASSERT_TRUE(pre.has_value());
  EXPECT_EQ(m * *pre, in);
  EXPECT_FALSE(s.contains(out));
  EXPECT_FALSE(image_membership(m, out).has_value());
}

TEST(AbelianGroup, NormalizesInvariantFactors) {
  const auto g = AbelianGroup::from_cyclic({Integer(4), Integer(6), Integer(1), Integer(0)});
  EXPECT_EQ(g.free_rank, 1u);
  ASSERT_EQ(g.torsion.size(), 2u);
  EXPECT_EQ(g.torsion[0], 2);
  EXPECT_EQ(g.torsion[1], 12);
  EXPECT_EQ(to_string(g), "Z + Z/2 + Z/12");
  EXPECT_EQ(to_string(AbelianGroup{}), "0");
}

TEST(AbelianGroup, CoefficientFunctors) {
  const auto g = AbelianGroup::from_cyclic({Integer(0), Integer(6)});
  EXPECT_EQ(tensor(g, 4), AbelianGroup::from_cyclic({Integer(4), Integer(2)}));
  EXPECT_EQ(tor(g, 4), AbelianGroup::cyclic(2));
  EXPECT_EQ(hom_to_cyclic(g, 4), tensor(g, 4));
  // H_1(X; Z/4) with H_1 = Z + Z/6 and H_0 = Z
  EXPECT_EQ(coefficient_homology(g, AbelianGroup::cyclic(0), 4),
            AbelianGroup::from_cyclic({Integer(4), Integer(2)}));
}

TEST(ChainHomology, Circle) {
  // one vertex, one loop: d = 0
  const auto g = chain_homology({IntMatrix(1, 1)});
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0], AbelianGroup::cyclic(0));
  EXPECT_EQ(g[1], AbelianGroup::cyclic(0));
}

TEST(ChainHomology, ProjectivePlaneCells) {
  // Z -0-> Z -2-> Z as C2 -> C1 -> C0 in application order
  const auto g = chain_homology({dense({{2}}, 1), IntMatrix(1, 1)});
  EXPECT_TRUE(g[0].is_trivial());
  EXPECT_EQ(g[1], AbelianGroup::cyclic(2));
  EXPECT_EQ(g[2], AbelianGroup::cyclic(0));
}

TEST(ChainHomology, RejectsNonComplex) {
  try {
    chain_homology({dense({{1}}, 1), dense({{1}}, 1)});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAComplex);
  }
}

// H_1 values below are those reported for the census manifolds.
TEST(ManifoldHomology, Census) {
  EXPECT_EQ(manifold_homology(census("m004")), AbelianGroup::cyclic(0));
  EXPECT_EQ(manifold_homology(census("m003")), AbelianGroup::from_cyclic({Integer(0), Integer(5)}));
  EXPECT_EQ(manifold_homology(census("m129")), AbelianGroup::from_cyclic({Integer(0), Integer(0)}));
}

TEST(ManifoldHomology, ConedCusps) {
  EXPECT_TRUE(mhat_homology(census("m004")).is_trivial());
  EXPECT_EQ(mhat_homology(census("m003")), AbelianGroup::cyclic(5));
  EXPECT_TRUE(mhat_homology(census("m129")).is_trivial());
}

TEST(ManifoldHomology, Sphere) {
  const auto s3 = testing_support::sphere_triangulation();
  EXPECT_TRUE(manifold_homology(s3).is_trivial());
  EXPECT_TRUE(mhat_homology(s3).is_trivial());
}

TEST(DualSpine, IsAChainComplex) {
  for (const char *name : {"m003", "m004", "m129"}) {
    const auto spine = dual_spine(census(name));
    EXPECT_TRUE((spine.boundary1 * spine.boundary2).is_zero()) << name;
  }
}
