#include "pglsym/error.hpp"
#include "pglsym/int_matrix.hpp"

#include <gtest/gtest.h>

using namespace pglsym;

namespace {

IntMatrix dense(std::vector<std::vector<long>> rows) {
  std::vector<IntVector> r;
  for (const auto &row : rows) {
    IntVector v;
    for (long x : row)
      v.emplace_back(x);
    r.push_back(v);
  }
  return IntMatrix::from_dense(r, rows.empty() ? 0 : rows[0].size());
}

} // namespace

TEST(IntMatrix, ZeroEntriesAreNotStored) {
  IntMatrix m(2, 3);
  m.set(0, 1, 5);
  m.add(0, 1, -5);
  EXPECT_TRUE(m.is_zero());
  m.set(1, 2, 0);
  EXPECT_EQ(m.nonzeros(), 0u);
}

TEST(IntMatrix, ProductMatchesHandComputation) {
  const auto a = dense({{1, 2}, {3, 4}});
  const auto b = dense({{0, 1}, {1, 0}});
  EXPECT_EQ(a * b, dense({{2, 1}, {4, 3}}));
  EXPECT_EQ(a.transpose(), dense({{1, 3}, {2, 4}}));
  const IntVector v{Integer(1), Integer(-1)};
  EXPECT_EQ(a * v, (IntVector{Integer(-1), Integer(-1)}));
}

TEST(IntMatrix, ConcatenationAndSelection) {
  const auto a = dense({{1, 0}, {0, 1}});
  const auto h = a.hconcat(dense({{7}, {8}}));
  EXPECT_EQ(h, dense({{1, 0, 7}, {0, 1, 8}}));
  EXPECT_EQ(a.vconcat(dense({{5, 6}})), dense({{1, 0}, {0, 1}, {5, 6}}));
  EXPECT_EQ(h.select_rows({1}), dense({{0, 1, 8}}));
  EXPECT_EQ(h.column(2), (IntVector{Integer(7), Integer(8)}));
  EXPECT_EQ(h.row(0), (IntVector{Integer(1), Integer(0), Integer(7)}));
}

TEST(IntMatrix, ShapeErrors) {
  const auto a = dense({{1, 2}});
  EXPECT_THROW(a * a, Error);
  EXPECT_THROW(a + dense({{1}, {2}}), Error);
  IntMatrix m(1, 1);
  try {
    m.set(3, 0, 1);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::OutOfRange);
  }
  try {
    (void)dot(IntVector(2), IntVector(3));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
}

TEST(IntMatrix, LargeEntriesStayExact) {
  IntMatrix m(1, 1);
  Integer big("123456789012345678901234567890");
  m.set(0, 0, big);
  const auto sq = m * m;
  EXPECT_EQ(sq.at(0, 0), big * big);
}

TEST(IntVector, Arithmetic) {
  const IntVector a{Integer(1), Integer(2)}, b{Integer(3), Integer(-1)};
  EXPECT_EQ(add(a, b), (IntVector{Integer(4), Integer(1)}));
  EXPECT_EQ(subtract(a, b), (IntVector{Integer(-2), Integer(3)}));
  EXPECT_EQ(scale(a, 3), (IntVector{Integer(3), Integer(6)}));
  EXPECT_EQ(dot(a, b), 1);
  EXPECT_TRUE(is_zero(zero_vector(4)));
}
