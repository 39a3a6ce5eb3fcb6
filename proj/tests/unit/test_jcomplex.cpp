#include "pglsym/error.hpp"
#include "pglsym/jcomplex.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace pglsym;
using testing_support::census;

namespace {

std::vector<Perm> all_perms() {
  std::vector<Perm> out;
  std::array<int, 4> p{0, 1, 2, 3};
  do {
    out.push_back(Perm{p});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Quad relabel(const Quad &q, const Perm &sigma) {
  Quad out{};
  for (int i = 0; i < 4; ++i)
    out[static_cast<std::size_t>(sigma[i])] = q[static_cast<std::size_t>(i)];
  return out;
}

} // namespace

TEST(JBasis, Layout) {
  const JBasis b(3, 4);
  EXPECT_EQ(b.per_tet(), 10u);
  EXPECT_EQ(b.half(), 30u);
  EXPECT_EQ(b.dim(), 60u);
  const Subsimplex s{1, 0, 1, 0};
  const auto col = b.column(2, s);
  EXPECT_EQ(b.index(2, s, PairClass::E01), col);
  EXPECT_EQ(b.index(2, s, PairClass::E12), b.half() + col);
  // the 02 edge is minus the sum of the other two
  const auto v = b.element(2, s, edge_index(1, 3));
  EXPECT_EQ(v[col], -1);
  EXPECT_EQ(v[b.half() + col], -1);
  const auto w = b.element(2, s, edge_index(0, 3));
  EXPECT_EQ(w[b.half() + col], 1);
}

TEST(Omega, PairingAndMatrix) {
  const IntVector x{Integer(1), Integer(0), Integer(0), Integer(2)};
  const IntVector y{Integer(0), Integer(3), Integer(5), Integer(0)};
  // sum(a d - b c) with x = (1,0 | 0,2), y = (0,3 | 5,0)
  EXPECT_EQ(omega_pairing(x, y), 1 * 5 - 2 * 3);
  EXPECT_EQ(omega_pairing(x, y), -omega_pairing(y, x));
  const auto J = symplectic_matrix(2);
  EXPECT_EQ(dot(x, J * y), omega_pairing(x, y));
}

TEST(JComplex, ChainIdentitiesLocal) {
  for (int n = 2; n <= 5; ++n) {
    const auto cx = JComplex::local(n);
    EXPECT_TRUE((cx.beta() * cx.alpha()).is_zero()) << n;
    // unglued, beta* beta is the omega pairing of the point images, not zero
    const auto bsb = cx.beta_star() * cx.beta();
    EXPECT_FALSE(bsb.is_zero()) << n;
    for (std::size_t p = 0; p < cx.c1_dim(); ++p)
      for (std::size_t q = 0; q < cx.c1_dim(); ++q)
        EXPECT_EQ(bsb.at(p, q), omega_pairing(cx.beta().column(q), cx.beta().column(p))) << n;
    EXPECT_TRUE((cx.alpha_star() * cx.beta_star()).is_zero()) << n;
    EXPECT_EQ(cx.vertex_class_count(), 4u);
  }
}

TEST(JComplex, ChainIdentitiesCensus) {
  for (const char *name : {"m003", "m004", "m129"})
    for (int n = 2; n <= 5; ++n) {
      const JComplex cx(census(name), n);
      EXPECT_TRUE((cx.beta() * cx.alpha()).is_zero()) << name << n;
      EXPECT_TRUE((cx.beta_star() * cx.beta()).is_zero()) << name << n;
      EXPECT_TRUE((cx.alpha_star() * cx.beta_star()).is_zero()) << name << n;
      // <beta* x, p> = omega(x, beta p), tested on every pair of generators
      const auto Jm = symplectic_matrix(cx.basis().half());
      EXPECT_EQ(cx.beta_star(), (Jm * cx.beta()).transpose()) << name << n;
    }
}

TEST(JComplex, Dimensions) {
  const JComplex cx(census("m129"), 3);
  EXPECT_EQ(cx.c0_dim(), 2u * 2u);
  EXPECT_EQ(cx.c1_dim(), 16u);
  EXPECT_EQ(cx.alpha().rows(), cx.c1_dim());
  EXPECT_EQ(cx.alpha().cols(), cx.c0_dim());
  EXPECT_EQ(cx.beta().rows(), cx.basis().dim());
  EXPECT_EQ(cx.beta_star().cols(), cx.basis().dim());
  EXPECT_EQ(cx.alpha_star().rows(), cx.c0_dim());
  EXPECT_THROW(cx.c0_index(0, 3), Error);
}

TEST(JComplex, BetaOfPointSumsMidpointPairs) {
  const auto cx = JComplex::local(3);
  const LatticePoint t{1, 1, 1, 0};
  IntVector want = zero_vector(cx.basis().dim());
  for (const auto &mp : midpoint_pairs(t))
    cx.basis().accumulate(want, 0, mp.s, mp.edge);
  EXPECT_EQ(cx.beta_of_point(0, t), want);
  EXPECT_EQ(cx.beta() * cx.c1_unit(0, t), want);
}

TEST(JComplex, BetaStarEquivariance) {
  // beta*(sigma x) = sign(sigma) sigma beta*(x)
  const auto cx = JComplex::local(3);
  const auto &pts = cx.points();
  for (const auto &sigma : all_perms())
    for (const auto &s : cx.basis().lattice().subsimplices())
      for (int e = 0; e < 6; ++e) {
        const auto [i, j] = edge_vertices(e);
        const auto lhs = cx.beta_star_of(0, relabel(s, sigma), edge_index(sigma[i], sigma[j]));
        const auto base = cx.beta_star_of(0, s, e);
        IntVector rhs = zero_vector(cx.c1_dim());
        for (std::size_t c = 0; c < base.size(); ++c) {
          if (base[c] == 0)
            continue;
          const auto &t = pts.classes()[c].members.front().t;
          rhs[pts.class_of(0, relabel(t, sigma))] += (sigma.is_odd() ? -1 : 1) * base[c];
        }
        ASSERT_EQ(lhs, rhs);
      }
}

TEST(Relations, QuadExample) {
  // n = 2, k = l = 1, a = 0: [1001] - [1010] + [0110] - [0101] = beta*(0, e01)
  const auto cx = JComplex::local(2);
  const auto rel = quad_relation(cx, 0, {0, 0, 0, 0}, 1, 1, Perm{});
  IntVector chain = zero_vector(cx.c1_dim());
  chain[cx.points().class_of(0, {1, 0, 0, 1})] += 1;
  chain[cx.points().class_of(0, {1, 0, 1, 0})] -= 1;
  chain[cx.points().class_of(0, {0, 1, 1, 0})] += 1;
  chain[cx.points().class_of(0, {0, 1, 0, 1})] -= 1;
  EXPECT_EQ(rel.chain, chain);
  EXPECT_EQ(cx.beta_star_of(0, {0, 0, 0, 0}, edge_index(0, 1)), chain);
  ASSERT_TRUE(rel.preimage.has_value());
  EXPECT_EQ(cx.beta_star() * *rel.preimage, chain);
}

TEST(Relations, QuadAndHexagonPreimages) {
  for (int n = 2; n <= 4; ++n) {
    const JComplex cx(census("m004"), n);
    for (int k = 1; k < n; ++k)
      for (int l = 1; k + l <= n; ++l)
        for (int a0 = 0; a0 <= n - k - l; ++a0)
          for (const auto &sigma : all_perms()) {
            const Quad a{a0, 0, n - k - l - a0, 0};
            const auto rel = quad_relation(cx, 1, a, k, l, sigma);
            ASSERT_EQ(cx.beta_star() * *rel.preimage, rel.chain);
          }
    for (const auto &t : lattice_points(n))
      if (point_kind(t) == PointKind::Face) {
        const auto rel = hexagon_relation(cx, 0, t);
        ASSERT_EQ(cx.beta_star() * *rel.preimage, rel.chain);
      }
  }
  const auto cx = JComplex::local(3);
  EXPECT_THROW(quad_relation(cx, 0, {0, 0, 0, 0}, 1, 1, Perm{}), Error);
  EXPECT_THROW(hexagon_relation(cx, 0, {2, 1, 0, 0}), Error);
}

TEST(Relations, Stokes) {
  for (int n = 2; n <= 5; ++n)
    for (int i = 0; i < 4; ++i)
      for (int r = 0; r <= n; ++r) {
        const auto [lhs, rhs] = stokes_sides(n, i, r);
        EXPECT_EQ(lhs, rhs) << "n=" << n << " i=" << i << " r=" << r;
      }
}

TEST(JComplex, BuildersAgreeWithClass) {
  const auto tri = census("m004");
  const JComplex cx(tri, 3);
  EXPECT_EQ(build_alpha(tri, 3), cx.alpha());
  EXPECT_EQ(build_beta(tri, 3), cx.beta());
  EXPECT_EQ(build_beta_star(tri, 3), cx.beta_star());
  EXPECT_EQ(build_alpha_star(tri, 3), cx.alpha_star());
}
