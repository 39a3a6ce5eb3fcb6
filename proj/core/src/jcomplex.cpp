#include "pglsym/jcomplex.hpp"

#include "pglsym/error.hpp"

#include <map>

namespace pglsym {

namespace {

Quad plus(Quad a, const Quad &b) {
  for (std::size_t i = 0; i < 4; ++i)
    a[i] += b[i];
  return a;
}

Quad eps(int i, int j) { return edge_vector(edge_index(i, j)); }

Quad relabel(const Quad &p, const Perm &sigma) {
  Quad q{};
  for (int i = 0; i < 4; ++i)
    q[static_cast<std::size_t>(sigma[i])] = p[static_cast<std::size_t>(i)];
  return q;
}

} // namespace

JBasis::JBasis(std::size_t tets, int n)
    : tets_(tets), n_(n), per_tet_(subsimplex_count(n)), lattice_(n) {}

std::size_t JBasis::column(std::size_t tet, const Subsimplex &s) const {
  if (tet >= tets_)
    throw Error(ErrorKind::OutOfRange, "tetrahedron " + std::to_string(tet));
  return tet * per_tet_ + lattice_.subsimplex_index(s);
}

std::size_t JBasis::index(std::size_t tet, const Subsimplex &s, PairClass which) const {
  const auto col = column(tet, s);
  switch (which) {
  case PairClass::E01: return col;
  case PairClass::E12: return half() + col;
  default: throw Error(ErrorKind::OutOfRange, "e02 is not a basis direction");
  }
}

void JBasis::accumulate(IntVector &v, std::size_t tet, const Subsimplex &s, int edge,
                        const Integer &coeff) const {
  if (v.size() != dim())
    throw Error(ErrorKind::DimensionMismatch, "J vector of wrong size");
  const auto col = column(tet, s);
  switch (pair_class(edge)) {
  case PairClass::E01: v[col] += coeff; break;
  case PairClass::E12: v[half() + col] += coeff; break;
  case PairClass::E02:
    v[col] -= coeff;
    v[half() + col] -= coeff;
    break;
  }
}

IntVector JBasis::element(std::size_t tet, const Subsimplex &s, int edge) const {
  IntVector v = zero_vector(dim());
  accumulate(v, tet, s, edge);
  return v;
}

Integer omega_pairing(const IntVector &x, const IntVector &y) {
  if (x.size() != y.size() || x.size() % 2 != 0)
    throw Error(ErrorKind::DimensionMismatch, "omega needs two vectors of equal even length");
  const auto m = x.size() / 2;
  Integer sum = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (x[i] != 0 && y[m + i] != 0)
      sum += x[i] * y[m + i];
    if (x[m + i] != 0 && y[i] != 0)
      sum -= x[m + i] * y[i];
  }
  return sum;
}

IntMatrix symplectic_matrix(std::size_t m) {
  IntMatrix j(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    j.set(i, m + i, 1);
    j.set(m + i, i, -1);
  }
  return j;
}

JComplex::JComplex(std::size_t tets, int n, PointClasses points,
                   std::vector<std::array<std::size_t, 4>> vertex_class, std::size_t vertex_classes)
    : points_(std::move(points)), basis_(tets, n), vertex_class_(std::move(vertex_class)),
      vertex_classes_(vertex_classes) {
  build();
}

JComplex::JComplex(const Triangulation &tri, int n)
    : JComplex(tri.tet_count(), n, PointClasses(tri, n), cell_classes(tri).vertex_class,
               cell_classes(tri).v) {
  static const bool conventions_checked = [] {
    JComplex::local(2);
    return true;
  }();
  (void)conventions_checked;
}

JComplex JComplex::local(int n) {
  return JComplex(1, n, PointClasses::local(n), {{0, 1, 2, 3}}, 4);
}

std::size_t JComplex::c0_index(std::size_t vertex_class, int k) const {
  if (vertex_class >= vertex_classes_ || k < 1 || k > n() - 1)
    throw Error(ErrorKind::OutOfRange, "C0 generator out of range");
  return vertex_class * static_cast<std::size_t>(n() - 1) + static_cast<std::size_t>(k - 1);
}

IntVector JComplex::beta_of_point(std::size_t tet, const LatticePoint &t) const {
  IntVector v = zero_vector(basis_.dim());
  for (const auto &mp : midpoint_pairs(t))
    basis_.accumulate(v, tet, mp.s, mp.edge);
  return v;
}

IntVector JComplex::c1_unit(std::size_t tet, const LatticePoint &t) const {
  IntVector v = zero_vector(c1_dim());
  v[points_.class_of(tet, t)] = 1;
  return v;
}

IntVector JComplex::beta_star_of(std::size_t tet, const Subsimplex &s, int edge) const {
  IntVector v = zero_vector(c1_dim());
  auto term = [&](const Quad &e, int sign) { v[points_.class_of(tet, plus(s, e))] += sign; };
  switch (pair_class(edge)) {
  case PairClass::E01:
    term(eps(0, 3), 1);
    term(eps(1, 2), 1);
    term(eps(0, 2), -1);
    term(eps(1, 3), -1);
    break;
  case PairClass::E12:
    term(eps(0, 2), 1);
    term(eps(1, 3), 1);
    term(eps(0, 1), -1);
    term(eps(2, 3), -1);
    break;
  case PairClass::E02: // minus the other two
    term(eps(0, 1), 1);
    term(eps(2, 3), 1);
    term(eps(0, 3), -1);
    term(eps(1, 2), -1);
    break;
  }
  return v;
}

void JComplex::build() {
  const int n = this->n();
  const auto P = c1_dim();
  const auto &classes = points_.classes();

  beta_ = IntMatrix(basis_.dim(), P);
  for (std::size_t p = 0; p < P; ++p)
    for (const auto &m : classes[p].members)
      for (const auto &mp : midpoint_pairs(m.t)) {
        const auto col = basis_.column(m.tet, mp.s);
        switch (pair_class(mp.edge)) {
        case PairClass::E01: beta_.add(col, p, 1); break;
        case PairClass::E12: beta_.add(basis_.half() + col, p, 1); break;
        case PairClass::E02:
          beta_.add(col, p, -1);
          beta_.add(basis_.half() + col, p, -1);
          break;
        }
      }

  beta_star_ = IntMatrix(P, basis_.dim());
  const auto &subs = basis_.lattice().subsimplices();
  for (std::size_t tet = 0; tet < tet_count(); ++tet)
    for (const auto &s : subs)
      for (auto which : {PairClass::E01, PairClass::E12}) {
        const auto column = basis_.index(tet, s, which);
        const auto image = beta_star_of(tet, s, which == PairClass::E01 ? 0 : 3);
        for (std::size_t p = 0; p < P; ++p)
          beta_star_.add(p, column, image[p]);
      }

  // alpha: x (x) e_k -> sum_p c_{t,tet,k} p, c counting vertices i of tet in
  // class x with t_i = k; every member of p must give the same count.
  alpha_ = IntMatrix(P, c0_dim());
  alpha_star_ = IntMatrix(c0_dim(), P);
  for (std::size_t p = 0; p < P; ++p) {
    std::optional<std::vector<std::pair<std::size_t, int>>> reference;
    for (const auto &m : classes[p].members) {
      std::map<std::size_t, int> counts;
      for (int i = 0; i < 4; ++i) {
        const int level = m.t[static_cast<std::size_t>(i)];
        if (level == 0 || level == n)
          continue;
        ++counts[c0_index(vertex_class(m.tet, i), level)];
      }
      std::vector<std::pair<std::size_t, int>> flat(counts.begin(), counts.end());
      if (!reference)
        reference = flat;
      else if (*reference != flat)
        throw Error(ErrorKind::NotAComplex, "alpha coefficients differ within a point class");
    }
    for (const auto &[row, count] : *reference) {
      alpha_.add(p, row, count);
      alpha_star_.add(row, p, count);
    }
  }

  // sign convention: Omega(e12, e01) = -1 must match the coefficient of
  // [e01] in beta*(e12) at n = 2
  if (n == 2 && tet_count() > 0 && points_.is_local()) {
    const Subsimplex zero{0, 0, 0, 0};
    const auto x = basis_.element(0, zero, 3);
    const auto y = basis_.element(0, zero, 0);
    const auto coeff = beta_star_of(0, zero, 3)[points_.class_of(0, eps(0, 1))];
    if (omega_pairing(x, y) != -1 || coeff != -1)
      throw Error(ErrorKind::NotAComplex, "beta* sign convention check failed");
  }
}

IntMatrix build_alpha(const Triangulation &tri, int n) { return JComplex(tri, n).alpha(); }
IntMatrix build_beta(const Triangulation &tri, int n) { return JComplex(tri, n).beta(); }
IntMatrix build_beta_star(const Triangulation &tri, int n) { return JComplex(tri, n).beta_star(); }
IntMatrix build_alpha_star(const Triangulation &tri, int n) {
  return JComplex(tri, n).alpha_star();
}

Relation quad_relation(const JComplex &cx, std::size_t tet, const Quad &a, int k, int l,
                       const Perm &sigma) {
  const int n = cx.n();
  int asum = 0;
  for (int x : a) {
    if (x < 0)
      throw Error(ErrorKind::OutOfRange, "quad base point has a negative coordinate");
    asum += x;
  }
  if (k < 1 || l < 1 || asum + k + l != n)
    throw Error(ErrorKind::OutOfRange, "quad parameters need k, l >= 1 and |a| + k + l = n");
  const std::array<Quad, 4> corners{plus(a, {k, 0, 0, l}), plus(a, {k, 0, l, 0}),
                                    plus(a, {0, k, l, 0}), plus(a, {0, k, 0, l})};
  Relation rel{zero_vector(cx.c1_dim()), zero_vector(cx.basis().dim())};
  for (std::size_t c = 0; c < 4; ++c)
    rel.chain[cx.points().class_of(tet, relabel(corners[c], sigma))] += (c % 2 == 0) ? 1 : -1;
  const int sign = sigma.is_odd() ? -1 : 1;
  const int edge = edge_index(sigma[0], sigma[1]);
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= l; ++j) {
      const Subsimplex s = relabel(plus(a, {k - i, i - 1, j - 1, l - j}), sigma);
      cx.basis().accumulate(*rel.preimage, tet, s, edge, sign);
    }
  return rel;
}

Relation hexagon_relation(const JComplex &cx, std::size_t tet, const LatticePoint &t) {
  if (point_kind(t) != PointKind::Face)
    throw Error(ErrorKind::OutOfRange, to_string(t) + " is not a face point");
  int f = 0;
  while (t[static_cast<std::size_t>(f)] != 0)
    ++f;
  // work in coordinates where the zero sits in position 3
  Perm swap;
  std::swap(swap.p[static_cast<std::size_t>(f)], swap.p[3]);
  const int sign = f == 3 ? 1 : -1;
  const Quad u = relabel(t, swap);
  static const std::array<std::pair<Quad, int>, 6> steps{{{{-1, 1, 0, 0}, -1},
                                                          {{-1, 0, 1, 0}, 1},
                                                          {{0, -1, 1, 0}, -1},
                                                          {{1, -1, 0, 0}, 1},
                                                          {{1, 0, -1, 0}, -1},
                                                          {{0, 1, -1, 0}, 1}}};
  Relation rel{zero_vector(cx.c1_dim()), cx.beta_of_point(tet, t)};
  for (const auto &[step, coeff] : steps)
    rel.chain[cx.points().class_of(tet, relabel(plus(u, step), swap))] += sign * coeff;
  return rel;
}

std::pair<IntVector, IntVector> stokes_sides(int n, int i, int r) {
  if (i < 0 || i > 3 || r < 0 || r > n)
    throw Error(ErrorKind::OutOfRange, "stokes parameters out of range");
  const JBasis basis(1, n);
  IntVector lhs = zero_vector(basis.dim()), rhs = zero_vector(basis.dim());
  for (const auto &t : basis.lattice().points()) {
    if (t[static_cast<std::size_t>(i)] != r)
      continue;
    const auto kind = point_kind(t);
    if (kind == PointKind::Vertex)
      continue;
    for (const auto &mp : midpoint_pairs(t))
      basis.accumulate(kind == PointKind::Interior ? lhs : rhs, 0, mp.s, mp.edge,
                       kind == PointKind::Interior ? 1 : -1);
  }
  return {lhs, rhs};
}

} // namespace pglsym
