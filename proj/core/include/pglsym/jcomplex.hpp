#pragma once

#include "pglsym/int_matrix.hpp"
#include "pglsym/lattice.hpp"
#include "pglsym/triangulation.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

namespace pglsym {

/// Coordinates on J: all (tet, s, e01) slots first, then all (tet, s, e12)
/// slots. Within each half the column is tet * N + subsimplex index.
class JBasis {
public:
  JBasis(std::size_t tets, int n);

  int n() const noexcept { return n_; }
  std::size_t tet_count() const noexcept { return tets_; }
  std::size_t per_tet() const noexcept { return per_tet_; }
  std::size_t half() const noexcept { return tets_ * per_tet_; }
  std::size_t dim() const noexcept { return 2 * half(); }
  const LatticeIndex &lattice() const noexcept { return lattice_; }

  std::size_t column(std::size_t tet, const Subsimplex &s) const;
  std::size_t index(std::size_t tet, const Subsimplex &s, PairClass half) const;

  /// Adds coeff * (s, edge)_tet with e02-type edges folded to (-1, -1).
  void accumulate(IntVector &v, std::size_t tet, const Subsimplex &s, int edge,
                  const Integer &coeff = 1) const;
  IntVector element(std::size_t tet, const Subsimplex &s, int edge) const;

private:
  std::size_t tets_;
  int n_;
  std::size_t per_tet_;
  LatticeIndex lattice_;
};

/// Omega(x, y) = sum(a d - b c) for x = (a|b), y = (c|d).
Integer omega_pairing(const IntVector &x, const IntVector &y);
/// The matrix [[0, I], [-I, 0]] of size 2m.
IntMatrix symplectic_matrix(std::size_t m);

/// The complex C0 -alpha-> C1 -beta-> J -beta*-> C1 -alpha*-> C0 for a
/// triangulation and n, or for a single unglued tetrahedron.
class JComplex {
public:
  JComplex(const Triangulation &tri, int n);
  static JComplex local(int n);

  int n() const noexcept { return points_.n(); }
  std::size_t tet_count() const noexcept { return basis_.tet_count(); }
  const PointClasses &points() const noexcept { return points_; }
  const JBasis &basis() const noexcept { return basis_; }
  std::size_t vertex_class_count() const noexcept { return vertex_classes_; }
  std::size_t vertex_class(std::size_t tet, int v) const {
    return vertex_class_[tet][static_cast<std::size_t>(v)];
  }
  std::size_t c0_dim() const noexcept { return vertex_classes_ * static_cast<std::size_t>(n() - 1); }
  std::size_t c1_dim() const noexcept { return points_.size(); }
  /// Generator x (x) e_k of C0, k in 1..n-1.
  std::size_t c0_index(std::size_t vertex_class, int k) const;

  const IntMatrix &alpha() const noexcept { return alpha_; }
  const IntMatrix &beta() const noexcept { return beta_; }
  const IntMatrix &beta_star() const noexcept { return beta_star_; }
  const IntMatrix &alpha_star() const noexcept { return alpha_star_; }

  /// beta of a single point (t, tet): sum over its midpoint pairs.
  IntVector beta_of_point(std::size_t tet, const LatticePoint &t) const;
  /// beta* of a single generator (s, edge)_tet, any of the six edges.
  IntVector beta_star_of(std::size_t tet, const Subsimplex &s, int edge) const;
  IntVector c1_unit(std::size_t tet, const LatticePoint &t) const;

private:
  JComplex(std::size_t tets, int n, PointClasses points,
           std::vector<std::array<std::size_t, 4>> vertex_class, std::size_t vertex_classes);
  void build();

  PointClasses points_;
  JBasis basis_;
  std::vector<std::array<std::size_t, 4>> vertex_class_;
  std::size_t vertex_classes_;
  IntMatrix alpha_, beta_, beta_star_, alpha_star_;
};

IntMatrix build_alpha(const Triangulation &tri, int n);
IntMatrix build_beta(const Triangulation &tri, int n);
IntMatrix build_beta_star(const Triangulation &tri, int n);
IntMatrix build_alpha_star(const Triangulation &tri, int n);

/// A C1 chain together with an explicit J element mapping onto it under beta*.
struct Relation {
  IntVector chain;
  std::optional<IntVector> preimage;
};

/// Quad with corners a+(k,0,0,l), a+(k,0,l,0), a+(0,k,l,0), a+(0,k,0,l),
/// coordinates relabelled by sigma (point q with q[sigma(i)] = p[i]).
Relation quad_relation(const JComplex &cx, std::size_t tet, const Quad &a, int k, int l,
                       const Perm &sigma);
/// Alternating sum of the six neighbours of the face point t.
Relation hexagon_relation(const JComplex &cx, std::size_t tet, const LatticePoint &t);

/// Both sides of sum_{interior t, t_i = r} beta(t) = -sum_{boundary t, t_i = r}
/// sum_{s+e=t} (s, e) on a single tetrahedron.
std::pair<IntVector, IntVector> stokes_sides(int n, int i, int r);

} // namespace pglsym
