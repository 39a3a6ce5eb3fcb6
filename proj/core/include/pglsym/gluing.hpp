#pragma once

#include "pglsym/int_matrix.hpp"
#include "pglsym/jcomplex.hpp"
#include "pglsym/lattice.hpp"
#include "pglsym/triangulation.hpp"

#include <complex>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace pglsym {

using Complex = std::complex<double>;

/// Incidence counts of the three edge classes: rows are non-vertex point
/// classes, columns are (tet, s) pairs in JBasis column order.
struct ExponentMatrices {
  IntMatrix Aprime; // 01|23
  IntMatrix Bprime; // 12|03
  IntMatrix Cprime; // 02|13
};

/// Row p reads prod z^A (1 - z)^(-B) = eps_p, and (A|B) row p is beta(p).
struct GluingSystem {
  IntMatrix A;
  IntMatrix B;
  std::vector<int> eps;

  IntMatrix AB() const { return A.hconcat(B); }
  std::size_t rows() const noexcept { return A.rows(); }
};

ExponentMatrices exponent_matrices(const JComplex &cx);
ExponentMatrices exponent_matrices(const Triangulation &tri, int n);
/// A = A' - C', B = B' - C', eps = (-1)^(row sum of C').
GluingSystem log_reduce(const ExponentMatrices &exp);
GluingSystem gluing_system(const JComplex &cx);

/// One shape per subsimplex (the value on its 01 and 23 edges).
class ShapeAssignment {
public:
  ShapeAssignment(std::size_t tets, int n, std::vector<Complex> z);

  std::size_t tet_count() const noexcept { return tets_; }
  int n() const noexcept { return n_; }
  std::size_t per_tet() const noexcept { return per_tet_; }
  const std::vector<Complex> &values() const noexcept { return z_; }

  /// Shape at column tet * per_tet + subsimplex index.
  Complex z(std::size_t column) const { return z_.at(column); }
  Complex value(std::size_t column, PairClass which) const;
  Complex value(const LatticeIndex &lattice, std::size_t tet, const Subsimplex &s, int edge) const;

private:
  std::size_t tets_;
  int n_;
  std::size_t per_tet_;
  std::vector<Complex> z_;
};

inline constexpr double kDegenerateTolerance = 1e-12;

ShapeAssignment extend_shapes(std::size_t tets, int n,
                              const std::map<std::pair<std::size_t, Subsimplex>, Complex> &raw);
/// z' = 1/(1 - z) and z'' = 1 - 1/z.
std::pair<Complex, Complex> shape_companions(Complex z);

/// Products of many factors kept as mantissa * 2^exponent.
class ScaledProduct {
public:
  void multiply(Complex factor);
  void multiply_power(Complex base, const Integer &exponent);
  void divide(Complex factor) { multiply(1.0 / factor); }
  Complex value() const;
  /// |value - target| / |target| without leaving the scaled representation
  /// more than necessary.
  double relative_distance(Complex target) const;

private:
  void renormalize();
  Complex mantissa_{1.0, 0.0};
  long exponent_ = 0;
};

/// Per row prod z^A (1 - z)^(-B) / eps; equal to 1 exactly when satisfied.
std::vector<Complex> evaluate_system(const GluingSystem &sys, const ShapeAssignment &z);
/// Per row prod z^A' z'^B' z''^C', the same quantity computed directly.
std::vector<Complex> evaluate_direct(const ExponentMatrices &exp, const ShapeAssignment &z);

struct XCoordinate {
  std::size_t tet = 0;
  LatticePoint t{};
  std::size_t point_class = 0;
  Complex value;
};

/// X_t = -prod_{s+e=t} z^e_s for every face point of every tetrahedron.
std::vector<XCoordinate> x_coordinates(const ShapeAssignment &z, const PointClasses &points);
std::vector<XCoordinate> x_coordinates(const ShapeAssignment &z, const Triangulation &tri, int n);

} // namespace pglsym
