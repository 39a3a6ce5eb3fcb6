#pragma once

#include "pglsym/gluing.hpp"
#include "pglsym/homology.hpp"
#include "pglsym/int_matrix.hpp"
#include "pglsym/jcomplex.hpp"
#include "pglsym/triangulation.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace pglsym {

/// A 2-dimensional cell complex: d1 maps edges to vertices, d2 faces to edges.
struct CellComplex {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  IntMatrix d1;
  IntMatrix d2;
  std::vector<std::size_t> edge_component;
  std::vector<std::string> edge_names;
};

struct SignedCell {
  std::size_t index = 0;
  int sign = 1;
};

/// Representative name of a hexagon edge generator.
struct HexEdgeName {
  bool is_beta = false;
  std::size_t tet = 0;
  int i = 0, j = 0, k = 0;
};

/// The three cellulations of the boundary: the cusp triangles T^i, the
/// pentagon decomposition (vertices v^{ij}, edges e^{ij}, faces tau^i and one
/// polygon per cusp-triangle corner class) and the hexagon decomposition
/// (vertices v^{ijk}, edges gamma^{ijk} and beta^{ijk}).
class CuspSurface {
public:
  explicit CuspSurface(const Triangulation &tri);

  const Triangulation &triangulation() const noexcept { return tri_; }
  std::size_t component_count() const noexcept { return component_genus_.size(); }
  /// Cusp index of the cusp triangle at vertex i of tet.
  std::size_t component(std::size_t tet, int i) const;
  long genus(std::size_t component) const { return component_genus_.at(component); }

  const CellComplex &standard() const noexcept { return standard_; }
  const CellComplex &pentagon() const noexcept { return pentagon_; }
  const CellComplex &hexagon() const noexcept { return hexagon_; }

  /// E^{ijk}: side of T^i in the fourth face, running from V^{ij} to V^{ik}.
  SignedCell standard_edge(std::size_t tet, int i, int j, int k) const;
  /// The same side before gluing: 12 per tetrahedron, E^{ijk} with j < k positive.
  SignedCell standard_name(std::size_t tet, int i, int j, int k) const;
  std::size_t standard_name_count() const noexcept { return 12 * tri_.tet_count(); }
  /// Unglued sides -> standard edge classes.
  const IntMatrix &standard_quotient() const noexcept { return standard_quotient_; }
  /// e^{ij}: cuts the corner V^{ij} of T^i.
  std::size_t pentagon_edge(std::size_t tet, int i, int j) const;
  /// gamma^{ijk}: v^{ijk} -> v^{ijl}.
  SignedCell hexagon_gamma(std::size_t tet, int i, int j, int k) const;
  /// beta^{ijk}: v^{ijk} -> v^{ikj}.
  SignedCell hexagon_beta(std::size_t tet, int i, int j, int k) const;
  const HexEdgeName &hexagon_name(std::size_t edge) const { return hex_names_.at(edge); }
  /// (tet, i, j) of a pentagon edge generator.
  std::array<std::size_t, 3> pentagon_name(std::size_t edge) const;

private:
  Triangulation tri_;
  std::vector<std::array<std::size_t, 4>> component_;
  std::vector<long> component_genus_;
  CellComplex standard_, pentagon_, hexagon_;
  IntMatrix standard_quotient_;
  std::vector<SignedCell> standard_edge_of_, hex_gamma_of_, hex_beta_of_;
  std::vector<HexEdgeName> hex_names_;
};

/// A closed peripheral curve as a cyclic sequence of cusp-triangle segments.
struct BoundaryCurve {
  std::size_t component = 0;
  SegmentPath segments;
};

/// Checks closedness (NotClosed otherwise) and cancels backtracking.
BoundaryCurve normalize_curve(const CuspSurface &surface, const SegmentPath &path);

/// 2g curves per cusp, ordered by cusp, forming a basis of H_1 of each
/// boundary component. Curves given in the input file take precedence.
std::vector<BoundaryCurve> homology_basis_curves(const CuspSurface &surface);
std::vector<BoundaryCurve> homology_basis_curves(const Triangulation &tri);

struct CurveChains {
  IntVector pentagon;
  IntVector standard;
  IntVector hexagon;
};

CurveChains curve_chains(const CuspSurface &surface, const BoundaryCurve &curve);

/// Pairing of pentagon edges with unglued sides inside each tetrahedron.
IntMatrix iota_matrix(const CuspSurface &surface);
/// Intersection number of a pentagon cycle with a standard chain. Every glued
/// side is met from both of its triangles, so the name-level sum is halved;
/// throws NotAComplex if that sum is odd.
Integer iota_pairing(const CuspSurface &surface, const IntVector &pentagon_chain,
                     const IntVector &standard_chain);
/// Intersection number of two curves.
Integer curve_intersection(const CuspSurface &surface, const BoundaryCurve &a,
                           const BoundaryCurve &b);

struct CartanData {
  IntMatrix A; // Cartan matrix of sl_n
  IntMatrix D; // diag(n-1, ..., 1)
};

CartanData cartan_data(int n);

/// Index of gen (x) e_r in C (x) Z^{n-1}, r in 1..n-1.
std::size_t tensor_index(std::size_t generator, int r, int n);
IntVector tensor_lift(const IntVector &chain, int r, int n);
IntVector tensor_level(const IntVector &lifted, int r, int n);

/// delta, delta' and gamma together with the pairing on the tensored chains.
struct BoundaryMaps {
  IntMatrix delta;       // pentagon (x) Z^{n-1} -> J
  IntMatrix delta_prime; // hexagon (x) Z^{n-1} -> J
  IntMatrix gamma;       // J -> standard (x) Z^{n-1}
  IntMatrix gamma_local; // J -> unglued sides (x) Z^{n-1}
  IntMatrix iota;        // pentagon (x) Z^{n-1} x unglued sides (x) Z^{n-1}
};

BoundaryMaps boundary_maps(const CuspSurface &surface, const JComplex &cx);

/// delta(e^{ij} (x) e_r) on one tetrahedron from the original double sum
/// sum_{t_i=r} sum_{s+e=t} t_j (s, e).
IntVector delta_double_sum(const JBasis &basis, std::size_t tet, int i, int j, int r);
/// delta(e^{ij} (x) e_r) = sum_{s_i=r-1} (s, e_ij) - sum_{s_i=r} (s, e_kl).
IntVector delta_two_sum(const JBasis &basis, std::size_t tet, int i, int j, int r);

struct CuspRow {
  std::size_t curve = 0;
  int level = 0;
};

/// Row (curve, r) reads prod z^A (1 - z)^(-B) = eps, and (A|B) is the J
/// coordinate vector of delta'(curve (x) e_r).
struct CuspSystem {
  IntMatrix A;
  IntMatrix B;
  std::vector<int> eps;
  std::vector<CuspRow> rows;
  IntMatrix AB() const { return A.hconcat(B); }
};

CuspSystem cusp_system(const CuspSurface &surface, const JComplex &cx,
                       const std::vector<BoundaryCurve> &curves);
/// C(z) per row, 1 when the row holds.
std::vector<Complex> evaluate_cusp_system(const CuspSystem &sys, const ShapeAssignment &z);
/// The cocycle C(z) on a hexagon chain at level r, by its defining product.
Complex cusp_cocycle(const CuspSurface &surface, const ShapeAssignment &z,
                     const IntVector &hexagon_chain, int r);

/// Coordinates of standard cycles in the basis given by the curves,
/// modulo boundaries. Throws NotAComplex if a chain is not such a cycle.
class HomologyCoordinates {
public:
  HomologyCoordinates(const CuspSurface &surface, const std::vector<BoundaryCurve> &curves);
  IntVector coordinates(const IntVector &standard_cycle) const;

private:
  std::size_t basis_size_;
  ImageSolver solver_;
};

} // namespace pglsym
