#pragma once

#include "pglsym/triangulation.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace pglsym {

using Quad = std::array<int, 4>;
/// Integral point of the dilated simplex, coordinates summing to n.
using LatticePoint = Quad;
/// Translation vector of a subsimplex, coordinates summing to n - 2.
using Subsimplex = Quad;

enum class PointKind { Vertex, Edge, Face, Interior };

/// The three classes of edges of a tetrahedron under the opposite-edge
/// identification: 01|23, 12|03 and 02|13.
enum class PairClass { E01 = 0, E12 = 1, E02 = 2 };

/// Edges are indexed 0..5 as in edge_index (01,02,03,12,13,23).
PairClass pair_class(int edge);
Quad edge_vector(int edge);

std::string to_string(const Quad &q);
std::string to_string(PointKind kind);

std::vector<LatticePoint> lattice_points(int n);
std::vector<Subsimplex> subsimplices(int n);
std::size_t lattice_point_count(int n);
std::size_t subsimplex_count(int n);

std::pair<PointKind, Quad> classify_point(const LatticePoint &t);
PointKind point_kind(const LatticePoint &t);

struct MidpointPair {
  Subsimplex s;
  int edge = 0;
  bool operator==(const MidpointPair &) const = default;
};

/// All (s, e) with s + e = t and s >= 0.
std::vector<MidpointPair> midpoint_pairs(const LatticePoint &t);

/// Position of a point / subsimplex in the lexicographic lists above.
class LatticeIndex {
public:
  explicit LatticeIndex(int n);

  int n() const noexcept { return n_; }
  const std::vector<LatticePoint> &points() const noexcept { return points_; }
  const std::vector<Subsimplex> &subsimplices() const noexcept { return subs_; }
  std::size_t point_index(const LatticePoint &t) const;
  std::size_t subsimplex_index(const Subsimplex &s) const;

private:
  int n_;
  std::vector<LatticePoint> points_;
  std::vector<Subsimplex> subs_;
  std::map<Quad, std::size_t> point_lookup_;
  std::map<Quad, std::size_t> sub_lookup_;
};

struct PointRef {
  std::size_t tet = 0;
  LatticePoint t{};
  auto operator<=>(const PointRef &) const = default;
};

struct IntegralPointClass {
  std::vector<PointRef> members; // sorted
  PointKind kind = PointKind::Edge;
  Quad signature{};
};

/// Non-vertex integral points modulo face pairings. Classes are ordered by
/// kind (edge, face, interior) and then by smallest member.
class PointClasses {
public:
  PointClasses(const Triangulation &tri, int n);

  /// Single unglued tetrahedron: every point is its own class.
  static PointClasses local(int n);

  int n() const noexcept { return index_.n(); }
  std::size_t tet_count() const noexcept { return tet_count_; }
  const LatticeIndex &index() const noexcept { return index_; }
  const std::vector<IntegralPointClass> &classes() const noexcept { return classes_; }
  std::size_t size() const noexcept { return classes_.size(); }
  bool is_local() const noexcept { return local_; }

  /// Class of a non-vertex point; throws VertexPoint for vertex points.
  std::size_t class_of(std::size_t tet, const LatticePoint &t) const;

private:
  PointClasses(std::size_t tets, int n, bool local);
  void build(const Triangulation *tri);

  LatticeIndex index_;
  std::size_t tet_count_;
  bool local_;
  std::vector<IntegralPointClass> classes_;
  std::vector<std::size_t> lookup_; // tet * points + point index
};

PointClasses point_classes(const Triangulation &tri, int n);

/// Non-vertex point classes from the cell counts (faces = number of face
/// classes): e(n-1) + f(n-1)(n-2)/2 + t(n-1)(n-2)(n-3)/6.
std::size_t expected_point_count(std::size_t edges, std::size_t faces, std::size_t tets, int n);

} // namespace pglsym
