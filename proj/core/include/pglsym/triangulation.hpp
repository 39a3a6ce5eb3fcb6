#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace pglsym {

/// Permutation of {0,1,2,3}; p[i] is the image of i.
struct Perm {
  std::array<int, 4> p{0, 1, 2, 3};

  int operator[](int i) const { return p[static_cast<std::size_t>(i)]; }
  Perm inverse() const;
  Perm compose(const Perm &after) const; // after(this(i))
  bool is_odd() const;
  bool operator==(const Perm &) const = default;
};

/// Sign of the permutation (a b c d) of 0123: +1 even, -1 odd.
int permutation_sign(int a, int b, int c, int d);

struct Gluing {
  std::size_t neighbor = 0;
  Perm perm;
};

/// One segment of a peripheral curve: it runs through the cusp triangle at
/// vertex `vertex` of tetrahedron `tet`, entering across face `enter` and
/// leaving across face `exit`.
struct Segment {
  std::size_t tet = 0;
  int vertex = 0;
  int enter = 0;
  int exit = 0;
  bool operator==(const Segment &) const = default;
};

using SegmentPath = std::vector<Segment>;

class Triangulation {
public:
  Triangulation(std::string name, std::vector<std::array<Gluing, 4>> gluings,
                std::vector<std::vector<SegmentPath>> curves = {});

  const std::string &name() const noexcept { return name_; }
  std::size_t tet_count() const noexcept { return gluings_.size(); }
  const Gluing &gluing(std::size_t tet, int face) const {
    return gluings_[tet][static_cast<std::size_t>(face)];
  }
  const std::vector<std::array<Gluing, 4>> &gluings() const noexcept { return gluings_; }

  /// Curves supplied with the input, grouped by boundary component.
  const std::vector<std::vector<SegmentPath>> &curves() const noexcept { return curves_; }

private:
  std::string name_;
  std::vector<std::array<Gluing, 4>> gluings_;
  std::vector<std::vector<SegmentPath>> curves_;
};

Triangulation parse_triangulation(std::string_view text);
Triangulation load_triangulation(const std::string &path);
/// A curve file: {"curves": [...]} or the bare per-component list.
std::vector<std::vector<SegmentPath>> parse_curve_file(std::string_view text, std::size_t tets);
/// Same gluings with the curves replaced.
Triangulation with_curves(const Triangulation &tri, std::vector<std::vector<SegmentPath>> curves);

/// Index 0..5 of the edge {i,j} in the order 01,02,03,12,13,23.
int edge_index(int i, int j);
std::array<int, 2> edge_vertices(int index);

struct CellClasses {
  std::vector<std::array<std::size_t, 4>> vertex_class; // [tet][vertex]
  std::vector<std::array<std::size_t, 6>> edge_class;   // [tet][edge_index]
  std::vector<std::array<std::size_t, 4>> face_class;   // [tet][face]
  std::size_t v = 0;
  std::size_t e = 0;
  std::size_t f = 0;
};

CellClasses cell_classes(const Triangulation &tri);

/// One step of the walk around an edge: inside `tet` the edge is (a, b) and
/// the walk leaves across face `exit`.
struct EdgeStep {
  std::size_t tet = 0;
  int a = 0;
  int b = 0;
  int exit = 0;
};

/// For each edge class, the cyclic walk around it, starting at its smallest
/// (tet, edge) member.
std::vector<std::vector<EdgeStep>> edge_cycles(const Triangulation &tri);

struct BoundaryComponent {
  std::size_t vertex_class = 0;
  std::size_t triangles = 0;
  long euler_characteristic = 0;
  long genus = 0;
  bool is_cusp = true; // false for a sphere link (a material vertex)
};

struct BoundaryProfile {
  std::vector<BoundaryComponent> components;
  std::size_t c = 0;
  std::size_t h = 0;
};

BoundaryProfile boundary_profile(const Triangulation &tri);

} // namespace pglsym
