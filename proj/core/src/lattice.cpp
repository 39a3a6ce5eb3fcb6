#include "pglsym/lattice.hpp"

#include "pglsym/error.hpp"
#include "pglsym/union_find.hpp"

#include <algorithm>
#include <functional>

namespace pglsym {

namespace {

void require_n(int n) {
  if (n < 2)
    throw Error(ErrorKind::InvalidN, "n must be at least 2, got " + std::to_string(n));
}

std::vector<Quad> quads_with_sum(int sum) {
  std::vector<Quad> out;
  for (int a = sum; a >= 0; --a)
    for (int b = sum - a; b >= 0; --b)
      for (int c = sum - a - b; c >= 0; --c)
        out.push_back({a, b, c, sum - a - b - c});
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t binomial3(long m) { return m < 3 ? 0 : static_cast<std::size_t>(m * (m - 1) * (m - 2) / 6); }

} // namespace

PairClass pair_class(int edge) {
  switch (edge) {
  case 0: case 5: return PairClass::E01;
  case 3: case 2: return PairClass::E12;
  case 1: case 4: return PairClass::E02;
  }
  throw Error(ErrorKind::OutOfRange, "edge index " + std::to_string(edge));
}

Quad edge_vector(int edge) {
  auto [i, j] = edge_vertices(edge);
  Quad e{0, 0, 0, 0};
  e[static_cast<std::size_t>(i)] = 1;
  e[static_cast<std::size_t>(j)] = 1;
  return e;
}

std::string to_string(const Quad &q) {
  std::string out;
  for (int x : q)
    out += std::to_string(x);
  return out;
}

std::string to_string(PointKind kind) {
  switch (kind) {
  case PointKind::Vertex: return "vertex";
  case PointKind::Edge: return "edge";
  case PointKind::Face: return "face";
  case PointKind::Interior: return "interior";
  }
  return "unknown";
}

std::vector<LatticePoint> lattice_points(int n) {
  require_n(n);
  return quads_with_sum(n);
}

std::vector<Subsimplex> subsimplices(int n) {
  require_n(n);
  return quads_with_sum(n - 2);
}

std::size_t lattice_point_count(int n) { return binomial3(n + 3); }
std::size_t subsimplex_count(int n) { return binomial3(n + 1); }

PointKind point_kind(const LatticePoint &t) {
  const auto zeros = std::count(t.begin(), t.end(), 0);
  switch (zeros) {
  case 3: return PointKind::Vertex;
  case 2: return PointKind::Edge;
  case 1: return PointKind::Face;
  default: return PointKind::Interior;
  }
}

std::pair<PointKind, Quad> classify_point(const LatticePoint &t) {
  Quad sig = t;
  std::sort(sig.begin(), sig.end(), std::greater<>());
  return {point_kind(t), sig};
}

std::vector<MidpointPair> midpoint_pairs(const LatticePoint &t) {
  if (point_kind(t) == PointKind::Vertex)
    throw Error(ErrorKind::VertexPoint, "vertex point " + to_string(t) + " has no midpoint pairs");
  std::vector<MidpointPair> out;
  for (int k = 0; k < 6; ++k) {
    auto [i, j] = edge_vertices(k);
    if (t[static_cast<std::size_t>(i)] < 1 || t[static_cast<std::size_t>(j)] < 1)
      continue;
    Subsimplex s = t;
    --s[static_cast<std::size_t>(i)];
    --s[static_cast<std::size_t>(j)];
    out.push_back({s, k});
  }
  return out;
}

LatticeIndex::LatticeIndex(int n) : n_(n), points_(lattice_points(n)), subs_(pglsym::subsimplices(n)) {
  for (std::size_t i = 0; i < points_.size(); ++i)
    point_lookup_.emplace(points_[i], i);
  for (std::size_t i = 0; i < subs_.size(); ++i)
    sub_lookup_.emplace(subs_[i], i);
}

std::size_t LatticeIndex::point_index(const LatticePoint &t) const {
  auto it = point_lookup_.find(t);
  if (it == point_lookup_.end())
    throw Error(ErrorKind::OutOfRange, to_string(t) + " is not a point for n=" + std::to_string(n_));
  return it->second;
}

std::size_t LatticeIndex::subsimplex_index(const Subsimplex &s) const {
  auto it = sub_lookup_.find(s);
  if (it == sub_lookup_.end())
    throw Error(ErrorKind::OutOfRange,
                to_string(s) + " is not a subsimplex for n=" + std::to_string(n_));
  return it->second;
}

PointClasses::PointClasses(std::size_t tets, int n, bool local)
    : index_(n), tet_count_(tets), local_(local) {}

PointClasses::PointClasses(const Triangulation &tri, int n)
    : PointClasses(tri.tet_count(), n, false) {
  build(&tri);
}

PointClasses PointClasses::local(int n) {
  PointClasses pc(1, n, true);
  pc.build(nullptr);
  return pc;
}

void PointClasses::build(const Triangulation *tri) {
  const auto &pts = index_.points();
  const auto np = pts.size();
  UnionFind uf(tet_count_ * np);
  if (tri) {
    for (std::size_t tet = 0; tet < tet_count_; ++tet)
      for (int f = 0; f < 4; ++f) {
        const auto &g = tri->gluing(tet, f);
        for (std::size_t k = 0; k < np; ++k) {
          const auto &t = pts[k];
          if (t[static_cast<std::size_t>(f)] != 0)
            continue;
          LatticePoint image{};
          for (int i = 0; i < 4; ++i)
            image[static_cast<std::size_t>(g.perm[i])] = t[static_cast<std::size_t>(i)];
          uf.unite(tet * np + k, g.neighbor * np + index_.point_index(image));
        }
      }
  }
  std::map<std::size_t, std::vector<PointRef>> groups;
  for (std::size_t tet = 0; tet < tet_count_; ++tet)
    for (std::size_t k = 0; k < np; ++k)
      if (point_kind(pts[k]) != PointKind::Vertex)
        groups[uf.find(tet * np + k)].push_back({tet, pts[k]});

  for (auto &[root, members] : groups) {
    std::sort(members.begin(), members.end());
    IntegralPointClass cls;
    std::tie(cls.kind, cls.signature) = classify_point(members.front().t);
    for (const auto &m : members)
      if (classify_point(m.t) != std::pair{cls.kind, cls.signature})
        throw Error(ErrorKind::InconsistentPairing, "face pairing changes the type of point " +
                                                        to_string(m.t));
    cls.members = std::move(members);
    classes_.push_back(std::move(cls));
  }
  std::sort(classes_.begin(), classes_.end(), [](const auto &a, const auto &b) {
    if (a.kind != b.kind)
      return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    return a.members.front() < b.members.front();
  });
  lookup_.assign(tet_count_ * np, SIZE_MAX);
  for (std::size_t c = 0; c < classes_.size(); ++c)
    for (const auto &m : classes_[c].members)
      lookup_[m.tet * np + index_.point_index(m.t)] = c;
}

std::size_t PointClasses::class_of(std::size_t tet, const LatticePoint &t) const {
  if (tet >= tet_count_)
    throw Error(ErrorKind::OutOfRange, "tetrahedron " + std::to_string(tet));
  const auto c = lookup_[tet * index_.points().size() + index_.point_index(t)];
  if (c == SIZE_MAX)
    throw Error(ErrorKind::VertexPoint, to_string(t) + " is a vertex point");
  return c;
}

PointClasses point_classes(const Triangulation &tri, int n) { return PointClasses(tri, n); }

std::size_t expected_point_count(std::size_t edges, std::size_t faces, std::size_t tets, int n) {
  const auto m = static_cast<std::size_t>(n);
  return edges * (m - 1) + faces * ((m - 1) * (m - 2) / 2) + tets * binomial3(n - 1);
}

} // namespace pglsym
