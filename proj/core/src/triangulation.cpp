#include "pglsym/triangulation.hpp"

#include "pglsym/error.hpp"
#include "pglsym/union_find.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace pglsym {

namespace {

using nlohmann::json;

std::string where(std::size_t tet, int face) {
  return "tetrahedron " + std::to_string(tet) + " face " + std::to_string(face);
}

Perm parse_perm(const json &j, std::size_t tet, int face) {
  if (!j.is_array() || j.size() != 4)
    throw Error(ErrorKind::MalformedInput, "permutation must have 4 entries at " + where(tet, face));
  Perm perm;
  std::array<bool, 4> seen{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (!j[i].is_number_integer())
      throw Error(ErrorKind::MalformedInput, "non-integer permutation entry at " + where(tet, face));
    auto v = j[i].get<long>();
    if (v < 0 || v > 3 || seen[static_cast<std::size_t>(v)])
      throw Error(ErrorKind::MalformedInput, "not a permutation of 0123 at " + where(tet, face));
    seen[static_cast<std::size_t>(v)] = true;
    perm.p[i] = static_cast<int>(v);
  }
  return perm;
}

std::vector<std::vector<SegmentPath>> parse_curves(const json &j, std::size_t tets) {
  std::vector<std::vector<SegmentPath>> out;
  if (!j.is_array())
    throw Error(ErrorKind::MalformedInput, "\"curves\" must be a list of components");
  for (const auto &component : j) {
    if (!component.is_array())
      throw Error(ErrorKind::MalformedInput, "curve component must be a list of curves");
    auto &comp = out.emplace_back();
    for (const auto &curve : component) {
      if (!curve.is_array() || curve.empty())
        throw Error(ErrorKind::MalformedInput, "curve must be a non-empty list of segments");
      auto &path = comp.emplace_back();
      for (const auto &seg : curve) {
        if (!seg.is_array() || seg.size() != 4)
          throw Error(ErrorKind::MalformedInput,
                      "curve segment must be [tet, vertex, enter_face, exit_face]");
        for (const auto &x : seg)
          if (!x.is_number_integer())
            throw Error(ErrorKind::MalformedInput, "curve segment entries must be integers");
        auto tet = seg[0].get<long>();
        auto v = seg[1].get<long>(), a = seg[2].get<long>(), b = seg[3].get<long>();
        if (tet < 0 || static_cast<std::size_t>(tet) >= tets || v < 0 || v > 3 || a < 0 ||
            a > 3 || b < 0 || b > 3 || a == v || b == v)
          throw Error(ErrorKind::MalformedInput, "curve segment out of range");
        path.push_back({static_cast<std::size_t>(tet), static_cast<int>(v), static_cast<int>(a),
                        static_cast<int>(b)});
      }
    }
  }
  return out;
}

} // namespace

Perm Perm::inverse() const {
  Perm inv;
  for (int i = 0; i < 4; ++i)
    inv.p[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])] = i;
  return inv;
}

Perm Perm::compose(const Perm &after) const {
  Perm out;
  for (int i = 0; i < 4; ++i)
    out.p[static_cast<std::size_t>(i)] = after[(*this)[i]];
  return out;
}

bool Perm::is_odd() const { return permutation_sign(p[0], p[1], p[2], p[3]) < 0; }

int permutation_sign(int a, int b, int c, int d) {
  const int v[4] = {a, b, c, d};
  int inversions = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (v[i] > v[j])
        ++inversions;
  return inversions % 2 ? -1 : 1;
}

Triangulation::Triangulation(std::string name, std::vector<std::array<Gluing, 4>> gluings,
                             std::vector<std::vector<SegmentPath>> curves)
    : name_(std::move(name)), gluings_(std::move(gluings)), curves_(std::move(curves)) {
  if (gluings_.empty())
    throw Error(ErrorKind::MalformedInput, "triangulation has no tetrahedra");
  const auto t = gluings_.size();
  for (std::size_t tet = 0; tet < t; ++tet) {
    for (int f = 0; f < 4; ++f) {
      const auto &g = gluing(tet, f);
      if (g.neighbor >= t)
        throw Error(ErrorKind::MalformedInput, "neighbor out of range at " + where(tet, f));
      if (!g.perm.is_odd())
        throw Error(ErrorKind::NotOriented, "even gluing permutation at " + where(tet, f));
      const int f2 = g.perm[f];
      if (g.neighbor == tet && f2 == f)
        throw Error(ErrorKind::InconsistentPairing, "face glued to itself at " + where(tet, f));
      const auto &back = gluing(g.neighbor, f2);
      if (back.neighbor != tet || back.perm != g.perm.inverse())
        throw Error(ErrorKind::InconsistentPairing,
                    where(tet, f) + " and " + where(g.neighbor, f2) + " disagree");
    }
  }
}

Triangulation parse_triangulation(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error &e) {
    throw Error(ErrorKind::MalformedInput, e.what());
  }
  if (!doc.is_object())
    throw Error(ErrorKind::MalformedInput, "top level must be an object");
  if (!doc.contains("gluings") || !doc["gluings"].is_array())
    throw Error(ErrorKind::MalformedInput, "missing \"gluings\" list");
  const auto &gl = doc["gluings"];
  std::size_t t = gl.size();
  if (doc.contains("tetrahedra")) {
    if (!doc["tetrahedra"].is_number_integer() || doc["tetrahedra"].get<long>() < 1)
      throw Error(ErrorKind::MalformedInput, "\"tetrahedra\" must be a positive integer");
    t = doc["tetrahedra"].get<std::size_t>();
  }
  if (gl.size() != t)
    throw Error(ErrorKind::UngluedFace, "expected gluings for " + std::to_string(t) +
                                            " tetrahedra, found " + std::to_string(gl.size()));
  std::vector<std::array<Gluing, 4>> gluings(t);
  for (std::size_t tet = 0; tet < t; ++tet) {
    const auto &faces = gl[tet];
    if (!faces.is_array())
      throw Error(ErrorKind::MalformedInput, "gluings of tetrahedron " + std::to_string(tet));
    if (faces.size() != 4)
      throw Error(ErrorKind::UngluedFace, "tetrahedron " + std::to_string(tet) + " has " +
                                              std::to_string(faces.size()) + " face entries");
    for (int f = 0; f < 4; ++f) {
      const auto &entry = faces[static_cast<std::size_t>(f)];
      if (entry.is_null())
        throw Error(ErrorKind::UngluedFace, where(tet, f));
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer())
        throw Error(ErrorKind::MalformedInput, "entry must be [neighbor, perm] at " + where(tet, f));
      auto nbr = entry[0].get<long>();
      if (nbr < 0 || static_cast<std::size_t>(nbr) >= t)
        throw Error(ErrorKind::MalformedInput, "neighbor out of range at " + where(tet, f));
      gluings[tet][static_cast<std::size_t>(f)] = {static_cast<std::size_t>(nbr),
                                                   parse_perm(entry[1], tet, f)};
    }
  }
  std::vector<std::vector<SegmentPath>> curves;
  if (doc.contains("curves") && !doc["curves"].is_null())
    curves = parse_curves(doc["curves"], t);
  std::string name = doc.value("name", std::string{});
  return Triangulation(std::move(name), std::move(gluings), std::move(curves));
}

std::vector<std::vector<SegmentPath>> parse_curve_file(std::string_view text, std::size_t tets) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error &e) {
    throw Error(ErrorKind::MalformedInput, e.what());
  }
  if (doc.is_object()) {
    if (!doc.contains("curves"))
      throw Error(ErrorKind::MalformedInput, "curve file has no \"curves\" entry");
    return parse_curves(doc["curves"], tets);
  }
  return parse_curves(doc, tets);
}

Triangulation with_curves(const Triangulation &tri, std::vector<std::vector<SegmentPath>> curves) {
  return Triangulation(tri.name(), tri.gluings(), std::move(curves));
}

Triangulation load_triangulation(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::MalformedInput, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_triangulation(buffer.str());
}

int edge_index(int i, int j) {
  if (i > j)
    std::swap(i, j);
  static constexpr int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  if (i < 0 || j > 3 || i == j)
    throw Error(ErrorKind::OutOfRange, "no edge between vertices " + std::to_string(i) + " and " +
                                           std::to_string(j));
  return table[i][j];
}

std::array<int, 2> edge_vertices(int index) {
  static constexpr std::array<std::array<int, 2>, 6> pairs{
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  return pairs.at(static_cast<std::size_t>(index));
}

CellClasses cell_classes(const Triangulation &tri) {
  const auto t = tri.tet_count();
  UnionFind vertices(4 * t), edges(6 * t), faces(4 * t);
  for (std::size_t tet = 0; tet < t; ++tet) {
    for (int f = 0; f < 4; ++f) {
      const auto &g = tri.gluing(tet, f);
      faces.unite(4 * tet + f, 4 * g.neighbor + g.perm[f]);
      for (int v = 0; v < 4; ++v)
        if (v != f)
          vertices.unite(4 * tet + v, 4 * g.neighbor + g.perm[v]);
      for (int k = 0; k < 6; ++k) {
        auto [i, j] = edge_vertices(k);
        if (i != f && j != f)
          edges.unite(6 * tet + k, 6 * g.neighbor + edge_index(g.perm[i], g.perm[j]));
      }
    }
  }
  CellClasses out;
  auto vl = vertices.labels(&out.v);
  auto el = edges.labels(&out.e);
  auto fl = faces.labels(&out.f);
  out.vertex_class.resize(t);
  out.edge_class.resize(t);
  out.face_class.resize(t);
  for (std::size_t tet = 0; tet < t; ++tet) {
    for (std::size_t k = 0; k < 4; ++k) {
      out.vertex_class[tet][k] = vl[4 * tet + k];
      out.face_class[tet][k] = fl[4 * tet + k];
    }
    for (std::size_t k = 0; k < 6; ++k)
      out.edge_class[tet][k] = el[6 * tet + k];
  }
  return out;
}

std::vector<std::vector<EdgeStep>> edge_cycles(const Triangulation &tri) {
  const auto cells = cell_classes(tri);
  std::vector<std::vector<EdgeStep>> cycles(cells.e);
  std::vector<bool> started(cells.e, false);
  for (std::size_t tet = 0; tet < tri.tet_count(); ++tet) {
    for (int k = 0; k < 6; ++k) {
      const auto cls = cells.edge_class[tet][static_cast<std::size_t>(k)];
      if (started[cls])
        continue;
      started[cls] = true;
      auto [a, b] = edge_vertices(k);
      int exit = 0;
      while (exit == a || exit == b)
        ++exit;
      const EdgeStep first{tet, a, b, exit};
      EdgeStep cur = first;
      auto &cycle = cycles[cls];
      for (std::size_t guard = 0;; ++guard) {
        if (guard > 6 * tri.tet_count())
          throw Error(ErrorKind::InconsistentPairing, "edge cycle does not close");
        cycle.push_back(cur);
        const auto &g = tri.gluing(cur.tet, cur.exit);
        EdgeStep next{g.neighbor, g.perm[cur.a], g.perm[cur.b], 0};
        const int entered = g.perm[cur.exit];
        next.exit = 6 - next.a - next.b - entered;
        if (next.tet == first.tet && edge_index(next.a, next.b) == edge_index(first.a, first.b) &&
            next.exit == first.exit) {
          if (next.a != first.a)
            throw Error(ErrorKind::InconsistentPairing, "edge cycle reverses its edge");
          break;
        }
        cur = next;
      }
    }
  }
  return cycles;
}

BoundaryProfile boundary_profile(const Triangulation &tri) {
  const auto t = tri.tet_count();
  const auto cells = cell_classes(tri);
  // link vertex (tet, i, j): the point of the cusp triangle at i on edge ij
  auto key = [](std::size_t tet, int i, int j) { return 16 * tet + 4 * i + j; };
  UnionFind link_vertices(16 * t);
  UnionFind link_triangles(4 * t);
  for (std::size_t tet = 0; tet < t; ++tet)
    for (int f = 0; f < 4; ++f) {
      const auto &g = tri.gluing(tet, f);
      for (int i = 0; i < 4; ++i) {
        if (i == f)
          continue;
        link_triangles.unite(4 * tet + i, 4 * g.neighbor + g.perm[i]);
        for (int j = 0; j < 4; ++j)
          if (j != i && j != f)
            link_vertices.unite(key(tet, i, j), key(g.neighbor, g.perm[i], g.perm[j]));
      }
    }

  BoundaryProfile out;
  out.components.resize(cells.v);
  std::vector<std::size_t> component_root(cells.v, SIZE_MAX);
  std::vector<std::map<std::size_t, bool>> vertex_roots(cells.v);
  for (std::size_t tet = 0; tet < t; ++tet)
    for (int i = 0; i < 4; ++i) {
      const auto x = cells.vertex_class[tet][static_cast<std::size_t>(i)];
      auto &comp = out.components[x];
      comp.vertex_class = x;
      ++comp.triangles;
      const auto root = link_triangles.find(4 * tet + i);
      if (component_root[x] == SIZE_MAX)
        component_root[x] = root;
      else if (component_root[x] != root)
        throw Error(ErrorKind::DisconnectedLink,
                    "link of vertex class " + std::to_string(x) + " is disconnected");
      for (int j = 0; j < 4; ++j)
        if (j != i)
          vertex_roots[x][link_vertices.find(key(tet, i, j))] = true;
    }
  for (std::size_t x = 0; x < cells.v; ++x) {
    auto &comp = out.components[x];
    // V - E + F with E = 3F/2
    comp.euler_characteristic =
        static_cast<long>(vertex_roots[x].size()) - static_cast<long>(comp.triangles) / 2;
    if (comp.triangles % 2 != 0 || comp.euler_characteristic > 2 || comp.euler_characteristic % 2)
      throw Error(ErrorKind::DisconnectedLink,
                  "link of vertex class " + std::to_string(x) + " is not a closed orientable surface");
    comp.genus = (2 - comp.euler_characteristic) / 2;
    comp.is_cusp = comp.euler_characteristic != 2;
    if (comp.is_cusp) {
      ++out.c;
      out.h += static_cast<std::size_t>(comp.genus);
    }
  }
  return out;
}

} // namespace pglsym
