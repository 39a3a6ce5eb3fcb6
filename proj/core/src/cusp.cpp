#include "pglsym/cusp.hpp"

#include "pglsym/error.hpp"
#include "pglsym/union_find.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>

namespace pglsym {

namespace {

constexpr std::size_t key3(std::size_t tet, int i, int j) { return 16 * tet + 4 * i + j; }
constexpr std::size_t key4(std::size_t tet, int i, int j, int k) {
  return 64 * tet + 16 * i + 4 * j + k;
}
int fourth(int i, int j, int k) { return 6 - i - j - k; }
bool distinct(int i, int j, int k) { return i != j && j != k && i != k; }

// Unsigned classes of the valid keys, labelled in key order.
std::vector<std::size_t> plain_classes(UnionFind &uf, const std::vector<bool> &valid,
                                       std::size_t &count) {
  std::vector<std::size_t> label(valid.size(), SIZE_MAX), root_label(valid.size(), SIZE_MAX);
  count = 0;
  for (std::size_t k = 0; k < valid.size(); ++k) {
    if (!valid[k])
      continue;
    auto r = uf.find(k);
    if (root_label[r] == SIZE_MAX)
      root_label[r] = count++;
    label[k] = root_label[r];
  }
  return label;
}

// Oriented names modulo identifications and reversal. The smallest name of
// each generator is its positive representative.
std::vector<SignedCell> signed_classes(UnionFind &uf, const std::vector<bool> &valid,
                                       const std::function<std::size_t(std::size_t)> &opposite,
                                       std::size_t &count, std::vector<std::size_t> &reps) {
  std::vector<SignedCell> out(valid.size(), SignedCell{SIZE_MAX, 0});
  std::map<std::size_t, SignedCell> by_root;
  count = 0;
  for (std::size_t k = 0; k < valid.size(); ++k) {
    if (!valid[k])
      continue;
    const auto r = uf.find(k);
    auto it = by_root.find(r);
    if (it == by_root.end()) {
      const auto ro = uf.find(opposite(k));
      if (ro == r)
        throw Error(ErrorKind::InconsistentPairing, "an edge is identified with its reverse");
      by_root[r] = {count, 1};
      by_root[ro] = {count, -1};
      reps.push_back(k);
      ++count;
      it = by_root.find(r);
    }
    out[k] = it->second;
  }
  return out;
}

// Sign of (i, j, a, b) picks the order of the remaining pair: returns the
// pair (k, l) with (i j k l) odd.
std::pair<int, int> odd_completion(int i, int j) {
  int a = -1, b = -1;
  for (int x = 0; x < 4; ++x)
    if (x != i && x != j)
      (a < 0 ? a : b) = x;
  if (permutation_sign(i, j, a, b) < 0)
    return {a, b};
  return {b, a};
}

std::string name(const char *prefix, std::size_t tet, std::initializer_list<int> idx) {
  std::string s = prefix;
  for (int x : idx)
    s += std::to_string(x);
  return s + "_" + std::to_string(tet);
}

} // namespace

CuspSurface::CuspSurface(const Triangulation &tri) : tri_(tri) {
  const auto t = tri.tet_count();
  const auto profile = boundary_profile(tri);
  if (profile.c == 0)
    throw Error(ErrorKind::ClosedManifold, "triangulation has no cusps");
  const auto cells = cell_classes(tri);
  component_ = cells.vertex_class;
  for (const auto &comp : profile.components)
    component_genus_.push_back(comp.genus);

  // standard: vertices V^{ij}
  UnionFind uv(16 * t);
  std::vector<bool> valid3(16 * t, false);
  for (std::size_t tet = 0; tet < t; ++tet)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        valid3[key3(tet, i, j)] = i != j;
  for (std::size_t tet = 0; tet < t; ++tet)
    for (int f = 0; f < 4; ++f) {
      const auto &g = tri.gluing(tet, f);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          if (i != j && i != f && j != f)
            uv.unite(key3(tet, i, j), key3(g.neighbor, g.perm[i], g.perm[j]));
    }
  std::size_t corner_count = 0;
  const auto corner = plain_classes(uv, valid3, corner_count);

  // standard edges E^{ijk} and hexagon edges share the key space
  std::vector<bool> valid4(64 * t, false);
  for (std::size_t tet = 0; tet < t; ++tet)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k)
          valid4[key4(tet, i, j, k)] = distinct(i, j, k);
  auto swap_last = [](std::size_t key) {
    const auto tet = key / 64;
    const int i = (key / 16) % 4, j = (key / 4) % 4, k = key % 4;
    return key4(tet, i, k, j);
  };
  auto other_last = [](std::size_t key) {
    const auto tet = key / 64;
    const int i = (key / 16) % 4, j = (key / 4) % 4, k = key % 4;
    return key4(tet, i, j, fourth(i, j, k));
  };
  auto unite_across_fourth = [&](UnionFind &uf) {
    for (std::size_t tet = 0; tet < t; ++tet)
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          for (int k = 0; k < 4; ++k) {
            if (!distinct(i, j, k))
              continue;
            const auto &g = tri.gluing(tet, fourth(i, j, k));
            uf.unite(key4(tet, i, j, k), key4(g.neighbor, g.perm[i], g.perm[j], g.perm[k]));
          }
  };

  {
    UnionFind ue(64 * t);
    unite_across_fourth(ue);
    std::vector<std::size_t> reps;
    standard_edge_of_ = signed_classes(ue, valid4, swap_last, standard_.edges, reps);
    standard_.vertices = corner_count;
    standard_.faces = 4 * t;
    standard_.d1 = IntMatrix(standard_.vertices, standard_.edges);
    for (std::size_t e = 0; e < reps.size(); ++e) {
      const auto key = reps[e];
      const auto tet = key / 64;
      const int i = (key / 16) % 4, j = (key / 4) % 4, k = key % 4;
      standard_.d1.add(corner[key3(tet, i, k)], e, 1);
      standard_.d1.add(corner[key3(tet, i, j)], e, -1);
      standard_.edge_component.push_back(component_[tet][static_cast<std::size_t>(i)]);
      standard_.edge_names.push_back(name("E", tet, {i, j, k}));
    }
    standard_quotient_ = IntMatrix(standard_.edges, 12 * t);
    for (std::size_t tet = 0; tet < t; ++tet)
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          for (int k = j + 1; k < 4; ++k)
            if (i != j && i != k) {
              const auto e = standard_edge(tet, i, j, k);
              standard_quotient_.add(e.index, standard_name(tet, i, j, k).index, e.sign);
            }
    standard_.d2 = IntMatrix(standard_.edges, standard_.faces);
    for (std::size_t tet = 0; tet < t; ++tet)
      for (int i = 0; i < 4; ++i) {
        // boundary E^{ijk} + E^{ikl} + E^{ilj} with (i j k l) odd
        const int j = (i + 1) % 4;
        auto [k, l] = odd_completion(i, j);
        for (auto [a, b] : {std::pair{j, k}, std::pair{k, l}, std::pair{l, j}}) {
          const auto c = standard_edge(tet, i, a, b);
          standard_.d2.add(c.index, 4 * tet + static_cast<std::size_t>(i), c.sign);
        }
      }
  }

  {
    // pentagon: vertices v^{ij} glued across face j
    UnionFind up(16 * t);
    for (std::size_t tet = 0; tet < t; ++tet)
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
          if (i == j)
            continue;
          const auto &g = tri.gluing(tet, j);
          up.unite(key3(tet, i, j), key3(g.neighbor, g.perm[i], g.perm[j]));
        }
    std::size_t vcount = 0;
    const auto pv = plain_classes(up, valid3, vcount);
    pentagon_.vertices = vcount;
    pentagon_.edges = 12 * t;
    pentagon_.faces = 4 * t + corner_count;
    pentagon_.d1 = IntMatrix(pentagon_.vertices, pentagon_.edges);
    pentagon_.d2 = IntMatrix(pentagon_.edges, pentagon_.faces);
    for (std::size_t tet = 0; tet < t; ++tet)
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
          if (i == j)
            continue;
          const auto e = pentagon_edge(tet, i, j);
          auto [k, l] = odd_completion(i, j);
          pentagon_.d1.add(pv[key3(tet, i, k)], e, 1);
          pentagon_.d1.add(pv[key3(tet, i, l)], e, -1);
          pentagon_.d2.add(e, 4 * tet + static_cast<std::size_t>(i), 1);
          pentagon_.d2.add(e, 4 * t + corner[key3(tet, i, j)], 1);
          pentagon_.edge_component.push_back(component_[tet][static_cast<std::size_t>(i)]);
          pentagon_.edge_names.push_back(name("e", tet, {i, j}));
        }
  }

  {
    // hexagon: vertices v^{ijk} glued across the fourth face
    UnionFind uh(64 * t);
    unite_across_fourth(uh);
    std::size_t vcount = 0;
    const auto hv = plain_classes(uh, valid4, vcount);

    UnionFind ug(64 * t);
    std::vector<std::size_t> gamma_reps, beta_reps;
    std::size_t gamma_count = 0, beta_count = 0;
    hex_gamma_of_ = signed_classes(ug, valid4, other_last, gamma_count, gamma_reps);
    UnionFind ub(64 * t);
    unite_across_fourth(ub);
    hex_beta_of_ = signed_classes(ub, valid4, swap_last, beta_count, beta_reps);
    for (auto &c : hex_beta_of_)
      if (c.sign != 0)
        c.index += gamma_count;

    hexagon_.vertices = vcount;
    hexagon_.edges = gamma_count + beta_count;
    hexagon_.faces = 4 * t + corner_count;
    hexagon_.d1 = IntMatrix(hexagon_.vertices, hexagon_.edges);
    for (std::size_t e = 0; e < hexagon_.edges; ++e) {
      const bool is_beta = e >= gamma_count;
      const auto key = is_beta ? beta_reps[e - gamma_count] : gamma_reps[e];
      const auto tet = key / 64;
      const int i = (key / 16) % 4, j = (key / 4) % 4, k = key % 4;
      hex_names_.push_back({is_beta, tet, i, j, k});
      const auto end = is_beta ? key4(tet, i, k, j) : key4(tet, i, j, fourth(i, j, k));
      hexagon_.d1.add(hv[end], e, 1);
      hexagon_.d1.add(hv[key], e, -1);
      hexagon_.edge_component.push_back(component_[tet][static_cast<std::size_t>(i)]);
      hexagon_.edge_names.push_back(name(is_beta ? "beta" : "gamma", tet, {i, j, k}));
    }
    hexagon_.d2 = IntMatrix(hexagon_.edges, hexagon_.faces);
    for (std::size_t tet = 0; tet < t; ++tet)
      for (int i = 0; i < 4; ++i) {
        const auto face = 4 * tet + static_cast<std::size_t>(i);
        const int j = (i + 1) % 4;
        auto [k, l] = odd_completion(i, j);
        const std::array<std::array<int, 3>, 3> sides{{{j, k, l}, {k, l, j}, {l, j, k}}};
        for (const auto &[a, b, c] : sides) {
          // beta^{iab} then gamma^{iba}
          const auto be = hexagon_beta(tet, i, a, b);
          hexagon_.d2.add(be.index, face, be.sign);
          const auto ga = hexagon_gamma(tet, i, b, a);
          hexagon_.d2.add(ga.index, face, ga.sign);
          (void)c;
        }
        for (int x = 0; x < 4; ++x) {
          if (x == i)
            continue;
          // the corner (i, x) is traversed backwards by its polygon
          auto [y, z] = odd_completion(i, x);
          (void)y;
          const auto ga = hexagon_gamma(tet, i, x, z);
          hexagon_.d2.add(ga.index, 4 * t + corner[key3(tet, i, x)], -ga.sign);
        }
      }
  }
}

std::size_t CuspSurface::component(std::size_t tet, int i) const {
  return component_.at(tet)[static_cast<std::size_t>(i)];
}

SignedCell CuspSurface::standard_edge(std::size_t tet, int i, int j, int k) const {
  if (tet >= tri_.tet_count() || !distinct(i, j, k))
    throw Error(ErrorKind::OutOfRange, "no standard edge " + name("E", tet, {i, j, k}));
  return standard_edge_of_[key4(tet, i, j, k)];
}

SignedCell CuspSurface::standard_name(std::size_t tet, int i, int j, int k) const {
  if (tet >= tri_.tet_count() || !distinct(i, j, k))
    throw Error(ErrorKind::OutOfRange, "no standard edge " + name("E", tet, {i, j, k}));
  const int lo = std::min(j, k), hi = std::max(j, k);
  // position of {lo, hi} among the three pairs avoiding i
  int pos = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      if (a == i || b == i)
        continue;
      if (a == lo && b == hi)
        return {12 * tet + static_cast<std::size_t>(3 * i + pos), j < k ? 1 : -1};
      ++pos;
    }
  return {};
}

std::size_t CuspSurface::pentagon_edge(std::size_t tet, int i, int j) const {
  if (tet >= tri_.tet_count() || i == j || i < 0 || j < 0 || i > 3 || j > 3)
    throw Error(ErrorKind::OutOfRange, "no pentagon edge " + name("e", tet, {i, j}));
  return 12 * tet + static_cast<std::size_t>(3 * i + (j > i ? j - 1 : j));
}

std::array<std::size_t, 3> CuspSurface::pentagon_name(std::size_t edge) const {
  const auto tet = edge / 12;
  const auto r = edge % 12;
  const auto i = r / 3;
  auto j = r % 3;
  if (j >= i)
    ++j;
  return {tet, i, j};
}

SignedCell CuspSurface::hexagon_gamma(std::size_t tet, int i, int j, int k) const {
  if (tet >= tri_.tet_count() || !distinct(i, j, k))
    throw Error(ErrorKind::OutOfRange, "no hexagon edge " + name("gamma", tet, {i, j, k}));
  return hex_gamma_of_[key4(tet, i, j, k)];
}

SignedCell CuspSurface::hexagon_beta(std::size_t tet, int i, int j, int k) const {
  if (tet >= tri_.tet_count() || !distinct(i, j, k))
    throw Error(ErrorKind::OutOfRange, "no hexagon edge " + name("beta", tet, {i, j, k}));
  return hex_beta_of_[key4(tet, i, j, k)];
}

BoundaryCurve normalize_curve(const CuspSurface &surface, const SegmentPath &path) {
  const auto &tri = surface.triangulation();
  BoundaryCurve curve;
  if (path.empty())
    return curve;
  for (const auto &s : path)
    if (s.tet >= tri.tet_count() || s.vertex == s.enter || s.vertex == s.exit || s.vertex < 0 ||
        s.vertex > 3 || s.enter < 0 || s.enter > 3 || s.exit < 0 || s.exit > 3)
      throw Error(ErrorKind::MalformedInput, "invalid curve segment");
  curve.component = surface.component(path.front().tet, path.front().vertex);
  for (std::size_t k = 0; k < path.size(); ++k) {
    const auto &s = path[k];
    const auto &next = path[(k + 1) % path.size()];
    const auto &g = tri.gluing(s.tet, s.exit);
    if (next.tet != g.neighbor || next.vertex != g.perm[s.vertex] ||
        next.enter != g.perm[s.exit])
      throw Error(ErrorKind::NotClosed, "segment " + std::to_string(k) +
                                            " does not continue into segment " +
                                            std::to_string((k + 1) % path.size()));
  }
  // cancel segments that leave through the face they came in by
  std::vector<Segment> segs(path.begin(), path.end());
  for (;;) {
    auto it = std::find_if(segs.begin(), segs.end(),
                           [](const Segment &s) { return s.enter == s.exit; });
    if (it == segs.end())
      break;
    if (segs.size() <= 2) {
      segs.clear();
      break;
    }
    const auto k = static_cast<std::size_t>(it - segs.begin());
    const auto m = segs.size();
    const auto prev = (k + m - 1) % m, next = (k + 1) % m;
    Segment merged{segs[prev].tet, segs[prev].vertex, segs[prev].enter, segs[next].exit};
    std::vector<Segment> rest;
    for (std::size_t q = 1; q + 2 < m; ++q)
      rest.push_back(segs[(next + q) % m]);
    rest.push_back(merged);
    segs = std::move(rest);
  }
  curve.segments = std::move(segs);
  return curve;
}

CurveChains curve_chains(const CuspSurface &surface, const BoundaryCurve &curve) {
  const auto &tri = surface.triangulation();
  CurveChains out{zero_vector(surface.pentagon().edges), zero_vector(surface.standard().edges),
                  zero_vector(surface.hexagon().edges)};
  const auto &segs = curve.segments;
  for (std::size_t k = 0; k < segs.size(); ++k) {
    const auto &s = segs[k];
    const auto &next = segs[(k + 1) % segs.size()];
    if (s.enter == s.exit)
      throw Error(ErrorKind::NotClosed, "curve is not normalized");
    const int i = s.vertex, a = s.enter, b = s.exit, c = fourth(i, a, b);
    const auto &g = tri.gluing(s.tet, b);
    if (next.tet != g.neighbor || next.vertex != g.perm[i] || next.enter != g.perm[b])
      throw Error(ErrorKind::NotClosed, "segment " + std::to_string(k) + " does not continue");

    out.pentagon[surface.pentagon_edge(s.tet, i, c)] += permutation_sign(i, c, b, a) < 0 ? 1 : -1;

    const auto ga = surface.hexagon_gamma(s.tet, i, c, b);
    out.hexagon[ga.index] += ga.sign;

    const int next_corner = fourth(next.vertex, next.enter, next.exit);
    if (next_corner != g.perm[c]) {
      const auto e = surface.standard_edge(s.tet, i, c, a);
      out.standard[e.index] += e.sign;
      const auto be = surface.hexagon_beta(s.tet, i, c, a);
      out.hexagon[be.index] += be.sign;
    }
  }
  return out;
}

IntMatrix iota_matrix(const CuspSurface &surface) {
  const auto t = surface.triangulation().tet_count();
  IntMatrix m(surface.pentagon().edges, surface.standard_name_count());
  for (std::size_t tet = 0; tet < t; ++tet)
    for (int i = 0; i < 4; ++i)
      for (int j2 = 0; j2 < 4; ++j2)
        for (int k2 = j2 + 1; k2 < 4; ++k2) {
          if (!distinct(i, j2, k2))
            continue;
          const auto name = surface.standard_name(tet, i, j2, k2);
          // +1 if j = k', -1 if j = j'
          m.add(surface.pentagon_edge(tet, i, k2), name.index, 1);
          m.add(surface.pentagon_edge(tet, i, j2), name.index, -1);
        }
  return m;
}

namespace {

std::optional<std::size_t> chain_component(const IntVector &chain,
                                           const std::vector<std::size_t> &edge_component) {
  std::optional<std::size_t> comp;
  for (std::size_t e = 0; e < chain.size(); ++e) {
    if (chain[e] == 0)
      continue;
    if (comp && *comp != edge_component[e])
      return SIZE_MAX;
    comp = edge_component[e];
  }
  return comp;
}

} // namespace

Integer iota_pairing(const CuspSurface &surface, const IntVector &pentagon_chain,
                     const IntVector &standard_chain) {
  if (pentagon_chain.size() != surface.pentagon().edges ||
      standard_chain.size() != surface.standard().edges)
    throw Error(ErrorKind::DimensionMismatch, "chains do not match the cusp surface");
  const auto ca = chain_component(pentagon_chain, surface.pentagon().edge_component);
  const auto cb = chain_component(standard_chain, surface.standard().edge_component);
  if (ca && cb && *ca != SIZE_MAX && *cb != SIZE_MAX && *ca != *cb)
    throw Error(ErrorKind::ComponentMismatch, "chains lie on different boundary components");
  const Integer twice =
      dot(pentagon_chain, iota_matrix(surface) * (surface.standard_quotient().transpose() * standard_chain));
  if (twice % 2 != 0)
    throw Error(ErrorKind::NotAComplex, "pentagon chain is not a cycle");
  return twice / 2;
}

Integer curve_intersection(const CuspSurface &surface, const BoundaryCurve &a,
                           const BoundaryCurve &b) {
  if (a.component != b.component)
    return 0;
  return iota_pairing(surface, curve_chains(surface, a).pentagon,
                      curve_chains(surface, b).standard);
}

namespace {

// Closed walks in the dual graph of the cusp triangles of one component:
// one per non-tree side of a breadth-first tree rooted at `root`.
std::vector<SegmentPath> fundamental_cycles(const Triangulation &tri, std::size_t root) {
  const auto nodes = 4 * tri.tet_count();
  std::vector<std::size_t> parent(nodes, SIZE_MAX), depth(nodes, 0);
  std::vector<int> parent_face(nodes, -1);
  std::vector<bool> seen(nodes, false);
  auto across = [&](std::size_t node, int f) {
    const auto &g = tri.gluing(node / 4, f);
    return 4 * g.neighbor + static_cast<std::size_t>(g.perm[static_cast<int>(node % 4)]);
  };
  std::queue<std::size_t> queue;
  queue.push(root);
  seen[root] = true;
  std::vector<std::size_t> order;
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop();
    order.push_back(u);
    for (int f = 0; f < 4; ++f) {
      if (f == static_cast<int>(u % 4))
        continue;
      const auto v = across(u, f);
      if (seen[v])
        continue;
      seen[v] = true;
      parent[v] = u;
      depth[v] = depth[u] + 1;
      parent_face[v] = tri.gluing(u / 4, f).perm[f];
      queue.push(v);
    }
  }
  struct Crossing {
    std::size_t node;
    int face;
  };
  std::vector<SegmentPath> cycles;
  for (const auto u : order)
    for (int f = 0; f < 4; ++f) {
      if (f == static_cast<int>(u % 4))
        continue;
      const auto &g = tri.gluing(u / 4, f);
      const auto v = across(u, f);
      const int fv = g.perm[f];
      if (parent[v] == u && parent_face[v] == fv)
        continue;
      if (parent[u] == v && parent_face[u] == f)
        continue;
      if (std::pair{v, fv} < std::pair{u, f})
        continue;
      // climb to the lowest common ancestor
      std::vector<Crossing> down, up;
      auto a = u, b = v;
      while (a != b) {
        if (depth[a] >= depth[b]) {
          const auto p = parent[a];
          down.push_back({p, tri.gluing(a / 4, parent_face[a]).perm[parent_face[a]]});
          a = p;
        } else {
          up.push_back({b, parent_face[b]});
          b = parent[b];
        }
      }
      std::vector<Crossing> walk(down.rbegin(), down.rend());
      walk.push_back({u, f});
      walk.insert(walk.end(), up.begin(), up.end());
      SegmentPath path;
      for (std::size_t k = 0; k < walk.size(); ++k) {
        const auto &prev = walk[(k + walk.size() - 1) % walk.size()];
        const int enter = tri.gluing(prev.node / 4, prev.face).perm[prev.face];
        path.push_back({walk[k].node / 4, static_cast<int>(walk[k].node % 4), enter, walk[k].face});
      }
      cycles.push_back(std::move(path));
    }
  return cycles;
}

bool next_combination(std::vector<std::size_t> &idx, std::size_t n) {
  const auto k = idx.size();
  for (std::size_t p = k; p-- > 0;) {
    if (idx[p] < n - k + p) {
      ++idx[p];
      for (std::size_t q = p + 1; q < k; ++q)
        idx[q] = idx[q - 1] + 1;
      return true;
    }
  }
  return false;
}

} // namespace

std::vector<BoundaryCurve> homology_basis_curves(const CuspSurface &surface) {
  const auto &tri = surface.triangulation();
  std::vector<BoundaryCurve> out;
  if (!tri.curves().empty()) {
    if (tri.curves().size() != surface.component_count())
      throw Error(ErrorKind::ComponentMismatch,
                  "curves given for " + std::to_string(tri.curves().size()) + " components, " +
                      "triangulation has " + std::to_string(surface.component_count()));
    for (std::size_t comp = 0; comp < tri.curves().size(); ++comp)
      for (const auto &path : tri.curves()[comp]) {
        auto curve = normalize_curve(surface, path);
        if (!curve.segments.empty() && curve.component != comp)
          throw Error(ErrorKind::ComponentMismatch,
                      "curve listed under component " + std::to_string(comp) +
                          " lies on component " + std::to_string(curve.component));
        curve.component = comp;
        out.push_back(std::move(curve));
      }
    return out;
  }

  for (std::size_t comp = 0; comp < surface.component_count(); ++comp) {
    const auto g = static_cast<std::size_t>(surface.genus(comp));
    if (g == 0)
      continue;
    std::vector<BoundaryCurve> candidates;
    std::vector<CurveChains> chains;
    bool found = false;
    for (std::size_t root = 0; root < 4 * tri.tet_count() && !found; ++root) {
      if (surface.component(root / 4, static_cast<int>(root % 4)) != comp)
        continue;
      for (const auto &path : fundamental_cycles(tri, root)) {
        auto curve = normalize_curve(surface, path);
        if (curve.segments.empty())
          continue;
        chains.push_back(curve_chains(surface, curve));
        candidates.push_back(std::move(curve));
      }
      const auto m = candidates.size();
      if (m < 2 * g)
        continue;
      std::vector<std::vector<Integer>> gram(m, std::vector<Integer>(m));
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
          gram[a][b] = iota_pairing(surface, chains[a].pentagon, chains[b].standard);
      std::vector<std::size_t> idx(2 * g);
      for (std::size_t q = 0; q < idx.size(); ++q)
        idx[q] = q;
      std::size_t budget = 200000;
      do {
        IntMatrix sub(2 * g, 2 * g);
        for (std::size_t a = 0; a < 2 * g; ++a)
          for (std::size_t b = 0; b < 2 * g; ++b)
            sub.set(a, b, gram[idx[a]][idx[b]]);
        const auto snf = smith_normal_form(sub);
        if (snf.rank() == 2 * g && snf.diagonal.back() == 1) {
          std::vector<BoundaryCurve> basis;
          for (auto q : idx)
            basis.push_back(candidates[q]);
          if (g == 1 && gram[idx[0]][idx[1]] < 0)
            std::swap(basis[0], basis[1]);
          for (auto &c : basis) {
            c.component = comp;
            out.push_back(std::move(c));
          }
          found = true;
          break;
        }
      } while (--budget > 0 && next_combination(idx, m));
    }
    if (!found)
      throw Error(ErrorKind::NoUnimodularBasis,
                  "no curve basis found for boundary component " + std::to_string(comp));
  }
  return out;
}

std::vector<BoundaryCurve> homology_basis_curves(const Triangulation &tri) {
  return homology_basis_curves(CuspSurface(tri));
}

CartanData cartan_data(int n) {
  if (n < 2)
    throw Error(ErrorKind::InvalidN, "n must be at least 2");
  const auto m = static_cast<std::size_t>(n - 1);
  CartanData c{IntMatrix(m, m), IntMatrix(m, m)};
  for (std::size_t i = 0; i < m; ++i) {
    c.A.set(i, i, 2);
    if (i + 1 < m) {
      c.A.set(i, i + 1, -1);
      c.A.set(i + 1, i, -1);
    }
    c.D.set(i, i, static_cast<long>(m - i));
  }
  return c;
}

std::size_t tensor_index(std::size_t generator, int r, int n) {
  if (r < 1 || r > n - 1)
    throw Error(ErrorKind::OutOfRange, "level " + std::to_string(r) + " outside 1.." +
                                           std::to_string(n - 1));
  return generator * static_cast<std::size_t>(n - 1) + static_cast<std::size_t>(r - 1);
}

IntVector tensor_lift(const IntVector &chain, int r, int n) {
  IntVector out = zero_vector(chain.size() * static_cast<std::size_t>(n - 1));
  for (std::size_t g = 0; g < chain.size(); ++g)
    out[tensor_index(g, r, n)] = chain[g];
  return out;
}

IntVector tensor_level(const IntVector &lifted, int r, int n) {
  const auto m = static_cast<std::size_t>(n - 1);
  IntVector out = zero_vector(lifted.size() / m);
  for (std::size_t g = 0; g < out.size(); ++g)
    out[g] = lifted[tensor_index(g, r, n)];
  return out;
}

IntVector delta_double_sum(const JBasis &basis, std::size_t tet, int i, int j, int r) {
  IntVector v = zero_vector(basis.dim());
  for (const auto &t : basis.lattice().points()) {
    if (t[static_cast<std::size_t>(i)] != r || point_kind(t) == PointKind::Vertex)
      continue;
    for (const auto &mp : midpoint_pairs(t))
      basis.accumulate(v, tet, mp.s, mp.edge, t[static_cast<std::size_t>(j)]);
  }
  return v;
}

IntVector delta_two_sum(const JBasis &basis, std::size_t tet, int i, int j, int r) {
  IntVector v = zero_vector(basis.dim());
  int k = -1, l = -1;
  for (int x = 0; x < 4; ++x)
    if (x != i && x != j)
      (k < 0 ? k : l) = x;
  for (const auto &s : basis.lattice().subsimplices()) {
    if (s[static_cast<std::size_t>(i)] == r - 1)
      basis.accumulate(v, tet, s, edge_index(i, j), 1);
    if (s[static_cast<std::size_t>(i)] == r)
      basis.accumulate(v, tet, s, edge_index(k, l), -1);
  }
  return v;
}

namespace {

Subsimplex gamma_subsimplex(int i, int j, int r, int n) {
  Subsimplex s{0, 0, 0, 0};
  s[static_cast<std::size_t>(i)] = r - 1;
  s[static_cast<std::size_t>(j)] = n - r - 1;
  return s;
}

// face points t of face opposite l with t_i = r
std::vector<LatticePoint> beta_face_points(const LatticeIndex &lattice, int i, int l, int r) {
  std::vector<LatticePoint> out;
  for (const auto &t : lattice.points())
    if (t[static_cast<std::size_t>(l)] == 0 && t[static_cast<std::size_t>(i)] == r &&
        point_kind(t) == PointKind::Face)
      out.push_back(t);
  return out;
}

// Signed exponents of z, z', z'' contributed by one hexagon edge at level r.
struct HexTerms {
  std::vector<std::tuple<std::size_t, PairClass, long>> shapes; // (column, class, exponent)
  long x_factors = 0;
};

HexTerms hexagon_terms(const CuspSurface &surface, const JBasis &basis, std::size_t edge, int r) {
  const auto &nm = surface.hexagon_name(edge);
  const int n = basis.n();
  HexTerms terms;
  if (!nm.is_beta) {
    const int eps = permutation_sign(nm.i, nm.j, nm.k, fourth(nm.i, nm.j, nm.k));
    const auto s = gamma_subsimplex(nm.i, nm.j, r, n);
    terms.shapes.emplace_back(basis.column(nm.tet, s), pair_class(edge_index(nm.i, nm.j)), -eps);
  } else {
    const int l = fourth(nm.i, nm.j, nm.k);
    const int eps = permutation_sign(nm.i, nm.j, nm.k, l);
    for (const auto &t : beta_face_points(basis.lattice(), nm.i, l, r)) {
      terms.x_factors += eps;
      for (const auto &mp : midpoint_pairs(t))
        terms.shapes.emplace_back(basis.column(nm.tet, mp.s), pair_class(mp.edge), eps);
    }
  }
  return terms;
}

} // namespace

BoundaryMaps boundary_maps(const CuspSurface &surface, const JComplex &cx) {
  const auto &basis = cx.basis();
  const int n = cx.n();
  const auto m = static_cast<std::size_t>(n - 1);
  const auto &pent = surface.pentagon();
  const auto &hex = surface.hexagon();
  const auto &std_ = surface.standard();
  BoundaryMaps out{IntMatrix(basis.dim(), pent.edges * m), IntMatrix(basis.dim(), hex.edges * m),
                   IntMatrix(std_.edges * m, basis.dim()),
                   IntMatrix(surface.standard_name_count() * m, basis.dim()),
                   IntMatrix(pent.edges * m, surface.standard_name_count() * m)};

  for (std::size_t e = 0; e < pent.edges; ++e) {
    const auto [tet, i, j] = surface.pentagon_name(e);
    for (int r = 1; r < n; ++r) {
      const auto v = delta_two_sum(basis, tet, static_cast<int>(i), static_cast<int>(j), r);
      const auto col = tensor_index(e, r, n);
      for (std::size_t q = 0; q < v.size(); ++q)
        out.delta.add(q, col, v[q]);
    }
  }

  for (std::size_t e = 0; e < hex.edges; ++e)
    for (int r = 1; r < n; ++r) {
      const auto col = tensor_index(e, r, n);
      for (const auto &[column, cls, exponent] : hexagon_terms(surface, basis, e, r).shapes) {
        switch (cls) {
        case PairClass::E01: out.delta_prime.add(column, col, exponent); break;
        case PairClass::E12: out.delta_prime.add(basis.half() + column, col, exponent); break;
        case PairClass::E02:
          out.delta_prime.add(column, col, -exponent);
          out.delta_prime.add(basis.half() + column, col, -exponent);
          break;
        }
      }
    }

  // gamma(s, e01) = E^{032} v0 + E^{123} v1 + E^{210} v2 + E^{301} v3
  // gamma(s, e12) = E^{021} v0 + E^{130} v1 + E^{203} v2 + E^{312} v3
  static constexpr std::array<std::array<int, 3>, 4> g01{{{0, 3, 2}, {1, 2, 3}, {2, 1, 0}, {3, 0, 1}}};
  static constexpr std::array<std::array<int, 3>, 4> g12{{{0, 2, 1}, {1, 3, 0}, {2, 0, 3}, {3, 1, 2}}};
  for (std::size_t tet = 0; tet < basis.tet_count(); ++tet)
    for (const auto &s : basis.lattice().subsimplices())
      for (auto which : {PairClass::E01, PairClass::E12}) {
        const auto col = basis.index(tet, s, which);
        const auto &names = which == PairClass::E01 ? g01 : g12;
        for (const auto &[a, b, c] : names) {
          const auto edge = surface.standard_name(tet, a, b, c);
          const int level = s[static_cast<std::size_t>(a)];
          // v = e_{level+1} - e_level, with e_0 = e_n = 0
          if (level + 1 <= n - 1)
            out.gamma_local.add(tensor_index(edge.index, level + 1, n), col, edge.sign);
          if (level >= 1)
            out.gamma_local.add(tensor_index(edge.index, level, n), col, -edge.sign);
        }
      }

  IntMatrix quotient(std_.edges * m, surface.standard_name_count() * m);
  for (const auto &[key, value] : surface.standard_quotient().entries())
    for (int r = 1; r < n; ++r)
      quotient.set(tensor_index(key.first, r, n), tensor_index(key.second, r, n), value);
  out.gamma = quotient * out.gamma_local;

  const auto iota = iota_matrix(surface);
  for (const auto &[key, value] : iota.entries())
    for (int r = 1; r < n; ++r)
      out.iota.set(tensor_index(key.first, r, n), tensor_index(key.second, r, n), value);
  return out;
}

CuspSystem cusp_system(const CuspSurface &surface, const JComplex &cx,
                       const std::vector<BoundaryCurve> &curves) {
  const auto &basis = cx.basis();
  const int n = cx.n();
  CuspSystem sys;
  const auto rows = curves.size() * static_cast<std::size_t>(n - 1);
  sys.A = IntMatrix(rows, basis.half());
  sys.B = IntMatrix(rows, basis.half());
  std::size_t row = 0;
  for (std::size_t c = 0; c < curves.size(); ++c) {
    const auto hex = curve_chains(surface, curves[c]).hexagon;
    for (int r = 1; r < n; ++r, ++row) {
      sys.rows.push_back({c, r});
      long c_sum = 0, x_sum = 0;
      for (std::size_t e = 0; e < hex.size(); ++e) {
        if (hex[e] == 0)
          continue;
        const long mult = hex[e].get_si();
        const auto terms = hexagon_terms(surface, basis, e, r);
        x_sum += mult * terms.x_factors;
        for (const auto &[column, cls, exponent] : terms.shapes) {
          const long x = mult * exponent;
          switch (cls) {
          case PairClass::E01: sys.A.add(row, column, x); break;
          case PairClass::E12: sys.B.add(row, column, x); break;
          case PairClass::E02:
            sys.A.add(row, column, -x);
            sys.B.add(row, column, -x);
            c_sum += x;
            break;
          }
        }
      }
      sys.eps.push_back(((c_sum + x_sum) % 2 == 0) ? 1 : -1);
    }
  }
  return sys;
}

std::vector<Complex> evaluate_cusp_system(const CuspSystem &sys, const ShapeAssignment &z) {
  // dividing by eps = multiplying by it, which gives C(z)
  return evaluate_system(GluingSystem{sys.A, sys.B, sys.eps}, z);
}

Complex cusp_cocycle(const CuspSurface &surface, const ShapeAssignment &z,
                     const IntVector &hexagon_chain, int r) {
  const JBasis basis(surface.triangulation().tet_count(), z.n());
  ScaledProduct acc;
  for (std::size_t e = 0; e < hexagon_chain.size(); ++e) {
    if (hexagon_chain[e] == 0)
      continue;
    const auto &nm = surface.hexagon_name(e);
    const int eps = permutation_sign(nm.i, nm.j, nm.k, fourth(nm.i, nm.j, nm.k));
    const Integer mult = hexagon_chain[e];
    if (!nm.is_beta) {
      const auto s = gamma_subsimplex(nm.i, nm.j, r, z.n());
      acc.multiply_power(z.value(basis.lattice(), nm.tet, s, edge_index(nm.i, nm.j)),
                         -eps * mult);
    } else {
      const int l = fourth(nm.i, nm.j, nm.k);
      for (const auto &t : beta_face_points(basis.lattice(), nm.i, l, r)) {
        Complex x = -1.0;
        for (const auto &mp : midpoint_pairs(t))
          x *= z.value(basis.lattice(), nm.tet, mp.s, mp.edge);
        acc.multiply_power(x, eps * mult);
      }
    }
  }
  return acc.value();
}

HomologyCoordinates::HomologyCoordinates(const CuspSurface &surface,
                                         const std::vector<BoundaryCurve> &curves)
    : basis_size_(curves.size()), solver_([&] {
        std::vector<IntVector> cols;
        for (const auto &c : curves)
          cols.push_back(curve_chains(surface, c).standard);
        return IntMatrix::from_columns(cols, surface.standard().edges).hconcat(surface.standard().d2);
      }()) {}

IntVector HomologyCoordinates::coordinates(const IntVector &standard_cycle) const {
  auto pre = solver_.preimage(standard_cycle);
  if (!pre)
    throw Error(ErrorKind::NotAComplex, "chain is not a combination of basis cycles and boundaries");
  return IntVector(pre->begin(), pre->begin() + static_cast<long>(basis_size_));
}

} // namespace pglsym
