#include "pglsym/verify.hpp"

#include "pglsym/cusp.hpp"
#include "pglsym/error.hpp"
#include "pglsym/gluing.hpp"
#include "pglsym/homology.hpp"
#include "pglsym/jcomplex.hpp"

#include <algorithm>
#include <future>
#include <sstream>

namespace pglsym {

bool VerificationReport::pass() const {
  for (const auto &c : checks)
    if (!c.passed)
      return false;
  return true;
}

void VerificationReport::add(std::string id, std::string ref, bool passed, std::string details) {
  checks.push_back({std::move(id), std::move(ref), passed, std::move(details)});
}

void VerificationReport::append(const VerificationReport &other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

namespace {

VerificationReport start(const Triangulation &tri, int n) {
  VerificationReport r;
  r.triangulation = tri.name();
  r.n = n;
  return r;
}

std::string str(const Integer &x) { return x.get_str(); }

std::string nonzero_summary(const IntMatrix &m) {
  if (m.is_zero())
    return "all zero";
  const auto &[key, value] = *m.entries().begin();
  return std::to_string(m.nonzeros()) + " nonzero entries, first at (" +
         std::to_string(key.first) + "," + std::to_string(key.second) + ") = " + str(value);
}

bool has_cusps(const Triangulation &tri) { return boundary_profile(tri).c > 0; }

// Omega(x_i, y_j) for the rows of X and Y.
IntMatrix omega_products(const IntMatrix &X, const IntMatrix &Y) {
  const auto m = X.cols() / 2;
  return X * symplectic_matrix(m) * Y.transpose();
}

// all points of the m-th dilated simplex, m >= 0
std::vector<Quad> simplex_points(int m) {
  std::vector<Quad> out;
  for (int a = 0; a <= m; ++a)
    for (int b = 0; a + b <= m; ++b)
      for (int c = 0; a + b + c <= m; ++c)
        out.push_back({a, b, c, m - a - b - c});
  return out;
}

std::vector<Perm> all_perms() {
  std::vector<Perm> out;
  std::array<int, 4> p{0, 1, 2, 3};
  do {
    Perm q;
    q.p = p;
    out.push_back(q);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

} // namespace

VerificationReport verify_symplectic(const Triangulation &tri, int n) {
  auto rep = start(tri, n);
  const JComplex cx(tri, n);
  const auto sys = gluing_system(cx);
  const auto AB = sys.AB();
  const auto profile = boundary_profile(tri);
  const auto P = cx.c1_dim();

  const auto expected = P - profile.c * static_cast<std::size_t>(n - 1);
  const auto rank = matrix_rank(AB);
  rep.add("rank", "rank(A|B) = P - c(n-1)", rank == expected,
          "P=" + std::to_string(P) + " c=" + std::to_string(profile.c) +
              " rank=" + std::to_string(rank) + " expected=" + std::to_string(expected));

  const auto gg = omega_products(AB, AB);
  rep.add("gluing_gluing", "omega(gluing row, gluing row) = 0", gg.is_zero(), nonzero_summary(gg));

  if (profile.c == 0)
    return rep;
  const CuspSurface surface(tri);
  const auto curves = homology_basis_curves(surface);
  const auto cs = cusp_system(surface, cx, curves);
  const auto CAB = cs.AB();
  const auto gc = omega_products(AB, CAB);
  rep.add("gluing_cusp", "omega(gluing row, cusp row) = 0", gc.is_zero(), nonzero_summary(gc));

  const auto cc = omega_products(CAB, CAB);
  const auto cartan = cartan_data(n);
  bool ok = true;
  std::string first_bad;
  for (std::size_t a = 0; a < cs.rows.size(); ++a)
    for (std::size_t b = 0; b < cs.rows.size(); ++b) {
      const auto &ra = cs.rows[a];
      const auto &rb = cs.rows[b];
      const Integer iota = curve_intersection(surface, curves[ra.curve], curves[rb.curve]);
      const Integer want =
          iota * cartan.A.at(static_cast<std::size_t>(ra.level - 1), static_cast<std::size_t>(rb.level - 1));
      if (cc.at(a, b) != want && ok) {
        ok = false;
        first_bad = "row " + std::to_string(a) + " vs " + std::to_string(b) + ": " +
                    str(cc.at(a, b)) + " != " + str(want);
      }
    }
  rep.add("cusp_cusp", "omega(cusp(a,r), cusp(b,s)) = iota(a,b) * A[r,s]", ok,
          ok ? std::to_string(cs.rows.size()) + " rows" : first_bad);

  if (n == 2) {
    bool twice = true;
    for (std::size_t a = 0; a < curves.size(); ++a)
      for (std::size_t b = 0; b < curves.size(); ++b)
        twice = twice && cc.at(a, b) == 2 * curve_intersection(surface, curves[a], curves[b]);
    rep.add("cusp_cusp_twice", "at n = 2 cusp products are twice the intersection form", twice);
  }
  return rep;
}

VerificationReport verify_homology(const Triangulation &tri, int n) {
  auto rep = start(tri, n);
  const JComplex cx(tri, n);
  const auto &alpha = cx.alpha();
  const auto &beta = cx.beta();
  const auto &beta_star = cx.beta_star();
  const auto &alpha_star = cx.alpha_star();

  const auto ba = beta * alpha;
  rep.add("beta_alpha", "beta o alpha = 0", ba.is_zero(), nonzero_summary(ba));
  const auto bsb = beta_star * beta;
  rep.add("betastar_beta", "beta* o beta = 0", bsb.is_zero(), nonzero_summary(bsb));
  const auto asbs = alpha_star * beta_star;
  rep.add("alphastar_betastar", "alpha* o beta* = 0", asbs.is_zero(), nonzero_summary(asbs));
  const auto adj = beta_star - (symplectic_matrix(cx.basis().half()) * beta).transpose();
  rep.add("betastar_adjoint", "<beta* x, p> = omega(x, beta p)", adj.is_zero(),
          nonzero_summary(adj));

  const auto groups = chain_homology({alpha, beta, beta_star, alpha_star});
  // groups[k] sits on C0, C1, J, C1, C0; they are H5 .. H1
  const auto &H5 = groups[0], &H4 = groups[1], &H3 = groups[2], &H2 = groups[3], &H1 = groups[4];
  const Integer nn = n;
  rep.add("H5", "H5 = 0", H5.is_trivial(), to_string(H5));
  rep.add("H4", "H4 = Z/n", H4 == AbelianGroup::cyclic(nn), to_string(H4));
  rep.add("H1", "H1 = Z/n", H1 == AbelianGroup::cyclic(nn), to_string(H1));

  const auto profile = boundary_profile(tri);
  const auto expected_rank = 2 * static_cast<std::size_t>(profile.h) * static_cast<std::size_t>(n - 1);
  rep.add("H3_rank", "rank H3 = 2h(n-1)", H3.free_rank == expected_rank,
          to_string(H3) + ", h=" + std::to_string(profile.h));

  const auto mhat = mhat_homology(tri);
  const auto torsion = hom_to_cyclic(mhat, nn);
  rep.add("H3_torsion", "torsion of H3 = Hom(H1(Mhat), Z/n)", H3.torsion_part() == torsion,
          "H1(Mhat)=" + to_string(mhat) + " expected " + to_string(torsion));
  const auto h2 = coefficient_homology(mhat, AbelianGroup::from_cyclic({0}), nn);
  rep.add("H2", "H2 = H1(Mhat; Z/n)", H2 == h2, to_string(H2) + " expected " + to_string(h2));
  return rep;
}

VerificationReport verify_boundary_maps(const Triangulation &tri, int n) {
  auto rep = start(tri, n);
  if (!has_cusps(tri))
    return rep;
  const JComplex cx(tri, n);
  const CuspSurface surface(tri);
  const auto curves = homology_basis_curves(surface);
  const auto maps = boundary_maps(surface, cx);
  const auto m = static_cast<std::size_t>(n - 1);

  for (const auto &[id, cpx] : {std::pair{"standard", &surface.standard()},
                                std::pair{"pentagon", &surface.pentagon()},
                                std::pair{"hexagon", &surface.hexagon()}}) {
    const auto dd = cpx->d1 * cpx->d2;
    rep.add(std::string("dd_") + id, std::string("boundary of boundary = 0 on the ") + id +
                                         " cellulation",
            dd.is_zero(), nonzero_summary(dd));
  }

  std::vector<CurveChains> chains;
  bool cycles = true;
  for (const auto &c : curves) {
    chains.push_back(curve_chains(surface, c));
    cycles = cycles && is_zero(surface.pentagon().d1 * chains.back().pentagon) &&
             is_zero(surface.standard().d1 * chains.back().standard) &&
             is_zero(surface.hexagon().d1 * chains.back().hexagon);
  }
  rep.add("curve_cycles", "basis curves are cycles in all three cellulations", cycles,
          std::to_string(curves.size()) + " curves");

  // per component the intersection form of the basis is unimodular
  bool unimodular = true;
  for (std::size_t comp = 0; comp < surface.component_count(); ++comp) {
    std::vector<std::size_t> idx;
    for (std::size_t a = 0; a < curves.size(); ++a)
      if (curves[a].component == comp)
        idx.push_back(a);
    IntMatrix gram(idx.size(), idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b)
        gram.set(a, b, curve_intersection(surface, curves[idx[a]], curves[idx[b]]));
    const auto snf = smith_normal_form(gram);
    unimodular = unimodular && idx.size() == 2 * static_cast<std::size_t>(surface.genus(comp)) &&
                 snf.rank() == idx.size() && (idx.empty() || snf.diagonal.back() == 1);
  }
  rep.add("curve_basis", "basis curves have unimodular intersection form", unimodular);

  const auto lhs = maps.delta.transpose() * symplectic_matrix(cx.basis().half());
  const auto rhs = maps.iota * maps.gamma_local;
  rep.add("delta_gamma_adjoint", "omega(delta a, x) = iota(a, gamma x) on all generators",
          lhs == rhs, nonzero_summary(lhs - rhs));

  bool kills = true;
  for (const auto &ch : chains)
    for (int r = 1; r < n; ++r)
      kills = kills && is_zero(cx.beta_star() * (maps.delta * tensor_lift(ch.pentagon, r, n)));
  rep.add("betastar_delta", "beta* o delta = 0 on cycles", kills);

  // gamma o delta on the curve basis against I (x) D A D
  const HomologyCoordinates coords(surface, curves);
  const auto cartan = cartan_data(n);
  const auto DAD = cartan.D * cartan.A * cartan.D;
  bool near_far = true;
  std::string bad;
  for (std::size_t a = 0; a < curves.size() && near_far; ++a)
    for (int r = 1; r < n && near_far; ++r) {
      const auto image = maps.gamma * (maps.delta * tensor_lift(chains[a].pentagon, r, n));
      for (int s = 1; s < n; ++s) {
        const auto level = tensor_level(image, s, n);
        IntVector got;
        try {
          got = coords.coordinates(level);
        } catch (const Error &e) {
          near_far = false;
          bad = e.what();
          break;
        }
        for (std::size_t b = 0; b < curves.size(); ++b) {
          const Integer want = a == b ? DAD.at(static_cast<std::size_t>(s - 1),
                                              static_cast<std::size_t>(r - 1))
                                      : Integer(0);
          if (got[b] != want) {
            near_far = false;
            bad = "curve " + std::to_string(a) + " level " + std::to_string(r) + " -> curve " +
                  std::to_string(b) + " level " + std::to_string(s) + ": " + str(got[b]) +
                  " != " + str(want);
            break;
          }
        }
        if (!near_far)
          break;
      }
    }
  rep.add("gamma_delta", "gamma o delta = id (x) D A D on H1 of the boundary", near_far, bad);

  const ImageSolver beta_image(cx.beta());
  bool mu = true;
  for (std::size_t a = 0; a < curves.size(); ++a)
    for (int r = 1; r < n; ++r) {
      const auto d = maps.delta * tensor_lift(chains[a].pentagon, r, n);
      const auto dp = maps.delta_prime * tensor_lift(chains[a].hexagon, r, n);
      mu = mu && beta_image.contains(subtract(d, scale(dp, n - r)));
    }
  rep.add("delta_delta_prime", "delta_r = (n - r) delta'_r modulo Im(beta)", mu,
          std::to_string(curves.size() * m) + " pairs");

  bool dsum = true;
  for (std::size_t tet = 0; tet < tri.tet_count(); ++tet)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int r = 1; r < n && i != j; ++r)
          dsum = dsum && delta_double_sum(cx.basis(), tet, i, j, r) ==
                             delta_two_sum(cx.basis(), tet, i, j, r);
  rep.add("delta_sums", "both expansions of delta agree", dsum);
  return rep;
}

VerificationReport verify_relations(const Triangulation &tri, int n) {
  auto rep = start(tri, n);
  const JComplex cx(tri, n);
  const ImageSolver image(cx.beta_star());

  std::size_t quads = 0, quad_bad = 0;
  for (int k = 1; k < n; ++k)
    for (int l = 1; k + l <= n; ++l)
      for (const auto &a : simplex_points(n - k - l))
        for (const auto &sigma : all_perms())
          for (std::size_t tet = 0; tet < tri.tet_count(); ++tet) {
            const auto rel = quad_relation(cx, tet, a, k, l, sigma);
            ++quads;
            if (!image.contains(rel.chain) || cx.beta_star() * *rel.preimage != rel.chain)
              ++quad_bad;
          }
  rep.add("quad_relations", "quad relations lie in Im(beta*)", quad_bad == 0,
          std::to_string(quads) + " checked, " + std::to_string(quad_bad) + " failed");

  std::size_t hexes = 0, hex_bad = 0;
  for (const auto &t : lattice_points(n)) {
    if (point_kind(t) != PointKind::Face)
      continue;
    for (std::size_t tet = 0; tet < tri.tet_count(); ++tet) {
      const auto rel = hexagon_relation(cx, tet, t);
      ++hexes;
      if (!image.contains(rel.chain) || cx.beta_star() * *rel.preimage != rel.chain)
        ++hex_bad;
    }
  }
  rep.add("hexagon_relations", "hexagon relations lie in Im(beta*)", hex_bad == 0,
          std::to_string(hexes) + " checked, " + std::to_string(hex_bad) + " failed");

  bool stokes = true;
  for (int i = 0; i < 4; ++i)
    for (int r = 0; r <= n; ++r) {
      const auto [lhs, rhs] = stokes_sides(n, i, r);
      stokes = stokes && lhs == rhs;
    }
  rep.add("stokes", "sum of beta over interior points of a level = boundary sum", stokes);
  return rep;
}

VerificationReport verify_all(const Triangulation &tri, int n) {
  auto rep = verify_symplectic(tri, n);
  rep.append(verify_homology(tri, n));
  rep.append(verify_boundary_maps(tri, n));
  rep.append(verify_relations(tri, n));
  return rep;
}

std::vector<VerificationReport> verify_range(const Triangulation &tri, int n_min, int n_max) {
  std::vector<std::future<VerificationReport>> jobs;
  for (int n = n_min; n <= n_max; ++n)
    jobs.push_back(std::async(std::launch::async, [&tri, n] { return verify_all(tri, n); }));
  std::vector<VerificationReport> out;
  for (auto &j : jobs)
    out.push_back(j.get());
  return out;
}

} // namespace pglsym
