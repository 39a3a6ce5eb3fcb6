#include "pglsym/homology.hpp"

#include "pglsym/cusp.hpp"
#include "pglsym/error.hpp"

#include <algorithm>
#include <utility>

namespace pglsym {

namespace {

int cmpabs(const Integer &a, const Integer &b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

using Dense = std::vector<IntVector>;

Dense identity_dense(std::size_t n) {
  Dense d(n, zero_vector(n));
  for (std::size_t i = 0; i < n; ++i)
    d[i][i] = 1;
  return d;
}

// row_dst -= q * row_src
void row_axpy(Dense &a, std::size_t dst, std::size_t src, const Integer &q) {
  auto &d = a[dst];
  const auto &s = a[src];
  for (std::size_t j = 0; j < d.size(); ++j)
    if (s[j] != 0)
      d[j] -= q * s[j];
}

void col_axpy(Dense &a, std::size_t dst, std::size_t src, const Integer &q) {
  for (auto &row : a)
    if (row[src] != 0)
      row[dst] -= q * row[src];
}

void col_swap(Dense &a, std::size_t x, std::size_t y) {
  for (auto &row : a)
    std::swap(row[x], row[y]);
}

struct Factorization {
  Dense d, u, v;
  std::size_t rank = 0;
};

// U A V = D, elimination with smallest-magnitude pivots
Factorization factorize(const IntMatrix &m, bool track_u, bool track_v) {
  Factorization f;
  const auto rows = m.rows(), cols = m.cols();
  f.d = m.to_dense();
  if (track_u)
    f.u = identity_dense(rows);
  if (track_v)
    f.v = identity_dense(cols);
  auto &a = f.d;

  auto swap_rows = [&](std::size_t x, std::size_t y) {
    if (x == y)
      return;
    std::swap(a[x], a[y]);
    if (track_u)
      std::swap(f.u[x], f.u[y]);
  };
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y)
      return;
    col_swap(a, x, y);
    if (track_v)
      col_swap(f.v, x, y);
  };

  for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
    // smallest nonzero entry of the trailing block
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = k; i < rows; ++i)
      for (std::size_t j = k; j < cols; ++j)
        if (a[i][j] != 0 && (pr == rows || cmpabs(a[i][j], a[pr][pc]) < 0))
          pr = i, pc = j;
    if (pr == rows)
      break;
    swap_rows(k, pr);
    swap_cols(k, pc);

    for (;;) {
      bool clean = true;
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (a[i][k] == 0)
          continue;
        Integer q = a[i][k] / a[k][k];
        row_axpy(a, i, k, q);
        if (track_u)
          row_axpy(f.u, i, k, q);
        if (a[i][k] != 0)
          clean = false;
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (a[k][j] == 0)
          continue;
        Integer q = a[k][j] / a[k][k];
        col_axpy(a, j, k, q);
        if (track_v)
          col_axpy(f.v, j, k, q);
        if (a[k][j] != 0)
          clean = false;
      }
      if (!clean) {
        // move the smallest remainder in row/column k into the pivot
        std::size_t best_r = k, best_c = k;
        for (std::size_t i = k + 1; i < rows; ++i)
          if (a[i][k] != 0 && cmpabs(a[i][k], a[best_r][best_c]) < 0)
            best_r = i, best_c = k;
        for (std::size_t j = k + 1; j < cols; ++j)
          if (a[k][j] != 0 && cmpabs(a[k][j], a[best_r][best_c]) < 0)
            best_r = k, best_c = j;
        swap_rows(k, best_r);
        swap_cols(k, best_c);
        continue;
      }
      // divisibility: fold an offending row into row k and repeat
      std::size_t offending = rows;
      for (std::size_t i = k + 1; i < rows && offending == rows; ++i)
        for (std::size_t j = k + 1; j < cols; ++j)
          if (a[i][j] != 0 && a[i][j] % a[k][k] != 0) {
            offending = i;
            break;
          }
      if (offending == rows)
        break;
      row_axpy(a, k, offending, -1);
      if (track_u)
        row_axpy(f.u, k, offending, -1);
    }
    if (a[k][k] < 0) {
      for (auto &x : a[k])
        x = -x;
      if (track_u)
        for (auto &x : f.u[k])
          x = -x;
    }
    f.rank = k + 1;
  }
  return f;
}

} // namespace

SmithForm smith_normal_form(const IntMatrix &m) {
  auto f = factorize(m, true, true);
  SmithForm out;
  out.D = IntMatrix(m.rows(), m.cols());
  for (std::size_t k = 0; k < f.rank; ++k) {
    out.D.set(k, k, f.d[k][k]);
    out.diagonal.push_back(f.d[k][k]);
  }
  out.U = IntMatrix::from_dense(f.u, m.rows());
  out.V = IntMatrix::from_dense(f.v, m.cols());
  return out;
}

std::size_t matrix_rank(const IntMatrix &m) { return factorize(m, false, false).rank; }

ImageSolver::ImageSolver(const IntMatrix &m) : rows_(m.rows()), cols_(m.cols()) {
  auto f = factorize(m, true, true);
  u_ = std::move(f.u);
  v_ = IntMatrix::from_dense(f.v, cols_);
  for (std::size_t k = 0; k < f.rank; ++k)
    diagonal_.push_back(f.d[k][k]);
}

std::optional<IntVector> ImageSolver::preimage(const IntVector &x) const {
  if (x.size() != rows_)
    throw Error(ErrorKind::DimensionMismatch, "image test vector has length " +
                                                  std::to_string(x.size()) + ", expected " +
                                                  std::to_string(rows_));
  IntVector y = zero_vector(cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    const Integer ux = dot(u_[i], x);
    if (i < diagonal_.size()) {
      if (ux % diagonal_[i] != 0)
        return std::nullopt;
      y[i] = ux / diagonal_[i];
    } else if (ux != 0) {
      return std::nullopt;
    }
  }
  return v_ * y;
}

std::optional<IntVector> image_membership(const IntMatrix &m, const IntVector &x) {
  return ImageSolver(m).preimage(x);
}

AbelianGroup AbelianGroup::from_cyclic(const std::vector<Integer> &orders) {
  AbelianGroup g;
  std::vector<Integer> finite;
  for (const auto &o : orders) {
    if (o == 0)
      ++g.free_rank;
    else if (abs(o) != 1)
      finite.push_back(abs(o));
  }
  if (finite.empty())
    return g;
  IntMatrix diag(finite.size(), finite.size());
  for (std::size_t i = 0; i < finite.size(); ++i)
    diag.set(i, i, finite[i]);
  auto f = factorize(diag, false, false);
  for (std::size_t k = 0; k < f.rank; ++k)
    if (f.d[k][k] != 1)
      g.torsion.push_back(f.d[k][k]);
  return g;
}

std::string to_string(const AbelianGroup &g) {
  if (g.is_trivial())
    return "0";
  std::string out;
  if (g.free_rank > 0)
    out = g.free_rank == 1 ? "Z" : "Z^" + std::to_string(g.free_rank);
  for (const auto &d : g.torsion) {
    if (!out.empty())
      out += " + ";
    out += "Z/" + d.get_str();
  }
  return out;
}

std::vector<AbelianGroup> chain_homology(const std::vector<IntMatrix> &maps) {
  if (maps.empty())
    return {};
  for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
    if (maps[i + 1].cols() != maps[i].rows())
      throw Error(ErrorKind::DimensionMismatch, "maps " + std::to_string(i) + " and " +
                                                    std::to_string(i + 1) + " do not compose");
    if (!(maps[i + 1] * maps[i]).is_zero())
      throw Error(ErrorKind::NotAComplex,
                  "composite of maps " + std::to_string(i) + " and " + std::to_string(i + 1) +
                      " is nonzero");
  }
  std::vector<Factorization> fs;
  for (const auto &m : maps)
    fs.push_back(factorize(m, false, false));

  const auto spaces = maps.size() + 1;
  std::vector<AbelianGroup> out(spaces);
  for (std::size_t i = 0; i < spaces; ++i) {
    const auto dim = i == 0 ? maps[0].cols() : maps[i - 1].rows();
    const std::size_t rank_out = i < maps.size() ? fs[i].rank : 0;
    const std::size_t rank_in = i > 0 ? fs[i - 1].rank : 0;
    auto &g = out[i];
    g.free_rank = dim - rank_out - rank_in;
    if (i > 0) {
      std::vector<Integer> orders;
      for (std::size_t k = 0; k < fs[i - 1].rank; ++k)
        orders.push_back(fs[i - 1].d[k][k]);
      g.torsion = AbelianGroup::from_cyclic(orders).torsion;
    }
  }
  return out;
}

AbelianGroup tensor(const AbelianGroup &g, const Integer &m) {
  std::vector<Integer> orders(g.free_rank, m);
  for (const auto &d : g.torsion)
    orders.push_back(gcd(d, m));
  return AbelianGroup::from_cyclic(orders);
}

AbelianGroup tor(const AbelianGroup &g, const Integer &m) {
  std::vector<Integer> orders;
  for (const auto &d : g.torsion)
    orders.push_back(gcd(d, m));
  return AbelianGroup::from_cyclic(orders);
}

AbelianGroup hom_to_cyclic(const AbelianGroup &g, const Integer &m) { return tensor(g, m); }

AbelianGroup coefficient_homology(const AbelianGroup &hk, const AbelianGroup &hk_minus_1,
                                  const Integer &m) {
  auto a = tensor(hk, m);
  auto b = tor(hk_minus_1, m);
  std::vector<Integer> orders(a.torsion);
  orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
  auto out = AbelianGroup::from_cyclic(orders);
  out.free_rank = a.free_rank + b.free_rank;
  return out;
}

IntVector crossing_word(const Triangulation &tri, const SegmentPath &path) {
  const auto cells = cell_classes(tri);
  IntVector word = zero_vector(cells.f);
  for (const auto &seg : path) {
    const auto &g = tri.gluing(seg.tet, seg.exit);
    const bool canonical = std::pair{seg.tet, seg.exit} <= std::pair{g.neighbor, g.perm[seg.exit]};
    word[cells.face_class[seg.tet][static_cast<std::size_t>(seg.exit)]] += canonical ? 1 : -1;
  }
  return word;
}

DualSpine dual_spine(const Triangulation &tri, const std::vector<SegmentPath> &extra_relations) {
  const auto cells = cell_classes(tri);
  const auto cycles = edge_cycles(tri);
  DualSpine out;
  out.boundary1 = IntMatrix(tri.tet_count(), cells.f);
  for (std::size_t tet = 0; tet < tri.tet_count(); ++tet)
    for (int f = 0; f < 4; ++f) {
      const auto &g = tri.gluing(tet, f);
      if (std::pair{tet, f} < std::pair{g.neighbor, g.perm[f]}) {
        const auto col = cells.face_class[tet][static_cast<std::size_t>(f)];
        out.boundary1.add(g.neighbor, col, 1);
        out.boundary1.add(tet, col, -1);
      }
    }
  std::vector<IntVector> relations;
  for (const auto &cycle : cycles) {
    SegmentPath path;
    for (const auto &step : cycle)
      path.push_back({step.tet, 0, 0, step.exit});
    relations.push_back(crossing_word(tri, path));
  }
  for (const auto &path : extra_relations)
    relations.push_back(crossing_word(tri, path));
  out.boundary2 = IntMatrix::from_columns(relations, cells.f);
  return out;
}

AbelianGroup manifold_homology(const Triangulation &tri) {
  const auto spine = dual_spine(tri);
  return chain_homology({spine.boundary2, spine.boundary1})[1];
}

AbelianGroup mhat_homology(const Triangulation &tri) {
  if (boundary_profile(tri).c == 0)
    return manifold_homology(tri);
  std::vector<SegmentPath> peripheral;
  for (const auto &curve : homology_basis_curves(tri))
    peripheral.push_back(curve.segments);
  const auto spine = dual_spine(tri, peripheral);
  return chain_homology({spine.boundary2, spine.boundary1})[1];
}

} // namespace pglsym
