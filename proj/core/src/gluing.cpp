#include "pglsym/gluing.hpp"

#include "pglsym/error.hpp"

#include <cmath>

namespace pglsym {

namespace {

void require_nondegenerate(Complex z) {
  if (std::abs(z) < kDegenerateTolerance || std::abs(z - 1.0) < kDegenerateTolerance)
    throw Error(ErrorKind::DegenerateShape,
                "shape (" + std::to_string(z.real()) + "," + std::to_string(z.imag()) +
                    ") is 0 or 1");
}

int parity_sign(const Integer &x) { return mpz_odd_p(x.get_mpz_t()) ? -1 : 1; }

} // namespace

ExponentMatrices exponent_matrices(const JComplex &cx) {
  const auto &basis = cx.basis();
  const auto P = cx.c1_dim();
  ExponentMatrices out{IntMatrix(P, basis.half()), IntMatrix(P, basis.half()),
                       IntMatrix(P, basis.half())};
  const auto &classes = cx.points().classes();
  for (std::size_t p = 0; p < P; ++p)
    for (const auto &m : classes[p].members)
      for (const auto &mp : midpoint_pairs(m.t)) {
        const auto col = basis.column(m.tet, mp.s);
        switch (pair_class(mp.edge)) {
        case PairClass::E01: out.Aprime.add(p, col, 1); break;
        case PairClass::E12: out.Bprime.add(p, col, 1); break;
        case PairClass::E02: out.Cprime.add(p, col, 1); break;
        }
      }
  return out;
}

ExponentMatrices exponent_matrices(const Triangulation &tri, int n) {
  return exponent_matrices(JComplex(tri, n));
}

GluingSystem log_reduce(const ExponentMatrices &exp) {
  GluingSystem sys{exp.Aprime - exp.Cprime, exp.Bprime - exp.Cprime, {}};
  sys.eps.assign(exp.Cprime.rows(), 1);
  std::vector<Integer> c_sum(exp.Cprime.rows(), 0), b_sum(exp.Cprime.rows(), 0),
      b_prime_sum(exp.Cprime.rows(), 0);
  for (const auto &[key, value] : exp.Cprime.entries())
    c_sum[key.first] += value;
  for (const auto &[key, value] : exp.Bprime.entries())
    b_prime_sum[key.first] += value;
  for (const auto &[key, value] : sys.B.entries())
    b_sum[key.first] += value;
  for (std::size_t p = 0; p < sys.eps.size(); ++p) {
    sys.eps[p] = parity_sign(c_sum[p]);
    // at z = 2 (z' = -1, z'' = 1/2) the signs of both forms must agree
    if (parity_sign(b_prime_sum[p]) != parity_sign(b_sum[p]) * sys.eps[p])
      throw Error(ErrorKind::NotAComplex, "sign rule check failed on row " + std::to_string(p));
  }
  return sys;
}

GluingSystem gluing_system(const JComplex &cx) {
  if (cx.points().is_local())
    throw Error(ErrorKind::LocalModeUnsupported,
                "gluing equations need a glued triangulation, not a single simplex");
  return log_reduce(exponent_matrices(cx));
}

ShapeAssignment::ShapeAssignment(std::size_t tets, int n, std::vector<Complex> z)
    : tets_(tets), n_(n), per_tet_(subsimplex_count(n)), z_(std::move(z)) {
  if (z_.size() != tets_ * per_tet_)
    throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(tets_ * per_tet_) +
                                                  " shapes, got " + std::to_string(z_.size()));
  for (const auto &v : z_)
    require_nondegenerate(v);
}

std::pair<Complex, Complex> shape_companions(Complex z) {
  require_nondegenerate(z);
  return {1.0 / (1.0 - z), 1.0 - 1.0 / z};
}

Complex ShapeAssignment::value(std::size_t column, PairClass which) const {
  const auto z = z_.at(column);
  switch (which) {
  case PairClass::E01: return z;
  case PairClass::E12: return 1.0 / (1.0 - z);
  case PairClass::E02: return 1.0 - 1.0 / z;
  }
  return z;
}

Complex ShapeAssignment::value(const LatticeIndex &lattice, std::size_t tet, const Subsimplex &s,
                               int edge) const {
  return value(tet * per_tet_ + lattice.subsimplex_index(s), pair_class(edge));
}

ShapeAssignment extend_shapes(std::size_t tets, int n,
                              const std::map<std::pair<std::size_t, Subsimplex>, Complex> &raw) {
  const LatticeIndex lattice(n);
  const auto per = lattice.subsimplices().size();
  std::vector<Complex> z(tets * per);
  std::vector<bool> seen(z.size(), false);
  for (const auto &[key, value] : raw) {
    if (key.first >= tets)
      throw Error(ErrorKind::OutOfRange, "shape for tetrahedron " + std::to_string(key.first));
    const auto col = key.first * per + lattice.subsimplex_index(key.second);
    z[col] = value;
    seen[col] = true;
  }
  for (std::size_t c = 0; c < z.size(); ++c)
    if (!seen[c])
      throw Error(ErrorKind::MalformedInput,
                  "no shape for tetrahedron " + std::to_string(c / per) + " subsimplex " +
                      to_string(lattice.subsimplices()[c % per]));
  return ShapeAssignment(tets, n, std::move(z));
}

void ScaledProduct::renormalize() {
  const double mag = std::abs(mantissa_);
  if (mag == 0.0 || !std::isfinite(mag))
    return;
  int e = 0;
  std::frexp(mag, &e);
  mantissa_ = std::ldexp(1.0, -e) * mantissa_;
  exponent_ += e;
}

void ScaledProduct::multiply(Complex factor) {
  mantissa_ *= factor;
  renormalize();
}

void ScaledProduct::multiply_power(Complex base, const Integer &exponent) {
  if (exponent == 0)
    return;
  if (exponent < 0) {
    multiply_power(1.0 / base, -exponent);
    return;
  }
  ScaledProduct square;
  square.multiply(base);
  Integer e = exponent;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) {
      mantissa_ *= square.mantissa_;
      exponent_ += square.exponent_;
      renormalize();
    }
    e >>= 1;
    if (e > 0) {
      square.mantissa_ *= square.mantissa_;
      square.exponent_ *= 2;
      square.renormalize();
    }
  }
}

Complex ScaledProduct::value() const { return std::ldexp(1.0, static_cast<int>(exponent_)) * mantissa_; }

double ScaledProduct::relative_distance(Complex target) const {
  return std::abs(value() - target) / std::abs(target);
}

std::vector<Complex> evaluate_system(const GluingSystem &sys, const ShapeAssignment &z) {
  if (sys.A.cols() != z.values().size())
    throw Error(ErrorKind::DimensionMismatch, "shape assignment does not match the system");
  std::vector<ScaledProduct> acc(sys.rows());
  for (const auto &[key, value] : sys.A.entries())
    acc[key.first].multiply_power(z.z(key.second), value);
  for (const auto &[key, value] : sys.B.entries())
    acc[key.first].multiply_power(1.0 - z.z(key.second), -value);
  std::vector<Complex> out;
  for (std::size_t p = 0; p < sys.rows(); ++p) {
    acc[p].multiply(static_cast<double>(sys.eps[p]));
    out.push_back(acc[p].value());
  }
  return out;
}

std::vector<Complex> evaluate_direct(const ExponentMatrices &exp, const ShapeAssignment &z) {
  if (exp.Aprime.cols() != z.values().size())
    throw Error(ErrorKind::DimensionMismatch, "shape assignment does not match the system");
  std::vector<ScaledProduct> acc(exp.Aprime.rows());
  const std::pair<const IntMatrix *, PairClass> parts[] = {
      {&exp.Aprime, PairClass::E01}, {&exp.Bprime, PairClass::E12}, {&exp.Cprime, PairClass::E02}};
  for (const auto &[m, which] : parts)
    for (const auto &[key, value] : m->entries())
      acc[key.first].multiply_power(z.value(key.second, which), value);
  std::vector<Complex> out;
  for (const auto &a : acc)
    out.push_back(a.value());
  return out;
}

std::vector<XCoordinate> x_coordinates(const ShapeAssignment &z, const PointClasses &points) {
  if (points.n() < 3)
    throw Error(ErrorKind::InvalidN, "X-coordinates need face points, i.e. n >= 3");
  if (z.n() != points.n() || z.tet_count() != points.tet_count())
    throw Error(ErrorKind::DimensionMismatch, "shape assignment does not match the triangulation");
  std::vector<XCoordinate> out;
  const auto &lattice = points.index();
  for (std::size_t tet = 0; tet < points.tet_count(); ++tet)
    for (const auto &t : lattice.points()) {
      if (point_kind(t) != PointKind::Face)
        continue;
      Complex x = -1.0;
      for (const auto &mp : midpoint_pairs(t))
        x *= z.value(lattice, tet, mp.s, mp.edge);
      out.push_back({tet, t, points.class_of(tet, t), x});
    }
  return out;
}

std::vector<XCoordinate> x_coordinates(const ShapeAssignment &z, const Triangulation &tri, int n) {
  if (n < 3)
    throw Error(ErrorKind::InvalidN, "X-coordinates need face points, i.e. n >= 3");
  return x_coordinates(z, PointClasses(tri, n));
}

} // namespace pglsym
