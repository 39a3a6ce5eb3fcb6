#pragma once

#include "pglsym/cusp.hpp"
#include "pglsym/gluing.hpp"
#include "pglsym/homology.hpp"
#include "pglsym/int_matrix.hpp"
#include "pglsym/verify.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace pglsym {

enum class Format { Json, Csv };

/// {"rows", "cols", "entries": [[row, col, value], ...]} in row-major order.
std::string matrix_json(const IntMatrix &m);
/// "row,col,value" lines in row-major order after a "# name rows x cols" header.
std::string matrix_csv(const std::string &name, const IntMatrix &m);
/// Accepts the triplet object above or a dense list of rows.
IntMatrix parse_matrix(std::string_view text);

/// Gluing system, and the cusp system when curves are given.
std::string export_system(const Triangulation &tri, const GluingSystem &sys,
                          const CuspSystem *cusp, int n, Format format);

/// Integral point classes with their members.
std::string export_points(const PointClasses &points, Format format);

/// {"tet,s0s1s2s3": [re, im], ...}, one entry per subsimplex.
ShapeAssignment parse_shapes(std::string_view text, std::size_t tets, int n);
ShapeAssignment load_shapes(const std::string &path, std::size_t tets, int n);

struct Residual {
  std::string row;
  Complex value;
  bool pass = false;
};

/// Rows of prod z^A (1 - z)^(-B) / eps with |value - 1| <= tolerance.
std::vector<Residual> residuals(const GluingSystem &sys, const CuspSystem *cusp,
                                const ShapeAssignment &z, double tolerance);
std::string residuals_json(const std::vector<Residual> &rows);

inline constexpr int kReportSchemaVersion = 1;

/// {"schema_version", "triangulation", "n": [...], "checks": [{id, ref,
/// status, details, n}], "pass"}.
std::string report_json(const std::vector<VerificationReport> &reports);

std::string read_file(const std::string &path);

} // namespace pglsym
