#include "pglsym/io.hpp"

#include "pglsym/error.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace pglsym {

using json = nlohmann::ordered_json;

namespace {

// Integers that fit in 64 bits are emitted as numbers, others as strings.
json integer_json(const Integer &x) {
  if (x.fits_slong_p())
    return x.get_si();
  return x.get_str();
}

Integer integer_from(const json &j) {
  if (j.is_number_integer())
    return Integer(j.get<long>());
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0)
      throw Error(ErrorKind::MalformedInput, "not an integer: " + j.get<std::string>());
    return x;
  }
  throw Error(ErrorKind::MalformedInput, "matrix entries must be integers");
}

json matrix_object(const IntMatrix &m) {
  json entries = json::array();
  for (const auto &[key, value] : m.entries())
    entries.push_back(json::array({key.first, key.second, integer_json(value)}));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

std::string quad_string(const Quad &q) {
  std::string s;
  for (int x : q)
    s += std::to_string(x);
  return s;
}

std::string kind_name(PointKind k) {
  switch (k) {
  case PointKind::Vertex: return "vertex";
  case PointKind::Edge: return "edge";
  case PointKind::Face: return "face";
  case PointKind::Interior: return "interior";
  }
  return "?";
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error &e) {
    throw Error(ErrorKind::MalformedInput, e.what());
  }
}

} // namespace

std::string matrix_json(const IntMatrix &m) { return matrix_object(m).dump(); }

std::string matrix_csv(const std::string &name, const IntMatrix &m) {
  std::ostringstream os;
  os << "# " << name << " " << m.rows() << " x " << m.cols() << ", row-major\n";
  os << "row,col,value\n";
  for (const auto &[key, value] : m.entries())
    os << key.first << "," << key.second << "," << value.get_str() << "\n";
  return os.str();
}

IntMatrix parse_matrix(std::string_view text) {
  const auto doc = parse_json(text);
  if (doc.is_array()) {
    std::vector<IntVector> rows;
    std::size_t cols = doc.empty() ? 0 : doc[0].size();
    for (const auto &r : doc) {
      if (!r.is_array() || r.size() != cols)
        throw Error(ErrorKind::MalformedInput, "dense matrix rows must be lists of equal length");
      IntVector row;
      for (const auto &x : r)
        row.push_back(integer_from(x));
      rows.push_back(std::move(row));
    }
    return IntMatrix::from_dense(rows, cols);
  }
  if (!doc.is_object() || !doc.contains("rows") || !doc.contains("cols") ||
      !doc["rows"].is_number_unsigned() || !doc["cols"].is_number_unsigned())
    throw Error(ErrorKind::MalformedInput, "matrix needs \"rows\", \"cols\" and \"entries\"");
  IntMatrix m(doc["rows"].get<std::size_t>(), doc["cols"].get<std::size_t>());
  for (const auto &e : doc.value("entries", json::array())) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
      throw Error(ErrorKind::MalformedInput, "entries must be [row, col, value]");
    m.add(e[0].get<std::size_t>(), e[1].get<std::size_t>(), integer_from(e[2]));
  }
  return m;
}

std::string export_system(const Triangulation &tri, const GluingSystem &sys,
                          const CuspSystem *cusp, int n, Format format) {
  if (format == Format::Csv) {
    std::ostringstream os;
    os << "# " << tri.name() << " n=" << n
       << "; rows are point classes (edge, face, interior), columns tet * N + subsimplex\n";
    os << matrix_csv("A", sys.A) << matrix_csv("B", sys.B);
    os << "# eps " << sys.eps.size() << "\nrow,value\n";
    for (std::size_t r = 0; r < sys.eps.size(); ++r)
      os << r << "," << sys.eps[r] << "\n";
    if (cusp) {
      os << "# cusp rows (curve, level)\nrow,curve,level\n";
      for (std::size_t r = 0; r < cusp->rows.size(); ++r)
        os << r << "," << cusp->rows[r].curve << "," << cusp->rows[r].level << "\n";
      os << matrix_csv("cusp_A", cusp->A) << matrix_csv("cusp_B", cusp->B);
      os << "# cusp_eps " << cusp->eps.size() << "\nrow,value\n";
      for (std::size_t r = 0; r < cusp->eps.size(); ++r)
        os << r << "," << cusp->eps[r] << "\n";
    }
    return os.str();
  }
  json doc;
  doc["triangulation"] = tri.name();
  doc["n"] = n;
  doc["order"] = "rows: point classes by kind (edge, face, interior) then smallest member; "
                 "columns: tet * N + subsimplex index";
  doc["A"] = matrix_object(sys.A);
  doc["B"] = matrix_object(sys.B);
  doc["eps"] = sys.eps;
  if (cusp) {
    json rows = json::array();
    for (const auto &r : cusp->rows)
      rows.push_back({{"curve", r.curve}, {"level", r.level}});
    doc["cusp"] = {{"rows", rows},
                   {"A", matrix_object(cusp->A)},
                   {"B", matrix_object(cusp->B)},
                   {"eps", cusp->eps}};
  }
  return doc.dump(1) + "\n";
}

std::string export_points(const PointClasses &points, Format format) {
  if (format == Format::Csv) {
    std::ostringstream os;
    os << "class,kind,tet,point\n";
    for (std::size_t c = 0; c < points.size(); ++c)
      for (const auto &m : points.classes()[c].members)
        os << c << "," << kind_name(points.classes()[c].kind) << "," << m.tet << ","
           << quad_string(m.t) << "\n";
    return os.str();
  }
  json out = json::array();
  for (std::size_t c = 0; c < points.size(); ++c) {
    const auto &cls = points.classes()[c];
    json members = json::array();
    for (const auto &m : cls.members)
      members.push_back(json::array({m.tet, quad_string(m.t)}));
    out.push_back({{"class", c}, {"kind", kind_name(cls.kind)}, {"members", members}});
  }
  return out.dump(1) + "\n";
}

ShapeAssignment parse_shapes(std::string_view text, std::size_t tets, int n) {
  const auto doc = parse_json(text);
  if (!doc.is_object())
    throw Error(ErrorKind::MalformedInput, "shape file must be an object");
  std::map<std::pair<std::size_t, Subsimplex>, Complex> raw;
  for (const auto &[key, value] : doc.items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos || key.size() != comma + 5)
      throw Error(ErrorKind::MalformedInput, "shape key must look like \"tet,s0s1s2s3\": " + key);
    std::size_t tet = 0;
    try {
      tet = std::stoul(key.substr(0, comma));
    } catch (const std::exception &) {
      throw Error(ErrorKind::MalformedInput, "bad tetrahedron in shape key " + key);
    }
    Subsimplex s{};
    int sum = 0;
    for (std::size_t q = 0; q < 4; ++q) {
      const char c = key[comma + 1 + q];
      if (c < '0' || c > '9')
        throw Error(ErrorKind::MalformedInput, "bad subsimplex in shape key " + key);
      s[q] = c - '0';
      sum += s[q];
    }
    if (sum != n - 2)
      throw Error(ErrorKind::MalformedInput, "subsimplex " + key + " does not sum to n-2");
    if (!value.is_array() || value.size() != 2 || !value[0].is_number() || !value[1].is_number())
      throw Error(ErrorKind::MalformedInput, "shape value must be [re, im] at " + key);
    raw[{tet, s}] = Complex(value[0].get<double>(), value[1].get<double>());
  }
  return extend_shapes(tets, n, raw);
}

ShapeAssignment load_shapes(const std::string &path, std::size_t tets, int n) {
  return parse_shapes(read_file(path), tets, n);
}

std::vector<Residual> residuals(const GluingSystem &sys, const CuspSystem *cusp,
                                const ShapeAssignment &z, double tolerance) {
  std::vector<Residual> out;
  const auto g = evaluate_system(sys, z);
  for (std::size_t r = 0; r < g.size(); ++r)
    out.push_back({"gluing " + std::to_string(r), g[r], std::abs(g[r] - 1.0) <= tolerance});
  if (cusp) {
    const auto c = evaluate_cusp_system(*cusp, z);
    for (std::size_t r = 0; r < c.size(); ++r)
      out.push_back({"cusp curve " + std::to_string(cusp->rows[r].curve) + " level " +
                         std::to_string(cusp->rows[r].level),
                     c[r], std::abs(c[r] - 1.0) <= tolerance});
  }
  return out;
}

std::string residuals_json(const std::vector<Residual> &rows) {
  json out = json::array();
  for (const auto &r : rows)
    out.push_back({{"row", r.row},
                   {"re", r.value.real()},
                   {"im", r.value.imag()},
                   {"pass", r.pass}});
  return out.dump(1) + "\n";
}

std::string report_json(const std::vector<VerificationReport> &reports) {
  json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["triangulation"] = reports.empty() ? "" : reports.front().triangulation;
  json ns = json::array(), checks = json::array();
  bool pass = true;
  for (const auto &rep : reports) {
    ns.push_back(rep.n);
    for (const auto &c : rep.checks) {
      checks.push_back({{"id", c.id},
                        {"ref", c.ref},
                        {"status", c.passed ? "pass" : "fail"},
                        {"details", c.details},
                        {"n", rep.n}});
      pass = pass && c.passed;
    }
  }
  doc["n"] = ns;
  doc["checks"] = checks;
  doc["pass"] = pass;
  return doc.dump(1) + "\n";
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::MalformedInput, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

} // namespace pglsym
