#include "pglsym/cusp.hpp"
#include "pglsym/error.hpp"
#include "pglsym/gluing.hpp"
#include "pglsym/homology.hpp"
#include "pglsym/io.hpp"
#include "pglsym/jcomplex.hpp"
#include "pglsym/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <regex>

using namespace pglsym;

namespace {

constexpr int kExitVerification = 1;
constexpr int kExitParse = 2;
constexpr int kExitOther = 3;

struct Range {
  int lo = 2, hi = 2;
};

Range parse_range(const std::string &text) {
  static const std::regex single(R"(\d+)"), span(R"((\d+)\.\.(\d+))");
  std::smatch m;
  if (std::regex_match(text, m, single))
    return {std::stoi(text), std::stoi(text)};
  if (std::regex_match(text, m, span) && std::stoi(m[1]) <= std::stoi(m[2]))
    return {std::stoi(m[1]), std::stoi(m[2])};
  throw Error(ErrorKind::MalformedInput, "-n expects INT or A..B, got " + text);
}

Format parse_format(const std::string &f) { return f == "csv" ? Format::Csv : Format::Json; }

struct Options {
  std::string file;
  std::string n = "2";
  std::string format = "json";
  std::string curves;
  std::string report;
  std::string shapes;
  double tolerance = 1e-10;
};

Triangulation load(const Options &o) {
  auto tri = load_triangulation(o.file);
  if (!o.curves.empty())
    tri = with_curves(tri, parse_curve_file(read_file(o.curves), tri.tet_count()));
  return tri;
}

bool has_cusps(const Triangulation &tri) { return boundary_profile(tri).c > 0; }

int cmd_info(const Options &o) {
  const auto tri = load(o);
  const auto cells = cell_classes(tri);
  const auto profile = boundary_profile(tri);
  std::cout << "name: " << tri.name() << "\n"
            << "tetrahedra: " << tri.tet_count() << "\n"
            << "edges: " << cells.e << "\nfaces: " << cells.f << "\nvertices: " << cells.v << "\n"
            << "cusps: " << profile.c << "\n";
  for (std::size_t k = 0; k < profile.components.size(); ++k)
    std::cout << "  component " << k << ": genus " << profile.components[k].genus << ", "
              << profile.components[k].triangles << " triangles\n";
  std::cout << "H1(M): " << to_string(manifold_homology(tri)) << "\n"
            << "H1(Mhat): " << to_string(mhat_homology(tri)) << "\n";
  const auto r = parse_range(o.n);
  for (int n = r.lo; n <= r.hi; ++n)
    std::cout << "n=" << n << ": " << PointClasses(tri, n).size() << " point classes\n";
  return 0;
}

int cmd_points(const Options &o) {
  const auto tri = load(o);
  const auto r = parse_range(o.n);
  for (int n = r.lo; n <= r.hi; ++n)
    std::cout << export_points(PointClasses(tri, n), parse_format(o.format));
  return 0;
}

int cmd_matrices(const Options &o, bool gluing, bool cusp) {
  const auto tri = load(o);
  const auto r = parse_range(o.n);
  const auto fmt = parse_format(o.format);
  std::optional<CuspSurface> surface;
  std::vector<BoundaryCurve> curves;
  if (cusp && has_cusps(tri)) {
    surface.emplace(tri);
    curves = homology_basis_curves(*surface);
  }
  for (int n = r.lo; n <= r.hi; ++n) {
    const JComplex cx(tri, n);
    auto sys = gluing_system(cx);
    std::optional<CuspSystem> cs;
    if (surface)
      cs = cusp_system(*surface, cx, curves);
    if (!gluing) {
      // an empty gluing block keeps the layout uniform
      sys = GluingSystem{IntMatrix(0, sys.A.cols()), IntMatrix(0, sys.B.cols()), {}};
    }
    std::cout << export_system(tri, sys, cs ? &*cs : nullptr, n, fmt);
  }
  return 0;
}

int cmd_homology(const Options &o) {
  const auto tri = load(o);
  const auto r = parse_range(o.n);
  std::cout << "H1(M) = " << to_string(manifold_homology(tri)) << "\n"
            << "H1(Mhat) = " << to_string(mhat_homology(tri)) << "\n";
  for (int n = r.lo; n <= r.hi; ++n) {
    const JComplex cx(tri, n);
    const auto g = chain_homology({cx.alpha(), cx.beta(), cx.beta_star(), cx.alpha_star()});
    std::cout << "n=" << n;
    for (std::size_t k = 0; k < g.size(); ++k)
      std::cout << "  H" << (5 - k) << " = " << to_string(g[k]);
    std::cout << "\n";
  }
  return 0;
}

int cmd_verify(const Options &o) {
  const auto tri = load(o);
  const auto r = parse_range(o.n);
  const auto reports = verify_range(tri, r.lo, r.hi);
  bool pass = true;
  for (const auto &rep : reports)
    for (const auto &c : rep.checks) {
      std::cout << (c.passed ? "PASS" : "FAIL") << "  n=" << rep.n << "  " << c.id << "  ("
                << c.ref << ")";
      if (!c.details.empty())
        std::cout << "  " << c.details;
      std::cout << "\n";
      pass = pass && c.passed;
    }
  if (!o.report.empty()) {
    std::ofstream out(o.report, std::ios::binary);
    out << report_json(reports);
  }
  std::cout << (pass ? "all checks passed" : "verification FAILED") << "\n";
  return pass ? 0 : kExitVerification;
}

int cmd_eval(const Options &o) {
  const auto tri = load(o);
  const auto r = parse_range(o.n);
  if (r.lo != r.hi)
    throw Error(ErrorKind::MalformedInput, "eval takes a single n");
  const JComplex cx(tri, r.lo);
  const auto sys = gluing_system(cx);
  const auto z = load_shapes(o.shapes, tri.tet_count(), r.lo);
  std::optional<CuspSystem> cs;
  if (has_cusps(tri)) {
    const CuspSurface surface(tri);
    cs = cusp_system(surface, cx, homology_basis_curves(surface));
  }
  const auto rows = residuals(sys, cs ? &*cs : nullptr, z, o.tolerance);
  const auto text = residuals_json(rows);
  if (!o.report.empty()) {
    std::ofstream out(o.report, std::ios::binary);
    out << text;
  } else {
    std::cout << text;
  }
  for (const auto &row : rows)
    if (!row.pass)
      return kExitVerification;
  return 0;
}

int cmd_snf(const Options &o) {
  const auto m = parse_matrix(read_file(o.file));
  const auto snf = smith_normal_form(m);
  std::cout << "rank: " << snf.rank() << "\ninvariant factors:";
  for (const auto &d : snf.diagonal)
    std::cout << " " << d.get_str();
  std::cout << "\ncokernel: ";
  std::vector<Integer> orders(snf.diagonal);
  orders.resize(m.rows(), 0);
  std::cout << to_string(AbelianGroup::from_cyclic(orders)) << "\n";
  return 0;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::MalformedInput:
  case ErrorKind::UngluedFace:
  case ErrorKind::InconsistentPairing:
  case ErrorKind::NotOriented:
  case ErrorKind::NotClosed:
  case ErrorKind::InvalidN:
    return kExitParse;
  default:
    return kExitOther;
  }
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Gluing equations, boundary maps and homology of ideal triangulations"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App *sub, bool with_n = true) {
    sub->add_option("file", o.file, "triangulation JSON")->required();
    if (with_n)
      sub->add_option("-n", o.n, "n or a range A..B")->capture_default_str();
    sub->add_option("--curves", o.curves, "curve file overriding the curves in the triangulation");
    return sub;
  };
  auto *info = add_common(app.add_subcommand("info", "summary of a triangulation"));
  auto *points = add_common(app.add_subcommand("points", "integral point classes"));
  points->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
  auto *matrices = add_common(app.add_subcommand("matrices", "gluing (A, B, eps) and cusp blocks"));
  matrices->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
  auto *cusp = add_common(app.add_subcommand("cusp-matrices", "cusp equation blocks only"));
  cusp->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
  auto *homology = add_common(app.add_subcommand("homology", "homology of the complex"));
  auto *verify = add_common(app.add_subcommand("verify", "run every check"));
  verify->add_option("--report", o.report, "write the JSON report here");
  auto *eval = add_common(app.add_subcommand("eval", "evaluate equations at shapes"));
  eval->add_option("--shapes", o.shapes, "shape file")->required();
  eval->add_option("--tolerance", o.tolerance)->capture_default_str();
  eval->add_option("--report", o.report, "write residuals here instead of stdout");
  auto *snf = app.add_subcommand("snf", "Smith normal form of a matrix file");
  snf->add_option("file", o.file, "matrix JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*info) return cmd_info(o);
    if (*points) return cmd_points(o);
    if (*matrices) return cmd_matrices(o, true, true);
    if (*cusp) return cmd_matrices(o, false, true);
    if (*homology) return cmd_homology(o);
    if (*verify) return cmd_verify(o);
    if (*eval) return cmd_eval(o);
    if (*snf) return cmd_snf(o);
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOther;
  }
  return 0;
}
