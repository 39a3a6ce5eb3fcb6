#include "pglsym/error.hpp"
#include "pglsym/io.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <sstream>

using namespace pglsym;
using testing_support::census;
using json = nlohmann::json;

TEST(MatrixIo, JsonRoundTrip) {
  const auto m = IntMatrix::from_dense({{0, -3, 0}, {7, 0, Integer("123456789012345678901234567890")}}, 3);
  const auto text = matrix_json(m);
  EXPECT_EQ(parse_matrix(text), m);
  const auto j = json::parse(text);
  EXPECT_EQ(j["rows"], 2);
  EXPECT_EQ(j["cols"], 3);
  EXPECT_EQ(j["entries"].size(), 3u);
}

TEST(MatrixIo, DenseInput) {
  EXPECT_EQ(parse_matrix("[[1,2],[3,4]]"), IntMatrix::from_dense({{1, 2}, {3, 4}}, 2));
  EXPECT_THROW(parse_matrix("[[1,2],[3]]"), Error);
  EXPECT_THROW(parse_matrix("{\"rows\": 1}"), Error);
  EXPECT_THROW(parse_matrix("not json"), Error);
}

TEST(MatrixIo, CsvLayout) {
  const auto csv = matrix_csv("A", IntMatrix::from_dense({{0, 5}, {-1, 0}}, 2));
  std::istringstream in(csv);
  std::string header, columns, first, second, rest;
  std::getline(in, header);
  std::getline(in, columns);
  std::getline(in, first);
  std::getline(in, second);
  EXPECT_EQ(header.rfind("# A 2 x 2", 0), 0u);
  EXPECT_EQ(columns, "row,col,value");
  EXPECT_EQ(first, "0,1,5");
  EXPECT_EQ(second, "1,0,-1");
  EXPECT_FALSE(std::getline(in, rest) && !rest.empty());
}

TEST(Export, SystemJsonMatchesMatrices) {
  const auto tri = census("m004");
  const JComplex cx(tri, 3);
  const auto sys = gluing_system(cx);
  const CuspSurface s(tri);
  const auto cusp = cusp_system(s, cx, homology_basis_curves(s));
  const auto text = export_system(tri, sys, &cusp, 3, Format::Json);
  const auto j = json::parse(text);
  EXPECT_EQ(parse_matrix(j["A"].dump()), sys.A);
  EXPECT_EQ(parse_matrix(j["B"].dump()), sys.B);
  EXPECT_EQ(j["eps"].get<std::vector<int>>(), sys.eps);
  EXPECT_EQ(parse_matrix(j["cusp"]["A"].dump()), cusp.A);
  EXPECT_EQ(text, export_system(tri, sys, &cusp, 3, Format::Json));
  EXPECT_EQ(export_system(tri, sys, &cusp, 3, Format::Csv),
            export_system(tri, sys, &cusp, 3, Format::Csv));
}

TEST(Export, Points) {
  const auto j = json::parse(export_points(point_classes(census("m004"), 3), Format::Json));
  ASSERT_TRUE(j.is_object() || j.is_array());
  EXPECT_NE(export_points(point_classes(census("m004"), 3), Format::Csv).find("face"),
            std::string::npos);
}

TEST(Shapes, ParseAndValidate) {
  const std::string text = R"({"0,0000": [0.5, 0.8660254037844386], "1,0000": [2, 0]})";
  const auto z = parse_shapes(text, 2, 2);
  EXPECT_DOUBLE_EQ(z.z(0).real(), 0.5);
  EXPECT_DOUBLE_EQ(z.z(1).real(), 2.0);
  EXPECT_THROW(parse_shapes(R"({"0,0000": [0.5, 0.8]})", 2, 2), Error);
  EXPECT_THROW(parse_shapes(R"({"0,0000": [1, 0], "1,0000": [2, 0]})", 2, 2), Error);
  EXPECT_THROW(parse_shapes(R"({"0,0000": "x", "1,0000": [2, 0]})", 2, 2), Error);
}

TEST(Residuals, CompleteStructure) {
  const auto tri = census("m004");
  const JComplex cx(tri, 2);
  const CuspSurface s(tri);
  const auto cusp = cusp_system(s, cx, homology_basis_curves(s));
  const auto z = parse_shapes(read_file(std::string(PGLSYM_DATA_DIR) + "/../tests/cli/m004_complete.json"), 2, 2);
  const auto rows = residuals(gluing_system(cx), &cusp, z, 1e-12);
  EXPECT_EQ(rows.size(), 2u + 2u);
  for (const auto &r : rows)
    EXPECT_TRUE(r.pass) << r.row;
  const auto j = json::parse(residuals_json(rows));
  EXPECT_EQ(j.size(), rows.size());
}

TEST(Report, SchemaKeys) {
  VerificationReport a{"m004", 2, {}}, b{"m004", 3, {}};
  a.add("rank", "rank of the gluing rows", true, "1");
  b.add("rank", "rank of the gluing rows", false, "5");
  const auto j = json::parse(report_json({a, b}));
  EXPECT_EQ(j["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(j["triangulation"], "m004");
  EXPECT_EQ(j["n"], json::array({2, 3}));
  EXPECT_EQ(j["pass"], false);
  ASSERT_EQ(j["checks"].size(), 2u);
  for (const auto &c : j["checks"])
    for (const char *key : {"id", "ref", "status", "details", "n"})
      EXPECT_TRUE(c.contains(key)) << key;
  EXPECT_EQ(j["checks"][1]["status"], "fail");
}

TEST(Files, MissingFile) { EXPECT_THROW(read_file("/nonexistent/file.json"), Error); }
