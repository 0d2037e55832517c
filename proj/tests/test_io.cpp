#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "d2lab/io.hpp"
#include "d2lab/pipeline.hpp"
#include "support.hpp"

using namespace d2lab;

namespace {

const char* kM2 = R"j({
  "field": {"kind": "rational"},
  "algebra": {"dim": 2,
              "structure_constants": [[["1","0"],["0","1"]], [["0","1"],["1","0"]]],
              "unit": ["1","0"]},
  "subalgebra_basis": [["1","0"]]
})j";

}  // namespace

TEST_CASE("bundled m2_over_k parses to dims 4 over 1") {
  const ExtensionDocument doc = load_extension(support::corpus_path("m2_over_k"));
  CHECK(doc.name == "m2_over_k");
  CHECK(doc.ext.dim() == 4);
  CHECK(doc.ext.sub.dim() == 1);
}

TEST_CASE("every corpus file parses") {
  for (const std::string name : support::kCorpus) {
    CAPTURE(name);
    CHECK_NOTHROW(load_extension(support::corpus_path(name)));
  }
}

TEST_CASE("group algebra shortcut builds Q[S3] over Q[C3]") {
  const auto doc = parse_extension(R"j({"group_algebra": {"G": ["(1 2 3)", "(1 2)"], "H": ["(1 2 3)"]}})j");
  CHECK(doc.ext.dim() == 6);
  CHECK(doc.ext.sub.dim() == 3);
}

TEST_CASE("group algebra shortcut agrees with the Cayley-table constructor") {
  const auto doc = parse_extension(R"j({"group_algebra": {"degree": 3, "G": ["(1 2 3)", "(1 2)"], "H": ["(1 2)"]}})j");
  const auto direct = group_algebra_pair(Field::rational(), {parse_cycles("(1 2 3)", 3), parse_cycles("(1 2)", 3)},
                                         {parse_cycles("(1 2)", 3)}, 3);
  CHECK(doc.ext.ambient == direct.algebra);
  CHECK(doc.ext.sub.dim() == 2);
}

TEST_CASE("explicit structure constants, rational strings and integers") {
  const auto doc = parse_extension(kM2);
  CHECK(doc.ext.dim() == 2);
  CHECK(doc.ext.ambient.mul(Vector{0, 1}, Vector{0, 1}) == Vector{1, 0});
  const auto ints = parse_extension(R"j({"algebra": {"dim": 1, "structure_constants": [[[1]]], "unit": [1]},
                                        "subalgebra_basis": [["2/2"]]})j");
  CHECK(ints.ext.dim() == 1);
}

TEST_CASE("prime field documents") {
  const auto doc = parse_extension(R"j({"field": {"kind": "prime", "characteristic": 3},
                                       "group_algebra": {"G": ["(1 2 3)"], "H": []}})j");
  CHECK(doc.ext.field() == Field::prime(3));
  CHECK(doc.ext.dim() == 3);
}

TEST_CASE("schema errors") {
  CHECK_THROWS_AS(parse_extension("{"), SchemaError);
  CHECK_THROWS_AS(parse_extension("[]"), SchemaError);
  CHECK_THROWS_AS(parse_extension(R"j({"algebra": {"dim": 1}})j"), SchemaError);
  // malformed constants array: wrong depth
  CHECK_THROWS_AS(parse_extension(R"j({"algebra": {"dim": 2, "structure_constants": [["1","0"],["0","1"]],
                                                  "unit": ["1","0"]}, "subalgebra_basis": [["1","0"]]})j"),
                  SchemaError);
  CHECK_THROWS_AS(parse_extension(R"j({"algebra": {"dim": 1, "structure_constants": [[["x"]]], "unit": ["1"]},
                                      "subalgebra_basis": [["1"]]})j"),
                  SchemaError);
  CHECK_THROWS_AS(parse_extension(R"j({"algebra": {"dim": 1, "structure_constants": [[[true]]], "unit": ["1"]},
                                      "subalgebra_basis": [["1"]]})j"),
                  SchemaError);
  CHECK_THROWS_AS(parse_extension(R"j({"field": {"kind": "prime", "characteristic": 4},
                                      "group_algebra": {"G": ["(1 2)"], "H": []}})j"),
                  SchemaError);
  CHECK_THROWS_AS(parse_extension(R"j({"field": {"kind": "real"}, "group_algebra": {"G": [], "H": []}})j"),
                  SchemaError);
  CHECK_THROWS_AS(parse_extension(R"j({"group_algebra": {"G": ["(1 2"], "H": []}})j"), SchemaError);
  CHECK_THROWS_AS(load_extension("/nonexistent/file.json"), SchemaError);
}

TEST_CASE("algebra and subalgebra errors") {
  CHECK_THROWS_AS(parse_extension(R"j({"algebra": {"dim": 1, "structure_constants": [[["2"]]], "unit": ["1"]},
                                      "subalgebra_basis": [["1"]]})j"),
                  InvalidAlgebra);
  const std::string m2 = R"j({"algebra": {"dim": 4, "structure_constants": )j";
  const Algebra a = matrix_algebra(Field::rational(), 2);
  nlohmann::json c = nlohmann::json::array();
  for (std::size_t i = 0; i < 4; ++i) {
    nlohmann::json mi = nlohmann::json::array();
    for (std::size_t j = 0; j < 4; ++j) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t k = 0; k < 4; ++k) row.push_back(a.constant(i, j, k).str());
      mi.push_back(row);
    }
    c.push_back(mi);
  }
  const std::string head = m2 + c.dump() + R"j(, "unit": ["1","0","0","1"]}, "subalgebra_basis": )j";
  CHECK_THROWS_AS(parse_extension(head + R"j([["1","0","0","0"]]})j"), NotUnital);
  CHECK_THROWS_AS(parse_extension(head + R"j([["1","0","0","1"],["0","1","0","0"],["0","0","1","0"]]})j"), NotClosed);
  CHECK_NOTHROW(parse_extension(head + R"j([["1","0","0","1"]]})j"));
}

TEST_CASE("json and text reports carry the same records") {
  const Extension e = support::load("qc2_over_k");
  PipelineOptions opt;
  opt.command = Command::check_d2;
  const Report r = run_pipeline(e, opt);
  const ReportHeader h{"check-d2", "qc2_over_k", e.field(), e.dim(), e.sub.dim(), e.centralizer.dim()};
  const auto j = nlohmann::json::parse(report_to_json(h, r));
  CHECK(j["schema_version"] == kReportSchemaVersion);
  const std::string text = report_to_text(h, r);
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string line = text.substr(pos, nl - pos);
    if (!line.empty() && line[0] != '#') lines.push_back(line);
    pos = nl + 1;
  }
  REQUIRE(lines.size() == j["checks"].size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& rec = j["checks"][i];
    const std::string expect_prefix = rec["status"].get<std::string>() + "\t" + rec["kind"].get<std::string>() +
                                      "\t" + rec["check_id"].get<std::string>() + "\t";
    CHECK(lines[i].rfind(expect_prefix, 0) == 0);
  }
}
