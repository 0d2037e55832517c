#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "support.hpp"

using support::run_cli;

namespace {

std::string corpus(const std::string& name) { return "\"" + support::corpus_path(name) + "\""; }

std::string temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << contents;
  return path.string();
}

}  // namespace

TEST_CASE("all on m2_over_k: every check passes") {
  const auto r = run_cli("all " + corpus("m2_over_k"));
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["consistent"] == true);
  for (const auto& c : j["checks"]) {
    CAPTURE(c["check_id"].get<std::string>());
    CHECK(c["status"] == "pass");
  }
}

TEST_CASE("check-d2 --side both on s3_over_c2 gives negative verdicts and exit 0") {
  const auto r = run_cli("check-d2 --side both " + corpus("s3_over_c2"));
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  int verdicts = 0;
  for (const auto& c : j["checks"]) {
    if (c["check_id"] == "d2.left" || c["check_id"] == "d2.right") {
      CHECK(c["kind"] == "verdict");
      CHECK(c["status"] == "fail");
      CHECK(c["witness"] == "not D2");
      ++verdicts;
    }
  }
  CHECK(verdicts == 2);
}

TEST_CASE("json and text formats carry identical check records") {
  for (const std::string name : {"m2_over_diagonal", "s3_over_c2"}) {
    CAPTURE(name);
    const auto js = run_cli("all --format json " + corpus(name));
    const auto tx = run_cli("all --format text " + corpus(name));
    CHECK(js.exit_code == tx.exit_code);
    const auto j = nlohmann::ordered_json::parse(js.out);
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos < tx.out.size()) {
      const std::size_t nl = tx.out.find('\n', pos);
      std::string line = tx.out.substr(pos, nl - pos);
      if (!line.empty() && line[0] != '#') lines.push_back(line);
      pos = nl + 1;
    }
    REQUIRE(lines.size() == j["checks"].size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
      const auto& c = j["checks"][i];
      std::string dims;
      for (auto it = c["dimensions"].begin(); it != c["dimensions"].end(); ++it) {
        if (!dims.empty()) dims += ",";
        dims += it.key() + "=" + std::to_string(it.value().get<std::size_t>());
      }
      const std::string expected = c["status"].get<std::string>() + "\t" + c["kind"].get<std::string>() + "\t" +
                                   c["check_id"].get<std::string>() + "\t" + dims + "\t" +
                                   c.value("witness", std::string()) + "\t" + c.value("note", std::string());
      CHECK(lines[i] == expected);
    }
  }
}

TEST_CASE("two runs are byte-identical") {
  const auto a = run_cli("all " + corpus("qc2_over_k"));
  const auto b = run_cli("all " + corpus("qc2_over_k"));
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("subcommands and filters") {
  const auto t = run_cli("bialgebroid --carrier T " + corpus("qc2_over_k"));
  CHECK(t.exit_code == 0);
  const auto j = nlohmann::json::parse(t.out);
  for (const auto& c : j["checks"]) {
    const std::string id = c["check_id"];
    CHECK((id.rfind("T.", 0) == 0 || id == "extension.dims"));
  }
  CHECK(run_cli("galois --side R " + corpus("s3_over_c3")).exit_code == 0);
  CHECK(run_cli("duality --side left " + corpus("m2_over_k")).exit_code == 0);
  CHECK(run_cli("endo-tower " + corpus("qc2_over_k")).exit_code == 0);
  CHECK(run_cli("bialgebroid " + corpus("s3_over_c2")).exit_code == 0);
}

TEST_CASE("input errors exit with 2") {
  CHECK(run_cli("all /nonexistent.json").exit_code == 2);
  CHECK(run_cli("frobnicate " + corpus("m2_over_k")).exit_code == 2);
  CHECK(run_cli("all --side X " + corpus("m2_over_k")).exit_code == 2);
  CHECK(run_cli("all").exit_code == 2);
  const std::string bad = temp_file("d2lab_bad.json", R"({"algebra": {"dim": 2, "structure_constants": [["1"]]}})");
  CHECK(run_cli("check-d2 \"" + bad + "\"").exit_code == 2);
  const std::string open = temp_file("d2lab_open.json", R"j({"group_algebra": {"G": ["(1 2)"], "H": ["(1 2 3)"]}})j");
  CHECK(run_cli("check-d2 \"" + open + "\"").exit_code == 2);
}

TEST_CASE("dimension guard: flag and environment") {
  CHECK(run_cli("check-d2 --max-dim 3 " + corpus("m2_over_k")).exit_code == 2);
  CHECK(run_cli("check-d2 " + corpus("m2_over_k"), "D2LAB_MAX_DIM=3").exit_code == 2);
  CHECK(run_cli("check-d2 --max-dim 4 " + corpus("m2_over_k"), "D2LAB_MAX_DIM=3").exit_code == 0);
  CHECK(run_cli("endo-tower --max-dim 5 " + corpus("m2_over_k")).exit_code == 0);
}
