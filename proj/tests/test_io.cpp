#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "testutil.hpp"
#include "tricap/io.hpp"
#include "tricap/moves.hpp"

using namespace tricap;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string data_dir() {
  const char* dir = std::getenv("TRICAP_DATA");
  REQUIRE(dir != nullptr);
  return dir;
}

}  // namespace

TEST_CASE("parsing the bundled d1 file yields the bundled diagram") {
  std::vector<std::string> warnings;
  const DiagramDocument doc =
      parse_diagram(read_file(data_dir() + "/d1.json"), &warnings);
  CHECK(warnings.empty());
  CHECK(doc.surface == SurfaceModel(2, 2));
  CHECK_FALSE(doc.closed());
  CHECK(doc.as_relative() == bundled::d1());
  CHECK(doc.name == "d1");
}

TEST_CASE("boundary zero dispatches to the closed reading") {
  const DiagramDocument doc = parse_diagram(read_file(data_dir() + "/cp2.json"));
  CHECK(doc.closed());
  CHECK(doc.as_closed() == bundled::cp2());
  CHECK_THROWS_AS(doc.as_relative(), std::invalid_argument);
}

TEST_CASE("serialize then parse is the identity on documents") {
  for (const DiagramDocument& doc : bundled::all_documents()) {
    const DiagramDocument back = parse_diagram(serialize_diagram(doc));
    CHECK(back == doc);
  }
}

TEST_CASE("parse then serialize reproduces the corpus files byte for byte") {
  for (const char* name :
       {"d1", "d2", "s4", "s1xs3", "cp2", "cp2_bar"}) {
    const std::string text = read_file(data_dir() + "/" + name + ".json");
    const DiagramDocument doc = parse_diagram(text);
    CHECK(serialize_diagram(doc) == text);
  }
}

TEST_CASE("golden files match the bundled documents exactly") {
  CHECK(serialize_diagram(bundled::d1_document()) ==
        read_file(data_dir() + "/d1.json"));
  CHECK(serialize_diagram(bundled::d2_document()) ==
        read_file(data_dir() + "/d2.json"));
}

TEST_CASE("wrong tuple length names the family, curve and expected length") {
  const std::string text = R"({
    "format_version": "1",
    "surface": { "genus": 2, "boundary": 2 },
    "families": {
      "alpha": [[1, 0, 0, 0, 0], [0, 0, 1, 0, 0]],
      "beta": [[0, 1, 0, 0, 0], [0, 0, 0, 1, 0]],
      "gamma": [[1, 0, 0, 1, 0], [0, 1, 1, 0]]
    }
  })";
  CHECK_THROWS_WITH_AS(parse_diagram(text),
                       "family gamma, curve 2: expected length 5",
                       DiagramFormatError);
}

TEST_CASE("malformed syntax reports the position") {
  try {
    parse_diagram("{ \"format_version\": \"1\",\n  oops }");
    FAIL("expected a parse error");
  } catch (const nlohmann::json::parse_error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("unknown fields warn but do not fail") {
  const std::string text = R"({
    "format_version": "1",
    "surface": { "genus": 0, "boundary": 0, "color": "blue" },
    "families": { "alpha": [], "beta": [], "gamma": [] },
    "extra": 7
  })";
  std::vector<std::string> warnings;
  const DiagramDocument doc = parse_diagram(text, &warnings);
  CHECK(doc.surface == SurfaceModel(0, 0));
  REQUIRE(warnings.size() == 2);
  CHECK(warnings[0].find("extra") != std::string::npos);
  CHECK(warnings[1].find("color") != std::string::npos);
}

TEST_CASE("coordinate magnitudes are capped at parse time") {
  const std::string text = R"({
    "format_version": "1",
    "surface": { "genus": 1, "boundary": 0 },
    "families": { "alpha": [[1000001, 0]], "beta": [[0, 1]], "gamma": [[1, 1]] }
  })";
  CHECK_THROWS_AS(parse_diagram(text), DiagramFormatError);
}

TEST_CASE("schema violations are reported with context") {
  CHECK_THROWS_AS(parse_diagram("[]"), DiagramFormatError);
  CHECK_THROWS_AS(parse_diagram("{}"), DiagramFormatError);
  CHECK_THROWS_AS(parse_diagram(R"({"format_version": "2",
    "surface": {"genus": 0, "boundary": 0},
    "families": {"alpha": [], "beta": [], "gamma": []}})"),
                  DiagramFormatError);
  CHECK_THROWS_AS(parse_diagram(R"({"format_version": "1",
    "surface": {"genus": -1, "boundary": 0},
    "families": {"alpha": [], "beta": [], "gamma": []}})"),
                  DiagramFormatError);
  CHECK_THROWS_AS(parse_diagram(R"({"format_version": "1",
    "surface": {"genus": 0.5, "boundary": 0},
    "families": {"alpha": [], "beta": [], "gamma": []}})"),
                  DiagramFormatError);
  CHECK_THROWS_AS(parse_diagram(R"({"format_version": "1",
    "surface": {"genus": 0, "boundary": 0},
    "families": {"alpha": [], "beta": []}})"),
                  DiagramFormatError);
}

TEST_CASE("the minimal closed document") {
  DiagramDocument doc;
  doc.surface = SurfaceModel(0, 0);
  const std::string text = serialize_diagram(doc);
  CHECK(text ==
        "{\n"
        "  \"format_version\": \"1\",\n"
        "  \"surface\": { \"genus\": 0, \"boundary\": 0 },\n"
        "  \"families\": {\n"
        "    \"alpha\": [],\n"
        "    \"beta\": [],\n"
        "    \"gamma\": []\n"
        "  }\n"
        "}\n");
  CHECK(parse_diagram(text) == doc);
}

TEST_CASE("bundled diagrams validate with their advertised types") {
  CHECK(*validate_relative(bundled::d1()).inferred_type ==
        InferredType{2, 1, 0, 2, false});
  CHECK(*validate_relative(bundled::d2()).inferred_type ==
        InferredType{2, 1, 0, 2, false});
  CHECK(*validate_closed(bundled::s4()).inferred_type ==
        InferredType{0, 0, 0, 0, true});
  CHECK(*validate_closed(bundled::s1xs3()).inferred_type ==
        InferredType{1, 1, 0, 0, true});
  CHECK(*validate_closed(bundled::cp2()).inferred_type ==
        InferredType{1, 0, 0, 0, true});
  CHECK(*validate_closed(bundled::cp2_bar()).inferred_type ==
        InferredType{1, 0, 0, 0, true});
}

TEST_CASE("paper demo reproduces every expected step and is deterministic") {
  const PaperDemoResult r1 = run_paper_demo();
  CHECK(r1.ok);
  CHECK(r1.d1_report.ok);
  CHECK(r1.d2_report.ok);
  CHECK(r1.chi2_types_g1.size() == 1);
  CHECK(r1.chi2_types_g1_filtered.empty());
  CHECK(r1.genus_bound.genus == 2);
  CHECK(r1.verdict.outcome == DistinguishVerdict::Outcome::Distinguished);
  const PaperDemoResult r2 = run_paper_demo();
  CHECK(r1.summary == r2.summary);
  CHECK(r1.summary.find("intersection form parity: even vs odd") !=
        std::string::npos);
}
