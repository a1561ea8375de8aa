#include "corpus.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "zignorm/error.hpp"
#include "zignorm/json_io.hpp"
#include "zignorm/normalisation.hpp"

using namespace zignorm;
using namespace zignorm::fixtures;

TEST_CASE("diagram files round-trip byte-exactly") {
  for (const Diagram& d : {composite_with_unit(), surface_diagram(), eh_diagram(), eh_typing_x()}) {
    std::string text = io::write_diagram_text(d);
    Diagram back = io::read_diagram_text(text);
    CHECK(back == d);
    CHECK(io::write_diagram_text(back) == text);
  }
}

TEST_CASE("map files round-trip byte-exactly") {
  for (const DiagramMap& f : {essential_leg_point(), essential_leg_fold(), sample_zigzag_map(), collapse_sink().legs[0]}) {
    std::string text = io::write_map_text(f);
    DiagramMap back = io::read_map_text(text);
    CHECK(back == f);
    CHECK(io::write_map_text(back) == text);
  }
}

TEST_CASE("signature files round-trip") {
  std::string text = io::write_signature_text(eh_signature());
  Signature back = io::read_signature_text(text);
  CHECK(io::write_signature_text(back) == text);
  CHECK(back.find("x") != nullptr);
}

TEST_CASE("encoding is canonical: structural equality is byte equality") {
  testing::Corpus corpus(3);
  for (int round = 0; round < 20; ++round) {
    Diagram d = corpus.diagram();
    Diagram again = io::read_diagram_text(io::write_diagram_text(d));
    CHECK(again == d);
    CHECK(io::write_diagram_text(again) == io::write_diagram_text(d));
    DiagramMap leg = corpus.leg(d);
    CHECK(io::read_map_text(io::write_map_text(leg)) == leg);
  }
}

TEST_CASE("the serialised shape follows the documented schema") {
  nlohmann::json j = io::encode_diagram(composite_with_unit());
  CHECK(j["dim"] == 1);
  REQUIRE(j["regular"].is_array());
  CHECK(j["regular"].size() == 3);
  CHECK(j["regular"][0]["generator"]["name"] == "a");
  CHECK(j["singular"][0]["generator"]["dimension"] == 1);
  nlohmann::json m = io::encode_map(essential_leg_fold());
  CHECK(m["dim"] == 1);
  CHECK(m["monotone"] == nlohmann::json::array({0, 0}));
  CHECK(m["regular_slices"].size() == 2);
  CHECK(m["singular_slices"][0]["source"] == "c");
  // regular monotones are never serialised
  CHECK_FALSE(m.contains("regular_monotone"));
}

TEST_CASE("parse errors carry pointer paths") {
  CHECK_THROWS_AS(io::parse_file_text("{\"format\":"), KernelError);
  CHECK_THROWS_AS(io::parse_file_text("{}"), KernelError);
  CHECK_THROWS_AS(io::parse_file_text("[1,2]"), KernelError);
  // missing keys inside the payload
  try {
    io::read_diagram_text("{\"format\":\"zignorm/1\",\"dim\":1,\"regular\":[]}");
    CHECK(false);
  } catch (const KernelError& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(std::string(e.what()).find("singular") != std::string::npos);
  }
}

TEST_CASE("decoding validates the zigzag laws") {
  // structurally well-formed JSON whose 0-map violates the thin base order
  std::string text = io::write_diagram_text(diag1({gen("m", 2), gen("m", 2)}, {gen("m", 2)}));
  CHECK(io::read_diagram_text(text) == diag1({gen("m", 2), gen("m", 2)}, {gen("m", 2)}));
  std::string bad = text;
  const std::string from = "\"dimension\":2,\"name\":\"m\"";
  bad.replace(bad.find(from), from.size(), "\"dimension\":9,\"name\":\"m\"");
  CHECK_THROWS_AS(io::read_diagram_text(bad), KernelError);
}

TEST_CASE("normalisation results serialise with the documented keys") {
  NormalisationResult r = normalise(composite_with_unit());
  std::string text = io::write_normalisation_text(r);
  nlohmann::json j = nlohmann::json::parse(text);
  CHECK(j["format"] == "zignorm/1");
  CHECK(j.contains("normal_form"));
  CHECK(j.contains("normaliser"));
  CHECK(j["factorisations"].is_array());
}
