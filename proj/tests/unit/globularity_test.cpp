#include "corpus.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "zignorm/globularity.hpp"
#include "zignorm/normalisation.hpp"

using namespace zignorm;
using namespace zignorm::fixtures;

TEST_CASE("globular maps") {
  CHECK(is_globular_map(DiagramMap::thin(gen("a", 0), gen("f", 1))));
  Diagram e = eh_diagram();
  CHECK(is_globular_map(e.forward(0)));
  CHECK(is_globular_map(e.backward(0)));
  CHECK(is_globular_map(identity_map(surface_diagram())));
}

TEST_CASE("a normalising map with a proper regular slice is not globular") {
  // wrap [f, id] as the regular boundary of a 2-diagram; the level
  // normaliser of the wrapper has a proper insertion as a regular slice
  Diagram inner = composite_with_unit();
  Diagram t = Diagram::zigzag({inner}, {}, {}, {});
  DiagramMap d = normalise(t).normaliser;
  CHECK_FALSE(is_globular_map(d));
}

TEST_CASE("globular objects") {
  CHECK(is_globular_object(pt(gen("a", 0))));
  CHECK(is_globular_object(composite_with_unit()));  // every 1-diagram is globular
  CHECK(is_globular_object(surface_diagram()));
  CHECK(is_globular_object(eh_diagram()));
  CHECK(is_globular_object(syllepsis_diagram()));

  // perturb: a cospan leg with a non-iso regular slice
  Diagram af = diag1({gen("f", 1), gen("f", 1)}, {gen("m", 2)});
  Diagram src = Diagram::zigzag({pt(gen("a", 0))}, {}, {}, {});
  Monotone empty = Monotone::empty(1);
  DiagramMap leg = DiagramMap::zigzag_map(
      src, af, empty,
      {DiagramMap::thin(gen("a", 0), gen("f", 1)), DiagramMap::thin(gen("a", 0), gen("f", 1))},
      {});
  REQUIRE(validate_map(leg));
  CHECK_FALSE(is_globular_map(leg));
  Diagram bad = Diagram::zigzag({src, src}, {af}, {leg}, {leg});
  REQUIRE(validate_diagram(bad));
  CHECK_FALSE(is_globular_object(bad));
}

TEST_CASE("regularly normalising maps") {
  CHECK(is_regularly_normalising(identity_map(composite_normal_form())));
  CHECK(is_regularly_normalising(DiagramMap::thin(gen("a", 0), gen("f", 1))));
  // an identity into a diagram with an un-normal regular level is not
  Diagram inner = composite_with_unit();
  Diagram t = Diagram::zigzag({inner, inner}, {inner}, {identity_map(inner)},
                              {identity_map(inner)});
  CHECK_FALSE(is_regularly_normalising(identity_map(t)));
  // the normaliser produced on a globular diagram is regularly normalising
  testing::Corpus corpus(5);
  for (int round = 0; round < 25; ++round) {
    Diagram d = corpus.diagram();
    REQUIRE(is_globular_object(d));
    CHECK(is_regularly_normalising(normalise(d).normaliser));
  }
}

TEST_CASE("normalisation preserves globularity") {
  testing::Corpus corpus(6);
  for (int round = 0; round < 40; ++round) {
    Diagram d = corpus.diagram();
    REQUIRE(is_globular_object(d));
    CHECK(is_globular_object(normalise(d).normal_form));
  }
  CHECK(is_globular_object(normalise(eh_diagram()).normal_form));
}

TEST_CASE("relative normalisation transports the globular invariants") {
  testing::Corpus corpus(8);
  for (int round = 0; round < 20; ++round) {
    Diagram d = corpus.diagram();
    DiagramMap nd = normalise(d).normaliser;
    REQUIRE(is_regularly_normalising(nd));
    Sink sink{d, {nd}};
    NormalisationResult r = normalise_relative(sink);
    CHECK(is_globular_object(r.normal_form));
    CHECK(is_regularly_normalising(r.normaliser));
    for (const auto& g : r.factorisations) {
      CHECK(is_globular_map(g));
      // the factorisations fill the regular squares with identities
      if (g.dimension() >= 1)
        for (const auto& slice : g.regular_slices()) CHECK(is_isomorphism(slice));
    }
  }
}
