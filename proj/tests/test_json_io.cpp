#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stackings/convert.hpp"
#include "stackings/diagram.hpp"
#include "stackings/fixtures.hpp"
#include "stackings/json_io.hpp"

using namespace stackings;

namespace {

CoverData torus_ball(int radius = 2) {
  Presentation p = fixtures::torus();
  return build_cayley_ball(p, radius, WordProblemOracle::for_abelian(p));
}

}  // namespace

TEST_CASE("complexes, stackings and presentations round-trip") {
  TwoComplex c = presentation_complex(fixtures::two_triangles());
  CHECK(complex_from_json(parse_json(dump_json(to_json(c)))) == c);

  Stacking gs = fixtures::torus_good_stacking();
  CHECK(stacking_from_json(parse_json(dump_json(to_json(gs)))) == gs);

  Presentation p = fixtures::swapped_triangles();
  CHECK(presentation_from_json(parse_json(dump_json(to_json(p)))) == p);

  Relation r;
  r.ground = {"x", "y", "z"};
  r.add("x", "y");
  r.add("y", "z");
  CHECK(relation_from_json(parse_json(dump_json(to_json(r)))) == r);
}

TEST_CASE("covers and ball certificates round-trip") {
  CoverData cv = torus_ball();
  CHECK(cover_from_json(parse_json(dump_json(to_json(cv)))) == cv);

  BislimStructure b = gs_to_bs(cv, fixtures::torus_good_stacking());
  CHECK(bislim_from_json(parse_json(dump_json(to_json(b)))) == b);

  ISStructure is = bs_to_is(cv, b);
  CHECK(is_from_json(parse_json(dump_json(to_json(is)))) == is);

  LeftOrderOracle ord = make_order_oracle(fixtures::torus(), LeftOrderOracle::free_abelian);
  TISStructure t = staggered_to_tis(cv, fixtures::torus_staggered(), ord);
  CHECK(tis_from_json(parse_json(dump_json(to_json(t)))) == t);

  CHECK(staggered_from_json(parse_json(dump_json(to_json(fixtures::torus_staggered())))) ==
        fixtures::torus_staggered());
}

TEST_CASE("diagrams and embeddings round-trip") {
  TwoComplex f1 = presentation_complex(fixtures::two_triangles());
  FuzzOptions opt;
  opt.count = 3;
  opt.seed = 7;
  for (const DiskDiagram& d : fuzz_diagrams(f1, opt))
    CHECK(diagram_from_json(parse_json(dump_json(to_json(d)))) == d);

  Presentation st = fixtures::swapped_triangles();
  CoverData cv = build_cayley_ball(st, 2, WordProblemOracle::for_abelian(st));
  Embedding e = fixtures::swapped_triangles_embedding(cv);
  CHECK(embedding_from_json(parse_json(dump_json(to_json(e)))) == e);
}

TEST_CASE("dumps are deterministic and reparse to the same document") {
  CoverData cv = torus_ball(1);
  std::string once = dump_json(to_json(cv));
  std::string twice = dump_json(to_json(cv));
  CHECK(once == twice);
  CHECK(dump_json(parse_json(once)) == once);
  CHECK(once.back() == '\n');
}

TEST_CASE("shape defects are rejected") {
  TwoComplex c = presentation_complex(fixtures::torus());

  SUBCASE("syntax error") { CHECK_THROWS_AS(parse_json("{"), malformed_error); }
  SUBCASE("unknown field") {
    Json j = to_json(c);
    j["extra"] = 1;
    CHECK_THROWS_AS(complex_from_json(j), malformed_error);
  }
  SUBCASE("missing field") {
    Json j = to_json(c);
    j.erase("faces");
    CHECK_THROWS_AS(complex_from_json(j), malformed_error);
  }
  SUBCASE("bad direction") {
    Json j = to_json(c);
    j["faces"][0]["boundary"][0]["dir"] = 2;
    CHECK_THROWS_AS(complex_from_json(j), malformed_error);
  }
  SUBCASE("duplicate edge id") {
    Json j = to_json(c);
    j["edges"].push_back(j["edges"][0]);
    CHECK_THROWS_AS(complex_from_json(j), malformed_error);
  }
  SUBCASE("non-string vertex") {
    Json j = to_json(c);
    j["vertices"][0] = 3;
    CHECK_THROWS_AS(complex_from_json(j), malformed_error);
  }
  SUBCASE("pair of arity three") {
    Json j = parse_json(R"({"ground": ["a"], "pairs": [["a", "a", "a"]]})");
    CHECK_THROWS_AS(relation_from_json(j), malformed_error);
  }
  SUBCASE("zero denominator") {
    Json j = parse_json(
        R"({"barycenters": {"1": [[0, 0], [0, 1]]}, "translations": {}})");
    CHECK_THROWS_AS(embedding_from_json(j), malformed_error);
  }
  SUBCASE("stacking side entry of arity one") {
    Json j = parse_json(R"({"side_order": {"a": [["r"]]}, "corner_order": {}})");
    CHECK_THROWS_AS(stacking_from_json(j), malformed_error);
  }
  SUBCASE("negative position") {
    Json j = parse_json(R"({"side_order": {"a": [["r", -1]]}, "corner_order": {}})");
    CHECK_THROWS_AS(stacking_from_json(j), malformed_error);
  }
  SUBCASE("cover flag must be boolean") {
    CoverData cv = torus_ball(1);
    Json j = to_json(cv);
    j["simply_connected_quotient"] = "yes";
    CHECK_THROWS_AS(cover_from_json(j), malformed_error);
  }
}
