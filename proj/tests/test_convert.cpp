#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stackings/convert.hpp"
#include "stackings/fixtures.hpp"

using namespace stackings;

namespace {

CoverData torus_ball() {
  Presentation p = fixtures::torus();
  return build_cayley_ball(p, 2, WordProblemOracle::for_abelian(p));
}

bool restricted_to(const Relation& small, const Relation& big) {
  for (auto& [a, b] : small.pairs)
    if (!big.has(a, b)) return false;
  return true;
}

}  // namespace

TEST_CASE("torus: good stacking marks down to a bislim structure") {
  CoverData cv = torus_ball();
  BislimStructure bs = gs_to_bs(cv, fixtures::torus_good_stacking());

  CHECK(bs.plus.at("1|r") == "1|a");
  CHECK(bs.plus.at("a~|r") == "a~|a");
  CHECK(bs.plus.at("b~|r") == "b~|a");
  CHECK(bs.plus.at("a~.b~|r") == "a~.b~|a");
  CHECK(bs.minus.at("1|r") == "b|a");
  CHECK(bs.minus.at("a~.b~|r") == "a~|a");

  // sixteen diagonal pairs plus the five reachability pairs
  CHECK(bs.preorder.ground.size() == 16);
  CHECK(bs.preorder.pairs.size() == 21);
  CHECK(bs.preorder.has("1|a", "a~|a"));
  CHECK(bs.preorder.has("1|a", "b~|a"));
  CHECK(bs.preorder.has("1|a", "a~.b~|a"));
  CHECK(bs.preorder.has("a~|a", "a~.b~|a"));
  CHECK(bs.preorder.has("b~|a", "a~.b~|a"));
  CHECK(!bs.preorder.has("a~|a", "b~|a"));

  Report r = check_bislim(cv, bs);
  CHECK(r.ok());
  CHECK(!r.horizon.empty());
  CHECK(check_unique_strict_max(cv, bs).ok());
}

TEST_CASE("torus: bislim, staggering and descent reproduce the stacking") {
  CoverData cv = torus_ball();
  Stacking gs = fixtures::torus_good_stacking();
  BislimStructure bs = gs_to_bs(cv, gs);

  ISStructure is = bs_to_is(cv, bs);
  CHECK(is.face_order.pairs.size() == 5);
  CHECK(is.face_order.has("1|r", "a~|r"));
  CHECK(is.face_order.has("1|r", "a~.b~|r"));
  CHECK(!is.face_order.has("a~|r", "b~|r"));
  CHECK(is.plus_order.ground ==
        std::set<std::string>{"1|a", "a~|a", "b~|a", "a~.b~|a"});
  CHECK(is.minus_order.ground ==
        std::set<std::string>{"b|a", "a~.b|a", "1|a", "a~|a"});
  CHECK(is.minus_order.has("b|a", "a~.b|a"));
  CHECK(check_is(cv, is).ok());

  Stacking gs2 = is_to_gs(cv, is);
  CHECK(gs2 == gs);
  CHECK(is_to_bs(cv, is) == bs);
}

TEST_CASE("two triangles: the full conversion cycle returns the stacking") {
  Presentation p = fixtures::two_triangles();
  CoverData cv = build_cayley_ball(p, 1, WordProblemOracle::for_abelian(p));
  CHECK(cv.ball.faces.size() == 6);

  Stacking gs = fixtures::two_triangles_good_stacking();
  CHECK(check_stacking(presentation_complex(p), gs).ok());
  CHECK(check_good(presentation_complex(p), gs).ok());

  BislimStructure bs = gs_to_bs(cv, gs);
  CHECK(bs.plus.at("1|r1") == "1|a");
  CHECK(bs.plus.at("1|r2") == "a|b");
  CHECK(bs.plus.at("a~|r2") == "1|b");
  CHECK(bs.plus.at("c|r2") == "b~|b");
  CHECK(bs.minus.at("1|r1") == "b~|b");
  CHECK(bs.minus.at("a~|r1") == "c|b");
  CHECK(bs.preorder.pairs.size() == 23);
  CHECK(check_bislim(cv, bs).ok());

  ISStructure is = bs_to_is(cv, bs);
  CHECK(is.face_order.pairs.size() == 11);
  CHECK(check_is(cv, is).ok());

  Stacking gs2 = is_to_gs(cv, is);
  CHECK(gs2 == gs);
}

TEST_CASE("torus: staggered structure lifts to a total staggering") {
  CoverData cv = torus_ball();
  LeftOrderOracle ord = make_order_oracle(fixtures::torus(), LeftOrderOracle::free_abelian);
  TISStructure t = staggered_to_tis(cv, fixtures::torus_staggered(), ord);

  CHECK(t.face_order.pairs.size() == 6);
  CHECK(t.face_order.has("a~.b~|r", "a~|r"));
  CHECK(t.face_order.has("a~|r", "b~|r"));
  CHECK(t.face_order.has("b~|r", "1|r"));

  CHECK(t.plus_order.ground.size() == 16);
  CHECK(t.plus_order.pairs.size() == 120);
  CHECK(t.plus_order.has("1|a", "1|b"));
  CHECK(t.plus_order.has("a~|a", "1|a"));
  CHECK(!t.plus_order.has("1|b", "1|a"));
  CHECK(t.minus_order == t.plus_order);

  Report r = check_tis(cv, t);
  CHECK(r.ok());
  CHECK(!r.horizon.empty());
  CHECK(check_is(cv, tis_to_is(cv, t)).ok());
}

TEST_CASE("torus: total staggering round trip through totally bislim") {
  CoverData cv = torus_ball();
  LeftOrderOracle ord = make_order_oracle(fixtures::torus(), LeftOrderOracle::free_abelian);
  TISStructure t1 = staggered_to_tis(cv, fixtures::torus_staggered(), ord);

  BislimStructure b1 = tis_to_tbs(cv, t1);
  CHECK(b1.plus.at("1|r") == "a|b");
  CHECK(b1.plus.at("a~|r") == "1|b");
  CHECK(b1.plus.at("b~|r") == "a.b~|b");
  CHECK(b1.plus.at("a~.b~|r") == "b~|b");
  CHECK(b1.minus.at("1|r") == "1|a");
  CHECK(b1.minus.at("a~.b~|r") == "a~.b~|a");
  CHECK(b1.preorder.pairs.size() == 136);
  CHECK(check_tbs(cv, b1).ok());

  TISStructure t2 = tbs_to_tis(cv, b1);
  CHECK(t2.face_order == t1.face_order);
  CHECK(t2.plus_order.ground ==
        std::set<std::string>{"a|b", "1|b", "a.b~|b", "b~|b"});
  CHECK(t2.plus_order.pairs.size() == 6);
  CHECK(restricted_to(t2.plus_order, t1.plus_order));
  CHECK(t2.minus_order.ground ==
        std::set<std::string>{"1|a", "a~|a", "b~|a", "a~.b~|a"});
  CHECK(restricted_to(t2.minus_order, t1.minus_order));
  CHECK(check_tis(cv, t2).ok());
}

TEST_CASE("slope orders on the swapped triangles ball") {
  Presentation p = fixtures::swapped_triangles();
  CoverData cv = build_cayley_ball(p, 2, WordProblemOracle::for_abelian(p));
  Embedding emb = fixtures::swapped_triangles_embedding(cv);

  SUBCASE("an irrational-looking slope separates everything") {
    SlopeResult sr = slope_projection_order(cv, emb, 355, 113);
    REQUIRE(sr.tis.has_value());
    Report r = check_tis(cv, *sr.tis);
    CHECK(r.ok());
    CHECK(check_is(cv, sr.is).ok());
  }

  SUBCASE("a horizontal slope leaves ties, hence only a partial staggering") {
    SlopeResult sr = slope_projection_order(cv, emb, 1, 0);
    CHECK(!sr.tis.has_value());
    CHECK(!sr.is.face_order.has("1|r1", "a~|r1"));
    CHECK(!sr.is.face_order.has("a~|r1", "1|r1"));
    CHECK(check_is(cv, sr.is).ok());
  }

  SUBCASE("embedding defects are rejected") {
    Embedding broken = emb;
    broken.barycenters.erase("1|r1");
    CHECK_THROWS_AS(slope_projection_order(cv, broken, 1, 1), malformed_error);

    Embedding shifted = emb;
    shifted.barycenters["a"] = {Rat(5), Rat(5)};
    CHECK_THROWS_AS(slope_projection_order(cv, shifted, 1, 1), malformed_error);

    CHECK_THROWS_AS(slope_projection_order(cv, emb, 0, 0), malformed_error);
  }

  SUBCASE("no staggered structure exists on the quotient") {
    StaggeredSearchResult sr = search_staggered(presentation_complex(p), 1000);
    CHECK(!sr.structure.has_value());
    CHECK(sr.stats.exhausted);
    CHECK(sr.stats.examined == 30);
  }
}

TEST_CASE("conversions validate their inputs") {
  CoverData cv = torus_ball();

  Stacking bad = fixtures::torus_good_stacking();
  bad.side_order["a"] = {{"r", 2}, {"r", 0}};  // contradicts the corner order
  CHECK_THROWS_AS(gs_to_bs(cv, bad), malformed_error);

  LeftOrderOracle finite;
  finite.kind = LeftOrderOracle::finite;
  CHECK_THROWS_AS(staggered_to_tis(cv, fixtures::torus_staggered(), finite), malformed_error);

  LeftOrderOracle wrong_rank;
  wrong_rank.kind = LeftOrderOracle::free_abelian;
  wrong_rank.rank = 5;
  CHECK_THROWS_AS(staggered_to_tis(cv, fixtures::torus_staggered(), wrong_rank),
                  malformed_error);

  LeftOrderOracle ord = make_order_oracle(fixtures::torus(), LeftOrderOracle::free_abelian);
  TISStructure t = staggered_to_tis(cv, fixtures::torus_staggered(), ord);
  TISStructure holed = t;
  holed.face_order.pairs.erase({"a~.b~|r", "1|r"});
  CHECK_THROWS_AS(tis_to_is(cv, holed), malformed_error);
}

TEST_CASE("descent needs charts the ball can certify") {
  // a radius-1 torus ball has no faces, so every edge lift is frontier
  Presentation pt = fixtures::torus();
  CoverData small = build_cayley_ball(pt, 1, WordProblemOracle::for_abelian(pt));
  CHECK(small.ball.faces.empty());
  ISStructure empty;
  CHECK(check_is(small, empty).ok());
  CHECK_THROWS_AS(is_to_gs(small, empty), horizon_error);

  // the doubled loop: different lifts order the four parallel faces
  // differently, and indeed no good stacking exists downstairs
  Presentation pd = fixtures::doubled_loop();
  CoverData cvd = build_cayley_ball(
      pd, 1, WordProblemOracle::for_finite(pd, {{0, 1}, {1, 0}}, {1}));
  ISStructure flat;
  for (auto& [fid, w] : cvd.ball.faces) flat.face_order.ground.insert(fid);
  for (auto& [eid, e] : cvd.ball.edges) {
    flat.plus_order.ground.insert(eid);
    flat.minus_order.ground.insert(eid);
  }
  CHECK(check_is(cvd, flat, true).ok());
  CHECK_THROWS_AS(is_to_gs(cvd, flat, true), descent_error);
}
