#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "stackings/structures.hpp"

using namespace stackings;

namespace {

Presentation p_torus() {
  Presentation p;
  p.generators = {"a", "b"};
  p.relators.push_back({"r", {{"a", 1}, {"b", 1}, {"a", -1}, {"b", -1}}});
  return p;
}

// trivial group: a = 1, ab = 1
Presentation p_collapsing() {
  Presentation p;
  p.generators = {"a", "b"};
  p.relators.push_back({"r1", {{"a", 1}}});
  p.relators.push_back({"r2", {{"a", 1}, {"b", 1}}});
  return p;
}

// Z/2 with the square relation doubled: every face is a parallel copy of
// every other (their ball boundaries agree up to rotation).
Presentation p_z2_doubled() {
  Presentation p;
  p.generators = {"a"};
  p.relators.push_back({"r1", {{"a", 1}, {"a", 1}}});
  p.relators.push_back({"r2", {{"a", 1}, {"a", 1}}});
  return p;
}

CoverData trivial_ball() {
  return build_cayley_ball(p_collapsing(), 1, WordProblemOracle::for_abelian(p_collapsing()));
}

CoverData torus_ball() {
  return build_cayley_ball(p_torus(), 2, WordProblemOracle::for_abelian(p_torus()));
}

CoverData z2_ball() {
  auto p = p_z2_doubled();
  return build_cayley_ball(p, 1, WordProblemOracle::for_finite(p, {{0, 1}, {1, 0}}, {1}));
}

bool has_code(const Report& r, const std::string& code) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const Violation& v) { return v.code == code; });
}

// a-edges ordered downwards along b: every a-edge sits strictly below its
// b^-1 translate. Invariant by construction.
Relation column_preorder(const CoverData& cv) {
  Relation pre;
  for (const auto& [e, ends] : cv.ball.edges) pre.ground.insert(e);
  for (const auto& [e, ends] : cv.ball.edges) {
    if (split_cell_id(e).second != "a") continue;
    if (auto img = apply_deck_inv(cv, "b", e)) pre.add(e, *img);
  }
  return preorder_closure(pre);
}

// Plus cell = the a-edge at the face's basepoint, minus cell = the a-edge
// one b up (the backwards a traversal of the boundary).
BislimStructure torus_marks(const CoverData& cv, Relation pre) {
  BislimStructure b;
  b.preorder = std::move(pre);
  for (const auto& [f, w] : cv.ball.faces) {
    b.plus[f] = w[0].edge;   // the a letter
    b.minus[f] = w[2].edge;  // the a^-1 letter
  }
  return b;
}

// x ascending, then y descending: a deck-invariant strict total order on the
// a-edges, extending the column order.
Relation lex_preorder(const CoverData& cv) {
  auto gens = sorted_generators(p_torus());
  auto coord = [&](const std::string& eid) {
    return exponent_vector(word_of_vertex_id(gens, split_cell_id(eid).first), 2);
  };
  Relation pre;
  std::vector<std::string> aedges;
  for (const auto& [e, ends] : cv.ball.edges) {
    pre.ground.insert(e);
    pre.add(e, e);
    if (split_cell_id(e).second == "a") aedges.push_back(e);
  }
  for (const auto& e1 : aedges)
    for (const auto& e2 : aedges) {
      auto c1 = coord(e1), c2 = coord(e2);
      if (c1[0] < c2[0] || (c1[0] == c2[0] && c1[1] > c2[1])) pre.add(e1, e2);
    }
  return pre;
}

Relation ranked(const std::vector<std::string>& order) {
  Relation r;
  for (const auto& a : order) r.ground.insert(a);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j) r.add(order[i], order[j]);
  return r;
}

TISStructure torus_tis() {
  TISStructure t;
  t.face_order = ranked({"a~|r", "a~.b~|r", "1|r", "b~|r"});
  t.plus_order = ranked({"a~|a", "a~.b~|a", "1|a", "b~|a"});
  t.minus_order = ranked({"a~.b|a", "a~|a", "b|a", "1|a"});
  return t;
}

}  // namespace

TEST_CASE("no bislim certificate on the collapsing complex") {
  CoverData cv = trivial_ball();
  const std::string ea = "1|a", eb = "1|b";

  int tried = 0, failed = 0;
  for (int mask = 0; mask < 4; ++mask) {
    Relation pre;
    pre.ground = {ea, eb};
    pre.add(ea, ea);
    pre.add(eb, eb);
    if (mask & 1) pre.add(ea, eb);
    if (mask & 2) pre.add(eb, ea);
    for (const std::string& plus2 : {ea, eb})
      for (const std::string& minus2 : {ea, eb}) {
        BislimStructure cand;
        cand.preorder = pre;
        cand.plus = {{"1|r1", ea}, {"1|r2", plus2}};
        cand.minus = {{"1|r1", ea}, {"1|r2", minus2}};
        ++tried;
        Report rep = check_bislim(cv, cand);
        if (!rep.ok()) ++failed;
        CHECK(rep.horizon.empty());  // complete ball, identity deck maps
      }
  }
  CHECK(tried == 16);
  CHECK(failed == 16);

  // the two failure shapes: a above itself, or 4 against 5
  BislimStructure cand;
  cand.preorder.ground = {ea, eb};
  cand.preorder.add(ea, ea);
  cand.preorder.add(eb, eb);
  cand.preorder.add(ea, eb);
  cand.plus = {{"1|r1", ea}, {"1|r2", eb}};
  cand.minus = {{"1|r1", ea}, {"1|r2", eb}};
  Report rep = check_bislim(cv, cand);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].code == "BS.5");

  cand.plus["1|r2"] = ea;
  rep = check_bislim(cv, cand);
  CHECK(!rep.ok());
  CHECK(has_code(rep, "BS.4"));

  auto sr = search_bislim(cv, 1000);
  CHECK(!sr.structure.has_value());
  CHECK(sr.stats.exhausted);
  CHECK(sr.stats.examined == 16);

  auto capped = search_bislim(cv, 5);
  CHECK(!capped.structure.has_value());
  CHECK(!capped.stats.exhausted);
  CHECK(capped.stats.examined == 5);
}

TEST_CASE("bislim on the torus ball") {
  CoverData cv = torus_ball();
  BislimStructure b = torus_marks(cv, column_preorder(cv));

  Report rep = check_bislim(cv, b);
  CHECK(rep.ok());
  CHECK(!rep.horizon.empty());
  CHECK(check_bislim(cv, b, true).ok());

  // marks are sane: the face at the basepoint is marked with its own a-edge
  // and with the a-edge one b up
  CHECK(b.plus.at("1|r") == "1|a");
  CHECK(b.minus.at("1|r") == "b|a");
  CHECK(b.minus.at("b~|r") == "1|a");

  // breaking equivariance of the marks is detected
  BislimStructure bent = b;
  bent.plus["1|r"] = "b|a";
  Report broken = check_bislim(cv, bent);
  CHECK(!broken.ok());
  CHECK(has_code(broken, "BS.3"));

  // reversing the preorder breaks conditions 4 and 5
  Relation rev;
  rev.ground = b.preorder.ground;
  for (const auto& [x, y] : b.preorder.pairs) rev.add(y, x);
  Report down = check_bislim(cv, torus_marks(cv, rev));
  CHECK(has_code(down, "BS.4"));
  CHECK(has_code(down, "BS.5"));
}

TEST_CASE("unique strict max and strengthening") {
  CoverData cv = torus_ball();
  BislimStructure b = torus_marks(cv, column_preorder(cv));

  Report umax = check_unique_strict_max(cv, b);
  CHECK(umax.ok());
  CHECK(!umax.horizon.empty());

  // with a discrete preorder the face at b~ sees two incomparable plus cells
  BislimStructure flat = torus_marks(cv, [&] {
    Relation d;
    d.ground = b.preorder.ground;
    for (const auto& e : d.ground) d.add(e, e);
    return d;
  }());
  Report two = check_unique_strict_max(cv, flat);
  CHECK(!two.ok());
  CHECK(has_code(two, "BS.umax"));

  BislimStructure strong = strengthen_unique_max(cv, b);
  CHECK(check_bislim(cv, strong).ok());
  CHECK(check_unique_strict_max(cv, strong).ok());
  // every non-a edge went below the plus trace; cross-column plus cells
  // stay incomparable
  CHECK(strong.preorder.has("1|b", "1|a"));
  CHECK(!strong.preorder.has("1|a", "a~|a"));
  CHECK(!strong.preorder.has("1|a", "1|b"));
}

TEST_CASE("totally bislim needs comparable plus cells") {
  CoverData cv = torus_ball();
  Report col = check_tbs(cv, torus_marks(cv, column_preorder(cv)));
  CHECK(!col.ok());
  CHECK(has_code(col, "TBS.total"));

  Report lex = check_tbs(cv, torus_marks(cv, lex_preorder(cv)));
  CHECK(lex.ok());
  CHECK(!lex.horizon.empty());
}

TEST_CASE("parallel copies and the torsion quantifier") {
  CoverData cv = z2_ball();
  REQUIRE(cv.ball.faces.size() == 4);
  CHECK(cv.frontier.empty());

  BislimStructure b;
  b.preorder.ground = {"1|a", "a|a"};
  b.preorder.add("1|a", "1|a");
  b.preorder.add("a|a", "a|a");
  for (const auto& [f, w] : cv.ball.faces) {
    b.plus[f] = w[0].edge;
    b.minus[f] = w[0].edge;
  }

  CHECK(check_bislim(cv, b, true).ok());
  Report strict = check_bislim(cv, b, false);
  CHECK(!strict.ok());
  CHECK(has_code(strict, "BS.4"));

  // any invariant strict order between the two edge translates is impossible,
  // so the totally bislim upgrade has to fail even in torsion mode
  CHECK(has_code(check_tbs(cv, b, true), "TBS.total"));

  auto found = search_bislim(cv, 2000, true);
  CHECK(found.structure.has_value());
  CHECK(check_bislim(cv, *found.structure, true).ok());

  auto none = search_bislim(cv, 5000, false);
  CHECK(!none.structure.has_value());
  CHECK(none.stats.exhausted);
  CHECK(none.stats.examined == 1024);  // 4 preorders x 4^4 markings
}

TEST_CASE("bislim shape defects are malformed") {
  CoverData cv = trivial_ball();
  BislimStructure b;
  b.preorder.ground = {"1|a", "1|b"};
  b.preorder.add("1|a", "1|a");
  b.preorder.add("1|b", "1|b");
  b.plus = {{"1|r1", "1|a"}, {"1|r2", "1|a"}};
  b.minus = {{"1|r1", "1|a"}, {"1|r2", "1|a"}};

  BislimStructure bad = b;
  bad.plus.erase("1|r2");
  CHECK_THROWS_AS((void)check_bislim(cv, bad), malformed_error);

  bad = b;
  bad.plus["1|r1"] = "1|b";  // not on that boundary
  CHECK_THROWS_AS((void)check_bislim(cv, bad), malformed_error);

  bad = b;
  bad.preorder.ground.erase("1|b");
  CHECK_THROWS_AS((void)check_bislim(cv, bad), malformed_error);

  bad = b;
  bad.preorder.add("1|a", "ghost");
  CHECK_THROWS_AS((void)check_bislim(cv, bad), malformed_error);

  bad = b;
  bad.minus["ghost"] = "1|a";
  CHECK_THROWS_AS((void)check_bislim(cv, bad), malformed_error);
}

TEST_CASE("invariant total orders on the torus ball") {
  CoverData cv = torus_ball();
  TISStructure t = torus_tis();

  Report rep = check_tis(cv, t);
  CHECK(rep.ok());
  CHECK(!rep.horizon.empty());
  CHECK(check_tis(cv, t, true).ok());

  // reversing the face order sends max+ the wrong way
  TISStructure rev = t;
  rev.face_order = ranked({"b~|r", "1|r", "a~.b~|r", "a~|r"});
  CHECK(has_code(check_tis(cv, rev), "TIS.6"));

  // dropping a pair kills totality
  TISStructure gap = t;
  gap.face_order.pairs.erase({"a~|r", "b~|r"});
  CHECK(has_code(check_tis(cv, gap), "TIS.1"));

  // removing an edge from the plus ground starves its face
  TISStructure starved = t;
  starved.plus_order.ground.erase("a~|a");
  starved.plus_order.pairs.erase({"a~|a", "a~.b~|a"});
  starved.plus_order.pairs.erase({"a~|a", "1|a"});
  starved.plus_order.pairs.erase({"a~|a", "b~|a"});
  CHECK(has_code(check_tis(cv, starved), "TIS.4"));

  TISStructure bad = t;
  bad.face_order.ground.erase("b~|r");
  CHECK_THROWS_AS((void)check_tis(cv, bad), malformed_error);

  bad = t;
  bad.plus_order.ground.insert("nope");
  CHECK_THROWS_AS((void)check_tis(cv, bad), malformed_error);
}

TEST_CASE("invariant partial orders on the torus ball") {
  CoverData cv = torus_ball();

  // reading the total certificate as a partial one works as is
  TISStructure t = torus_tis();
  ISStructure s{t.face_order, t.plus_order, t.minus_order};
  Report rep = check_is(cv, s);
  CHECK(rep.ok());
  CHECK(!rep.horizon.empty());

  // a genuinely partial certificate: only the forced face pairs, only the
  // column comparisons on the marked edges
  ISStructure sparse;
  sparse.face_order.ground = {"1|r", "a~|r", "b~|r", "a~.b~|r"};
  sparse.face_order.add("a~|r", "a~.b~|r");
  sparse.face_order.add("1|r", "b~|r");
  sparse.plus_order.ground = {"a~|a", "a~.b~|a", "1|a", "b~|a"};
  sparse.plus_order.add("1|a", "b~|a");
  sparse.plus_order.add("a~|a", "a~.b~|a");
  sparse.minus_order.ground = {"a~.b|a", "a~|a", "b|a", "1|a"};
  sparse.minus_order.add("b|a", "1|a");
  sparse.minus_order.add("a~.b|a", "a~|a");
  CHECK(check_is(cv, sparse).ok());

  // dropping a forced pair trips both adjacency conditions
  ISStructure loose = sparse;
  loose.face_order.pairs.erase({"1|r", "b~|r"});
  Report forced = check_is(cv, loose);
  CHECK(has_code(forced, "IS.7"));
  CHECK(has_code(forced, "IS.8"));

  // a cyclic face order is not a strict partial order
  ISStructure cyc = sparse;
  cyc.face_order.add("a~.b~|r", "a~|r");
  CHECK(has_code(check_is(cv, cyc), "IS.1"));
}

TEST_CASE("staggered structures on quotients") {
  TwoComplex torus = presentation_complex(p_torus());
  StaggeredStructure s;
  s.face_order.ground = {"r"};
  s.edge_order = ranked({"a", "b"});
  CHECK(check_staggered(torus, s).ok());

  s.edge_order = ranked({"a"});
  CHECK(check_staggered(torus, s).ok());

  s.edge_order = Relation{};
  CHECK(has_code(check_staggered(torus, s), "STAG.a"));

  TwoComplex wedge = presentation_complex(p_collapsing());
  StaggeredStructure w;
  w.face_order = ranked({"r1", "r2"});
  w.edge_order = ranked({"a", "b"});
  Report rep = check_staggered(wedge, w);
  CHECK(!rep.ok());
  CHECK(has_code(rep, "STAG.b"));  // both extremes sit on the shared edge a

  w.face_order.ground.erase("r1");
  CHECK_THROWS_AS((void)check_staggered(wedge, w), malformed_error);

  auto sw = search_staggered(torus, 1000);
  REQUIRE(sw.structure.has_value());
  CHECK(check_staggered(torus, *sw.structure).ok());
  CHECK(sw.stats.examined == 1);

  auto none = search_staggered(wedge, 1000);
  CHECK(!none.structure.has_value());
  CHECK(none.stats.exhausted);
  CHECK(none.stats.examined == 8);
}

TEST_CASE("two faces must own free edges") {
  TwoComplex two;
  two.vertices = {"u", "v", "w", "z"};
  two.edges["a"] = {"u", "v"};
  two.edges["b"] = {"v", "w"};
  two.edges["c"] = {"w", "u"};
  two.edges["p"] = {"v", "z"};
  two.edges["q"] = {"z", "u"};
  two.faces["f1"] = {{"a", 1}, {"b", 1}, {"c", 1}};
  two.faces["f2"] = {{"a", 1}, {"p", 1}, {"q", 1}};
  REQUIRE(validate(two).ok());

  CHECK(check_two_collapsing(two, full_subcomplex(two)).ok());
  CHECK(check_two_collapsing(two, subcomplex_of_faces(two, {"f1"})).ok());

  Subcomplex no_faces;
  no_faces.vertices = {"u", "v"};
  no_faces.edges = {"a"};
  CHECK(check_two_collapsing(two, no_faces).ok());

  // the closed torus has no free edge at all
  TwoComplex torus = presentation_complex(p_torus());
  Report rep = check_two_collapsing(torus, full_subcomplex(torus));
  CHECK(!rep.ok());
  CHECK(has_code(rep, "collapse.short"));

  // two faces over the same three loops shadow each other
  Presentation p;
  p.generators = {"a", "b", "c"};
  p.relators.push_back({"r1", {{"a", 1}, {"b", 1}, {"c", -1}}});
  p.relators.push_back({"r2", {{"b", 1}, {"a", 1}, {"c", -1}}});
  TwoComplex fig = presentation_complex(p);
  CHECK(has_code(check_two_collapsing(fig, full_subcomplex(fig)), "collapse.short"));

  Subcomplex broken;
  broken.edges = {"a"};
  CHECK_THROWS_AS((void)check_two_collapsing(two, broken), malformed_error);
}
