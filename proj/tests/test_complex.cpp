#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "stackings/complex.hpp"

using namespace stackings;

namespace {

TwoComplex triangle() {
  TwoComplex x;
  x.vertices = {"u", "v", "w"};
  x.edges["e1"] = {"u", "v"};
  x.edges["e2"] = {"v", "w"};
  x.edges["e3"] = {"w", "u"};
  x.faces["f"] = {{"e1", 1}, {"e2", 1}, {"e3", 1}};
  return x;
}

TwoComplex torus() {
  TwoComplex x;
  x.vertices = {"v"};
  x.edges["a"] = {"v", "v"};
  x.edges["b"] = {"v", "v"};
  x.faces["f"] = {{"a", 1}, {"b", 1}, {"a", -1}, {"b", -1}};
  return x;
}

bool has_code(const Report& r, const std::string& code) {
  for (auto& v : r.violations)
    if (v.code == code) return true;
  return false;
}

}  // namespace

TEST_CASE("validate accepts well-formed complexes") {
  CHECK(validate(triangle()).ok());
  CHECK(validate(torus()).ok());
  CHECK(validate(TwoComplex{}).ok());
}

TEST_CASE("validate catches structural defects") {
  auto x = triangle();
  x.edges["e4"] = {"u", "nowhere"};
  CHECK(has_code(validate(x), "complex.edge-endpoint"));

  x = triangle();
  x.faces["g"] = {{"missing", 1}};
  CHECK(has_code(validate(x), "complex.dangling-edge"));

  x = triangle();
  x.faces["f"] = {{"e1", 1}, {"e3", 1}};  // v -> w jump
  CHECK(has_code(validate(x), "complex.not-closed"));

  x = triangle();
  x.faces["f"] = {{"e1", 1}, {"e1", -1}};
  CHECK(has_code(validate(x), "complex.backtrack"));

  x = triangle();
  x.faces["g"] = {};
  CHECK(has_code(validate(x), "complex.empty-boundary"));
}

TEST_CASE("letter endpoints respect direction") {
  auto x = triangle();
  CHECK(letter_start(x, {"e1", 1}) == "u");
  CHECK(letter_end(x, {"e1", 1}) == "v");
  CHECK(letter_start(x, {"e1", -1}) == "v");
  CHECK(letter_end(x, {"e1", -1}) == "u");
}

TEST_CASE("sides and corners of a triangle") {
  auto x = triangle();
  CHECK(sides_over(x, "e1") == std::vector<Side>{{"f", 0}});
  CHECK(sides_over(x, "nope").empty());
  CHECK(corners_at(x, "u") == std::vector<Corner>{{"f", 0}});
  CHECK(corners_at(x, "v") == std::vector<Corner>{{"f", 1}});
  CHECK(corner_vertex(x, {"f", 1}) == "v");
  CHECK(side_letter(x, {"f", 2}) == SignedEdge{"e3", 1});
}

TEST_CASE("germs on a doubly traversed loop") {
  TwoComplex x;
  x.vertices = {"v"};
  x.edges["a"] = {"v", "v"};
  x.faces["f"] = {{"a", 1}, {"a", 1}};
  REQUIRE(validate(x).ok());
  CHECK(sides_over(x, "a") == std::vector<Side>{{"f", 0}, {"f", 1}});
  CHECK(corners_at(x, "v") == std::vector<Corner>{{"f", 0}, {"f", 1}});
  CHECK(germ_at_src(x, {"f", 0}) == Corner{"f", 0});
  CHECK(germ_at_dst(x, {"f", 0}) == Corner{"f", 1});
  CHECK(germ_at_src(x, {"f", 1}) == Corner{"f", 1});
  CHECK(germ_at_dst(x, {"f", 1}) == Corner{"f", 0});
}

TEST_CASE("germs on the torus square") {
  auto x = torus();
  // (a,1): begins at src
  CHECK(germ_at_src(x, {"f", 0}) == Corner{"f", 0});
  CHECK(germ_at_dst(x, {"f", 0}) == Corner{"f", 1});
  // (a,-1): begins at dst
  CHECK(germ_at_src(x, {"f", 2}) == Corner{"f", 3});
  CHECK(germ_at_dst(x, {"f", 2}) == Corner{"f", 2});
  CHECK(germ_at_src(x, {"f", 3}) == Corner{"f", 0});
  CHECK(germ_at_dst(x, {"f", 3}) == Corner{"f", 3});
}

TEST_CASE("subcomplexes close under boundary") {
  auto x = triangle();
  auto full = full_subcomplex(x);
  CHECK(validate_subcomplex(x, full).ok());
  CHECK(full.faces == std::set<std::string>{"f"});

  auto sub = subcomplex_of_faces(x, {"f"});
  CHECK(sub == full);

  Subcomplex bad;
  bad.faces = {"f"};
  bad.edges = {"e1", "e2", "e3"};
  bad.vertices = {"u", "v"};  // w missing
  CHECK(!validate_subcomplex(x, bad).ok());

  Subcomplex unknown;
  unknown.vertices = {"zz"};
  CHECK(!validate_subcomplex(x, unknown).ok());
}

TEST_CASE("free faces of shared-edge triangles") {
  // two triangles glued along a
  TwoComplex x;
  x.vertices = {"u", "v", "w", "z"};
  x.edges["a"] = {"u", "v"};
  x.edges["b"] = {"v", "w"};
  x.edges["c"] = {"w", "u"};
  x.edges["p"] = {"v", "z"};
  x.edges["q"] = {"z", "u"};
  x.faces["f1"] = {{"a", 1}, {"b", 1}, {"c", 1}};
  x.faces["f2"] = {{"a", 1}, {"p", 1}, {"q", 1}};
  REQUIRE(validate(x).ok());

  auto ff = free_faces(x, full_subcomplex(x));
  std::vector<std::pair<std::string, std::string>> want = {
      {"f1", "b"}, {"f1", "c"}, {"f2", "p"}, {"f2", "q"}};
  CHECK(ff == want);

  auto one = free_faces(x, subcomplex_of_faces(x, {"f1"}));
  want = {{"f1", "a"}, {"f1", "b"}, {"f1", "c"}};
  CHECK(one == want);
}

TEST_CASE("cyclic word equality up to rotation and inversion") {
  BoundaryWord w = {{"a", 1}, {"b", 1}, {"a", -1}, {"b", -1}};
  BoundaryWord rot = {{"a", -1}, {"b", -1}, {"a", 1}, {"b", 1}};
  CHECK(boundary_equal_cyclic(w, rot));
  CHECK(boundary_equal_cyclic(w, inverse_word(w)));
  BoundaryWord other = {{"a", 1}, {"b", 1}, {"a", -1}, {"b", 1}};
  CHECK(!boundary_equal_cyclic(w, other));
  CHECK(!boundary_equal_cyclic(w, BoundaryWord{}));

  CHECK(inverse_word(BoundaryWord{{"a", 1}, {"b", 1}}) ==
        BoundaryWord{{"b", -1}, {"a", -1}});
}
