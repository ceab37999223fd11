#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "stackings/cover.hpp"
#include "stackings/diagram.hpp"
#include "stackings/dualgraph.hpp"
#include "stackings/fixtures.hpp"

using namespace stackings;

namespace {

// One square mapped onto the torus face r = a b a^- b^-: a fresh 4-cycle
// v0 -> v1 -> v2 -> v3 -> v0 whose letters carry the target letters in order.
DiskDiagram one_square() {
  DiskDiagram d;
  d.complex.vertices = {"v0", "v1", "v2", "v3"};
  d.complex.edges["e0"] = {"v0", "v1"};  // -> a, forwards
  d.complex.edges["e1"] = {"v1", "v2"};  // -> b, forwards
  d.complex.edges["e2"] = {"v3", "v2"};  // -> a, traversed backwards
  d.complex.edges["e3"] = {"v0", "v3"};  // -> b, traversed backwards
  d.complex.faces["f0"] = {{"e0", 1}, {"e1", 1}, {"e2", -1}, {"e3", -1}};
  d.outer = {{"e3", 1}, {"e2", 1}, {"e1", -1}, {"e0", -1}};
  for (const auto& v : {"v0", "v1", "v2", "v3"}) d.cell_map[v] = "1";
  d.cell_map["e0"] = "a";
  d.cell_map["e2"] = "a";
  d.cell_map["e1"] = "b";
  d.cell_map["e3"] = "b";
  d.cell_map["f0"] = "r";
  return d;
}

// Second square glued along e3, carrying r rotated by one (no reflection):
// f1 = e3 e4^- e5^- e6 with e4, e2 -> a and e5 -> b.
DiskDiagram two_squares() {
  DiskDiagram d = one_square();
  d.complex.vertices.insert({"v4", "v5"});
  d.complex.edges["e4"] = {"v4", "v3"};
  d.complex.edges["e5"] = {"v5", "v4"};
  d.complex.edges["e6"] = {"v5", "v0"};
  d.complex.faces["f1"] = {{"e3", 1}, {"e4", -1}, {"e5", -1}, {"e6", 1}};
  d.outer = {{"e6", -1}, {"e5", 1}, {"e4", 1}, {"e2", 1}, {"e1", -1}, {"e0", -1}};
  d.cell_map["v4"] = "1";
  d.cell_map["v5"] = "1";
  d.cell_map["e4"] = "a";
  d.cell_map["e5"] = "b";
  d.cell_map["e6"] = "a";
  d.cell_map["f1"] = "r";
  return d;
}

// Second square glued along e3 with the reflected alignment: the two faces
// mirror each other around e3 and cancel.
DiskDiagram mirror_squares() {
  DiskDiagram d = one_square();
  d.complex.vertices.insert({"v4", "v5"});
  d.complex.edges["e4"] = {"v3", "v4"};
  d.complex.edges["e5"] = {"v5", "v4"};
  d.complex.edges["e6"] = {"v0", "v5"};
  d.complex.faces["f1"] = {{"e3", 1}, {"e4", 1}, {"e5", -1}, {"e6", -1}};
  d.outer = {{"e6", 1}, {"e5", 1}, {"e4", -1}, {"e2", 1}, {"e1", -1}, {"e0", -1}};
  d.cell_map["v4"] = "1";
  d.cell_map["v5"] = "1";
  d.cell_map["e4"] = "a";
  d.cell_map["e5"] = "b";
  d.cell_map["e6"] = "a";
  d.cell_map["f1"] = "r";
  return d;
}

bool has_code(const Report& r, const std::string& code) {
  for (const auto& v : r.violations)
    if (v.code == code) return true;
  return false;
}

}  // namespace

TEST_CASE("one square over the torus is a valid reduced disk") {
  TwoComplex torus_c = presentation_complex(fixtures::torus());
  Stacking ts = fixtures::torus_good_stacking();
  DiskDiagram d = one_square();

  CHECK(check_diagram(d, torus_c).ok());
  CHECK(check_reduced(d).ok());

  Stacking ind = induce_stacking(d, torus_c, ts);
  CHECK(ind.side_order.at("e0") == std::vector<Side>{{"f0", 0}});
  CHECK(ind.side_order.at("e3") == std::vector<Side>{{"f0", 3}});
  CHECK(check_good(d.complex, ind).ok());
  CHECK(!find_cycle(direct_dual(d.complex, ind, build_dual(d.complex, false))));
}

TEST_CASE("two squares glued along an edge induce the target ranks") {
  TwoComplex torus_c = presentation_complex(fixtures::torus());
  Stacking ts = fixtures::torus_good_stacking();
  DiskDiagram d = two_squares();

  CHECK(check_diagram(d, torus_c).ok());
  CHECK(check_reduced(d).ok());

  Stacking ind = induce_stacking(d, torus_c, ts);
  // f0 reads e3 as the b-side (r,3), rank 0; f1 reads it as (r,1), rank 1.
  CHECK(ind.side_order.at("e3") == std::vector<Side>{{"f0", 3}, {"f1", 0}});
  CHECK(check_stacking(d.complex, ind).ok());
  CHECK(check_good(d.complex, ind).ok());

  DirectedDual dd = direct_dual(d.complex, ind, build_dual(d.complex, false));
  REQUIRE(dd.arcs.size() == 1);
  CHECK(dd.arcs[0].from == "f0");
  CHECK(dd.arcs[0].to == "f1");
  CHECK(!find_cycle(dd));
}

TEST_CASE("mirrored squares are cancellable and refuse to induce") {
  TwoComplex torus_c = presentation_complex(fixtures::torus());
  Stacking ts = fixtures::torus_good_stacking();
  DiskDiagram d = mirror_squares();

  CHECK(check_diagram(d, torus_c).ok());
  Report red = check_reduced(d);
  CHECK(!red.ok());
  CHECK(has_code(red, "dia.cancellable"));
  CHECK_THROWS_AS(induce_stacking(d, torus_c, ts), malformed_error);
}

TEST_CASE("diagram defects are reported with their codes") {
  TwoComplex torus_c = presentation_complex(fixtures::torus());

  SUBCASE("floating vertex breaks connectivity and the Euler count") {
    DiskDiagram d = one_square();
    d.complex.vertices.insert("z");
    d.cell_map["z"] = "1";
    Report rep = check_diagram(d, torus_c);
    CHECK(has_code(rep, "dia.connected"));
    CHECK(has_code(rep, "dia.euler"));
  }
  SUBCASE("dropping an outer letter breaks the path and the slot counts") {
    DiskDiagram d = one_square();
    d.outer.erase(d.outer.begin());  // removes (e3, +1)
    Report rep = check_diagram(d, torus_c);
    CHECK(has_code(rep, "dia.outer"));
    CHECK(has_code(rep, "dia.slots"));
  }
  SUBCASE("an unknown edge in the outer word") {
    DiskDiagram d = one_square();
    d.outer[0].edge = "nope";
    CHECK(has_code(check_diagram(d, torus_c), "dia.outer"));
  }
  SUBCASE("relabelling an edge breaks the face alignment") {
    DiskDiagram d = one_square();
    d.cell_map["e1"] = "a";  // b-letter now claims to be an a
    CHECK(has_code(check_diagram(d, torus_c), "dia.map"));
  }
  SUBCASE("a face mapped to a missing target face") {
    DiskDiagram d = one_square();
    d.cell_map["f0"] = "nope";
    CHECK(has_code(check_diagram(d, torus_c), "dia.map"));
  }
  SUBCASE("a missing vertex image") {
    DiskDiagram d = one_square();
    d.cell_map.erase("v2");
    CHECK(has_code(check_diagram(d, torus_c), "dia.map"));
  }
}

TEST_CASE("fuzzed diagrams are reduced disks with good induced stackings") {
  TwoComplex f1_c = presentation_complex(fixtures::two_triangles());
  Stacking ts = fixtures::two_triangles_good_stacking();

  FuzzOptions opt;
  opt.count = 25;
  opt.seed = 414243;
  opt.max_faces = 6;
  std::vector<DiskDiagram> batch = fuzz_diagrams(f1_c, opt);
  REQUIRE((int)batch.size() == opt.count);

  bool grew = false;
  for (const DiskDiagram& d : batch) {
    CAPTURE(d.complex.faces.size());
    REQUIRE(check_diagram(d, f1_c).ok());
    REQUIRE(check_reduced(d).ok());
    if (d.complex.faces.size() >= 3) grew = true;

    Stacking ind = induce_stacking(d, f1_c, ts);
    REQUIRE(check_stacking(d.complex, ind).ok());
    REQUIRE(check_good(d.complex, ind).ok());
    REQUIRE(!find_cycle(direct_dual(d.complex, ind, build_dual(d.complex, false))));
  }
  CHECK(grew);  // the batch is not all single faces

  // same seed, same diagrams
  std::vector<DiskDiagram> again = fuzz_diagrams(f1_c, opt);
  CHECK(again == batch);
}

TEST_CASE("fuzzing over the torus stays reduced despite the single face") {
  TwoComplex torus_c = presentation_complex(fixtures::torus());
  Stacking ts = fixtures::torus_good_stacking();

  FuzzOptions opt;
  opt.count = 10;
  opt.seed = 99;
  opt.max_faces = 5;
  for (const DiskDiagram& d : fuzz_diagrams(torus_c, opt)) {
    REQUIRE(check_diagram(d, torus_c).ok());
    REQUIRE(check_reduced(d).ok());
    Stacking ind = induce_stacking(d, torus_c, ts);
    REQUIRE(check_good(d.complex, ind).ok());
    REQUIRE(!find_cycle(direct_dual(d.complex, ind, build_dual(d.complex, false))));
  }
}
