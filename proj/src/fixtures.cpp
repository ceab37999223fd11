#include "stackings/fixtures.hpp"

namespace stackings::fixtures {

Presentation torus() {
  return Presentation{{"a", "b"},
                      {{"r", {{"a", 1}, {"b", 1}, {"a", -1}, {"b", -1}}}}};
}

Stacking torus_good_stacking() {
  Stacking s;
  s.side_order["a"] = {{"r", 0}, {"r", 2}};
  s.side_order["b"] = {{"r", 3}, {"r", 1}};
  s.corner_order["1"] = {{"r", 0}, {"r", 1}, {"r", 3}, {"r", 2}};
  return s;
}

StaggeredStructure torus_staggered() {
  StaggeredStructure st;
  st.face_order.ground = {"r"};
  st.edge_order.ground = {"a", "b"};
  st.edge_order.add("a", "b");
  return st;
}

Presentation two_triangles() {
  return Presentation{{"a", "b", "c"},
                      {{"r1", {{"a", 1}, {"c", 1}, {"b", 1}}},
                       {"r2", {{"a", 1}, {"b", 1}, {"c", 1}}}}};
}

Stacking two_triangles_good_stacking() {
  Stacking s;
  s.side_order["a"] = {{"r1", 0}, {"r2", 0}};
  s.side_order["b"] = {{"r2", 1}, {"r1", 2}};
  s.side_order["c"] = {{"r1", 1}, {"r2", 2}};
  s.corner_order["1"] = {{"r1", 1}, {"r2", 1}, {"r1", 2}, {"r2", 2}, {"r1", 0}, {"r2", 0}};
  return s;
}

Presentation collapsing_pair() {
  return Presentation{{"a", "b"}, {{"r1", {{"a", 1}}}, {"r2", {{"a", 1}, {"b", 1}}}}};
}

Presentation doubled_loop() {
  return Presentation{{"a"}, {{"r1", {{"a", 1}, {"a", 1}}}, {"r2", {{"a", 1}, {"a", 1}}}}};
}

Presentation swapped_triangles() {
  return Presentation{{"a", "b", "c"},
                      {{"r1", {{"a", 1}, {"b", 1}, {"c", -1}}},
                       {"r2", {{"b", 1}, {"a", 1}, {"c", -1}}}}};
}

Embedding swapped_triangles_embedding(const CoverData& cv) {
  const std::vector<std::string> gens{"a", "b", "c"};
  auto place = [&](const std::string& cell) -> std::pair<Rat, Rat> {
    auto [base, suffix] = split_cell_id(cell);
    std::vector<long long> e = exponent_vector(word_of_vertex_id(gens, base), 3);
    Rat x(e[0] + e[2]), y(e[1] + e[2]);  // c translates by (1,1)
    if (suffix == "a") x += Rat(1, 2);
    else if (suffix == "b") y += Rat(1, 2);
    else if (suffix == "c") { x += Rat(1, 2); y += Rat(1, 2); }
    else if (suffix == "r1") { x += Rat(3, 4); y += Rat(1, 4); }
    else if (suffix == "r2") { x += Rat(1, 4); y += Rat(3, 4); }
    else if (!suffix.empty())
      throw malformed_error("swapped_triangles_embedding: unexpected cell '" + cell + "'");
    return {x, y};
  };
  Embedding emb;
  for (auto& v : cv.ball.vertices) emb.barycenters[v] = place(v);
  for (auto& [eid, ends] : cv.ball.edges) emb.barycenters[eid] = place(eid);
  for (auto& [fid, w] : cv.ball.faces) emb.barycenters[fid] = place(fid);
  emb.translations["a"] = {Rat(1), Rat(0)};
  emb.translations["b"] = {Rat(0), Rat(1)};
  emb.translations["c"] = {Rat(1), Rat(1)};
  return emb;
}

TwoComplex cube() {
  TwoComplex c;
  c.vertices = {"v000", "v001", "v010", "v011", "v100", "v101", "v110", "v111"};
  // edge "x{y}{z}" runs in the x direction at height (y,z); likewise y, z.
  c.edges["x00"] = {"v000", "v100"};
  c.edges["x01"] = {"v001", "v101"};
  c.edges["x10"] = {"v010", "v110"};
  c.edges["x11"] = {"v011", "v111"};
  c.edges["y00"] = {"v000", "v010"};
  c.edges["y01"] = {"v001", "v011"};
  c.edges["y10"] = {"v100", "v110"};
  c.edges["y11"] = {"v101", "v111"};
  c.edges["z00"] = {"v000", "v001"};
  c.edges["z01"] = {"v010", "v011"};
  c.edges["z10"] = {"v100", "v101"};
  c.edges["z11"] = {"v110", "v111"};
  c.faces["fz0"] = {{"x00", 1}, {"y10", 1}, {"x10", -1}, {"y00", -1}};
  c.faces["fz1"] = {{"x01", 1}, {"y11", 1}, {"x11", -1}, {"y01", -1}};
  c.faces["fy0"] = {{"x00", 1}, {"z10", 1}, {"x01", -1}, {"z00", -1}};
  c.faces["fy1"] = {{"x10", 1}, {"z11", 1}, {"x11", -1}, {"z01", -1}};
  c.faces["fx0"] = {{"y00", 1}, {"z01", 1}, {"y01", -1}, {"z00", -1}};
  c.faces["fx1"] = {{"y10", 1}, {"z11", 1}, {"y11", -1}, {"z10", -1}};
  return c;
}

Stacking cube_half_stacking() {
  // First hit of the exhaustive scan over all 6^8 corner assignments (450
  // yield stackings, none good): tops everywhere, no bottoms on fz0/fz1,
  // directed dual cycle fx0 -> fy0 -> fx1 -> fy1 -> fx0.
  Stacking s;
  s.side_order["x00"] = {{"fy0", 0}, {"fz0", 0}};
  s.side_order["x01"] = {{"fy0", 2}, {"fz1", 0}};
  s.side_order["x10"] = {{"fy1", 0}, {"fz0", 2}};
  s.side_order["x11"] = {{"fy1", 2}, {"fz1", 2}};
  s.side_order["y00"] = {{"fx0", 0}, {"fz0", 3}};
  s.side_order["y01"] = {{"fx0", 2}, {"fz1", 3}};
  s.side_order["y10"] = {{"fx1", 0}, {"fz0", 1}};
  s.side_order["y11"] = {{"fx1", 2}, {"fz1", 1}};
  s.side_order["z00"] = {{"fx0", 3}, {"fy0", 3}};
  s.side_order["z01"] = {{"fy1", 3}, {"fx0", 1}};
  s.side_order["z10"] = {{"fy0", 1}, {"fx1", 3}};
  s.side_order["z11"] = {{"fx1", 1}, {"fy1", 1}};
  s.corner_order["v000"] = {{"fx0", 0}, {"fy0", 0}, {"fz0", 0}};
  s.corner_order["v001"] = {{"fx0", 3}, {"fy0", 3}, {"fz1", 0}};
  s.corner_order["v010"] = {{"fy1", 0}, {"fx0", 1}, {"fz0", 3}};
  s.corner_order["v011"] = {{"fy1", 3}, {"fx0", 2}, {"fz1", 3}};
  s.corner_order["v100"] = {{"fy0", 1}, {"fx1", 0}, {"fz0", 1}};
  s.corner_order["v101"] = {{"fy0", 2}, {"fx1", 3}, {"fz1", 1}};
  s.corner_order["v110"] = {{"fx1", 1}, {"fy1", 1}, {"fz0", 2}};
  s.corner_order["v111"] = {{"fx1", 2}, {"fy1", 2}, {"fz1", 2}};
  return s;
}

}  // namespace stackings::fixtures
