#include "stackings/json_io.hpp"

#include <initializer_list>
#include <utility>

namespace stackings {

namespace {

[[noreturn]] void fail(const std::string& what, const std::string& why) {
  throw malformed_error("json: " + what + ": " + why);
}

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object()) fail(what, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(what, std::string("missing field '") + key + "'");
  return *it;
}

void only_fields(const Json& j, std::initializer_list<const char*> keys, const char* what) {
  if (!j.is_object()) fail(what, "expected an object");
  for (const auto& [k, v] : j.items()) {
    bool known = false;
    for (const char* a : keys) known = known || k == a;
    if (!known) fail(what, "unknown field '" + k + "'");
  }
}

std::string get_string(const Json& j, const char* what) {
  if (!j.is_string()) fail(what, "expected a string");
  return j.get<std::string>();
}

int get_dir(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(what, "direction must be 1 or -1");
  long long v = j.get<long long>();
  if (v != 1 && v != -1) fail(what, "direction must be 1 or -1");
  return (int)v;
}

int get_pos(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(what, "expected an integer position");
  long long v = j.get<long long>();
  if (v < 0 || v > 1000000000) fail(what, "position out of range");
  return (int)v;
}

const Json& get_array(const Json& j, const char* what) {
  if (!j.is_array()) fail(what, "expected an array");
  return j;
}

std::map<std::string, std::string> string_map_from_json(const Json& j, const char* what) {
  if (!j.is_object()) fail(what, "expected an object of strings");
  std::map<std::string, std::string> m;
  for (const auto& [k, v] : j.items()) m[k] = get_string(v, what);
  return m;
}

Json rat_to_json(const Rat& r) {
  return Json::array({(long long)r.numerator(), (long long)r.denominator()});
}

Rat rat_from_json(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    fail(what, "a rational is [numerator, denominator]");
  long long num = j[0].get<long long>();
  long long den = j[1].get<long long>();
  if (den == 0) fail(what, "zero denominator");
  return Rat(num, den);
}

Json point_to_json(const std::pair<Rat, Rat>& p) {
  return Json::array({rat_to_json(p.first), rat_to_json(p.second)});
}

std::pair<Rat, Rat> point_from_json(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) fail(what, "a point is [[xn,xd],[yn,yd]]");
  return {rat_from_json(j[0], what), rat_from_json(j[1], what)};
}

std::map<std::string, std::pair<Rat, Rat>> point_map_from_json(const Json& j, const char* what) {
  if (!j.is_object()) fail(what, "expected an object of points");
  std::map<std::string, std::pair<Rat, Rat>> m;
  for (const auto& [k, v] : j.items()) m[k] = point_from_json(v, what);
  return m;
}

Json word_to_json(const BoundaryWord& w) {
  Json a = Json::array();
  for (const auto& l : w) a.push_back({{"edge", l.edge}, {"dir", l.dir}});
  return a;
}

BoundaryWord word_from_json(const Json& j, const char* what) {
  BoundaryWord w;
  for (const auto& l : get_array(j, what)) {
    only_fields(l, {"edge", "dir"}, what);
    w.push_back({get_string(field(l, "edge", what), what), get_dir(field(l, "dir", what), what)});
  }
  return w;
}

}  // namespace

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw malformed_error("json: syntax error");
  return j;
}

Json to_json(const TwoComplex& c) {
  Json edges = Json::array();
  for (const auto& [id, ends] : c.edges)
    edges.push_back({{"id", id}, {"src", ends.src}, {"dst", ends.dst}});
  Json faces = Json::array();
  for (const auto& [id, w] : c.faces) faces.push_back({{"id", id}, {"boundary", word_to_json(w)}});
  return {{"vertices", c.vertices}, {"edges", edges}, {"faces", faces}};
}

TwoComplex complex_from_json(const Json& j) {
  only_fields(j, {"vertices", "edges", "faces"}, "complex");
  TwoComplex c;
  for (const auto& v : get_array(field(j, "vertices", "complex"), "complex vertices"))
    if (!c.vertices.insert(get_string(v, "complex vertex")).second)
      fail("complex", "duplicate vertex '" + v.get<std::string>() + "'");
  for (const auto& e : get_array(field(j, "edges", "complex"), "complex edges")) {
    only_fields(e, {"id", "src", "dst"}, "complex edge");
    std::string id = get_string(field(e, "id", "complex edge"), "edge id");
    if (c.edges.count(id)) fail("complex", "duplicate edge '" + id + "'");
    c.edges[id] = {get_string(field(e, "src", "complex edge"), "edge src"),
                   get_string(field(e, "dst", "complex edge"), "edge dst")};
  }
  for (const auto& f : get_array(field(j, "faces", "complex"), "complex faces")) {
    only_fields(f, {"id", "boundary"}, "complex face");
    std::string id = get_string(field(f, "id", "complex face"), "face id");
    if (c.faces.count(id)) fail("complex", "duplicate face '" + id + "'");
    c.faces[id] = word_from_json(field(f, "boundary", "complex face"), "face boundary");
  }
  return c;
}

namespace {

Json sides_to_json(const std::vector<Side>& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(Json::array({s.face, s.pos}));
  return a;
}

Json corners_to_json(const std::vector<Corner>& v) {
  Json a = Json::array();
  for (const auto& c : v) a.push_back(Json::array({c.face, c.pos}));
  return a;
}

std::pair<std::string, int> face_pos_from_json(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) fail(what, "expected [face, position]");
  return {get_string(j[0], what), get_pos(j[1], what)};
}

}  // namespace

Json to_json(const Stacking& s) {
  Json side = Json::object();
  for (const auto& [e, v] : s.side_order) side[e] = sides_to_json(v);
  Json corner = Json::object();
  for (const auto& [vx, v] : s.corner_order) corner[vx] = corners_to_json(v);
  return {{"side_order", side}, {"corner_order", corner}};
}

Stacking stacking_from_json(const Json& j) {
  only_fields(j, {"side_order", "corner_order"}, "stacking");
  Stacking s;
  const Json& so = field(j, "side_order", "stacking");
  if (!so.is_object()) fail("stacking", "'side_order' must be an object");
  for (const auto& [e, arr] : so.items()) {
    auto& lv = s.side_order[e];
    for (const auto& x : get_array(arr, "stacking side order")) {
      auto [f, p] = face_pos_from_json(x, "stacking side");
      lv.push_back(Side{f, p});
    }
  }
  const Json& co = field(j, "corner_order", "stacking");
  if (!co.is_object()) fail("stacking", "'corner_order' must be an object");
  for (const auto& [vx, arr] : co.items()) {
    auto& lv = s.corner_order[vx];
    for (const auto& x : get_array(arr, "stacking corner order")) {
      auto [f, p] = face_pos_from_json(x, "stacking corner");
      lv.push_back(Corner{f, p});
    }
  }
  return s;
}

Json to_json(const Relation& r) {
  Json pairs = Json::array();
  for (const auto& [a, b] : r.pairs) pairs.push_back(Json::array({a, b}));
  return {{"ground", r.ground}, {"pairs", pairs}};
}

Relation relation_from_json(const Json& j) {
  only_fields(j, {"ground", "pairs"}, "relation");
  Relation r;
  for (const auto& g : get_array(field(j, "ground", "relation"), "relation ground"))
    r.ground.insert(get_string(g, "relation ground element"));
  for (const auto& p : get_array(field(j, "pairs", "relation"), "relation pairs")) {
    if (!p.is_array() || p.size() != 2) fail("relation", "a pair is [a, b]");
    r.add(get_string(p[0], "relation pair"), get_string(p[1], "relation pair"));
  }
  return r;
}

Json to_json(const BislimStructure& b) {
  return {{"preorder", to_json(b.preorder)}, {"plus", b.plus}, {"minus", b.minus}};
}

BislimStructure bislim_from_json(const Json& j) {
  only_fields(j, {"preorder", "plus", "minus"}, "bislim structure");
  BislimStructure b;
  b.preorder = relation_from_json(field(j, "preorder", "bislim structure"));
  b.plus = string_map_from_json(field(j, "plus", "bislim structure"), "bislim plus marks");
  b.minus = string_map_from_json(field(j, "minus", "bislim structure"), "bislim minus marks");
  return b;
}

namespace {

template <class T>
T three_orders_from_json(const Json& j, const char* what) {
  only_fields(j, {"face_order", "plus_order", "minus_order"}, what);
  T t;
  t.face_order = relation_from_json(field(j, "face_order", what));
  t.plus_order = relation_from_json(field(j, "plus_order", what));
  t.minus_order = relation_from_json(field(j, "minus_order", what));
  return t;
}

template <class T>
Json three_orders_to_json(const T& t) {
  return {{"face_order", to_json(t.face_order)},
          {"plus_order", to_json(t.plus_order)},
          {"minus_order", to_json(t.minus_order)}};
}

}  // namespace

Json to_json(const TISStructure& t) { return three_orders_to_json(t); }
Json to_json(const ISStructure& s) { return three_orders_to_json(s); }

TISStructure tis_from_json(const Json& j) {
  return three_orders_from_json<TISStructure>(j, "total invariant staggering");
}

ISStructure is_from_json(const Json& j) {
  return three_orders_from_json<ISStructure>(j, "invariant staggering");
}

Json to_json(const StaggeredStructure& s) {
  return {{"face_order", to_json(s.face_order)}, {"edge_order", to_json(s.edge_order)}};
}

StaggeredStructure staggered_from_json(const Json& j) {
  only_fields(j, {"face_order", "edge_order"}, "staggered structure");
  StaggeredStructure s;
  s.face_order = relation_from_json(field(j, "face_order", "staggered structure"));
  s.edge_order = relation_from_json(field(j, "edge_order", "staggered structure"));
  return s;
}

Json to_json(const CoverData& cv) {
  Json deck = Json::object();
  for (const auto& [g, m] : cv.deck) deck[g] = m;
  return {{"quotient", to_json(cv.quotient)}, {"ball", to_json(cv.ball)},
          {"projection", cv.projection},     {"deck", deck},
          {"frontier", cv.frontier},         {"simply_connected_quotient",
                                              cv.simply_connected_quotient}};
}

CoverData cover_from_json(const Json& j) {
  only_fields(j,
              {"quotient", "ball", "projection", "deck", "frontier", "simply_connected_quotient"},
              "cover");
  CoverData cv;
  cv.quotient = complex_from_json(field(j, "quotient", "cover"));
  cv.ball = complex_from_json(field(j, "ball", "cover"));
  cv.projection = string_map_from_json(field(j, "projection", "cover"), "cover projection");
  const Json& deck = field(j, "deck", "cover");
  if (!deck.is_object()) fail("cover", "'deck' must be an object");
  for (const auto& [g, m] : deck.items())
    cv.deck[g] = string_map_from_json(m, "cover deck translation");
  for (const auto& c : get_array(field(j, "frontier", "cover"), "cover frontier"))
    cv.frontier.insert(get_string(c, "cover frontier cell"));
  const Json& sc = field(j, "simply_connected_quotient", "cover");
  if (!sc.is_boolean()) fail("cover", "'simply_connected_quotient' must be a boolean");
  cv.simply_connected_quotient = sc.get<bool>();
  return cv;
}

Json to_json(const DiskDiagram& d) {
  Json j = to_json(d.complex);
  j["outer"] = word_to_json(d.outer);
  j["map"] = d.cell_map;
  return j;
}

DiskDiagram diagram_from_json(const Json& j) {
  only_fields(j, {"vertices", "edges", "faces", "outer", "map"}, "diagram");
  DiskDiagram d;
  d.complex = complex_from_json(Json{{"vertices", field(j, "vertices", "diagram")},
                                     {"edges", field(j, "edges", "diagram")},
                                     {"faces", field(j, "faces", "diagram")}});
  d.outer = word_from_json(field(j, "outer", "diagram"), "diagram outer word");
  d.cell_map = string_map_from_json(field(j, "map", "diagram"), "diagram cell map");
  return d;
}

Json to_json(const Embedding& e) {
  Json bary = Json::object();
  for (const auto& [c, p] : e.barycenters) bary[c] = point_to_json(p);
  Json trans = Json::object();
  for (const auto& [g, p] : e.translations) trans[g] = point_to_json(p);
  return {{"barycenters", bary}, {"translations", trans}};
}

Embedding embedding_from_json(const Json& j) {
  only_fields(j, {"barycenters", "translations"}, "embedding");
  Embedding e;
  e.barycenters =
      point_map_from_json(field(j, "barycenters", "embedding"), "embedding barycenter");
  e.translations =
      point_map_from_json(field(j, "translations", "embedding"), "embedding translation");
  return e;
}

Json to_json(const Presentation& p) {
  Json rels = Json::array();
  for (const auto& r : p.relators) {
    Json w = Json::array();
    for (const auto& l : r.word) w.push_back({{"gen", l.gen}, {"dir", l.dir}});
    rels.push_back({{"id", r.id}, {"word", w}});
  }
  return {{"generators", p.generators}, {"relators", rels}};
}

Presentation presentation_from_json(const Json& j) {
  only_fields(j, {"generators", "relators"}, "presentation");
  Presentation p;
  for (const auto& g : get_array(field(j, "generators", "presentation"), "presentation generators"))
    p.generators.push_back(get_string(g, "presentation generator"));
  for (const auto& r : get_array(field(j, "relators", "presentation"), "presentation relators")) {
    only_fields(r, {"id", "word"}, "presentation relator");
    Relator rel;
    rel.id = get_string(field(r, "id", "presentation relator"), "relator id");
    for (const auto& l : get_array(field(r, "word", "presentation relator"), "relator word")) {
      only_fields(l, {"gen", "dir"}, "relator letter");
      rel.word.push_back({get_string(field(l, "gen", "relator letter"), "relator letter"),
                          get_dir(field(l, "dir", "relator letter"), "relator letter")});
    }
    p.relators.push_back(std::move(rel));
  }
  return p;
}

}  // namespace stackings
