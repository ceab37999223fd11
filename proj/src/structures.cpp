#include "stackings/structures.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace stackings {

namespace {

std::set<std::string> boundary_edge_set(const TwoComplex& x, const std::string& face) {
  std::set<std::string> out;
  for (const auto& l : x.faces.at(face)) out.insert(l.edge);
  return out;
}

int traversal_count(const TwoComplex& x, const std::string& face, const std::string& edge) {
  int n = 0;
  for (const auto& l : x.faces.at(face))
    if (l.edge == edge) ++n;
  return n;
}

// The "distinct faces" quantifier: by id normally, by boundary word up to
// rotation and inversion in torsion mode (so parallel copies of one relator
// do not constrain each other).
bool faces_distinct(const TwoComplex& x, const std::string& f1, const std::string& f2,
                    bool torsion) {
  if (f1 == f2) return false;
  if (!torsion) return true;
  return !boundary_equal_cyclic(x.faces.at(f1), x.faces.at(f2));
}

std::set<std::string> edge_ids(const TwoComplex& x) {
  std::set<std::string> out;
  for (const auto& [e, ends] : x.edges) out.insert(e);
  return out;
}

std::set<std::string> face_ids(const TwoComplex& x) {
  std::set<std::string> out;
  for (const auto& [f, w] : x.faces) out.insert(f);
  return out;
}

// Copy violations under a fresh code, keeping the original code in front of
// the detail so the root cause stays visible.
void recode_into(Report& dst, const Report& src, const std::string& code) {
  for (const auto& v : src.violations) dst.add(code, v.code + ": " + v.detail);
  for (const auto& h : src.horizon) dst.note_horizon(code, h.code + ": " + h.detail);
}

// a strictly below b in a preorder.
bool pre_strict(const Relation& r, const std::string& a, const std::string& b) {
  return r.has(a, b) && !r.has(b, a);
}

void require_no_loose_pairs(const Relation& r, const std::string& what) {
  Report v = validate_relation(r);
  if (!v.ok())
    throw malformed_error(what + " mentions ids outside its ground: " + v.violations[0].detail);
}

// Shared shape checks for bislim data: the preorder lives on exactly the
// ball 1-cells, plus/minus are total on the ball faces and pick boundary
// edges.
void require_bislim_shape(const CoverData& cv, const BislimStructure& b) {
  require_no_loose_pairs(b.preorder, "bislim preorder");
  if (b.preorder.ground != edge_ids(cv.ball))
    throw malformed_error("bislim preorder ground must be exactly the ball 1-cells");
  for (const auto& [f, w] : cv.ball.faces) {
    auto bd = boundary_edge_set(cv.ball, f);
    auto ip = b.plus.find(f);
    if (ip == b.plus.end()) throw malformed_error("no plus cell for face '" + f + "'");
    if (!bd.count(ip->second))
      throw malformed_error("plus cell '" + ip->second + "' is not on the boundary of '" + f + "'");
    auto im = b.minus.find(f);
    if (im == b.minus.end()) throw malformed_error("no minus cell for face '" + f + "'");
    if (!bd.count(im->second))
      throw malformed_error("minus cell '" + im->second + "' is not on the boundary of '" + f +
                            "'");
  }
  for (const auto& [f, e] : b.plus)
    if (!cv.ball.faces.count(f)) throw malformed_error("plus map mentions unknown face '" + f + "'");
  for (const auto& [f, e] : b.minus)
    if (!cv.ball.faces.count(f))
      throw malformed_error("minus map mentions unknown face '" + f + "'");
}

std::set<std::string> plus_cells(const BislimStructure& b) {
  std::set<std::string> out;
  for (const auto& [f, e] : b.plus) out.insert(e);
  return out;
}

}  // namespace

Report check_bislim(const CoverData& cv, const BislimStructure& b, bool torsion) {
  require_bislim_shape(cv, b);
  Report rep;

  // 1: invariant preorder on the 1-cells.
  recode_into(rep, check_preorder(b.preorder), "BS.1");
  rep.merge(check_invariance(cv, b.preorder, "BS.1"));

  // 2: the plus cell is traversed exactly once by its own face.
  for (const auto& [f, w] : cv.ball.faces) {
    int n = traversal_count(cv.ball, f, b.plus.at(f));
    if (n != 1)
      rep.add("BS.2", "plus cell '" + b.plus.at(f) + "' traversed " + std::to_string(n) +
                          " times by face '" + f + "'");
  }

  // 3: plus/minus commute with every deck translation (checking each
  // generator forward also covers its inverse, pairwise).
  for (const auto& [g, m] : cv.deck) {
    for (const auto& [f, w] : cv.ball.faces) {
      auto fi = apply_deck(cv, g, f);
      if (!fi) {
        rep.note_horizon("BS.3", "translate of face '" + f + "' by " + g + " leaves the ball");
        continue;
      }
      for (const auto* which : {&b.plus, &b.minus}) {
        const char* name = (which == &b.plus) ? "plus" : "minus";
        auto ei = apply_deck(cv, g, which->at(f));
        if (!ei)
          rep.add("BS.3", std::string("deck ") + g + " undefined on the " + name + " cell of '" +
                              f + "' though the face translates");
        else if (which->at(*fi) != *ei)
          rep.add("BS.3", std::string(name) + " cell of '" + *fi + "' is '" + which->at(*fi) +
                              "', expected the translate '" + *ei + "' of face '" + f + "'");
      }
    }
  }

  // 4/5: plus/minus adjacency forces strict preorder steps between plus
  // cells. Pairs with a face outside the ball are flagged as horizon when
  // the relevant marked cell is a frontier edge.
  std::vector<std::string> faces;
  for (const auto& [f, w] : cv.ball.faces) faces.push_back(f);
  for (const auto& f1 : faces) {
    for (const auto& f2 : faces) {
      if (!faces_distinct(cv.ball, f1, f2, torsion)) continue;
      auto bd2 = boundary_edge_set(cv.ball, f2);
      if (bd2.count(b.plus.at(f1)) && !pre_strict(b.preorder, b.plus.at(f1), b.plus.at(f2)))
        rep.add("BS.4", "plus cell '" + b.plus.at(f1) + "' of '" + f1 + "' lies on '" + f2 +
                            "' but is not strictly below its plus cell '" + b.plus.at(f2) + "'");
      auto bd1 = boundary_edge_set(cv.ball, f1);
      if (bd1.count(b.minus.at(f2)) && !pre_strict(b.preorder, b.plus.at(f1), b.plus.at(f2)))
        rep.add("BS.5", "minus cell '" + b.minus.at(f2) + "' of '" + f2 + "' lies on '" + f1 +
                            "' but '" + b.plus.at(f1) + "' is not strictly below '" +
                            b.plus.at(f2) + "'");
    }
  }
  for (const auto& f : faces) {
    if (is_frontier(cv, b.plus.at(f)))
      rep.note_horizon("BS.4", "plus cell '" + b.plus.at(f) + "' of '" + f +
                                   "' is a frontier edge; unseen faces may traverse it");
    if (is_frontier(cv, b.minus.at(f)))
      rep.note_horizon("BS.5", "minus cell '" + b.minus.at(f) + "' of '" + f +
                                   "' is a frontier edge; unseen faces may traverse it");
  }
  return rep;
}

Report check_unique_strict_max(const CoverData& cv, const BislimStructure& b) {
  require_bislim_shape(cv, b);
  Report rep;
  std::set<std::string> eplus = plus_cells(b);
  for (const auto& [f, w] : cv.ball.faces) {
    auto bd = boundary_edge_set(cv.ball, f);
    std::vector<std::string> s;
    for (const auto& e : bd)
      if (eplus.count(e)) s.push_back(e);
    auto strictly_maximal = [&](const std::string& e) {
      for (const auto& o : s)
        if (o != e && b.preorder.has(e, o)) return false;
      return true;
    };
    const std::string& rp = b.plus.at(f);
    if (!strictly_maximal(rp))
      rep.add("BS.umax", "plus cell '" + rp + "' of '" + f +
                             "' sits weakly below another plus cell on the same boundary");
    for (const auto& e : s)
      if (e != rp && strictly_maximal(e))
        rep.add("BS.umax",
                "'" + e + "' is also strictly maximal on the boundary of '" + f + "'");
    bool frontier_bd = false;
    for (const auto& e : bd)
      if (is_frontier(cv, e)) frontier_bd = true;
    if (frontier_bd)
      rep.note_horizon("BS.umax", "face '" + f +
                                      "' has frontier boundary cells; unseen faces may add "
                                      "plus cells to its boundary");
  }
  return rep;
}

BislimStructure strengthen_unique_max(const CoverData& cv, const BislimStructure& b) {
  require_bislim_shape(cv, b);
  // Read "plus cell" through the projection: the deck group of the full
  // cover carries any edge over a marked image onto a marked edge, so this
  // is the invariant extension of the ball-local marked set.
  std::set<std::string> plus_images;
  for (const auto& [f, e] : b.plus) plus_images.insert(cv.projection.at(e));
  std::set<std::string> trace;
  for (const auto& e : edge_ids(cv.ball))
    if (plus_images.count(cv.projection.at(e))) trace.insert(e);
  Relation r;
  r.ground = edge_ids(cv.ball);
  for (const auto& e : r.ground) r.add(e, e);
  for (const auto& p : b.preorder.pairs)
    if (trace.count(p.first) && trace.count(p.second)) r.pairs.insert(p);
  for (const auto& e : r.ground)
    if (!trace.count(e))
      for (const auto& s : trace) r.add(e, s);
  return BislimStructure{r, b.plus, b.minus};
}

Report check_tbs(const CoverData& cv, const BislimStructure& b, bool torsion) {
  Report rep = check_bislim(cv, b, torsion);
  std::set<std::string> eplus = plus_cells(b);
  for (const auto& a : eplus)
    for (const auto& c : eplus)
      if (a < c && !pre_strict(b.preorder, a, c) && !pre_strict(b.preorder, c, a))
        rep.add("TBS.total", "plus cells '" + a + "' and '" + c + "' are not strictly comparable");
  return rep;
}

namespace {

// Shared shape checks for the order-triple certificates.
void require_order_triple_shape(const CoverData& cv, const Relation& face_order,
                                const Relation& plus_order, const Relation& minus_order) {
  require_no_loose_pairs(face_order, "face order");
  require_no_loose_pairs(plus_order, "plus order");
  require_no_loose_pairs(minus_order, "minus order");
  if (face_order.ground != face_ids(cv.ball))
    throw malformed_error("face order ground must be exactly the ball 2-cells");
  std::set<std::string> eids = edge_ids(cv.ball);
  for (const auto& e : plus_order.ground)
    if (!eids.count(e)) throw malformed_error("plus order ground has unknown edge '" + e + "'");
  for (const auto& e : minus_order.ground)
    if (!eids.count(e)) throw malformed_error("minus order ground has unknown edge '" + e + "'");
}

// Boundary edges of `face` lying in `ground`, as a set.
std::vector<std::string> boundary_in(const TwoComplex& x, const std::string& face,
                                     const std::set<std::string>& ground) {
  std::vector<std::string> out;
  for (const auto& e : boundary_edge_set(x, face))
    if (ground.count(e)) out.push_back(e);
  return out;
}

}  // namespace

Report check_tis(const CoverData& cv, const TISStructure& t, bool torsion) {
  require_order_triple_shape(cv, t.face_order, t.plus_order, t.minus_order);
  Report rep;

  recode_into(rep, check_strict_total_order(t.face_order), "TIS.1");
  rep.merge(check_invariance(cv, t.face_order, "TIS.1"));
  recode_into(rep, check_strict_total_order(t.plus_order), "TIS.2");
  rep.merge(check_invariance(cv, t.plus_order, "TIS.2"));
  recode_into(rep, check_strict_total_order(t.minus_order), "TIS.3");
  rep.merge(check_invariance(cv, t.minus_order, "TIS.3"));

  // 4: every boundary meets both edge sets; remember the extrema for 5/6.
  std::map<std::string, std::string> maxplus, minminus;
  for (const auto& [f, w] : cv.ball.faces) {
    auto sp = boundary_in(cv.ball, f, t.plus_order.ground);
    auto sm = boundary_in(cv.ball, f, t.minus_order.ground);
    if (sp.empty()) {
      rep.add("TIS.4", "boundary of '" + f + "' misses the plus cells");
    } else {
      std::string top = sp.front();
      for (const auto& e : sp)
        if (t.plus_order.has(top, e)) top = e;
      maxplus[f] = top;
    }
    if (sm.empty()) {
      rep.add("TIS.4", "boundary of '" + f + "' misses the minus cells");
    } else {
      std::string low = sm.front();
      for (const auto& e : sm)
        if (t.minus_order.has(e, low)) low = e;
      minminus[f] = low;
    }
  }

  // 5: the top plus cell of each face is traversed exactly once.
  for (const auto& [f, e] : maxplus) {
    int n = traversal_count(cv.ball, f, e);
    if (n != 1)
      rep.add("TIS.5", "top plus cell '" + e + "' traversed " + std::to_string(n) +
                           " times by face '" + f + "'");
  }

  // 6: the face order is carried by max+ and min-.
  for (const auto& [a, c] : t.face_order.pairs) {
    if (!faces_distinct(cv.ball, a, c, torsion)) continue;
    if (maxplus.count(a) && maxplus.count(c) && !t.plus_order.has(maxplus[a], maxplus[c]))
      rep.add("TIS.6", "'" + a + "' < '" + c + "' but top plus cells '" + maxplus[a] +
                           "' !< '" + maxplus[c] + "'");
    if (minminus.count(a) && minminus.count(c) && !t.minus_order.has(minminus[a], minminus[c]))
      rep.add("TIS.6", "'" + a + "' < '" + c + "' but bottom minus cells '" + minminus[a] +
                           "' !< '" + minminus[c] + "'");
  }
  return rep;
}

Report check_is(const CoverData& cv, const ISStructure& s, bool torsion) {
  require_order_triple_shape(cv, s.face_order, s.plus_order, s.minus_order);
  Report rep;

  recode_into(rep, check_strict_partial_order(s.face_order), "IS.1");
  rep.merge(check_invariance(cv, s.face_order, "IS.1"));
  recode_into(rep, check_strict_partial_order(s.plus_order), "IS.2");
  rep.merge(check_invariance(cv, s.plus_order, "IS.2"));
  recode_into(rep, check_strict_partial_order(s.minus_order), "IS.3");
  rep.merge(check_invariance(cv, s.minus_order, "IS.3"));

  // 4: boundaries meet both edge sets; collect the maximal plus / minimal
  // minus boundary cells (sets now, the orders are partial).
  std::map<std::string, std::vector<std::string>> maxplus, minminus;
  for (const auto& [f, w] : cv.ball.faces) {
    auto sp = boundary_in(cv.ball, f, s.plus_order.ground);
    auto sm = boundary_in(cv.ball, f, s.minus_order.ground);
    if (sp.empty()) rep.add("IS.4", "boundary of '" + f + "' misses the plus cells");
    if (sm.empty()) rep.add("IS.4", "boundary of '" + f + "' misses the minus cells");
    std::vector<std::string> mp, mm;
    for (const auto& e : sp) {
      bool topped = false;
      for (const auto& o : sp)
        if (s.plus_order.has(e, o)) topped = true;
      if (!topped) mp.push_back(e);
    }
    for (const auto& e : sm) {
      bool floored = false;
      for (const auto& o : sm)
        if (s.minus_order.has(o, e)) floored = true;
      if (!floored) mm.push_back(e);
    }
    maxplus[f] = mp;
    minminus[f] = mm;
  }

  // 5: every maximal plus boundary cell is traversed exactly once.
  for (const auto& [f, mp] : maxplus)
    for (const auto& e : mp) {
      int n = traversal_count(cv.ball, f, e);
      if (n != 1)
        rep.add("IS.5", "maximal plus cell '" + e + "' traversed " + std::to_string(n) +
                            " times by face '" + f + "'");
    }

  // 6: the face order is carried setwise.
  for (const auto& [a, c] : s.face_order.pairs) {
    if (!faces_distinct(cv.ball, a, c, torsion)) continue;
    for (const auto& x : maxplus[a])
      for (const auto& y : maxplus[c])
        if (!s.plus_order.has(x, y))
          rep.add("IS.6", "'" + a + "' < '" + c + "' but maximal plus cells '" + x + "' !< '" +
                              y + "'");
    for (const auto& x : minminus[a])
      for (const auto& y : minminus[c])
        if (!s.minus_order.has(x, y))
          rep.add("IS.6", "'" + a + "' < '" + c + "' but minimal minus cells '" + x + "' !< '" +
                              y + "'");
  }

  // 7/8: adjacency forces face comparisons. Unseen faces can only attach
  // along frontier edges, so a frontier maximal/minimal cell leaves an
  // obligation open.
  std::vector<std::string> faces;
  for (const auto& [f, w] : cv.ball.faces) faces.push_back(f);
  for (const auto& a : faces) {
    for (const auto& c : faces) {
      if (!faces_distinct(cv.ball, a, c, torsion)) continue;
      auto bd = boundary_edge_set(cv.ball, c);
      for (const auto& e : maxplus[a])
        if (bd.count(e) && !s.face_order.has(a, c))
          rep.add("IS.7", "maximal plus cell '" + e + "' of '" + a + "' lies on '" + c +
                              "' but '" + a + "' !< '" + c + "'");
      for (const auto& e : minminus[a])
        if (bd.count(e) && !s.face_order.has(c, a))
          rep.add("IS.8", "minimal minus cell '" + e + "' of '" + a + "' lies on '" + c +
                              "' but '" + c + "' !< '" + a + "'");
    }
    for (const auto& e : maxplus[a])
      if (is_frontier(cv, e))
        rep.note_horizon("IS.7", "maximal plus cell '" + e + "' of '" + a +
                                     "' is a frontier edge; unseen faces may traverse it");
    for (const auto& e : minminus[a])
      if (is_frontier(cv, e))
        rep.note_horizon("IS.8", "minimal minus cell '" + e + "' of '" + a +
                                     "' is a frontier edge; unseen faces may traverse it");
  }
  return rep;
}

Report check_staggered(const TwoComplex& quotient, const StaggeredStructure& s) {
  require_no_loose_pairs(s.face_order, "staggered face order");
  require_no_loose_pairs(s.edge_order, "staggered edge order");
  if (s.face_order.ground != face_ids(quotient))
    throw malformed_error("staggered face order ground must be exactly the 2-cells");
  std::set<std::string> eids = edge_ids(quotient);
  for (const auto& e : s.edge_order.ground)
    if (!eids.count(e))
      throw malformed_error("staggered edge order ground has unknown edge '" + e + "'");
  Report rep;
  recode_into(rep, check_strict_total_order(s.face_order), "STAG.order");
  recode_into(rep, check_strict_total_order(s.edge_order), "STAG.order");

  std::map<std::string, std::string> maxe, mine;
  for (const auto& [f, w] : quotient.faces) {
    auto in = boundary_in(quotient, f, s.edge_order.ground);
    if (in.empty()) {
      rep.add("STAG.a", "boundary of '" + f + "' misses the ordered edges");
      continue;
    }
    std::string top = in.front(), low = in.front();
    for (const auto& e : in) {
      if (s.edge_order.has(top, e)) top = e;
      if (s.edge_order.has(e, low)) low = e;
    }
    maxe[f] = top;
    mine[f] = low;
  }
  for (const auto& [a, c] : s.face_order.pairs) {
    if (!maxe.count(a) || !maxe.count(c)) continue;
    if (!s.edge_order.has(maxe[a], maxe[c]))
      rep.add("STAG.b",
              "'" + a + "' < '" + c + "' but top edges '" + maxe[a] + "' !< '" + maxe[c] + "'");
    if (!s.edge_order.has(mine[a], mine[c]))
      rep.add("STAG.b", "'" + a + "' < '" + c + "' but bottom edges '" + mine[a] + "' !< '" +
                            mine[c] + "'");
  }
  return rep;
}

namespace {

// Binary odometer; returns false on wrap (all digits reset to zero).
bool bump(std::vector<char>& bits) {
  for (auto& b : bits) {
    if (!b) {
      b = 1;
      return true;
    }
    b = 0;
  }
  return false;
}

// Mixed-radix odometer; returns false on wrap.
bool bump(std::vector<std::size_t>& digits, const std::vector<std::size_t>& radix) {
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (++digits[i] < radix[i]) return true;
    digits[i] = 0;
  }
  return false;
}

Relation order_of_ranking(const std::vector<std::string>& ranked) {
  Relation r;
  for (const auto& a : ranked) r.ground.insert(a);
  for (std::size_t i = 0; i < ranked.size(); ++i)
    for (std::size_t j = i + 1; j < ranked.size(); ++j) r.add(ranked[i], ranked[j]);
  return r;
}

}  // namespace

BislimSearchResult search_bislim(const CoverData& cv, long long budget, bool torsion) {
  BislimSearchResult res;

  std::vector<std::string> edges;
  for (const auto& [e, ends] : cv.ball.edges) edges.push_back(e);
  std::vector<std::pair<std::string, std::string>> offdiag;
  for (const auto& a : edges)
    for (const auto& c : edges)
      if (a != c) offdiag.push_back({a, c});

  std::vector<std::string> faces;
  std::vector<std::vector<std::string>> choices;  // distinct boundary edges per face
  for (const auto& [f, w] : cv.ball.faces) {
    faces.push_back(f);
    std::set<std::string> bd;
    for (const auto& l : w) bd.insert(l.edge);
    if (bd.empty()) {  // no boundary, no possible marking
      res.stats.exhausted = true;
      return res;
    }
    choices.push_back({bd.begin(), bd.end()});
  }

  std::vector<char> bits(offdiag.size(), 0);
  bool more_subsets = true;
  while (more_subsets) {
    Relation pre;
    pre.ground = {edges.begin(), edges.end()};
    for (const auto& e : edges) pre.add(e, e);
    for (std::size_t i = 0; i < bits.size(); ++i)
      if (bits[i]) pre.pairs.insert(offdiag[i]);

    if (!check_preorder(pre).ok()) {
      if (++res.stats.examined >= budget && budget > 0) return res;
    } else {
      std::vector<std::size_t> digits(2 * faces.size(), 0);
      std::vector<std::size_t> radix;
      for (std::size_t i = 0; i < faces.size(); ++i) {
        radix.push_back(choices[i].size());
        radix.push_back(choices[i].size());
      }
      bool more_marks = !faces.empty();
      while (more_marks) {
        BislimStructure cand;
        cand.preorder = pre;
        for (std::size_t i = 0; i < faces.size(); ++i) {
          cand.plus[faces[i]] = choices[i][digits[2 * i]];
          cand.minus[faces[i]] = choices[i][digits[2 * i + 1]];
        }
        ++res.stats.examined;
        if (check_bislim(cv, cand, torsion).ok()) {
          res.structure = cand;
          return res;
        }
        if (res.stats.examined >= budget && budget > 0) return res;
        more_marks = bump(digits, radix);
      }
      if (faces.empty()) {
        BislimStructure cand;
        cand.preorder = pre;
        ++res.stats.examined;
        if (check_bislim(cv, cand, torsion).ok()) {
          res.structure = cand;
          return res;
        }
        if (res.stats.examined >= budget && budget > 0) return res;
      }
    }
    more_subsets = bump(bits);
  }
  res.stats.exhausted = true;
  return res;
}

StaggeredSearchResult search_staggered(const TwoComplex& quotient, long long budget) {
  StaggeredSearchResult res;
  std::vector<std::string> faces;
  for (const auto& [f, w] : quotient.faces) faces.push_back(f);
  std::vector<std::string> edges;
  for (const auto& [e, ends] : quotient.edges) edges.push_back(e);

  std::vector<std::string> fperm = faces;
  bool more_f = true;
  while (more_f) {
    std::vector<char> bits(edges.size(), 0);
    // Start from the first nonempty subset.
    bool more_subsets = bump(bits);
    while (more_subsets) {
      std::vector<std::string> chosen;
      for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) chosen.push_back(edges[i]);
      std::vector<std::string> eperm = chosen;
      bool more_e = true;
      while (more_e) {
        StaggeredStructure cand{order_of_ranking(fperm), order_of_ranking(eperm)};
        ++res.stats.examined;
        if (check_staggered(quotient, cand).ok()) {
          res.structure = cand;
          return res;
        }
        if (res.stats.examined >= budget && budget > 0) return res;
        more_e = std::next_permutation(eperm.begin(), eperm.end());
      }
      more_subsets = bump(bits);
    }
    more_f = std::next_permutation(fperm.begin(), fperm.end());
  }
  res.stats.exhausted = true;
  return res;
}

Report check_two_collapsing(const TwoComplex& x, const Subcomplex& sub) {
  Report shape = validate_subcomplex(x, sub);
  if (!shape.ok())
    throw malformed_error("broken subcomplex: " + shape.violations[0].detail);
  Report rep;
  auto ff = free_faces(x, sub);
  std::set<std::string> owners;
  for (const auto& [f, e] : ff) owners.insert(f);
  std::size_t need = std::min<std::size_t>(sub.faces.size(), 2);
  if (owners.size() < need)
    rep.add("collapse.short", "only " + std::to_string(owners.size()) +
                                  " faces own a free edge; need " + std::to_string(need));
  return rep;
}

}  // namespace stackings
